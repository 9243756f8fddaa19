#include "serialize.hpp"

namespace gk {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

void check_version(const json& j) {
  if (!j.is_object()) fail("expected a JSON object");
  if (!j.contains("v") || !j["v"].is_number_integer() || j["v"].get<int>() != 1) fail("missing or unsupported \"v\"");
}

std::size_t get_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) fail(std::string("\"") + key + "\" must be a nonnegative integer");
  return j[key].get<std::size_t>();
}

const json& get(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing \"") + key + "\"");
  return j[key];
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) fail("rational must be a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

json chain_body(const ChainBundle& cb) {
  json g = json::array();
  for (const auto& m : cb.gluings) g.push_back(to_json(m));
  return {{"v", 1}, {"n", cb.n}, {"degrees", cb.degrees}, {"gluings", g}};
}

Matrix square(const json& j, std::size_t n, const char* what) {
  Matrix m = matrix_from_json(j);
  if (m.rows() != n || m.cols() != n) fail(std::string(what) + " must be n x n");
  return m;
}

std::vector<Matrix> matrix_list(const json& j, std::size_t count, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != count) fail(std::string("\"") + what + "\" must be a list of n matrices");
  std::vector<Matrix> out;
  for (const auto& x : j) out.push_back(square(x, n, what));
  return out;
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const ChainBundle& cb) { return chain_body(cb); }

json to_json(const GiesekerDatum& d) {
  auto side = [](const AttachedChain& a) {
    return json{{"chain", chain_body(a.chain)}, {"attach", a.attach ? to_json(*a.attach) : json(nullptr)}};
  };
  return {{"v", 1}, {"n", d.n}, {"side1", side(d.side1)}, {"side2", side(d.side2)}, {"phi", to_json(d.phi)}};
}

json to_json(const GeneralizedIsomorphism& gi) {
  json mu = json::array(), la = json::array(), ef = json::array(), eg = json::array(), ff = json::array(),
       fg = json::array();
  for (const auto& s : gi.e_stages) {
    mu.push_back(to_string(s.mu));
    ef.push_back(to_json(s.f));
    eg.push_back(to_json(s.g));
  }
  for (const auto& s : gi.f_stages) {
    la.push_back(to_string(s.mu));
    ff.push_back(to_json(s.f));
    fg.push_back(to_json(s.g));
  }
  return {{"v", 1},    {"n", gi.n}, {"mu", mu},   {"lambda", la},         {"e_f", ef},
          {"e_g", eg}, {"f_f", ff}, {"f_g", fg}, {"phi", to_json(gi.phi)}};
}

json to_json(const RoundtripReport& r) {
  const auto& f = r.fingerprint;
  return {{"ok", r.ok},
          {"fingerprint",
           {{"deg1", f.deg1},
            {"deg2", f.deg2},
            {"mu_zeros", f.mu_zeros},
            {"lambda_zeros", f.lambda_zeros},
            {"dimQ", f.dim_q},
            {"rank_compE", f.rank_comp_e},
            {"rank_compF", f.rank_comp_f}}}};
}

json to_json(const GrassmannianPoint& g) { return {{"q", to_json(g.q)}, {"dimQ", g.dim_q}}; }

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail("matrix must be a list of rows");
  std::size_t r = j.size(), c = r ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) fail("matrix rows must be lists of equal length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

ChainBundle chain_from_json(const json& j) {
  check_version(j);
  ChainBundle cb;
  cb.n = get_count(j, "n");
  const json& deg = get(j, "degrees");
  if (!deg.is_array()) fail("\"degrees\" must be a list");
  for (const auto& x : deg) {
    if (!x.is_number_unsigned()) fail("degrees must be nonnegative integers");
    cb.degrees.push_back(x.get<std::size_t>());
  }
  const json& gl = get(j, "gluings");
  if (!gl.is_array()) fail("\"gluings\" must be a list");
  for (const auto& x : gl) cb.gluings.push_back(matrix_from_json(x));
  try {
    cb.check();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return cb;
}

GiesekerDatum datum_from_json(const json& j) {
  check_version(j);
  GiesekerDatum d;
  d.n = get_count(j, "n");
  for (int s : {1, 2}) {
    const json& side = get(j, s == 1 ? "side1" : "side2");
    if (!side.is_object()) fail("side must be an object");
    d.side(s).chain = chain_from_json(get(side, "chain"));
    const json& at = get(side, "attach");
    if (!at.is_null()) d.side(s).attach = matrix_from_json(at);
  }
  d.phi = matrix_from_json(get(j, "phi"));
  try {
    d.check();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return d;
}

GeneralizedIsomorphism gi_from_json(const json& j) {
  check_version(j);
  GeneralizedIsomorphism gi;
  const std::size_t n = gi.n = get_count(j, "n");
  if (n < 1) fail("rank must be at least 1");
  auto scalars = [&](const char* key) {
    const json& x = get(j, key);
    if (!x.is_array() || x.size() != n) fail(std::string("\"") + key + "\" must be a list of n rationals");
    std::vector<Rational> out;
    for (const auto& y : x) out.push_back(rational_from_json(y));
    return out;
  };
  auto mu = scalars("mu"), la = scalars("lambda");
  auto ef = matrix_list(get(j, "e_f"), n, n, "e_f"), eg = matrix_list(get(j, "e_g"), n, n, "e_g");
  auto ff = matrix_list(get(j, "f_f"), n, n, "f_f"), fg = matrix_list(get(j, "f_g"), n, n, "f_g");
  for (std::size_t i = 0; i < n; ++i) {
    gi.e_stages.push_back({n, mu[i], ef[i], eg[i], i});
    gi.f_stages.push_back({n, la[i], ff[i], fg[i], i});
  }
  gi.phi = square(get(j, "phi"), n, "phi");
  return gi;
}

ObjectKind classify(const json& j) {
  if (!j.is_object()) return ObjectKind::unknown;
  if (j.contains("side1")) return ObjectKind::datum;
  if (j.contains("mu")) return ObjectKind::gi;
  if (j.contains("degrees")) return ObjectKind::chain;
  return ObjectKind::unknown;
}

}  // namespace gk
