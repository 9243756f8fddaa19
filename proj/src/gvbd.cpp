#include "gvbd.hpp"

namespace gk {

void GiesekerDatum::check() const {
  for (int s : {1, 2}) {
    const AttachedChain& a = side(s);
    if (a.chain.n != n) throw std::invalid_argument("side rank differs from datum rank");
    a.chain.check();
    if (a.attach.has_value() != (a.chain.length() > 0))
      throw std::invalid_argument("attach must be present exactly when the chain is nonempty");
    if (a.attach && (a.attach->rows() != n || a.attach->cols() != n || !invertible(*a.attach)))
      throw std::invalid_argument("attach must be an invertible n x n matrix");
  }
  if (phi.rows() != n || phi.cols() != n || !invertible(phi))
    throw std::invalid_argument("phi must be an invertible n x n matrix");
}

GiesekerDatum empty_datum(std::size_t n) {
  GiesekerDatum d;
  d.n = n;
  d.side1.chain.n = d.side2.chain.n = n;
  d.phi = Matrix::identity(n);
  return d;
}

ChainBundle concatenated_chain(const GiesekerDatum& d) {
  return concatenate(d.side1.chain, reverse(d.side2.chain), d.phi);
}

bool admissible_pair(const GiesekerDatum& d) { return is_admissible(concatenated_chain(d)); }

std::size_t extremal_degree(const GiesekerDatum& d, int side) {
  const auto& c = d.side(side).chain;
  return c.length() == 0 ? inf_degree(d.n) : c.degrees.back();
}

std::pair<std::size_t, std::size_t> extremal_degrees(const GiesekerDatum& d) {
  return {extremal_degree(d, 1), extremal_degree(d, 2)};
}

namespace {

Matrix embed_first(std::size_t n, std::size_t d) { return Matrix::identity(n).cols_range(0, d); }
Matrix embed_last(std::size_t n, std::size_t d) { return Matrix::identity(n).cols_range(d, n); }

// Unknown indices of one fiber automorphism: either a full matrix or the
// block form of a component automorphism at one endpoint.
struct FiberAut {
  bool full = false;
  std::size_t h = 0, a = 0, b = 0, dd = 0;
  std::size_t deg = 0;
};

void add_product(std::vector<Term>& out, std::size_t n, const Matrix& x, const FiberAut& f, const Matrix& y,
                 const Rational& sign) {
  if (f.full) {
    out.push_back({sign * x, f.h, y});
    return;
  }
  Matrix j1 = embed_first(n, f.deg), j2 = embed_last(n, f.deg);
  out.push_back({sign * (x * j1), f.a, j1.transpose() * y});
  if (f.deg < n) {
    out.push_back({sign * (x * j1), f.b, j2.transpose() * y});
    out.push_back({sign * (x * j2), f.dd, j2.transpose() * y});
  }
}

}  // namespace

EquivalenceResult datum_equivalence(const GiesekerDatum& a, const GiesekerDatum& b, std::uint64_t seed) {
  EquivalenceResult res;
  if (a.n != b.n) return res;
  for (int s : {1, 2})
    if (a.side(s).chain.degrees != b.side(s).chain.degrees) return res;
  res.shapes_match = true;
  const std::size_t n = a.n;

  std::vector<Unknown> unknowns;
  auto add_unknown = [&](std::size_t r, std::size_t c, bool inv) {
    unknowns.push_back({r, c, inv});
    return unknowns.size() - 1;
  };
  std::vector<LinearEquation> eqs;
  Matrix id = Matrix::identity(n);
  FiberAut end[3];

  for (int s : {1, 2}) {
    const auto& ca = a.side(s);
    const auto& cb = b.side(s);
    FiberAut base;
    base.full = true;
    base.h = add_unknown(n, n, true);
    std::vector<FiberAut> left, right;
    for (auto d : ca.chain.degrees) {
      FiberAut l, r;
      l.deg = r.deg = d;
      l.a = r.a = add_unknown(d, d, true);
      if (d < n) {
        l.dd = r.dd = add_unknown(n - d, n - d, true);
        l.b = add_unknown(d, n - d, false);
        r.b = add_unknown(d, n - d, false);
      }
      left.push_back(l);
      right.push_back(r);
    }
    if (!left.empty()) {
      LinearEquation e{{}, Matrix(n, n)};
      add_product(e.terms, n, *cb.attach, base, id, 1);
      add_product(e.terms, n, id, left[0], *ca.attach, -1);
      eqs.push_back(std::move(e));
    }
    for (std::size_t k = 0; k + 1 < left.size(); ++k) {
      LinearEquation e{{}, Matrix(n, n)};
      add_product(e.terms, n, cb.chain.gluings[k], right[k], id, 1);
      add_product(e.terms, n, id, left[k + 1], ca.chain.gluings[k], -1);
      eqs.push_back(std::move(e));
    }
    end[s] = left.empty() ? base : right.back();
  }
  {
    LinearEquation e{{}, Matrix(n, n)};
    add_product(e.terms, n, b.phi, end[1], id, 1);
    add_product(e.terms, n, id, end[2], a.phi, -1);
    eqs.push_back(std::move(e));
  }
  FeasibilityOptions opt;
  opt.seed = seed;
  opt.draws = feasibility_budget();
  Feasibility f = solve_feasible(unknowns, eqs, opt);
  res.linear_consistent = f.linear_consistent;
  res.equivalent = f.found;
  return res;
}

bool datum_equivalent(const GiesekerDatum& a, const GiesekerDatum& b, std::uint64_t seed) {
  return datum_equivalence(a, b, seed).equivalent;
}

GiesekerDatum random_automorphic_image(const GiesekerDatum& d, std::mt19937_64& rng, bool move_base) {
  const std::size_t n = d.n;
  GiesekerDatum out = d;
  Matrix ends[3];
  for (int s : {1, 2}) {
    const auto& src = d.side(s);
    auto& dst = out.side(s);
    Matrix h = move_base ? random_invertible(n, -2, 2, rng) : Matrix::identity(n);
    Matrix prev_right = h;
    for (std::size_t k = 0; k < src.chain.length(); ++k) {
      std::size_t deg = src.chain.degrees[k];
      Matrix a = random_invertible(deg, -2, 2, rng);
      Matrix hl(n, n), hr(n, n);
      hl.place(0, 0, a);
      hr.place(0, 0, a);
      if (deg < n) {
        Matrix dm = random_invertible(n - deg, -2, 2, rng);
        hl.place(deg, deg, dm);
        hr.place(deg, deg, dm);
        hl.place(0, deg, random_int_matrix(deg, n - deg, -2, 2, rng));
        hr.place(0, deg, random_int_matrix(deg, n - deg, -2, 2, rng));
      }
      if (k == 0)
        dst.attach = hl * *src.attach * inverse_or_throw(prev_right);
      else
        dst.chain.gluings[k - 1] = hl * src.chain.gluings[k - 1] * inverse_or_throw(prev_right);
      prev_right = hr;
    }
    ends[s] = prev_right;
  }
  out.phi = ends[2] * d.phi * inverse_or_throw(ends[1]);
  return out;
}

GiesekerDatum random_datum(std::size_t n, std::size_t len1, std::size_t len2, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_datum: n must be positive");
  if (len1 + len2 > n) throw std::invalid_argument("random_datum: len1 + len2 must not exceed n");
  std::mt19937_64 rng(seed);
  const int budget = resample_budget();
  const std::size_t r = len1 + len2;
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::size_t> deg(r, 1);
    std::size_t spare = std::uniform_int_distribution<std::size_t>(0, n - r)(rng);
    for (std::size_t k = 0; k < spare && r > 0; ++k) ++deg[std::uniform_int_distribution<std::size_t>(0, r - 1)(rng)];
    GiesekerDatum d = empty_datum(n);
    d.side1.chain = random_chain(n, std::vector<std::size_t>(deg.begin(), deg.begin() + len1), rng);
    d.side2.chain = random_chain(n, std::vector<std::size_t>(deg.begin() + len1, deg.end()), rng);
    if (len1) d.side1.attach = random_invertible(n, -3, 3, rng);
    if (len2) d.side2.attach = random_invertible(n, -3, 3, rng);
    d.phi = random_invertible(n, -3, 3, rng);
    if (admissible_pair(d)) return d;
  }
  throw BudgetExhausted("random_datum: resampling budget exhausted");
}

}  // namespace gk
