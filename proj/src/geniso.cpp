#include "geniso.hpp"

#include "chainbundle.hpp"

namespace gk {

BfMorphism BfMorphism::unit(std::size_t n, std::size_t bf_rank) {
  return {n, 1, Matrix::identity(n), Matrix::identity(n), bf_rank};
}

std::vector<std::string> validate_bf(const BfMorphism& b) {
  std::vector<std::string> v;
  const std::size_t n = b.n;
  if (b.f.rows() != n || b.f.cols() != n || b.g.rows() != n || b.g.cols() != n) {
    v.push_back("maps must be n x n");
    return v;
  }
  if (b.bf_rank > n) v.push_back("bf_rank exceeds n");
  Matrix mu_id = b.mu * Matrix::identity(n);
  if (b.g * b.f != mu_id) v.push_back("g f != mu I");
  if (b.f * b.g != mu_id) v.push_back("f g != mu I");
  if (sgn(b.mu) != 0) {
    if (!invertible(b.f)) v.push_back("mu != 0 but f not invertible");
  } else {
    if (rank(b.f) != b.bf_rank) v.push_back("rank f != bf_rank");
    if (image(b.g) != kernel(b.f)) v.push_back("im g != ker f");
    if (image(b.f) != kernel(b.g)) v.push_back("im f != ker g");
  }
  return v;
}

Composites composite_maps(const GeneralizedIsomorphism& gi) {
  Composites c{Matrix::identity(gi.n), Matrix::identity(gi.n), {}, {}};
  for (const auto& s : gi.e_stages) c.comp_e = c.comp_e * s.f;
  for (const auto& s : gi.f_stages) c.comp_f = c.comp_f * s.f;
  c.ker_e = kernel(c.comp_e);
  c.ker_f = kernel(c.comp_f);
  return c;
}

namespace {

void check_side(const std::vector<BfMorphism>& st, const char* name, std::vector<std::string>& v) {
  for (std::size_t i = 1; i <= st.size(); ++i) {
    const auto& b = st[i - 1];
    std::string tag = std::string(name) + " stage " + std::to_string(i) + ": ";
    if (b.bf_rank != i - 1) v.push_back(tag + "declared rank != i-1");
    for (auto& s : validate_bf(b)) v.push_back(tag + s);
  }
  // im(b_j b_i) = im(b_j) and im(a_i a_j) = im(a_i) for consecutive degenerate
  // stages i < j; unit stages in between are isomorphisms and are folded into
  // the later map.
  std::size_t prev = 0;
  for (std::size_t j = 1; j <= st.size(); ++j) {
    if (sgn(st[j - 1].mu) != 0) continue;
    if (prev) {
      const std::size_t n = st[j - 1].n;
      Matrix up = Matrix::identity(n), down = Matrix::identity(n);
      for (std::size_t k = prev + 1; k < j; ++k) {
        up = st[k - 1].g * up;
        down = down * st[k - 1].f;
      }
      Matrix bj = st[j - 1].g * up, ai = st[prev - 1].f * down;
      std::string tag = std::string(name) + " stages " + std::to_string(prev) + "," + std::to_string(j) + ": ";
      if (rank(bj * st[prev - 1].g) != rank(bj)) v.push_back(tag + "im(g g) != im(g)");
      if (rank(ai * st[j - 1].f) != rank(ai)) v.push_back(tag + "im(f f) != im(f)");
    }
    prev = j;
  }
}

}  // namespace

std::vector<std::string> validate_gi(const GeneralizedIsomorphism& gi) {
  std::vector<std::string> v;
  const std::size_t n = gi.n;
  if (gi.e_stages.size() != n || gi.f_stages.size() != n) {
    v.push_back("stage count != n");
    return v;
  }
  for (const auto* st : {&gi.e_stages, &gi.f_stages})
    for (const auto& b : *st)
      if (b.n != n) {
        v.push_back("stage rank != n");
        return v;
      }
  if (gi.phi.rows() != n || gi.phi.cols() != n || !invertible(gi.phi)) {
    v.push_back("phi not an invertible n x n matrix");
    return v;
  }
  check_side(gi.e_stages, "E", v);
  check_side(gi.f_stages, "F", v);
  if (!v.empty()) return v;
  Composites c = composite_maps(gi);
  if (intersect(Subspace::span(gi.phi * c.ker_e.basis()), c.ker_f).dim() != 0)
    v.push_back("transversality: phi(ker compE) meets ker compF");
  return v;
}

std::vector<bool> mu_zero_pattern(const GeneralizedIsomorphism& gi) {
  std::vector<bool> z;
  for (const auto& s : gi.e_stages) z.push_back(sgn(s.mu) == 0);
  return z;
}

std::vector<bool> lambda_zero_pattern(const GeneralizedIsomorphism& gi) {
  std::vector<bool> z;
  for (const auto& s : gi.f_stages) z.push_back(sgn(s.mu) == 0);
  return z;
}

bool gi_equivalent(const GeneralizedIsomorphism& a, const GeneralizedIsomorphism& b, std::uint64_t seed) {
  if (a.n != b.n) throw std::invalid_argument("gi_equivalent: rank mismatch");
  if (mu_zero_pattern(a) != mu_zero_pattern(b) || lambda_zero_pattern(a) != lambda_zero_pattern(b)) return false;
  const std::size_t n = a.n;
  Matrix id = Matrix::identity(n), zero(n, n);
  // Unknowns 0..n-1: c_1..c_n on E; n..2n-1: d_1..d_n on F.
  std::vector<Unknown> unknowns(2 * n, Unknown{n, n, true});
  std::vector<LinearEquation> eqs;
  auto side = [&](const std::vector<BfMorphism>& sa, const std::vector<BfMorphism>& sb, std::size_t base) {
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& x = sa[i - 1];
      const auto& y = sb[i - 1];
      std::size_t ci = base + i - 1;
      // c_{i-1} f^a = f^b c_i
      LinearEquation e1{{{Rational(-1) * y.f, ci, id}}, zero};
      // c_i g^a = g^b c_{i-1}
      LinearEquation e2{{{id, ci, x.g}}, zero};
      if (i == 1) {
        e1.rhs = Rational(-1) * x.f;
        e2.rhs = y.g;
      } else {
        e1.terms.push_back({id, ci - 1, x.f});
        e2.terms.push_back({Rational(-1) * y.g, ci - 1, id});
      }
      eqs.push_back(std::move(e1));
      eqs.push_back(std::move(e2));
    }
  };
  side(a.e_stages, b.e_stages, 0);
  side(a.f_stages, b.f_stages, n);
  eqs.push_back({{{id, 2 * n - 1, a.phi}, {Rational(-1) * b.phi, n - 1, id}}, zero});
  FeasibilityOptions opt;
  opt.seed = seed;
  opt.draws = feasibility_budget();
  return solve_feasible(unknowns, eqs, opt).found;
}

GeneralizedIsomorphism conjugate(const GeneralizedIsomorphism& gi, const std::vector<Matrix>& c,
                                 const std::vector<Matrix>& d) {
  GeneralizedIsomorphism out = gi;
  const std::size_t n = gi.n;
  auto side = [&](std::vector<BfMorphism>& st, const std::vector<Matrix>& m) {
    for (std::size_t i = 1; i <= n; ++i) {
      Matrix lo = i == 1 ? Matrix::identity(n) : m[i - 2];
      const Matrix& hi = m[i - 1];
      st[i - 1].f = lo * st[i - 1].f * inverse_or_throw(hi);
      st[i - 1].g = hi * st[i - 1].g * inverse_or_throw(lo);
    }
  };
  side(out.e_stages, c);
  side(out.f_stages, d);
  out.phi = d[n - 1] * gi.phi * inverse_or_throw(c[n - 1]);
  return out;
}

GrassmannianPoint grassmannian_point(const GeneralizedIsomorphism& gi) {
  auto v = validate_gi(gi);
  if (!v.empty()) throw std::invalid_argument("grassmannian_point: invalid generalized isomorphism: " + v[0]);
  Composites c = composite_maps(gi);
  Matrix m = vcat(c.comp_e, c.comp_f * gi.phi);
  Subspace left_kernel = kernel(m.transpose());
  return {left_kernel.basis().transpose(), left_kernel.dim()};
}

}  // namespace gk
