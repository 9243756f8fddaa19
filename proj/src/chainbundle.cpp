#include "chainbundle.hpp"

#include <cstdlib>
#include <numeric>

namespace gk {

void ChainBundle::check() const {
  if (n == 0) throw std::invalid_argument("rank must be at least 1");
  for (auto d : degrees)
    if (d < 1 || d > n) throw std::invalid_argument("component degree outside [1, n]");
  std::size_t expect = degrees.empty() ? 0 : degrees.size() - 1;
  if (gluings.size() != expect) throw std::invalid_argument("gluing count must be length - 1");
  for (const auto& g : gluings) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("gluing must be n x n");
    if (!invertible(g)) throw std::invalid_argument("gluing not invertible");
  }
}

Subspace section_space(const ChainBundle& cb, bool vanish_left, bool vanish_right) {
  const std::size_t n = cb.n, r = cb.length();
  if (r == 0) throw std::invalid_argument("section_space: chain of length zero");
  const std::size_t nv = 2 * n * r;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  auto L = [&](std::size_t i) { return 2 * n * i; };
  auto R = [&](std::size_t i) { return 2 * n * i + n; };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = cb.degrees[i]; k < n; ++k) rows.push_back({{L(i) + k, 1}, {R(i) + k, -1}});
  for (std::size_t i = 0; i + 1 < r; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::pair<std::size_t, Rational>> row{{L(i + 1) + k, -1}};
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(cb.gluings[i](k, j)) != 0) row.push_back({R(i) + j, cb.gluings[i](k, j)});
      rows.push_back(row);
    }
  if (vanish_left)
    for (std::size_t k = 0; k < n; ++k) rows.push_back({{L(0) + k, 1}});
  if (vanish_right)
    for (std::size_t k = 0; k < n; ++k) rows.push_back({{R(r - 1) + k, 1}});
  Matrix m(rows.size(), nv);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [j, v] : rows[i]) m(i, j) = v;
  return kernel(m);
}

std::vector<Subspace> v_subspaces(const ChainBundle& cb) {
  const std::size_t n = cb.n, r = cb.length();
  if (r == 0) throw std::invalid_argument("v_subspaces: chain of length zero");
  std::vector<Subspace> v{Subspace::zero(n)};
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t d = cb.degrees[i];
    Matrix moved = i == 0 ? v.back().basis() : cb.gluings[i - 1] * v.back().basis();
    Matrix pg = proj_last(n, n - d);
    v.push_back(preimage(pg, image(pg * moved)));
  }
  return v;
}

bool is_admissible(const ChainBundle& cb, AdmissibilityMethod method) {
  const std::size_t r = cb.length();
  if (r == 0) return true;
  switch (method) {
    case AdmissibilityMethod::definition: {
      auto v = v_subspaces(cb);
      for (std::size_t i = 1; i < r; ++i) {
        Subspace f = preimage(cb.gluings[i - 1], Subspace::coords(cb.n, 0, cb.degrees[i]));
        if (intersect(v[i], f).dim() != 0) return false;
      }
      return true;
    }
    case AdmissibilityMethod::dimension: {
      // dim H0(E(-x0)) is always the degree sum on a strictly standard chain;
      // the count that detects admissibility is the image at the far end.
      Subspace s = section_space(cb, true, false);
      return rank(s.basis().rows_range(2 * cb.n * (r - 1) + cb.n, 2 * cb.n * r)) == total_degree(cb);
    }
    case AdmissibilityMethod::vanishing:
      return section_space(cb, true, true).dim() == 0;
  }
  return false;
}

bool is_admissible(const ChainBundle& cb) { return is_admissible(cb, AdmissibilityMethod::vanishing); }

bool v_image_check(const ChainBundle& cb) {
  auto v = v_subspaces(cb);
  const std::size_t n = cb.n;
  for (std::size_t i = 1; i <= cb.length(); ++i) {
    Subspace s = section_space(subchain(cb, 1, i), true, false);
    Matrix at_xi = s.basis().rows_range(2 * n * (i - 1) + n, 2 * n * i);
    if (image(at_xi) != v[i]) return false;
  }
  return true;
}

ChainBundle subchain(const ChainBundle& cb, std::size_t from, std::size_t to) {
  if (from < 1 || from > to || to > cb.length()) throw std::out_of_range("subchain: bad index range");
  ChainBundle s;
  s.n = cb.n;
  s.degrees.assign(cb.degrees.begin() + (from - 1), cb.degrees.begin() + to);
  s.gluings.assign(cb.gluings.begin() + (from - 1), cb.gluings.begin() + (to - 1));
  return s;
}

ChainBundle reverse(const ChainBundle& cb) {
  ChainBundle out;
  out.n = cb.n;
  out.degrees.assign(cb.degrees.rbegin(), cb.degrees.rend());
  for (auto it = cb.gluings.rbegin(); it != cb.gluings.rend(); ++it) out.gluings.push_back(inverse_or_throw(*it));
  return out;
}

ChainBundle concatenate(const ChainBundle& a, const ChainBundle& b, const Matrix& node_gluing) {
  if (a.n != b.n) throw std::invalid_argument("concatenate: rank mismatch");
  if (a.length() == 0) return b;
  if (b.length() == 0) return a;
  ChainBundle c = a;
  c.degrees.insert(c.degrees.end(), b.degrees.begin(), b.degrees.end());
  c.gluings.push_back(node_gluing);
  c.gluings.insert(c.gluings.end(), b.gluings.begin(), b.gluings.end());
  return c;
}

std::size_t total_degree(const ChainBundle& cb) {
  return std::accumulate(cb.degrees.begin(), cb.degrees.end(), std::size_t{0});
}

long line_degree(const std::vector<long>& l) { return std::accumulate(l.begin(), l.end(), 0L); }

long line_tensor_degree(const std::vector<long>& l1, const std::vector<long>& l2) {
  if (l1.size() != l2.size()) throw std::invalid_argument("line bundles on chains of different length");
  long s = 0;
  for (std::size_t i = 0; i < l1.size(); ++i) s += l1[i] + l2[i];
  return s;
}

namespace {
int env_budget(int fallback) {
  if (const char* e = std::getenv("GIESEKER_RETRY_BUDGET")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return fallback;
}
}  // namespace

int resample_budget() { return env_budget(256); }
int feasibility_budget() { return env_budget(64); }

ChainBundle random_chain(std::size_t n, const std::vector<std::size_t>& degrees, std::mt19937_64& rng) {
  ChainBundle cb;
  cb.n = n;
  cb.degrees = degrees;
  for (std::size_t i = 1; i < degrees.size(); ++i) cb.gluings.push_back(random_invertible(n, -3, 3, rng));
  return cb;
}

ChainBundle random_chain(std::size_t n, std::size_t r, std::uint64_t seed, bool require_admissible) {
  if (n < 1) throw std::invalid_argument("random_chain: n must be positive");
  if (require_admissible && r > n) throw std::invalid_argument("random_chain: admissible chains have r <= n");
  std::mt19937_64 rng(seed);
  const int budget = resample_budget();
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::size_t> deg(r, 1);
    if (require_admissible) {
      // Spread the spare degree n - r randomly, then keep a random prefix of it.
      std::size_t spare = std::uniform_int_distribution<std::size_t>(0, n - r)(rng);
      for (std::size_t k = 0; k < spare && r > 0; ++k)
        ++deg[std::uniform_int_distribution<std::size_t>(0, r - 1)(rng)];
    } else {
      for (auto& d : deg) d = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    }
    ChainBundle cb = random_chain(n, deg, rng);
    if (!require_admissible || is_admissible(cb)) return cb;
  }
  throw BudgetExhausted("random_chain: resampling budget exhausted");
}

}  // namespace gk
