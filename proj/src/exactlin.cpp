#include "exactlin.hpp"

#include <algorithm>

namespace gk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::col(std::size_t j) const { return cols_range(j, j + 1); }

Matrix Matrix::cols_range(std::size_t j0, std::size_t j1) const {
  Matrix m(r_, j1 - j0);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = j0; j < j1; ++j) m(i, j - j0) = (*this)(i, j);
  return m;
}

Matrix Matrix::rows_range(std::size_t i0, std::size_t i1) const {
  Matrix m(i1 - i0, c_);
  for (std::size_t i = i0; i < i1; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i - i0, j) = (*this)(i, j);
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

void Matrix::place(std::size_t i, std::size_t j, const Matrix& m) {
  if (i + m.rows() > r_ || j + m.cols() > c_) throw DimensionError("place out of range");
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) (*this)(i + a, j + b) = m(a, b);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("product shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sum shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
  return r;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hcat row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.place(0, 0, a);
  m.place(0, a.cols(), b);
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vcat column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.place(0, 0, a);
  m.place(a.rows(), 0, b);
  return m;
}

Matrix proj_first(std::size_t n, std::size_t d) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

Matrix proj_last(std::size_t n, std::size_t d) {
  Matrix m(n, n);
  for (std::size_t i = n - d; i < n; ++i) m(i, i) = 1;
  return m;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}, 0};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rational inv = 1 / a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (sgn(a(row, j)) != 0) a(row, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < a.cols(); ++j)
      if (sgn(a(row, j)) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j : nz) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Rref r = rref(hcat(m, Matrix::identity(n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.cols_range(n, 2 * n);
}

Matrix inverse_or_throw(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw DimensionError("matrix not invertible");
  return *inv;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.n_ = ambient;
  s.basis_ = Matrix(ambient, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

Subspace Subspace::span(const Matrix& generators) {
  Rref r = rref(generators.transpose());
  Subspace s;
  s.n_ = generators.rows();
  s.basis_ = r.reduced.rows_range(0, r.rank).transpose();
  return s;
}

Subspace Subspace::coords(std::size_t ambient, std::size_t first, std::size_t count) {
  Matrix b(ambient, count);
  for (std::size_t k = 0; k < count; ++k) b(first + k, k) = 1;
  Subspace s;
  s.n_ = ambient;
  s.basis_ = b;
  return s;
}

std::vector<std::size_t> Subspace::pivot_rows() const {
  std::vector<std::size_t> p;
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    std::size_t i = 0;
    while (sgn(basis_(i, j)) == 0) ++i;
    p.push_back(i);
  }
  return p;
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != n_) throw DimensionError("contains: ambient mismatch");
  return rank(hcat(basis_, v)) == dim();
}

Subspace kernel(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::size_t k = 0;
  Matrix b(m.cols(), m.cols() - r.rank);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    b(j, k) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) b(r.pivots[i], k) = -r.reduced(i, j);
    ++k;
  }
  return Subspace::span(b);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient mismatch");
  Subspace k = kernel(hcat(a.basis(), Rational(-1) * b.basis()));
  return Subspace::span(a.basis() * k.basis().rows_range(0, a.dim()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("sum: ambient mismatch");
  return Subspace::span(hcat(a.basis(), b.basis()));
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient()) throw DimensionError("preimage: ambient mismatch");
  Subspace k = kernel(hcat(m, Rational(-1) * w.basis()));
  return Subspace::span(k.basis().rows_range(0, m.cols()));
}

Matrix complement_basis(const Subspace& s) {
  auto piv = s.pivot_rows();
  std::vector<bool> used(s.ambient(), false);
  for (auto p : piv) used[p] = true;
  Matrix c(s.ambient(), s.ambient() - s.dim());
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.ambient(); ++i)
    if (!used[i]) c(i, k++) = 1;
  return c;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row mismatch");
  Rref r = rref(hcat(a, b));
  for (auto p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  return x;
}

Feasibility solve_feasible(const std::vector<Unknown>& unknowns,
                           const std::vector<LinearEquation>& eqs,
                           const FeasibilityOptions& opt) {
  std::vector<std::size_t> offset;
  std::size_t nv = 0;
  for (const auto& u : unknowns) {
    offset.push_back(nv);
    nv += u.rows * u.cols;
  }
  std::size_t ne = 0;
  for (const auto& e : eqs) ne += e.rhs.rows() * e.rhs.cols();

  // Row-major vec: entry (k,l) of unknown u is variable offset[u] + k*cols + l.
  Matrix sys(ne, nv + 1);
  std::size_t row0 = 0;
  for (const auto& e : eqs) {
    std::size_t p = e.rhs.rows(), q = e.rhs.cols();
    for (const auto& t : e.terms) {
      const Unknown& u = unknowns.at(t.unknown);
      if (t.left.rows() != p || t.left.cols() != u.rows || t.right.rows() != u.cols ||
          t.right.cols() != q)
        throw DimensionError("solve_feasible: term shape mismatch");
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < u.rows; ++k) {
          if (sgn(t.left(i, k)) == 0) continue;
          for (std::size_t l = 0; l < u.cols; ++l)
            for (std::size_t j = 0; j < q; ++j) {
              if (sgn(t.right(l, j)) == 0) continue;
              sys(row0 + i * q + j, offset[t.unknown] + k * u.cols + l) += t.left(i, k) * t.right(l, j);
            }
        }
    }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) sys(row0 + i * q + j, nv) = e.rhs(i, j);
    row0 += p * q;
  }

  Feasibility out;
  Rref r = rref(sys);
  if (!r.pivots.empty() && r.pivots.back() == nv) return out;
  out.linear_consistent = true;

  std::vector<bool> is_pivot(nv, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < nv; ++j)
    if (!is_pivot[j]) free_vars.push_back(j);

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(-opt.range, opt.range);
  for (int attempt = 0; attempt <= opt.draws; ++attempt) {
    std::vector<Rational> x(nv);
    for (auto f : free_vars) x[f] = attempt == 0 ? 0 : dist(rng);
    for (std::size_t i = 0; i < r.rank; ++i) {
      Rational v = r.reduced(i, nv);
      for (auto f : free_vars)
        if (sgn(r.reduced(i, f)) != 0 && sgn(x[f]) != 0) v -= r.reduced(i, f) * x[f];
      x[r.pivots[i]] = v;
    }
    std::vector<Matrix> vals;
    bool ok = true;
    for (std::size_t u = 0; u < unknowns.size() && ok; ++u) {
      Matrix m(unknowns[u].rows, unknowns[u].cols);
      for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t l = 0; l < m.cols(); ++l) m(k, l) = x[offset[u] + k * m.cols() + l];
      if (unknowns[u].must_be_invertible && !invertible(m)) ok = false;
      vals.push_back(std::move(m));
    }
    out.draws_used = attempt;
    if (ok) {
      out.found = true;
      out.values = std::move(vals);
      return out;
    }
    if (free_vars.empty()) break;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("malformed rational: \"" + s + "\""); };
  auto slash = s.find('/');
  auto digits = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && t[0] == '-') i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw bad();
  Rational q;
  q.get_num() = mpz_class(num, 10);
  q.get_den() = mpz_class(den, 10);
  if (sgn(q.get_den()) == 0) throw bad();
  q.canonicalize();
  return q;
}

Matrix random_int_matrix(std::size_t r, std::size_t c, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

Matrix random_invertible(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_int_matrix(n, n, lo, hi, rng);
    if (invertible(m)) return m;
  }
}

}  // namespace gk
