#include "util.hpp"

using namespace gk;

TEST_CASE("rref of small matrices") {
  Rref r = rref(M({{2, 4}, {1, 2}}));
  CHECK(r.reduced == M({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);

  Rref id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  Matrix m(3, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  m(2, 1) = 5;
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel, image, intersection, preimage") {
  CHECK(kernel(Matrix(2, 2)).dim() == 2);
  CHECK(kernel(Matrix::identity(2)).dim() == 0);
  Subspace k = kernel(M({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(M({{1}, {-1}})));

  CHECK(image(Matrix::identity(2)) == Subspace::full(2));
  CHECK(image(Matrix(2, 2)).dim() == 0);
  Subspace im = image(M({{1, 2}, {2, 4}}));
  CHECK(im == Subspace::span(M({{1}, {2}})));

  CHECK(intersect(Subspace::coords(2, 0, 1), Subspace::coords(2, 1, 1)).dim() == 0);
  Subspace v = Subspace::span(M({{1, 0}, {2, 1}, {0, 3}}));
  CHECK(intersect(v, v) == v);
  CHECK(intersect(Subspace::coords(3, 0, 2), Subspace::coords(3, 1, 2)) == Subspace::coords(3, 1, 1));

  CHECK(preimage(Matrix::identity(2), Subspace::coords(2, 1, 1)) == Subspace::coords(2, 1, 1));
  CHECK(preimage(M({{1, 2}, {3, 4}}), Subspace::full(2)) == Subspace::full(2));
  CHECK(preimage(M({{1, 0}}), Subspace::zero(1)) == Subspace::coords(2, 1, 1));
}

TEST_CASE("subspace normal form does not depend on the generators") {
  Subspace a = Subspace::span(M({{1, 1}, {1, 2}, {1, 3}}));
  Subspace b = Subspace::span(M({{2, 0}, {3, 1}, {4, 2}}));
  CHECK(a == b);
  CHECK(sum(a, Subspace::coords(3, 0, 1)) == Subspace::full(3));
}

TEST_CASE("rank agrees with the minor and elimination oracles") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m = random_int_matrix(r, c, -2, 2, rng);
    if (t % 3 == 0 && r > 1)  // force a dependency
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    CHECK(rank(m) == oracle::rank_by_minors(rows_of(m)));
    CHECK(rank(m) == oracle::rank(rows_of(m)));
    CHECK(kernel(m).dim() + rank(m) == c);
  }
}

TEST_CASE("inverse and complement") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_invertible(3, -3, 3, rng);
    CHECK(a * inverse_or_throw(a) == Matrix::identity(3));
    CHECK(sgn(oracle::det(rows_of(a))) != 0);
  }
  CHECK_FALSE(inverse(M({{1, 2}, {2, 4}})).has_value());
  CHECK_THROWS(inverse_or_throw(M({{1, 2}, {2, 4}})));
  Subspace s = Subspace::span(M({{1}, {1}, {0}}));
  CHECK(invertible(hcat(s.basis(), complement_basis(s))));
}

TEST_CASE("solve_feasible") {
  Matrix id = Matrix::identity(2), zero(2, 2);
  Feasibility f = solve_feasible({{2, 2, true}}, {{{{id, 0, id}}, id}});
  CHECK(f.found);
  CHECK(f.values[0] == id);

  Feasibility g = solve_feasible({{2, 2, true}}, {{{{id, 0, zero}}, id}});
  CHECK_FALSE(g.linear_consistent);
  CHECK_FALSE(g.found);

  // X A = B X with A = B = diag(1, 2): witnesses are invertible diagonals.
  Matrix a = M({{1, 0}, {0, 2}});
  FeasibilityOptions opt;
  opt.seed = 5;
  Feasibility h = solve_feasible({{2, 2, true}}, {{{{id, 0, a}, {Rational(-1) * a, 0, id}}, zero}}, opt);
  REQUIRE(h.found);
  Matrix x = h.values[0];
  CHECK(x * a == a * x);
  CHECK(invertible(x));
  CHECK(sgn(x(0, 1)) == 0);
  CHECK(sgn(x(1, 0)) == 0);
}

TEST_CASE("rational parsing is strict and canonical") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/2/3"));
}
