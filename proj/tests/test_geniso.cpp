#include "util.hpp"

using namespace gk;

namespace {

BfMorphism bf(std::size_t n, long mu, Matrix f, Matrix g, std::size_t r) { return {n, mu, f, g, r}; }

GeneralizedIsomorphism rank_one(long mu, long la, long phi = 1) {
  Matrix one = Matrix::identity(1), zero(1, 1);
  GeneralizedIsomorphism gi;
  gi.n = 1;
  gi.e_stages = {bf(1, mu, mu ? one : zero, one, 0)};
  gi.f_stages = {bf(1, la, la ? one : zero, one, 0)};
  gi.phi = M({{phi}});
  return gi;
}

GeneralizedIsomorphism all_units(std::size_t n) {
  GeneralizedIsomorphism gi;
  gi.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    gi.e_stages.push_back(BfMorphism::unit(n, i));
    gi.f_stages.push_back(BfMorphism::unit(n, i));
  }
  gi.phi = Matrix::identity(n);
  return gi;
}

}  // namespace

TEST_CASE("bf-morphism validation") {
  CHECK(validate_bf(BfMorphism::unit(3, 2)).empty());
  Matrix nil = M({{0, 0}, {1, 0}});
  CHECK(validate_bf(bf(2, 0, nil, nil, 1)).empty());
  CHECK_FALSE(validate_bf(bf(2, 0, Matrix::identity(2), Matrix::identity(2), 2)).empty());
  CHECK_FALSE(validate_bf(bf(2, 0, Matrix::identity(2), Matrix(2, 2), 1)).empty());
  // f invertible with g = 0 meets every condition at full rank.
  CHECK(validate_bf(bf(2, 0, Matrix::identity(2), Matrix(2, 2), 2)).empty());
  CHECK_FALSE(validate_bf(bf(2, 0, nil, nil, 0)).empty());
  CHECK_FALSE(validate_bf(bf(2, 2, Matrix::identity(2), Matrix::identity(2), 0)).empty());
}

TEST_CASE("rank one generalized isomorphisms") {
  CHECK(validate_gi(rank_one(0, 1, 3)).empty());
  CHECK(validate_gi(rank_one(1, 0)).empty());
  CHECK(validate_gi(rank_one(1, 1)).empty());
  CHECK_FALSE(validate_gi(rank_one(0, 0)).empty());
  CHECK_FALSE(validate_gi(rank_one(1, 1, 0)).empty());
}

TEST_CASE("composites") {
  Composites c = composite_maps(all_units(3));
  CHECK(c.comp_e == Matrix::identity(3));
  CHECK(c.ker_e.dim() == 0);
  Composites z = composite_maps(rank_one(0, 1));
  CHECK(z.comp_e.is_zero());
  CHECK(z.ker_e == Subspace::full(1));
}

TEST_CASE("generalized isomorphism equivalence") {
  GeneralizedIsomorphism a = gvbd_to_gi(worked_datum());
  CHECK(gi_equivalent(a, a));
  std::mt19937_64 rng(8);
  std::vector<Matrix> c{random_invertible(2, -2, 2, rng), random_invertible(2, -2, 2, rng)};
  std::vector<Matrix> d{random_invertible(2, -2, 2, rng), random_invertible(2, -2, 2, rng)};
  GeneralizedIsomorphism b = conjugate(a, c, d);
  CHECK(validate_gi(b).empty());
  CHECK(gi_equivalent(a, b, 1));
  CHECK_FALSE(gi_equivalent(a, all_units(2)));
}

TEST_CASE("Grassmannian points") {
  GrassmannianPoint u = grassmannian_point(rank_one(1, 1));
  CHECK(u.q == M({{1, -1}}));
  CHECK(u.dim_q == 1);
  GrassmannianPoint p = grassmannian_point(rank_one(0, 1, 2));
  CHECK(p.q == M({{1, 0}}));
  for (std::size_t n = 1; n <= 4; ++n) {
    GrassmannianPoint g = grassmannian_point(all_units(n));
    CHECK(g.q == hcat(Matrix::identity(n), Rational(-1) * Matrix::identity(n)));
  }
  CHECK_THROWS(grassmannian_point(rank_one(0, 0)));
}

TEST_CASE("Grassmannian rank on generated instances") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    std::size_t n = 1 + s % 4;
    GiesekerDatum d = random_datum(n, s % (n + 1), 0, s);
    GeneralizedIsomorphism gi = gvbd_to_gi(d);
    REQUIRE(validate_gi(gi).empty());
    Composites c = composite_maps(gi);
    // The map E_n -> E_0 + F_0 is injective, checked with the oracle.
    CHECK(oracle::rank(rows_of(vcat(c.comp_e, c.comp_f * gi.phi))) == n);
    CHECK(grassmannian_point(gi).dim_q == n);
  }
}
