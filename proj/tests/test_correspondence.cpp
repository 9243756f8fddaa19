#include "util.hpp"

using namespace gk;

namespace {

void check_normal_form(const BfMorphism& b) {
  NormalForm nf = normal_form_bf(b);
  const std::size_t n = b.n;
  CHECK(nf.d == n - b.bf_rank);
  Matrix df = Matrix::identity(n), dg = Matrix::identity(n);
  for (std::size_t k = 0; k < nf.d; ++k) df(k, k) = b.mu;
  for (std::size_t k = nf.d; k < n; ++k) dg(k, k) = b.mu;
  CHECK(nf.q * b.f * inverse_or_throw(nf.p) == df);
  CHECK(nf.p * b.g * inverse_or_throw(nf.q) == dg);
}

}  // namespace

TEST_CASE("normal forms") {
  check_normal_form(BfMorphism::unit(2, 1));
  Matrix nil = M({{0, 0}, {1, 0}});
  check_normal_form({2, 0, nil, nil, 1});
  check_normal_form({3, 0, Matrix(3, 3), M({{1, 2, 0}, {0, 1, 0}, {1, 0, 1}}), 0});
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 4, r = rng() % (n + 1);
    BfMorphism b = random_bf(n, r, t % 2 == 0, rng);
    REQUIRE(validate_bf(b).empty());
    check_normal_form(b);
  }
}

TEST_CASE("elementary modifications") {
  ElementaryModification full = elementary_modification(2, Matrix::identity(2), 2);
  CHECK(full.w == Subspace::full(2));
  CHECK(full.quotient_inclusion.cols() == 0);
  ElementaryModification e1 = elementary_modification(2, Matrix::identity(2), 1);
  CHECK(e1.w == Subspace::coords(2, 0, 1));
  CHECK(e1.quotient_inclusion.cols() == 1);
  CHECK(elementary_modification(2, swap2(), 1).w == Subspace::coords(2, 1, 1));
  CHECK_THROWS(elementary_modification(2, swap2(), 3));
}

TEST_CASE("contraction of the worked datum") {
  GiesekerDatum w = worked_datum();
  ContractResult a = contract_step(w, 1, 1);
  REQUIRE(a.fired);
  CHECK(a.datum.side1.chain.degrees == std::vector<std::size_t>{2});
  CHECK(sgn(a.bf.mu) == 0);
  CHECK(a.bf.bf_rank == 1);
  CHECK(validate_bf(a.bf).empty());

  ContractResult b = contract_step(a.datum, 1, 2);
  REQUIRE(b.fired);
  CHECK(b.datum.side1.chain.length() == 0);
  CHECK(b.bf.bf_rank == 0);
  CHECK(b.bf.f.is_zero());
  CHECK(invertible(b.bf.g));

  ContractResult none = contract_step(w, 2, 1);
  CHECK_FALSE(none.fired);
  CHECK(none.datum == w);
  CHECK(none.bf == BfMorphism::unit(2, 1));

  // Inverses, both ways.
  GiesekerDatum back = insert_step(b.datum, 1, b.bf, 1);
  CHECK(back.side1.chain.degrees == std::vector<std::size_t>{2});
  CHECK(back == a.datum);
  GiesekerDatum orig = insert_step(a.datum, 1, a.bf, 2);
  CHECK(orig.side1.chain.degrees == std::vector<std::size_t>{1, 1});
  CHECK(datum_equivalent(orig, w));
  ContractResult again = contract_step(orig, 1, 1);
  CHECK(again.datum == a.datum);
  CHECK(again.bf == a.bf);
  CHECK(insert_step(w, 1, BfMorphism::unit(2, 1), 2) == w);
}

TEST_CASE("gvbd_to_gi examples") {
  GeneralizedIsomorphism u = gvbd_to_gi(empty_datum(3));
  for (const auto& s : u.e_stages) CHECK(s == BfMorphism::unit(3, s.bf_rank));
  for (const auto& s : u.f_stages) CHECK(s == BfMorphism::unit(3, s.bf_rank));
  CHECK(u.phi == Matrix::identity(3));

  GeneralizedIsomorphism one = gvbd_to_gi(random_datum(1, 1, 0, 2));
  CHECK(sgn(one.e_stages[0].mu) == 0);
  CHECK(sgn(one.f_stages[0].mu) != 0);

  GeneralizedIsomorphism w = gvbd_to_gi(worked_datum());
  CHECK(mu_zero_pattern(w) == std::vector<bool>{true, true});
  CHECK(lambda_zero_pattern(w) == std::vector<bool>{false, false});
  CHECK(validate_gi(w).empty());
}

TEST_CASE("gi_to_gvbd examples") {
  CHECK(gi_to_gvbd(gvbd_to_gi(empty_datum(2))) == empty_datum(2));
  GeneralizedIsomorphism gi;
  gi.n = 1;
  gi.e_stages = {{1, 0, Matrix(1, 1), Matrix::identity(1), 0}};
  gi.f_stages = {BfMorphism::unit(1, 0)};
  gi.phi = M({{5}});
  GiesekerDatum d = gi_to_gvbd(gi);
  CHECK(d.side1.chain.length() == 1);
  CHECK(d.side2.chain.length() == 0);
  GiesekerDatum w = gi_to_gvbd(gvbd_to_gi(worked_datum()));
  CHECK(w.side1.chain.degrees == std::vector<std::size_t>{1, 1});
  CHECK(datum_equivalent(w, worked_datum()));
}

TEST_CASE("round trips") {
  RoundtripReport e = roundtrip_check(empty_datum(2));
  CHECK(e.ok);
  CHECK(e.fingerprint.dim_q == 2);
  RoundtripReport w = roundtrip_check(worked_datum());
  CHECK(w.ok);
  CHECK(w.fingerprint.deg1 == std::vector<std::size_t>{1, 1});
  CHECK(w.fingerprint.mu_zeros.size() == 2);
  for (std::uint64_t s = 0; s < 40; ++s) {
    std::size_t n = 2 + s % 3;
    std::size_t l1 = 1 + s % (n - 1);
    GiesekerDatum d = random_datum(n, l1, 1 + (s / 3) % (n - l1), s);
    CHECK(roundtrip_check(d, s).ok);
    CHECK(roundtrip_check(gvbd_to_gi(d), s).ok);
  }
}
