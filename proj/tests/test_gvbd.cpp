#include "util.hpp"

using namespace gk;

TEST_CASE("concatenated chain and admissible pairs") {
  GiesekerDatum e = empty_datum(2);
  CHECK(concatenated_chain(e).length() == 0);
  CHECK(admissible_pair(e));
  CHECK(extremal_degrees(e) == std::make_pair(inf_degree(2), inf_degree(2)));

  GiesekerDatum w = worked_datum();
  CHECK(concatenated_chain(w) == w.side1.chain);
  CHECK(admissible_pair(w));
  CHECK(extremal_degrees(w) == std::make_pair(std::size_t(1), inf_degree(2)));

  GiesekerDatum both = empty_datum(1);
  for (int s : {1, 2}) {
    both.side(s).chain = chain(1, {1});
    both.side(s).attach = Matrix::identity(1);
  }
  CHECK(concatenated_chain(both).length() == 2);
  CHECK_FALSE(admissible_pair(both));
  CHECK_FALSE(oracle::admissible(oracle_chain(concatenated_chain(both))));
}

TEST_CASE("datum equivalence") {
  GiesekerDatum w = worked_datum();
  CHECK(datum_equivalent(w, w));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) CHECK(datum_equivalent(w, random_automorphic_image(w, rng, t % 2 == 0), t));

  GiesekerDatum other = empty_datum(2);
  other.side1.chain = chain(2, {2});
  other.side1.attach = Matrix::identity(2);
  CHECK_FALSE(datum_equivalent(w, other));
}

TEST_CASE("random data are admissible and reproducible") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    std::size_t n = 1 + s % 5;
    std::size_t l1 = s % (n + 1), l2 = (s / 7) % (n - l1 + 1);
    GiesekerDatum d = random_datum(n, l1, l2, s);
    CHECK(d.side1.chain.length() == l1);
    CHECK(d.side2.chain.length() == l2);
    CHECK(oracle::admissible(oracle_chain(concatenated_chain(d))));
    CHECK(d == random_datum(n, l1, l2, s));
  }
  GiesekerDatum one = random_datum(1, 1, 0, 3);
  CHECK(one.side1.chain.degrees == std::vector<std::size_t>{1});
  CHECK_THROWS(random_datum(2, 2, 1, 0));
}
