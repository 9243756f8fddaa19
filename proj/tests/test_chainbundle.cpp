#include "util.hpp"

using namespace gk;

namespace {

const AdmissibilityMethod methods[] = {AdmissibilityMethod::definition, AdmissibilityMethod::dimension,
                                       AdmissibilityMethod::vanishing};

}  // namespace

TEST_CASE("section spaces of small chains") {
  ChainBundle one = chain(2, {2});
  CHECK(section_space(one, false, false).dim() == 4);
  CHECK(section_space(one, true, true).dim() == 0);
  ChainBundle sw = chain(2, {1, 1}, {swap2()});
  CHECK(section_space(sw, true, false).dim() == 2);
}

TEST_CASE("V subspaces and admissibility of the (1,1) chains") {
  ChainBundle sw = chain(2, {1, 1}, {swap2()});
  auto v = v_subspaces(sw);
  CHECK(v[0].dim() == 0);
  CHECK(v[1] == Subspace::coords(2, 0, 1));
  for (auto m : methods) CHECK(is_admissible(sw, m));
  CHECK(v_image_check(sw));

  ChainBundle id = chain(2, {1, 1}, {Matrix::identity(2)});
  for (auto m : methods) CHECK_FALSE(is_admissible(id, m));

  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= n; ++d) {
      ChainBundle single = chain(n, {d});
      for (auto m : methods) CHECK(is_admissible(single, m));
      CHECK(v_image_check(single));
    }
  CHECK(is_admissible(chain(3, {}), AdmissibilityMethod::definition));
}

TEST_CASE("section counts and admissibility agree with the polynomial oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + rng() % 3, r = 1 + rng() % 3;
    ChainBundle cb = random_chain(n, r, rng(), false);
    if (t % 4 == 0)
      for (auto& g : cb.gluings) g = Matrix::identity(n);
    oracle::Chain oc = oracle_chain(cb);
    for (bool l : {false, true})
      for (bool rt : {false, true}) CHECK(section_space(cb, l, rt).dim() == oracle::section_dim(oc, l, rt));
    bool adm = oracle::admissible(oc);
    for (auto m : methods) CHECK(is_admissible(cb, m) == adm);
    // Holds for every strictly standard chain, admissible or not.
    CHECK(section_space(cb, true, false).dim() == total_degree(cb));
    if (adm) {
      CHECK(v_image_check(cb));
      auto v = v_subspaces(cb);
      std::size_t partial = 0;
      for (std::size_t i = 1; i <= r; ++i) CHECK(v[i].dim() == (partial += cb.degrees[i - 1]));
    }
  }
}

TEST_CASE("subchain, reverse, concatenate") {
  ChainBundle sw = chain(2, {1, 2}, {swap2()});
  CHECK(subchain(sw, 1, 2) == sw);
  ChainBundle tail = subchain(sw, 2, 2);
  CHECK(tail.degrees == std::vector<std::size_t>{2});
  CHECK(tail.gluings.empty());
  CHECK(reverse(sw).degrees == std::vector<std::size_t>{2, 1});
  CHECK(reverse(chain(2, {1})) == chain(2, {1}));
  CHECK(concatenate(sw, chain(2, {}), Matrix::identity(2)) == sw);
  ChainBundle joined = concatenate(chain(2, {1}), chain(2, {1}), swap2());
  CHECK(joined == chain(2, {1, 1}, {swap2()}));
  CHECK_THROWS(subchain(sw, 2, 3));
}

TEST_CASE("admissible chains: subchains and reversal") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    std::size_t n = 1 + s % 4;
    ChainBundle cb = random_chain(n, 1 + s % n, s, true);
    REQUIRE(oracle::admissible(oracle_chain(cb)));
    CHECK(cb.length() <= n);
    for (std::size_t a = 1; a <= cb.length(); ++a)
      for (std::size_t b = a; b <= cb.length(); ++b) CHECK(oracle::admissible(oracle_chain(subchain(cb, a, b))));
    CHECK(oracle::admissible(oracle_chain(reverse(cb))));
  }
}

TEST_CASE("degrees and generator") {
  CHECK(total_degree(chain(2, {1, 1}, {swap2()})) == 2);
  CHECK(line_tensor_degree({1, 0}, {0, 2}) == 3);
  CHECK(line_degree({1, 0}) + line_degree({0, 2}) == 3);
  ChainBundle c = random_chain(1, 1, 9, true);
  CHECK(c.degrees == std::vector<std::size_t>{1});
  CHECK(c.gluings.empty());
  CHECK(random_chain(4, 3, 77, true) == random_chain(4, 3, 77, true));
  CHECK_THROWS(chain(2, {3}).check());
  CHECK_THROWS(chain(2, {1, 1}, {M({{1, 1}, {1, 1}})}).check());
}
