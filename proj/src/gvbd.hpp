#pragma once

#include "chainbundle.hpp"

namespace gk {

// A chain hanging at a marked point; attach maps the base fiber to the left
// fiber of component 1 and is present iff the chain is nonempty.
struct AttachedChain {
  ChainBundle chain;
  std::optional<Matrix> attach;

  bool operator==(const AttachedChain& o) const { return chain == o.chain && attach == o.attach; }
};

struct GiesekerDatum {
  std::size_t n = 1;
  AttachedChain side1, side2;
  // From the endpoint fiber of side 1 to the endpoint fiber of side 2; the
  // endpoint is the right fiber of the last component, or the base fiber.
  Matrix phi;

  AttachedChain& side(int s) { return s == 1 ? side1 : side2; }
  const AttachedChain& side(int s) const { return s == 1 ? side1 : side2; }
  // Shape and invertibility only; admissibility is checked separately.
  void check() const;
  bool operator==(const GiesekerDatum& o) const {
    return n == o.n && side1 == o.side1 && side2 == o.side2 && phi == o.phi;
  }
};

GiesekerDatum empty_datum(std::size_t n);
ChainBundle concatenated_chain(const GiesekerDatum& d);
bool admissible_pair(const GiesekerDatum& d);

// Degree of the last component of each side; n + 1 stands for an empty side.
std::pair<std::size_t, std::size_t> extremal_degrees(const GiesekerDatum& d);
std::size_t extremal_degree(const GiesekerDatum& d, int side);
inline std::size_t inf_degree(std::size_t n) { return n + 1; }

struct EquivalenceResult {
  bool shapes_match = false;
  bool linear_consistent = false;
  bool equivalent = false;
};
EquivalenceResult datum_equivalence(const GiesekerDatum& a, const GiesekerDatum& b, std::uint64_t seed = 0);
bool datum_equivalent(const GiesekerDatum& a, const GiesekerDatum& b, std::uint64_t seed = 0);

// Applies per-component automorphisms [[A,B_L],[0,D]] / [[A,B_R],[0,D]] and,
// optionally, base-fiber isomorphisms drawn from rng.
GiesekerDatum random_automorphic_image(const GiesekerDatum& d, std::mt19937_64& rng, bool move_base);

GiesekerDatum random_datum(std::size_t n, std::size_t len1, std::size_t len2, std::uint64_t seed);

}  // namespace gk
