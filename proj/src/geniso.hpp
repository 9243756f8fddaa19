#pragma once

#include "exactlin.hpp"

#include <string>

namespace gk {

// f: E' -> E and g: E -> E' (in a fixed trivialization of M), g f = f g = mu.
struct BfMorphism {
  std::size_t n = 1;
  Rational mu = 1;
  Matrix f, g;
  std::size_t bf_rank = 0;

  static BfMorphism unit(std::size_t n, std::size_t bf_rank);
  bool operator==(const BfMorphism& o) const {
    return n == o.n && mu == o.mu && f == o.f && g == o.g && bf_rank == o.bf_rank;
  }
};

std::vector<std::string> validate_bf(const BfMorphism& b);

// Stage i (1-based, stored at index i-1) joins E_i to E_{i-1}: f maps E_i to
// E_{i-1}, g maps back, and the declared rank is i-1. Same for the F side.
struct GeneralizedIsomorphism {
  std::size_t n = 1;
  std::vector<BfMorphism> e_stages, f_stages;
  Matrix phi;  // E_n -> F_n

  bool operator==(const GeneralizedIsomorphism& o) const {
    return n == o.n && e_stages == o.e_stages && f_stages == o.f_stages && phi == o.phi;
  }
};

struct Composites {
  Matrix comp_e, comp_f;
  Subspace ker_e, ker_f;
};
Composites composite_maps(const GeneralizedIsomorphism& gi);

std::vector<std::string> validate_gi(const GeneralizedIsomorphism& gi);

std::vector<bool> mu_zero_pattern(const GeneralizedIsomorphism& gi);
std::vector<bool> lambda_zero_pattern(const GeneralizedIsomorphism& gi);

bool gi_equivalent(const GeneralizedIsomorphism& a, const GeneralizedIsomorphism& b, std::uint64_t seed = 0);

// Conjugates stage spaces E_1..E_n and F_1..F_n by the given invertibles
// (index i-1 for space i); E_0 and F_0 stay fixed.
GeneralizedIsomorphism conjugate(const GeneralizedIsomorphism& gi, const std::vector<Matrix>& c,
                                 const std::vector<Matrix>& d);

struct GrassmannianPoint {
  Matrix q;  // n x 2n, reduced row-echelon, kernel = image of E_n in E_0 + F_0
  std::size_t dim_q = 0;
};
GrassmannianPoint grassmannian_point(const GeneralizedIsomorphism& gi);

}  // namespace gk
