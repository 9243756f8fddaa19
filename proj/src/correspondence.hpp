#pragma once

#include "geniso.hpp"
#include "gvbd.hpp"

namespace gk {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormalForm {
  Matrix p;  // on E' (domain of f)
  Matrix q;  // on E (codomain of f)
  std::size_t d = 0;
};
// q f p^-1 = diag(mu I_d, I_{n-d}) and p g q^-1 = diag(I_d, mu I_{n-d}), d = n - bf_rank.
NormalForm normal_form_bf(const BfMorphism& b);
BfMorphism random_bf(std::size_t n, std::size_t bf_rank, bool mu_zero, std::mt19937_64& rng);

// Fiber V replaced by W + V/W, where W = c^-1(first d coordinates).
struct ElementaryModification {
  std::size_t n = 0, d = 0;
  Subspace w;
  // Columns: echelon basis of W, then standard lifts of a basis of V/W. These
  // are the coordinates of the new fiber, written in the old ones.
  Matrix new_basis;
  Matrix quotient_inclusion;  // k^{n-d} = V/W -> new fiber
  Matrix w_projection;        // new fiber -> k^d = W
  Matrix quotient_to_g;       // V/W -> trivial-part coordinates of the glued fiber
};
ElementaryModification elementary_modification(std::size_t n, const Matrix& c, std::size_t d);

struct ContractResult {
  GiesekerDatum datum;
  BfMorphism bf;
  bool fired = false;
};
ContractResult contract_step(const GiesekerDatum& d, int side, std::size_t threshold);

// The endpoint fiber of the datum plays the role of E_{i-1}.
GiesekerDatum insert_step(const GiesekerDatum& d, int side, const BfMorphism& b, std::size_t stage);

GeneralizedIsomorphism gvbd_to_gi(const GiesekerDatum& d);
GiesekerDatum gi_to_gvbd(const GeneralizedIsomorphism& gi);

struct Fingerprint {
  std::vector<std::size_t> deg1, deg2, mu_zeros, lambda_zeros;
  std::size_t dim_q = 0, rank_comp_e = 0, rank_comp_f = 0;
};
struct RoundtripReport {
  bool ok = false;
  Fingerprint fingerprint;
};
RoundtripReport roundtrip_check(const GiesekerDatum& d, std::uint64_t seed = 0);
RoundtripReport roundtrip_check(const GeneralizedIsomorphism& gi, std::uint64_t seed = 0);

}  // namespace gk
