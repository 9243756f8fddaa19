#pragma once

#include "exactlin.hpp"

namespace gk {

// Strictly standard bundle on a chain of projective lines. Component i has a
// left and a right fiber k^n; coordinates 0..d_i-1 carry the O(1) part and the
// rest the trivial part. gluings[i] maps the right fiber of component i to the
// left fiber of component i+1.
struct ChainBundle {
  std::size_t n = 1;
  std::vector<std::size_t> degrees;
  std::vector<Matrix> gluings;

  std::size_t length() const { return degrees.size(); }
  // Throws std::invalid_argument on shape, degree or invertibility problems.
  void check() const;
  bool operator==(const ChainBundle& o) const {
    return n == o.n && degrees == o.degrees && gluings == o.gluings;
  }
};

enum class AdmissibilityMethod { definition, dimension, vanishing };

// Node values (v_1^L, v_1^R, ..., v_r^L, v_r^R) stacked into a vector of length 2nr.
Subspace section_space(const ChainBundle& cb, bool vanish_left, bool vanish_right);
std::vector<Subspace> v_subspaces(const ChainBundle& cb);
bool is_admissible(const ChainBundle& cb, AdmissibilityMethod method);
bool is_admissible(const ChainBundle& cb);
bool v_image_check(const ChainBundle& cb);

// 1-based inclusive indices.
ChainBundle subchain(const ChainBundle& cb, std::size_t from, std::size_t to);
ChainBundle reverse(const ChainBundle& cb);
ChainBundle concatenate(const ChainBundle& a, const ChainBundle& b, const Matrix& node_gluing);

std::size_t total_degree(const ChainBundle& cb);
long line_degree(const std::vector<long>& l);
long line_tensor_degree(const std::vector<long>& l1, const std::vector<long>& l2);

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Retry budget for resampling; GIESEKER_RETRY_BUDGET overrides the default.
int resample_budget();
int feasibility_budget();

ChainBundle random_chain(std::size_t n, std::size_t r, std::uint64_t seed, bool require_admissible);
ChainBundle random_chain(std::size_t n, const std::vector<std::size_t>& degrees, std::mt19937_64& rng);

}  // namespace gk
