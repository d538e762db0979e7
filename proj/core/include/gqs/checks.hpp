#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqs/algebra.hpp"

namespace gqs {

// Structural checks on a constructed algebra, all computed from the matrices.
struct AlgebraCheckReport {
  Family family;
  long dimension = 0;
  long expected_dimension = 0;
  long basis_rank = 0;            // span rank of the basis matrices
  bool closure = false;           // every basis bracket expands with zero residual
  bool root_additivity = false;   // [[e_a,e_b]] is 0, a multiple of e_{a+b}, or in H when b = -a
  bool root_grading = false;      // [[h,e_a]] = a(h) e_a
  bool parity = false;            // |[[x,y]]| = |x| + |y|
  bool omega_anti = false;        // omega([[x,y]]) = [[omega(y),omega(x)]] on all basis pairs
  bool omega_involution = false;  // omega(omega(x)) = x
  int jacobi_samples = 0;
  int jacobi_failures = 0;
  std::vector<std::string> failures;  // first few counterexamples

  bool ok() const;
};

// `jacobi_samples` random homogeneous triples (small integer combinations of
// basis elements of one parity) are drawn from a generator seeded by `seed`.
AlgebraCheckReport check_algebra(const AlgebraModel& model, int jacobi_samples = 500, std::uint64_t seed = 1);

}  // namespace gqs
