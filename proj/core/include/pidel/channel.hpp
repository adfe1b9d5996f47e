#pragma once

#include <vector>

#include "pidel/codes.hpp"
#include "pidel/symmetric.hpp"

namespace pidel {

// Spectral decomposition of a code state after t deletions: a convex mixture
// of orthonormal pure components, one per syndrome s in {0..t}.
struct DeletionDecomposition {
  struct Component {
    int s = 0;
    double p = 0.0;
    SymmetricVector phi;  // normalized, on N - t qubits
  };
  int t = 0;
  std::vector<Component> components;
};

// Exact t-deletion channel on a symmetric operator: partial trace of the
// first t qubits, evaluated entirely in Dicke coordinates. Accepts arbitrary
// (not necessarily Hermitian) matrices and is linear; trace preserving.
// Throws std::invalid_argument for t < 0 or t > N.
SymmetricDensity apply_deletion(const SymmetricDensity& rho, int t);

// Deletion of t qubits from a pure symmetric state.
SymmetricDensity apply_deletion(const SymmetricVector& psi, int t);

// Closed-form decomposition of the post-deletion state of
// alpha |+_L> + beta |-_L>, where |+-_L> = (|0_L> +- |1_L>)/sqrt(2).
// Requires t <= delta and g*n <= N - t. Components with vanishing weight are
// kept with probability 0 so the syndrome index set is always {0..t}.
DeletionDecomposition decompose_after_deletion(const CodeSpec& code,
                                               Complex alpha, Complex beta,
                                               int t);

}  // namespace pidel
