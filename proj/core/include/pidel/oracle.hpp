#pragma once

#include <vector>

#include "pidel/symmetric.hpp"

namespace pidel {
namespace oracle {

// Full 2^N state vector, amplitude per basis string (bit i of the index is
// qubit i). Reference implementation for small N; production code never
// touches these.
struct FullState {
  int n_qubits = 0;
  Eigen::VectorXcd amp;

  FullState() = default;
  explicit FullState(int n);
};

struct FullDensity {
  int n_qubits = 0;
  Eigen::MatrixXcd mat;

  FullDensity() = default;
  explicit FullDensity(int n);
};

// Expands weight coordinates to the full computational basis:
// amp(x) = psi.amp[wt(x)] / sqrt(C(N, wt(x))). Capped at N <= 16.
FullState expand(const SymmetricVector& psi);

FullDensity outer_full(const FullState& u, const FullState& v);

// Partial trace over the listed qubit positions (0-based). Arbitrary
// subsets supported.
FullDensity trace_out(const FullDensity& rho, const std::vector<int>& positions);

// Projects back to Dicke coordinates: entries <D_u| rho |D_v>. Throws
// std::runtime_error if rho has support off the symmetric subspace
// ("state left symmetric subspace").
SymmetricDensity compress(const FullDensity& rho, double tol = 1e-10);

}  // namespace oracle
}  // namespace pidel
