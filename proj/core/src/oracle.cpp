#include "pidel/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "pidel/combinatorics.hpp"

namespace pidel {
namespace oracle {

namespace {
constexpr int kMaxStateQubits = 16;
constexpr int kMaxDensityQubits = 9;
}  // namespace

FullState::FullState(int n) : n_qubits(n) {
  if (n < 0 || n > kMaxStateQubits) {
    throw std::length_error("FullState: qubit count exceeds the oracle cap");
  }
  amp = Eigen::VectorXcd::Zero(1LL << n);
}

FullDensity::FullDensity(int n) : n_qubits(n) {
  if (n < 0 || n > kMaxDensityQubits) {
    throw std::length_error("FullDensity: qubit count exceeds the oracle cap");
  }
  mat = Eigen::MatrixXcd::Zero(1LL << n, 1LL << n);
}

FullState expand(const SymmetricVector& psi) {
  FullState full(psi.n_qubits);
  std::vector<double> inv_h(psi.n_qubits + 1);
  for (int w = 0; w <= psi.n_qubits; ++w) {
    inv_h[w] = 1.0 / h_norm(psi.n_qubits, w);
  }
  for (long long x = 0; x < full.amp.size(); ++x) {
    int w = std::popcount(static_cast<unsigned long long>(x));
    full.amp(x) = psi.amp[w] * inv_h[w];
  }
  return full;
}

FullDensity outer_full(const FullState& u, const FullState& v) {
  if (u.n_qubits != v.n_qubits) {
    throw std::invalid_argument("outer_full: mismatched qubit counts");
  }
  FullDensity rho(u.n_qubits);
  rho.mat = u.amp * v.amp.adjoint();
  return rho;
}

FullDensity trace_out(const FullDensity& rho, const std::vector<int>& positions) {
  int n = rho.n_qubits;
  std::vector<bool> traced(n, false);
  for (int p : positions) {
    if (p < 0 || p >= n) throw std::invalid_argument("trace_out: bad qubit index");
    if (traced[p]) throw std::invalid_argument("trace_out: duplicate qubit index");
    traced[p] = true;
  }
  std::vector<int> kept;
  std::vector<int> traced_list;
  for (int q = 0; q < n; ++q) {
    (traced[q] ? traced_list : kept).push_back(q);
  }
  int k = static_cast<int>(kept.size());
  int t = n - k;

  auto scatter = [](long long bits, const std::vector<int>& where) {
    long long out = 0;
    for (size_t i = 0; i < where.size(); ++i) {
      out |= ((bits >> i) & 1LL) << where[i];
    }
    return out;
  };

  FullDensity out(k);
  for (long long a = 0; a < (1LL << k); ++a) {
    long long ka = scatter(a, kept);
    for (long long b = 0; b < (1LL << k); ++b) {
      long long kb = scatter(b, kept);
      Complex acc = 0.0;
      for (long long e = 0; e < (1LL << t); ++e) {
        long long env = scatter(e, traced_list);
        acc += rho.mat(ka | env, kb | env);
      }
      out.mat(a, b) = acc;
    }
  }
  return out;
}

SymmetricDensity compress(const FullDensity& rho, double tol) {
  int n = rho.n_qubits;
  std::vector<double> inv_h(n + 1);
  for (int w = 0; w <= n; ++w) inv_h[w] = 1.0 / h_norm(n, w);

  SymmetricDensity out(n);
  long long dim = rho.mat.rows();
  for (long long x = 0; x < dim; ++x) {
    int u = std::popcount(static_cast<unsigned long long>(x));
    for (long long y = 0; y < dim; ++y) {
      int v = std::popcount(static_cast<unsigned long long>(y));
      out.mat(u, v) += rho.mat(x, y) * inv_h[u] * inv_h[v];
    }
  }
  // Reconstruct and compare; any residual means support off the symmetric
  // subspace.
  double residual = 0.0;
  for (long long x = 0; x < dim; ++x) {
    int u = std::popcount(static_cast<unsigned long long>(x));
    for (long long y = 0; y < dim; ++y) {
      int v = std::popcount(static_cast<unsigned long long>(y));
      Complex rebuilt = out.mat(u, v) * inv_h[u] * inv_h[v];
      residual = std::max(residual, std::abs(rho.mat(x, y) - rebuilt));
    }
  }
  if (residual > tol) {
    throw std::runtime_error("state left symmetric subspace");
  }
  return out;
}

}  // namespace oracle
}  // namespace pidel
