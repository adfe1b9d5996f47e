#include "pidel/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "pidel/combinatorics.hpp"

namespace pidel {

SymmetricDensity apply_deletion(const SymmetricDensity& rho, int t) {
  int n = rho.n_qubits;
  if (t < 0 || t > n) {
    throw std::invalid_argument("apply_deletion: need 0 <= t <= N");
  }
  int m = n - t;
  SymmetricDensity out(m);
  // Tr_t(|H^N_u><H^N_v|) = sum_s C(t,s) |H^{N-t}_{u-s}><H^{N-t}_{v-s}|,
  // with indices outside {0..N-t} contributing nothing. Conversion between
  // the H and D bases supplies the sqrt(binomial) ratio.
  for (int u = 0; u <= n; ++u) {
    for (int v = 0; v <= n; ++v) {
      Complex entry = rho.mat(u, v);
      if (entry == Complex(0.0)) continue;
      for (int s = 0; s <= t; ++s) {
        int a = u - s;
        int b = v - s;
        if (a < 0 || a > m || b < 0 || b > m) continue;
        BigInt ts = binom(t, s);
        BigInt num = ts * ts * binom(m, a) * binom(m, b);
        BigInt den = binom(n, u) * binom(n, v);
        double coeff =
            std::sqrt(num.convert_to<double>() / den.convert_to<double>());
        out.mat(a, b) += entry * coeff;
      }
    }
  }
  return out;
}

SymmetricDensity apply_deletion(const SymmetricVector& psi, int t) {
  return apply_deletion(outer(psi, psi), t);
}

DeletionDecomposition decompose_after_deletion(const CodeSpec& code,
                                               Complex alpha, Complex beta,
                                               int t) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "decompose_after_deletion: |alpha|^2 + |beta|^2 must be 1");
  }
  if (t < 0 || t > code.delta) {
    throw std::invalid_argument(
        "decompose_after_deletion: requires 0 <= t <= delta");
  }
  if (code.g * code.n > code.n_qubits - t) {
    throw std::invalid_argument(
        "decompose_after_deletion: requires g*n <= N - t");
  }

  int n_phys = code.n_qubits;
  int m = n_phys - t;
  DeletionDecomposition decomp;
  decomp.t = t;

  for (int s = 0; s <= t; ++s) {
    // Unnormalized component: sum_j b_{j,s} (alpha + (-1)^j beta) at weight
    // g*j + delta - s, with
    // b_{j,s} = sqrt(C(n,j) C(N-t, gj+delta-s) / (2^n C(N, gj+delta))).
    SymmetricVector psi_s(m);
    double pow2n = std::pow(2.0, code.n);
    for (int j = 0; j <= code.n; ++j) {
      int w_orig = code.weight_of(j);
      int w = w_orig - s;
      double b = std::sqrt(binom_d(code.n, j) * binom_d(m, w) /
                           (pow2n * binom_d(n_phys, w_orig)));
      Complex sign_beta = (j % 2 == 0) ? beta : -beta;
      psi_s.amp[w] = b * (alpha + sign_beta);
    }
    double norm2 = psi_s.norm() * psi_s.norm();
    DeletionDecomposition::Component comp;
    comp.s = s;
    comp.p = binom_d(t, s) * norm2;
    if (norm2 > 1e-28) {
      comp.phi = psi_s.normalized();
    } else {
      comp.p = 0.0;
      comp.phi = psi_s;  // zero vector placeholder at probability 0
    }
    decomp.components.push_back(std::move(comp));
  }
  return decomp;
}

}  // namespace pidel
