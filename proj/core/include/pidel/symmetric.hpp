#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace pidel {

using Complex = std::complex<double>;

// Pure permutation-invariant state on N qubits, stored as one complex
// amplitude per Dicke weight w in {0..N} (normalized Dicke basis).
struct SymmetricVector {
  int n_qubits = 0;
  std::vector<Complex> amp;  // size n_qubits + 1

  SymmetricVector() = default;
  explicit SymmetricVector(int n) : n_qubits(n), amp(n + 1, Complex(0.0)) {}
  SymmetricVector(int n, std::vector<Complex> a);

  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  SymmetricVector normalized() const;
};

// Mixed permutation-invariant state: (N+1) x (N+1) matrix in the normalized
// Dicke basis. The container itself does not force Hermiticity; physical
// states satisfy the check methods below.
struct SymmetricDensity {
  int n_qubits = 0;
  Eigen::MatrixXcd mat;

  SymmetricDensity() = default;
  explicit SymmetricDensity(int n)
      : n_qubits(n), mat(Eigen::MatrixXcd::Zero(n + 1, n + 1)) {}
  SymmetricDensity(int n, Eigen::MatrixXcd m);

  Complex trace() const;
  double hermiticity_residual() const;  // max |mat - mat^dagger|
  double min_eigenvalue() const;        // of the Hermitian part
  bool is_physical(double herm_tol = 1e-12, double psd_tol = 1e-10,
                   double trace_tol = 1e-12) const;
};

// Joint state of one ancilla qubit and one symmetric block.
struct HybridState {
  int n_qubits = 0;                   // of the symmetric block
  std::array<std::vector<Complex>, 2> amp;  // [ancilla bit][weight]

  HybridState() = default;
  explicit HybridState(int n);

  double norm() const;
};

// Normalized Dicke basis vector |D^N_w>. Throws std::invalid_argument for w
// outside {0..N}.
SymmetricVector dicke_unit(int n_qubits, int w);

// <u|v>. Throws std::invalid_argument on mismatched qubit counts.
Complex inner(const SymmetricVector& u, const SymmetricVector& v);

// |u><v|
SymmetricDensity outer(const SymmetricVector& u, const SymmetricVector& v);

SymmetricVector scale(const SymmetricVector& v, Complex c);
SymmetricVector add(const SymmetricVector& u, const SymmetricVector& v);

// <psi| rho |psi>
double fidelity(const SymmetricVector& psi, const SymmetricDensity& rho);

// Overlap fidelity |<u|v>|^2 of two pure states.
double fidelity(const SymmetricVector& u, const SymmetricVector& v);

// Qubit-pair fidelity |conj(a0) b0 + conj(a1) b1|^2 for normalized pairs;
// insensitive to global phase.
double qubit_fidelity(Complex a0, Complex a1, Complex b0, Complex b1);

}  // namespace pidel
