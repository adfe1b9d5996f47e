#include "pidel/symmetric.hpp"

#include <cmath>
#include <stdexcept>

namespace pidel {

namespace {
void check_finite(const std::vector<Complex>& amp) {
  for (const Complex& a : amp) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("amplitude is not finite");
    }
  }
}
}  // namespace

SymmetricVector::SymmetricVector(int n, std::vector<Complex> a)
    : n_qubits(n), amp(std::move(a)) {
  if (n < 0 || amp.size() != static_cast<size_t>(n) + 1) {
    throw std::invalid_argument("SymmetricVector: need exactly N+1 amplitudes");
  }
  check_finite(amp);
}

double SymmetricVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

bool SymmetricVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

SymmetricVector SymmetricVector::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  SymmetricVector out(*this);
  for (Complex& a : out.amp) a /= n;
  return out;
}

SymmetricDensity::SymmetricDensity(int n, Eigen::MatrixXcd m)
    : n_qubits(n), mat(std::move(m)) {
  if (n < 0 || mat.rows() != n + 1 || mat.cols() != n + 1) {
    throw std::invalid_argument("SymmetricDensity: matrix must be (N+1)x(N+1)");
  }
}

Complex SymmetricDensity::trace() const { return mat.trace(); }

double SymmetricDensity::hermiticity_residual() const {
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

double SymmetricDensity::min_eigenvalue() const {
  Eigen::MatrixXcd herm = 0.5 * (mat + mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  return es.eigenvalues().minCoeff();
}

bool SymmetricDensity::is_physical(double herm_tol, double psd_tol,
                                   double trace_tol) const {
  return hermiticity_residual() <= herm_tol &&
         min_eigenvalue() >= -psd_tol &&
         std::abs(trace() - Complex(1.0)) <= trace_tol;
}

HybridState::HybridState(int n) : n_qubits(n) {
  amp[0].assign(n + 1, Complex(0.0));
  amp[1].assign(n + 1, Complex(0.0));
}

double HybridState::norm() const {
  double s = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (const Complex& c : amp[a]) s += std::norm(c);
  }
  return std::sqrt(s);
}

SymmetricVector dicke_unit(int n_qubits, int w) {
  if (w < 0 || w > n_qubits) {
    throw std::invalid_argument("dicke_unit: weight out of range");
  }
  SymmetricVector v(n_qubits);
  v.amp[w] = 1.0;
  return v;
}

Complex inner(const SymmetricVector& u, const SymmetricVector& v) {
  if (u.n_qubits != v.n_qubits) {
    throw std::invalid_argument("inner: mismatched qubit counts");
  }
  Complex s = 0.0;
  for (int w = 0; w <= u.n_qubits; ++w) s += std::conj(u.amp[w]) * v.amp[w];
  return s;
}

SymmetricDensity outer(const SymmetricVector& u, const SymmetricVector& v) {
  if (u.n_qubits != v.n_qubits) {
    throw std::invalid_argument("outer: mismatched qubit counts");
  }
  SymmetricDensity rho(u.n_qubits);
  for (int a = 0; a <= u.n_qubits; ++a) {
    for (int b = 0; b <= u.n_qubits; ++b) {
      rho.mat(a, b) = u.amp[a] * std::conj(v.amp[b]);
    }
  }
  return rho;
}

SymmetricVector scale(const SymmetricVector& v, Complex c) {
  SymmetricVector out(v);
  for (Complex& a : out.amp) a *= c;
  return out;
}

SymmetricVector add(const SymmetricVector& u, const SymmetricVector& v) {
  if (u.n_qubits != v.n_qubits) {
    throw std::invalid_argument("add: mismatched qubit counts");
  }
  SymmetricVector out(u);
  for (int w = 0; w <= u.n_qubits; ++w) out.amp[w] += v.amp[w];
  return out;
}

double fidelity(const SymmetricVector& psi, const SymmetricDensity& rho) {
  if (psi.n_qubits != rho.n_qubits) {
    throw std::invalid_argument("fidelity: mismatched qubit counts");
  }
  Complex s = 0.0;
  for (int a = 0; a <= psi.n_qubits; ++a) {
    for (int b = 0; b <= psi.n_qubits; ++b) {
      s += std::conj(psi.amp[a]) * rho.mat(a, b) * psi.amp[b];
    }
  }
  return s.real();
}

double fidelity(const SymmetricVector& u, const SymmetricVector& v) {
  return std::norm(inner(u, v));
}

double qubit_fidelity(Complex a0, Complex a1, Complex b0, Complex b1) {
  return std::norm(std::conj(a0) * b0 + std::conj(a1) * b1);
}

}  // namespace pidel
