#include "pidel/codes.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "pidel/combinatorics.hpp"

namespace pidel {

namespace {

// Builds the codeword pair for given (g, n, delta, N) and wraps it in a
// CodeSpec. Amplitude at weight g*j + delta is sqrt(C(n,j) / 2^(n-1)),
// j even for zero_L and j odd for one_L.
CodeSpec build_code(int g, int n, int delta, int n_qubits) {
  if (g < 1 || n < 1) throw std::invalid_argument("code: g and n must be >= 1");
  if (delta < 0) throw std::invalid_argument("code: delta must be >= 0");
  if (g * n + delta > n_qubits) {
    throw std::invalid_argument("code: need g*n + delta <= n_qubits");
  }
  CodeSpec code;
  code.g = g;
  code.n = n;
  code.delta = delta;
  code.n_qubits = n_qubits;
  code.distance = std::min(g, n);
  code.zero_L = SymmetricVector(n_qubits);
  code.one_L = SymmetricVector(n_qubits);
  double denom = std::pow(2.0, n - 1);
  for (int j = 0; j <= n; ++j) {
    double a = std::sqrt(binom_d(n, j) / denom);
    SymmetricVector& target = (j % 2 == 0) ? code.zero_L : code.one_L;
    target.amp[code.weight_of(j)] = a;
  }
  return code;
}

}  // namespace

CodeSpec gnu_code(int g, int n, int u) {
  if (u < 1) throw std::invalid_argument("gnu_code: u must be >= 1");
  return build_code(g, n, 0, g * n * u);
}

CodeSpec shifted_gnu_code(int g, int n, int n_qubits, int delta) {
  return build_code(g, n, delta, n_qubits);
}

CodeSpec special_shifted_code(int g) {
  int n = 2 * (g / 2) + 1;
  return build_code(g, n, g, g * n + 2 * g);
}

SymmetricVector logical_X(const SymmetricVector& psi) {
  SymmetricVector out(psi.n_qubits);
  for (int w = 0; w <= psi.n_qubits; ++w) {
    out.amp[w] = psi.amp[psi.n_qubits - w];
  }
  return out;
}

SymmetricVector logical_R(const SymmetricVector& psi, int g) {
  if (g < 1) throw std::invalid_argument("logical_R: g must be >= 1");
  SymmetricVector out(psi);
  for (int w = 0; w <= psi.n_qubits; ++w) {
    out.amp[w] *= std::polar(1.0, M_PI * w / g);
  }
  return out;
}

bool theorem1_bound(long long n_qubits, long long t, long long m) {
  return n_qubits >= (t + 1) * (t + 1) * (m - 1);
}

namespace {

// Environment state of the t traced-out qubits for a codeword pair:
// E_xy = Tr_{last N-t}(|x><y|), a (t+1)x(t+1) matrix in the t-qubit Dicke
// basis. Index pairs outside the Vandermonde range contribute zero.
Eigen::MatrixXcd environment_operator(const SymmetricVector& x,
                                      const SymmetricVector& y, int t) {
  int n = x.n_qubits;
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(t + 1, t + 1);
  for (int s = 0; s <= t; ++s) {
    for (int sp = 0; sp <= t; ++sp) {
      Complex acc = 0.0;
      for (int u = 0; u <= n; ++u) {
        int v = u + sp - s;
        int rem = u - s;  // weight left on the kept N-t qubits
        if (v < 0 || v > n || rem < 0 || rem > n - t) continue;
        Complex term = x.amp[u] * std::conj(y.amp[v]);
        if (term == Complex(0.0)) continue;
        // C(N-t, u-s) * sqrt(C(t,s) C(t,s')) / sqrt(C(N,u) C(N,v))
        BigInt num = binom(n - t, rem);
        num *= num;
        num *= binom(t, s) * binom(t, sp);
        BigInt den = binom(n, u) * binom(n, v);
        double coeff =
            std::sqrt(num.convert_to<double>() / den.convert_to<double>());
        acc += term * coeff;
      }
      e(s, sp) = acc;
    }
  }
  return e;
}

}  // namespace

ErasureCheck erasure_correctable(const CodeSpec& code, int t, double tol) {
  if (t < 0 || t > code.n_qubits) {
    throw std::invalid_argument("erasure_correctable: t out of range");
  }
  ErasureCheck result;
  Eigen::MatrixXcd e01 = environment_operator(code.zero_L, code.one_L, t);
  Eigen::MatrixXcd e00 = environment_operator(code.zero_L, code.zero_L, t);
  Eigen::MatrixXcd e11 = environment_operator(code.one_L, code.one_L, t);
  result.cross_residual = e01.cwiseAbs().maxCoeff();
  result.diff_residual = (e00 - e11).cwiseAbs().maxCoeff();
  result.correctable =
      result.cross_residual <= tol && result.diff_residual <= tol;
  return result;
}

std::string code_to_json(const CodeSpec& code) {
  nlohmann::json j;
  j["g"] = code.g;
  j["n"] = code.n;
  j["delta"] = code.delta;
  j["n_qubits"] = code.n_qubits;
  j["distance"] = code.distance;
  auto amps = [](const SymmetricVector& v) {
    nlohmann::json out = nlohmann::json::object();
    for (int w = 0; w <= v.n_qubits; ++w) {
      if (v.amp[w] != Complex(0.0)) {
        out[std::to_string(w)] = {v.amp[w].real(), v.amp[w].imag()};
      }
    }
    return out;
  };
  j["amplitudes"]["zero_L"] = amps(code.zero_L);
  j["amplitudes"]["one_L"] = amps(code.one_L);
  return j.dump(2);
}

}  // namespace pidel
