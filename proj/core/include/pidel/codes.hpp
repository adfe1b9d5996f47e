#pragma once

#include <string>

#include "pidel/symmetric.hpp"

namespace pidel {

// A (shifted) gnu code: logical codewords supported on Dicke weights
// g*j + delta, j = 0..n, split by the parity of j, with amplitudes
// sqrt(C(n,j) / 2^(n-1)). Plain gnu codes are the delta = 0 case.
struct CodeSpec {
  int g = 0;
  int n = 0;
  int delta = 0;
  int n_qubits = 0;
  int distance = 0;  // min(g, n)
  SymmetricVector zero_L;
  SymmetricVector one_L;

  // Weight carrying the j-th codeword component.
  int weight_of(int j) const { return g * j + delta; }
};

// gnu code on N = g*n*u qubits. Requires g, n, u >= 1.
CodeSpec gnu_code(int g, int n, int u);

// Delta-shifted gnu code on n_qubits qubits. Requires g*n + delta <= n_qubits.
CodeSpec shifted_gnu_code(int g, int n, int n_qubits, int delta);

// The family with delta = g, n = 2*floor(g/2) + 1, N = g*n + 2*g; these admit
// a transversal bit-flip and support the three-stage deletion decoder.
CodeSpec special_shifted_code(int g);

// Action of X^{tensor N} on the symmetric subspace: weight reversal.
SymmetricVector logical_X(const SymmetricVector& psi);

// Action of R^{tensor N}, R = diag(1, e^{i pi / g}): phase e^{i pi w / g}
// on weight w.
SymmetricVector logical_R(const SymmetricVector& psi, int g);

// N >= (t+1)^2 (M-1): existence condition for an N-qudit code with M logical
// codewords correcting t deletions.
bool theorem1_bound(long long n_qubits, long long t, long long m);

struct ErasureCheck {
  bool correctable = false;
  double cross_residual = 0.0;  // max |E_01|
  double diff_residual = 0.0;   // max |E_00 - E_11|
};

// Decides t-erasure (equivalently t-deletion) correctability by checking that
// the environment's reduced states decouple from the logical content: with
// E_xy = Tr_{last N-t}(|x_L><y_L|), requires E_01 ~ 0 and E_00 ~ E_11.
ErasureCheck erasure_correctable(const CodeSpec& code, int t,
                                 double tol = 1e-10);

// JSON interchange: {g, n, delta, n_qubits, distance, zero_L, one_L} with
// codeword amplitudes keyed by weight as [re, im].
std::string code_to_json(const CodeSpec& code);

}  // namespace pidel
