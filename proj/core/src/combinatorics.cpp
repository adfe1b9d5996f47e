#include "pidel/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace pidel {

BigInt binom(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double binom_d(long long n, long long k) {
  return binom(n, k).convert_to<double>();
}

double h_norm(int n_qubits, int w) {
  if (w < 0 || w > n_qubits) {
    throw std::invalid_argument("h_norm: weight out of range");
  }
  return std::sqrt(binom_d(n_qubits, w));
}

double binom_ratio_sqrt(long long a_n, long long a_k, long long b_n,
                        long long b_k, long long c_n, long long c_k,
                        long long d_n, long long d_k) {
  BigInt num = binom(a_n, a_k) * binom(b_n, b_k);
  BigInt den = binom(c_n, c_k) * binom(d_n, d_k);
  if (den == 0) throw std::invalid_argument("binom_ratio_sqrt: zero denominator");
  return std::sqrt(num.convert_to<double>() / den.convert_to<double>());
}

}  // namespace pidel
