#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pidel {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient C(n, k). Returns 0 for k < 0 or k > n.
BigInt binom(long long n, long long k);

// C(n, k) as a double. Exact integer arithmetic internally, converted once.
double binom_d(long long n, long long k);

// sqrt(C(N, w)), the scale factor between the unnormalized and normalized
// Dicke basis vectors at weight w. Throws std::invalid_argument unless
// 0 <= w <= N.
double h_norm(int n_qubits, int w);

// sqrt(C(a_n, a_k) * C(b_n, b_k) / (C(c_n, c_k) * C(d_n, d_k))), with the
// ratio formed exactly before the square root.
double binom_ratio_sqrt(long long a_n, long long a_k, long long b_n,
                        long long b_k, long long c_n, long long c_k,
                        long long d_n, long long d_k);

}  // namespace pidel
