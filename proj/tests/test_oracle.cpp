#include <doctest.h>

#include <bit>
#include <random>

#include "pidel/channel.hpp"
#include "pidel/combinatorics.hpp"
#include "pidel/oracle.hpp"
#include "test_util.hpp"

using namespace pidel;
using oracle::FullDensity;
using oracle::FullState;

TEST_CASE("expand of Dicke units") {
  FullState bell = oracle::expand(dicke_unit(2, 1));
  CHECK(std::abs(bell.amp(0)) < 1e-15);
  CHECK(std::abs(bell.amp(1) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(bell.amp(2) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(bell.amp(3)) < 1e-15);

  FullState zeros = oracle::expand(dicke_unit(5, 0));
  CHECK(std::abs(zeros.amp(0) - 1.0) < 1e-15);
  CHECK(zeros.amp.tail(31).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("expand preserves inner products") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    SymmetricVector u = testutil::random_state(6, rng);
    SymmetricVector v = testutil::random_state(6, rng);
    Complex sym = inner(u, v);
    Complex full = oracle::expand(u).amp.dot(oracle::expand(v).amp);
    CHECK(std::abs(sym - full) < 1e-12);
  }
}

TEST_CASE("expand refuses oversized states") {
  CHECK_THROWS_AS(oracle::expand(SymmetricVector(17)), std::length_error);
}

TEST_CASE("trace_out basics") {
  FullState zeros = oracle::expand(dicke_unit(4, 0));
  FullDensity rho = oracle::outer_full(zeros, zeros);
  FullDensity red = oracle::trace_out(rho, {0, 2});
  CHECK(std::abs(red.mat(0, 0) - 1.0) < 1e-14);
  CHECK(red.mat.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));

  FullDensity all_gone = oracle::trace_out(rho, {0, 1, 2, 3});
  CHECK(std::abs(all_gone.mat(0, 0) - 1.0) < 1e-14);

  CHECK_THROWS_AS(oracle::trace_out(rho, {4}), std::invalid_argument);
  CHECK_THROWS_AS(oracle::trace_out(rho, {1, 1}), std::invalid_argument);
}

TEST_CASE("compress round-trips symmetric densities and rejects others") {
  std::mt19937_64 rng(37);
  for (int n = 1; n <= 6; ++n) {
    SymmetricVector u = testutil::random_state(n, rng);
    SymmetricDensity rho = outer(u, u);
    FullState full = oracle::expand(u);
    SymmetricDensity back = oracle::compress(oracle::outer_full(full, full));
    CHECK(testutil::max_abs_diff(back.mat, rho.mat) < 1e-12);
  }
  // |01><01| is not permutation invariant.
  FullDensity bad(2);
  bad.mat(1, 1) = 1.0;
  CHECK_THROWS_WITH_AS(oracle::compress(bad), "state left symmetric subspace",
                       std::runtime_error);
}

TEST_CASE("Vandermonde split of unnormalized Dicke states") {
  // |H^N_w> = sum_s |H^t_s> (x) |H^{N-t}_{w-s}| at the full-state level,
  // with the s-range clamped to valid weights.
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t <= n; ++t) {
      for (int w = 0; w <= n; ++w) {
        Eigen::VectorXcd lhs =
            oracle::expand(dicke_unit(n, w)).amp * h_norm(n, w);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(lhs.size());
        int lo = std::max(0, w - (n - t));
        int hi = std::min(t, w);
        for (int s = lo; s <= hi; ++s) {
          Eigen::VectorXcd head =
              oracle::expand(dicke_unit(t, s)).amp * h_norm(t, s);
          Eigen::VectorXcd tail =
              oracle::expand(dicke_unit(n - t, w - s)).amp * h_norm(n - t, w - s);
          // Qubit i of the joint index is bit i; the first t qubits are the
          // low bits.
          for (long long a = 0; a < head.size(); ++a) {
            for (long long b = 0; b < tail.size(); ++b) {
              rhs(a | (b << t)) += head(a) * tail(b);
            }
          }
        }
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("deleting any size-t subset gives the same reduced state") {
  std::mt19937_64 rng(41);
  for (int n = 3; n <= 6; ++n) {
    SymmetricVector psi = testutil::random_state(n, rng);
    FullState full = oracle::expand(psi);
    FullDensity rho = oracle::outer_full(full, full);
    for (int t = 1; t < n; ++t) {
      std::vector<int> first(t);
      for (int i = 0; i < t; ++i) first[i] = i;
      Eigen::MatrixXcd reference = oracle::trace_out(rho, first).mat;
      // every other subset of the same size
      std::vector<int> subset;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != t) continue;
        subset.clear();
        for (int q = 0; q < n; ++q) {
          if (mask & (1u << q)) subset.push_back(q);
        }
        CHECK(testutil::max_abs_diff(oracle::trace_out(rho, subset).mat,
                                     reference) < 1e-10);
      }
    }
  }
}
