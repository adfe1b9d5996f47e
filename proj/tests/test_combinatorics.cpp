#include <doctest.h>

#include "pidel/combinatorics.hpp"

using namespace pidel;

TEST_CASE("binom small values") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(9, 3) == 84);
}

TEST_CASE("binom stays exact at n = 64 and beyond") {
  CHECK(binom(64, 32) == BigInt("1832624140942590534"));
  // Pascal recurrence as an independent cross-check.
  for (int n = 1; n <= 80; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
  }
}

TEST_CASE("h_norm") {
  CHECK(h_norm(4, 2) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(h_norm(12, 0) == 1.0);
  CHECK(h_norm(9, 3) == doctest::Approx(std::sqrt(84.0)).epsilon(1e-14));
  CHECK_THROWS_AS(h_norm(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(h_norm(4, -1), std::invalid_argument);
}
