#include <doctest.h>

#include <random>

#include "pidel/channel.hpp"
#include "pidel/codes.hpp"
#include "pidel/combinatorics.hpp"
#include "pidel/encdec.hpp"
#include "test_util.hpp"

using namespace pidel;

namespace {

SymmetricVector ideal_logical(const CodeSpec& code, Complex alpha, Complex beta) {
  return add(scale(code.zero_L, alpha), scale(code.one_L, beta));
}

}  // namespace

TEST_CASE("encode basis states") {
  CodeSpec code = special_shifted_code(3);
  for (int branch = 0; branch < 2; ++branch) {
    EncodeResult enc = encode(code, 1.0, 0.0, branch);
    CHECK(enc.measured_bit == branch);
    CHECK(fidelity(enc.state, code.zero_L) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("encode superpositions on both branches") {
  CodeSpec code = special_shifted_code(3);
  double inv = 1.0 / std::sqrt(2.0);
  EncodeResult enc = encode(code, inv, inv, 0);
  CHECK(fidelity(enc.state, ideal_logical(code, inv, inv)) ==
        doctest::Approx(1.0).epsilon(1e-10));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    auto [alpha, beta] = testutil::random_qubit(rng);
    for (int branch = 0; branch < 2; ++branch) {
      EncodeResult e = encode(code, alpha, beta, branch);
      CHECK(fidelity(e.state, ideal_logical(code, alpha, beta)) ==
            doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("encode gate accounting") {
  std::mt19937_64 rng(19);
  for (const CodeSpec& code :
       {gnu_code(2, 2, 1), special_shifted_code(3), special_shifted_code(1)}) {
    auto [alpha, beta] = testutil::random_qubit(rng);
    EncodeResult b0 = encode(code, alpha, beta, 0);
    EncodeResult b1 = encode(code, alpha, beta, 1);
    CHECK(b0.trace.total() == code.n_qubits + 2);
    CHECK(b1.trace.total() == 2 * code.n_qubits + 2);
    CHECK(fidelity(b1.state, ideal_logical(code, alpha, beta)) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("encode handles the 4-qubit code where X^N is not the flip") {
  CodeSpec four = gnu_code(2, 2, 1);
  std::mt19937_64 rng(29);
  auto [alpha, beta] = testutil::random_qubit(rng);
  for (int branch = 0; branch < 2; ++branch) {
    EncodeResult e = encode(four, alpha, beta, branch);
    CHECK(fidelity(e.state, ideal_logical(four, alpha, beta)) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("encode rejects bad arguments") {
  CodeSpec code = special_shifted_code(2);
  CHECK_THROWS_AS(encode(code, 1.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(encode(code, 1.0, 0.0, 2), std::invalid_argument);
  // sampling without a generator
  CHECK_THROWS_AS(encode(code, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("encode sampling is deterministic under a seeded generator") {
  CodeSpec code = special_shifted_code(2);
  std::mt19937_64 rng1(5), rng2(5);
  auto e1 = encode(code, std::sqrt(0.3), std::sqrt(0.7), std::nullopt, &rng1);
  auto e2 = encode(code, std::sqrt(0.3), std::sqrt(0.7), std::nullopt, &rng2);
  CHECK(e1.measured_bit == e2.measured_bit);
}

TEST_CASE("syndrome measurement at t = 0") {
  CodeSpec code = special_shifted_code(3);
  SymmetricDensity rho = apply_deletion(code.zero_L, 0);
  SyndromeOutcome out = syndrome_measure(rho, code, 0, 0);
  CHECK(out.s == 0);
  CHECK(out.probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(out.post_state, code.zero_L) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("syndrome probabilities match the deletion decomposition") {
  CodeSpec code = special_shifted_code(3);
  int t = 2;
  SymmetricVector plus_L = add(scale(code.zero_L, 1.0 / std::sqrt(2.0)),
                               scale(code.one_L, 1.0 / std::sqrt(2.0)));
  SymmetricDensity rho = apply_deletion(plus_L, t);
  DeletionDecomposition d = decompose_after_deletion(code, 1.0, 0.0, t);
  double total = 0.0;
  for (int s = 0; s <= t; ++s) {
    SyndromeOutcome out = syndrome_measure(rho, code, t, s);
    CHECK(out.probability == doctest::Approx(d.components[s].p).epsilon(1e-10));
    CHECK(fidelity(out.post_state, d.components[s].phi) ==
          doctest::Approx(1.0).epsilon(1e-10));
    total += out.probability;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("syndrome projectors cover the reachable weights") {
  CodeSpec code = special_shifted_code(3);
  int t = 2;
  int m = code.n_qubits - t;
  std::vector<bool> covered(m + 1, false);
  for (int s = 0; s <= t; ++s) {
    for (int w = 0; w <= m; ++w) {
      if (((w - (code.delta - s)) % code.g + code.g) % code.g == 0) {
        CHECK_FALSE(covered[w]);  // projectors are disjoint
        covered[w] = true;
      }
    }
  }
  for (int j = 0; j <= code.n; ++j) {
    for (int s = 0; s <= t; ++s) {
      CHECK(covered[code.weight_of(j) - s]);
    }
  }
}

TEST_CASE("phase-estimation unitary distinguishes the syndromes") {
  CodeSpec code = special_shifted_code(3);
  int t = 2;
  std::mt19937_64 rng(43);
  auto [alpha, beta] = testutil::random_qubit(rng);
  DeletionDecomposition d = decompose_after_deletion(code, alpha, beta, t);
  std::vector<Complex> eigenvalues;
  for (const auto& c : d.components) {
    // U = (R^2)^{tensor N-t}: phase e^{2 pi i w / g} on weight w
    SymmetricVector u_phi(c.phi.n_qubits);
    for (int w = 0; w <= c.phi.n_qubits; ++w) {
      u_phi.amp[w] = c.phi.amp[w] * std::polar(1.0, 2.0 * M_PI * w / code.g);
    }
    Complex lambda = inner(c.phi, u_phi);
    CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-10);  // phi is an eigenvector
    CHECK(fidelity(u_phi, c.phi) == doctest::Approx(1.0).epsilon(1e-10));
    eigenvalues.push_back(lambda);
  }
  for (size_t i = 0; i < eigenvalues.size(); ++i) {
    for (size_t j = i + 1; j < eigenvalues.size(); ++j) {
      CHECK(std::abs(eigenvalues[i] - eigenvalues[j]) > 1e-6);
    }
  }
}

TEST_CASE("syndrome measurement rejects mixed projections and bad input") {
  CodeSpec code = special_shifted_code(3);
  // A residue class populated by two orthogonal states is not a
  // post-deletion code state.
  SymmetricDensity rho(13);
  rho.mat(3, 3) = 0.5;
  rho.mat(6, 6) = 0.25;  // different residue class
  rho.mat(9, 9) = 0.25;
  CHECK_THROWS_WITH_AS(syndrome_measure(rho, code, 2, 0),
                       "input not a post-deletion code state",
                       std::runtime_error);
  CHECK_THROWS_AS(syndrome_measure(rho, code, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(syndrome_measure(rho, code, 2, 5), std::invalid_argument);
}

TEST_CASE("rebalance is the identity at t = 0") {
  CodeSpec code = special_shifted_code(3);
  std::mt19937_64 rng(47);
  auto [alpha, beta] = testutil::random_qubit(rng);
  SymmetricVector phi = ideal_logical(code, alpha, beta);
  SymmetricVector out = rebalance(phi, code, 0, 0);
  CHECK(fidelity(out, phi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(out.norm() - 1.0) < 1e-12);
}

TEST_CASE("rebalance restores the balanced profile") {
  CodeSpec code = special_shifted_code(3);
  int t = 2, s = 1;
  DeletionDecomposition d = decompose_after_deletion(code, 1.0, 0.0, t);
  SymmetricVector out = rebalance(d.components[s].phi, code, s, t);
  // alpha = 1 on |+_L> means equal logical weight: amplitudes proportional
  // to sqrt(C(3,j)) on weights 3j + 3 - s for all j.
  double scale_ref = std::abs(out.amp[code.weight_of(0) - s]);
  for (int j = 0; j <= 3; ++j) {
    CHECK(std::abs(out.amp[code.weight_of(j) - s]) ==
          doctest::Approx(scale_ref * std::sqrt(binom_d(3, j))).epsilon(1e-10));
  }
  CHECK(std::abs(out.norm() - 1.0) < 1e-12);
}

TEST_CASE("rebalance is linear and support-checked") {
  CodeSpec code = special_shifted_code(3);
  int t = 1, s = 0;
  DeletionDecomposition dz = decompose_after_deletion(
      code, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), t);
  SymmetricVector x = dz.components[s].phi;
  DeletionDecomposition dy = decompose_after_deletion(
      code, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), t);
  SymmetricVector y = dy.components[s].phi;
  Complex a(0.6, 0.1), b(-0.3, 0.7);
  SymmetricVector lhs = rebalance(add(scale(x, a), scale(y, b)), code, s, t);
  SymmetricVector rhs =
      add(scale(rebalance(x, code, s, t), a), scale(rebalance(y, code, s, t), b));
  for (int w = 0; w <= lhs.n_qubits; ++w) {
    CHECK(std::abs(lhs.amp[w] - rhs.amp[w]) < 1e-10);
  }

  SymmetricVector off_support = dicke_unit(code.n_qubits - t, 0);
  CHECK_THROWS_AS(rebalance(off_support, code, s, t), std::domain_error);
}

TEST_CASE("decode_teleport inverts the encode-delete-rebalance chain") {
  CodeSpec code = special_shifted_code(3);
  std::mt19937_64 rng(53);
  for (int t = 0; t <= 2; ++t) {
    auto [alpha, beta] = testutil::random_qubit(rng);
    SymmetricVector psi = ideal_logical(code, alpha, beta);
    SymmetricDensity rho = apply_deletion(psi, t);
    for (int s = 0; s <= t; ++s) {
      SyndromeOutcome so = syndrome_measure(rho, code, t, s);
      SymmetricVector balanced = rebalance(so.post_state, code, s, t);
      for (int z = 0; z < 2; ++z) {
        DecodeTeleportResult dec = decode_teleport(balanced, code, s, t, z);
        CHECK(qubit_fidelity(alpha, beta, dec.alpha, dec.beta) ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(dec.z_outcome == (z == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("decode_teleport on the smallest family member") {
  CodeSpec tiny = special_shifted_code(1);  // N = 3, distance 1, t = 0 only
  std::mt19937_64 rng(59);
  auto [alpha, beta] = testutil::random_qubit(rng);
  SymmetricVector psi = ideal_logical(tiny, alpha, beta);
  SymmetricVector balanced = rebalance(psi, tiny, 0, 0);
  for (int z = 0; z < 2; ++z) {
    DecodeTeleportResult dec = decode_teleport(balanced, tiny, 0, 0, z);
    CHECK(qubit_fidelity(alpha, beta, dec.alpha, dec.beta) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("decode_teleport rejects non-family codes") {
  CodeSpec four = gnu_code(2, 2, 1);
  CHECK_THROWS_AS(decode_teleport(four.zero_L, four, 0, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("controlled bit-flip squares to the identity on the syndrome subspace") {
  CodeSpec code = special_shifted_code(3);
  int t = 2;
  for (int s = 0; s <= t; ++s) {
    int m = code.n_qubits - t;
    int shift = t - 2 * s;
    for (int j = 0; j <= code.n; ++j) {
      int w = code.weight_of(j) - s;
      int w1 = (m - w) + shift;
      REQUIRE(w1 >= 0);
      REQUIRE(w1 <= m);
      int w2 = (m - w1) + shift;
      CHECK(w2 == w);
    }
  }
}

TEST_CASE("full_decode round trip, exhaustive branches") {
  std::mt19937_64 rng(61);
  for (int g : {1, 2, 3}) {
    CodeSpec code = special_shifted_code(g);
    for (int t = 0; t < std::min(code.distance, code.g); ++t) {
      auto [alpha, beta] = testutil::random_qubit(rng);
      for (int enc_branch = 0; enc_branch < 2; ++enc_branch) {
        EncodeResult enc = encode(code, alpha, beta, enc_branch);
        SymmetricDensity rho = apply_deletion(enc.state, t);
        double total_p = 0.0;
        for (int s = 0; s <= t; ++s) {
          for (int z = 0; z < 2; ++z) {
            FullDecodeResult dec = full_decode(rho, code, t, s, z);
            CHECK(qubit_fidelity(alpha, beta, dec.alpha, dec.beta) ==
                  doctest::Approx(1.0).epsilon(1e-9));
            CHECK(dec.s == s);
            total_p += dec.branch_probability;
          }
        }
        CHECK(total_p == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("one deletion beyond the distance degrades recovery") {
  std::mt19937_64 rng(67);
  for (int g : {1, 2, 3}) {
    CodeSpec code = special_shifted_code(g);
    int t = code.distance;
    double fidelity_sum = 0.0;
    int trials = 40;
    for (int trial = 0; trial < trials; ++trial) {
      auto [alpha, beta] = testutil::random_qubit(rng);
      EncodeResult enc = encode(code, alpha, beta, std::nullopt, &rng);
      SymmetricDensity rho = apply_deletion(enc.state, t);
      double expected_fidelity = 0.0;
      for (int r = 0; r < code.g; ++r) {
        for (int z = 0; z < 2; ++z) {
          try {
            FullDecodeResult dec =
                full_decode(rho, code, t, r, z, nullptr, /*best_effort=*/true);
            expected_fidelity +=
                dec.branch_probability *
                qubit_fidelity(alpha, beta, dec.alpha, dec.beta);
          } catch (const std::runtime_error&) {
            // vanishing branch contributes nothing
          }
        }
      }
      fidelity_sum += expected_fidelity;
    }
    CHECK(fidelity_sum / trials < 1.0 - 1e-3);
  }
}

TEST_CASE("full_decode at t = 0 is exact with syndrome 0") {
  CodeSpec code = special_shifted_code(2);
  std::mt19937_64 rng(71);
  auto [alpha, beta] = testutil::random_qubit(rng);
  SymmetricDensity rho = apply_deletion(ideal_logical(code, alpha, beta), 0);
  FullDecodeResult dec = full_decode(rho, code, 0, std::nullopt, std::nullopt, &rng);
  CHECK(dec.s == 0);
  CHECK(qubit_fidelity(alpha, beta, dec.alpha, dec.beta) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gate trace serialization") {
  GateTrace trace;
  trace.add(GateKind::TwoQubitCnot, 15);
  trace.add(GateKind::Hadamard, 1);
  CHECK(trace.total() == 16);
  CHECK(trace.to_json() ==
        "[{\"gate\":\"two-qubit-CNOT\",\"count\":15},"
        "{\"gate\":\"single-qubit-H\",\"count\":1}]");
  CHECK_THROWS_AS(trace.add(GateKind::PauliX, -1), std::invalid_argument);
}
