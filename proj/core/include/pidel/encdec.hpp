#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pidel/codes.hpp"
#include "pidel/symmetric.hpp"

namespace pidel {

enum class GateKind {
  TwoQubitCnot,
  Hadamard,
  PhaseR,
  PauliX,
  Measurement,
  WeightShift,
};

const char* gate_kind_name(GateKind kind);

// Ordered gate tally of a simulated circuit.
struct GateTrace {
  std::vector<std::pair<GateKind, int>> ops;

  void add(GateKind kind, int multiplicity);
  int total() const;
  std::string to_json() const;
};

struct EncodeResult {
  SymmetricVector state;  // alpha |0_L> + beta |1_L>, up to global phase
  int measured_bit = 0;
  GateTrace trace;
};

// Gate-teleportation encoder: joins the bare qubit alpha|0> + beta|1> with a
// prepared |0_L>, applies the controlled logical bit-flip (N CNOTs), a
// Hadamard and a measurement on the control, and R^{tensor N} on outcome 1.
// The measurement is sampled from the exact branch norms unless
// forced_branch is given; rng may be null when it is.
EncodeResult encode(const CodeSpec& code, Complex alpha, Complex beta,
                    std::optional<int> forced_branch = std::nullopt,
                    std::mt19937_64* rng = nullptr);

struct SyndromeOutcome {
  int s = 0;
  double probability = 0.0;
  SymmetricVector post_state;  // normalized, on N - t qubits
};

// Weight-mod-g projective measurement extracting the deletion syndrome:
// P_s projects onto weights congruent to delta - s (mod g). Requires t < g
// (distinct residues) and t <= delta. Throws std::runtime_error when the
// projected state is not pure ("input not a post-deletion code state").
SyndromeOutcome syndrome_measure(const SymmetricDensity& rho,
                                 const CodeSpec& code, int t,
                                 std::optional<int> forced_s = std::nullopt,
                                 std::mt19937_64* rng = nullptr);

// Restores the deletion-skewed amplitude profile b_{j,s} to the balanced
// gnu profile sqrt(C(n,j)/2^(n-1)) on the same weight supports, acting
// linearly on the two-dimensional syndrome-s code subspace.
SymmetricVector rebalance(const SymmetricVector& phi, const CodeSpec& code,
                          int s, int t);

struct DecodeTeleportResult {
  Complex alpha;
  Complex beta;
  int z_outcome = +1;          // +1 even-parity branch, -1 odd
  double outcome_probability = 0.0;
  GateTrace trace;
};

// Gate-teleportation decoder for the delta = g family: controlled bit-flip
// (N-t CNOTs plus a collective weight shift by t-2s), logical-Z measurement
// on the block, and a conditional X on the ancilla. Recovers the logical
// amplitudes up to global phase.
DecodeTeleportResult decode_teleport(const SymmetricVector& phi_prime,
                                     const CodeSpec& code, int s, int t,
                                     std::optional<int> forced_z = std::nullopt,
                                     std::mt19937_64* rng = nullptr);

struct FullDecodeResult {
  Complex alpha;
  Complex beta;
  int s = 0;
  int z_outcome = +1;
  double branch_probability = 0.0;  // P(syndrome) * P(z outcome)
  GateTrace trace;
};

// Three-stage decoder: syndrome measurement, rebalancing, gate teleportation.
// When best_effort is set, syndrome residue classes are allowed to collide
// (t >= g) and the dominant eigenvector of the projected state is decoded
// against the smallest matching syndrome; recovery is then generally lossy.
FullDecodeResult full_decode(const SymmetricDensity& rho, const CodeSpec& code,
                             int t,
                             std::optional<int> forced_s = std::nullopt,
                             std::optional<int> forced_z = std::nullopt,
                             std::mt19937_64* rng = nullptr,
                             bool best_effort = false);

}  // namespace pidel
