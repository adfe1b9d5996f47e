#include "pidel/encdec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pidel/combinatorics.hpp"

namespace pidel {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::TwoQubitCnot: return "two-qubit-CNOT";
    case GateKind::Hadamard: return "single-qubit-H";
    case GateKind::PhaseR: return "single-qubit-R";
    case GateKind::PauliX: return "single-qubit-X";
    case GateKind::Measurement: return "measurement";
    case GateKind::WeightShift: return "weight-shift";
  }
  return "unknown";
}

void GateTrace::add(GateKind kind, int multiplicity) {
  if (multiplicity < 0) {
    throw std::invalid_argument("GateTrace: multiplicity must be >= 0");
  }
  ops.emplace_back(kind, multiplicity);
}

int GateTrace::total() const {
  int sum = 0;
  for (const auto& [kind, mult] : ops) sum += mult;
  return sum;
}

std::string GateTrace::to_json() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < ops.size(); ++i) {
    if (i) out << ",";
    out << "{\"gate\":\"" << gate_kind_name(ops[i].first)
        << "\",\"count\":" << ops[i].second << "}";
  }
  out << "]";
  return out.str();
}

namespace {

void check_qubit_pair_norm(Complex alpha, Complex beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10) {
    throw std::invalid_argument("|alpha|^2 + |beta|^2 must be 1");
  }
}

int sample_binary(double p0, std::mt19937_64* rng) {
  if (rng == nullptr) {
    throw std::invalid_argument("sampling requested without a generator");
  }
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return dist(*rng) < p0 ? 0 : 1;
}

// Logical bit-flip on a code-space vector. Weight reversal when X^{tensor N}
// implements the flip (n odd family); otherwise the exact swap of the
// logical components.
SymmetricVector controlled_flip_branch(const SymmetricVector& block,
                                       const CodeSpec& code) {
  SymmetricVector reversed = logical_X(block);
  if (fidelity(logical_X(code.zero_L), code.one_L) > 1.0 - 1e-12) {
    return reversed;
  }
  Complex c0 = inner(code.zero_L, block);
  Complex c1 = inner(code.one_L, block);
  SymmetricVector residual =
      add(block, add(scale(code.zero_L, -c0), scale(code.one_L, -c1)));
  if (residual.norm() > 1e-10) {
    throw std::invalid_argument(
        "encode: block state outside the code space and the code has no "
        "transversal bit-flip");
  }
  return add(scale(code.one_L, c0), scale(code.zero_L, c1));
}

}  // namespace

EncodeResult encode(const CodeSpec& code, Complex alpha, Complex beta,
                    std::optional<int> forced_branch, std::mt19937_64* rng) {
  check_qubit_pair_norm(alpha, beta);
  if (forced_branch && *forced_branch != 0 && *forced_branch != 1) {
    throw std::invalid_argument("encode: forced_branch must be 0 or 1");
  }
  int n = code.n_qubits;
  GateTrace trace;

  // (alpha|0> + beta|1>) (x) |0_L>
  HybridState h(n);
  for (int w = 0; w <= n; ++w) {
    h.amp[0][w] = alpha * code.zero_L.amp[w];
    h.amp[1][w] = beta * code.zero_L.amp[w];
  }

  // Controlled logical bit-flip on the ancilla-1 branch.
  SymmetricVector branch1(n, h.amp[1]);
  h.amp[1] = controlled_flip_branch(branch1, code).amp;
  trace.add(GateKind::TwoQubitCnot, n);

  // Hadamard on the ancilla.
  for (int w = 0; w <= n; ++w) {
    Complex a0 = h.amp[0][w];
    Complex a1 = h.amp[1][w];
    h.amp[0][w] = (a0 + a1) / std::sqrt(2.0);
    h.amp[1][w] = (a0 - a1) / std::sqrt(2.0);
  }
  trace.add(GateKind::Hadamard, 1);

  double p0 = 0.0;
  for (int w = 0; w <= n; ++w) p0 += std::norm(h.amp[0][w]);
  int bit = forced_branch ? *forced_branch : sample_binary(p0, rng);
  trace.add(GateKind::Measurement, 1);

  SymmetricVector out(n, h.amp[bit]);
  out = out.normalized();
  if (bit == 1) {
    out = logical_R(out, code.g);
    trace.add(GateKind::PhaseR, n);
  }
  return {std::move(out), bit, std::move(trace)};
}

namespace {

// Diagonal block of rho on the weights congruent to (delta - s) mod g,
// together with those weights.
std::vector<int> residue_support(int n_qubits, int g, int residue) {
  std::vector<int> support;
  for (int w = 0; w <= n_qubits; ++w) {
    if (((w - residue) % g + g) % g == 0) support.push_back(w);
  }
  return support;
}

struct ProjectedState {
  double probability = 0.0;
  SymmetricVector state;   // dominant eigenvector, embedded and normalized
  double purity_defect = 0.0;  // second eigenvalue of the projected block
};

ProjectedState project_and_extract(const SymmetricDensity& rho,
                                   const std::vector<int>& support) {
  int k = static_cast<int>(support.size());
  Eigen::MatrixXcd block(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) block(i, j) = rho.mat(support[i], support[j]);
  }
  block = 0.5 * (block + block.adjoint().eval());
  ProjectedState out;
  out.probability = block.trace().real();
  if (out.probability < 1e-14) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
  int top = k - 1;  // eigenvalues ascending
  out.purity_defect = (k >= 2) ? es.eigenvalues()(k - 2) : 0.0;
  Eigen::VectorXcd vec = es.eigenvectors().col(top);
  // Fix the global phase: largest entry real positive.
  int argmax = 0;
  for (int i = 1; i < k; ++i) {
    if (std::abs(vec(i)) > std::abs(vec(argmax))) argmax = i;
  }
  vec *= std::polar(1.0, -std::arg(vec(argmax)));
  out.state = SymmetricVector(rho.n_qubits);
  for (int i = 0; i < k; ++i) out.state.amp[support[i]] = vec(i);
  return out;
}

int sample_discrete(const std::vector<double>& probs, std::mt19937_64* rng) {
  if (rng == nullptr) {
    throw std::invalid_argument("sampling requested without a generator");
  }
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double r = dist(*rng);
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (r < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace

SyndromeOutcome syndrome_measure(const SymmetricDensity& rho,
                                 const CodeSpec& code, int t,
                                 std::optional<int> forced_s,
                                 std::mt19937_64* rng) {
  if (t < 0 || t >= code.g || t > code.delta) {
    throw std::invalid_argument(
        "syndrome_measure: requires 0 <= t < g and t <= delta");
  }
  if (rho.n_qubits != code.n_qubits - t) {
    throw std::invalid_argument("syndrome_measure: state must live on N-t qubits");
  }
  if (forced_s && (*forced_s < 0 || *forced_s > t)) {
    throw std::invalid_argument("syndrome_measure: forced_s must be in {0..t}");
  }

  std::vector<double> probs(t + 1, 0.0);
  std::vector<std::vector<int>> supports(t + 1);
  for (int s = 0; s <= t; ++s) {
    supports[s] = residue_support(rho.n_qubits, code.g, code.delta - s);
    for (int w : supports[s]) probs[s] += rho.mat(w, w).real();
  }
  int s = forced_s ? *forced_s : sample_discrete(probs, rng);

  ProjectedState proj = project_and_extract(rho, supports[s]);
  if (proj.probability < 1e-14) {
    throw std::runtime_error("syndrome branch has vanishing probability");
  }
  if (proj.purity_defect > 1e-8 * proj.probability) {
    throw std::runtime_error("input not a post-deletion code state");
  }
  return {s, proj.probability, std::move(proj.state)};
}

namespace {

// Normalized even-j (parity 0) or odd-j (parity 1) basis vector with the
// given per-j amplitude profile on weights g*j + delta - s.
SymmetricVector parity_basis_vector(const CodeSpec& code, int s, int t,
                                    int parity,
                                    const std::vector<double>& profile) {
  SymmetricVector v(code.n_qubits - t);
  for (int j = parity; j <= code.n; j += 2) {
    v.amp[code.weight_of(j) - s] = profile[j];
  }
  return v.normalized();
}

// Lemma-style skewed profile b_{j,s}.
std::vector<double> skewed_profile(const CodeSpec& code, int s, int t) {
  std::vector<double> b(code.n + 1);
  double pow2n = std::pow(2.0, code.n);
  for (int j = 0; j <= code.n; ++j) {
    int w = code.weight_of(j);
    b[j] = std::sqrt(binom_d(code.n, j) * binom_d(code.n_qubits - t, w - s) /
                     (pow2n * binom_d(code.n_qubits, w)));
  }
  return b;
}

// Balanced gnu profile sqrt(C(n,j)/2^(n-1)).
std::vector<double> balanced_profile(const CodeSpec& code) {
  std::vector<double> c(code.n + 1);
  double denom = std::pow(2.0, code.n - 1);
  for (int j = 0; j <= code.n; ++j) {
    c[j] = std::sqrt(binom_d(code.n, j) / denom);
  }
  return c;
}

}  // namespace

SymmetricVector rebalance(const SymmetricVector& phi, const CodeSpec& code,
                          int s, int t) {
  int m = code.n_qubits - t;
  if (phi.n_qubits != m) {
    throw std::invalid_argument("rebalance: state must live on N-t qubits");
  }
  // The state must be supported on {g*j + delta - s : 0 <= j <= n}.
  std::vector<bool> allowed(m + 1, false);
  for (int j = 0; j <= code.n; ++j) {
    int w = code.weight_of(j) - s;
    if (w >= 0 && w <= m) allowed[w] = true;
  }
  for (int w = 0; w <= m; ++w) {
    if (!allowed[w] && std::abs(phi.amp[w]) > 1e-10) {
      throw std::domain_error("rebalance: state outside the syndrome support");
    }
  }

  std::vector<double> skew = skewed_profile(code, s, t);
  std::vector<double> flat = balanced_profile(code);
  SymmetricVector zero_s = parity_basis_vector(code, s, t, 0, skew);
  SymmetricVector one_s = parity_basis_vector(code, s, t, 1, skew);
  SymmetricVector zero_p = parity_basis_vector(code, s, t, 0, flat);
  SymmetricVector one_p = parity_basis_vector(code, s, t, 1, flat);

  Complex a = inner(zero_s, phi);
  Complex b = inner(one_s, phi);
  return add(scale(zero_p, a), scale(one_p, b));
}

DecodeTeleportResult decode_teleport(const SymmetricVector& phi_prime,
                                     const CodeSpec& code, int s, int t,
                                     std::optional<int> forced_z,
                                     std::mt19937_64* rng) {
  if (code.delta != code.g || code.n_qubits != code.g * code.n + 2 * code.g) {
    throw std::invalid_argument(
        "decode_teleport: requires the delta = g family (N = g*n + 2*g)");
  }
  int m = code.n_qubits - t;
  if (phi_prime.n_qubits != m) {
    throw std::invalid_argument("decode_teleport: state must live on N-t qubits");
  }
  if (forced_z && *forced_z != 0 && *forced_z != 1) {
    throw std::invalid_argument("decode_teleport: forced_z must be 0 or 1");
  }
  GateTrace trace;

  // Ancilla (|0> + |1>)/sqrt(2) joined with the block.
  HybridState h(m);
  for (int w = 0; w <= m; ++w) {
    h.amp[0][w] = phi_prime.amp[w] / std::sqrt(2.0);
  }
  // Controlled logical bit-flip on the ancilla-1 branch: weight reversal
  // followed by a collective shift of t - 2s.
  int shift = t - 2 * s;
  for (int w = 0; w <= m; ++w) {
    Complex a = phi_prime.amp[w] / std::sqrt(2.0);
    if (a == Complex(0.0)) continue;
    int w_out = (m - w) + shift;
    if (w_out < 0 || w_out > m) {
      throw std::logic_error("decode_teleport: shift left the weight range");
    }
    h.amp[1][w_out] += a;
  }
  trace.add(GateKind::TwoQubitCnot, m);
  trace.add(GateKind::WeightShift, 1);

  // Logical-Z measurement: even-j versus odd-j weight support.
  std::vector<double> flat = balanced_profile(code);
  SymmetricVector zero_p = parity_basis_vector(code, s, t, 0, flat);
  SymmetricVector one_p = parity_basis_vector(code, s, t, 1, flat);
  double p_even = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int j = 0; j <= code.n; j += 2) {
      p_even += std::norm(h.amp[a][code.weight_of(j) - s]);
    }
  }
  int z_bit = forced_z ? *forced_z : sample_binary(p_even, rng);
  trace.add(GateKind::Measurement, 1);

  const SymmetricVector& pointer = (z_bit == 0) ? zero_p : one_p;
  Complex c0 = inner(pointer, SymmetricVector(m, h.amp[0]));
  Complex c1 = inner(pointer, SymmetricVector(m, h.amp[1]));
  if (z_bit == 1) {
    std::swap(c0, c1);  // conditional X on the ancilla
    trace.add(GateKind::PauliX, 1);
  }
  double norm = std::sqrt(std::norm(c0) + std::norm(c1));
  if (norm < 1e-14) {
    throw std::runtime_error("decode_teleport: measured branch has no support");
  }
  DecodeTeleportResult result;
  result.alpha = c0 / norm;
  result.beta = c1 / norm;
  result.z_outcome = (z_bit == 0) ? +1 : -1;
  result.outcome_probability = (z_bit == 0) ? p_even : 1.0 - p_even;
  result.trace = std::move(trace);
  return result;
}

FullDecodeResult full_decode(const SymmetricDensity& rho, const CodeSpec& code,
                             int t, std::optional<int> forced_s,
                             std::optional<int> forced_z, std::mt19937_64* rng,
                             bool best_effort) {
  FullDecodeResult result;
  SymmetricVector phi;
  double p_s = 0.0;
  int s = 0;
  GateTrace syndrome_trace;
  syndrome_trace.add(GateKind::Measurement, 1);

  if (t < code.g) {
    SyndromeOutcome so = syndrome_measure(rho, code, t, forced_s, rng);
    s = so.s;
    p_s = so.probability;
    phi = std::move(so.post_state);
  } else if (best_effort) {
    // Syndrome residues collide; measure residue classes mod g and decode
    // each against its smallest matching syndrome.
    if (t > code.delta || rho.n_qubits != code.n_qubits - t) {
      throw std::invalid_argument("full_decode: invalid deletion count");
    }
    int classes = code.g;
    std::vector<double> probs(classes, 0.0);
    std::vector<std::vector<int>> supports(classes);
    for (int r = 0; r < classes; ++r) {
      supports[r] = residue_support(rho.n_qubits, code.g, code.delta - r);
      for (int w : supports[r]) probs[r] += rho.mat(w, w).real();
    }
    int r = forced_s ? (*forced_s % code.g) : sample_discrete(probs, rng);
    ProjectedState proj = project_and_extract(rho, supports[r]);
    if (proj.probability < 1e-14) {
      throw std::runtime_error("syndrome branch has vanishing probability");
    }
    s = r;
    p_s = proj.probability;
    phi = std::move(proj.state);
    // Clip to the syndrome-s support before rebalancing.
    std::vector<bool> allowed(rho.n_qubits + 1, false);
    for (int j = 0; j <= code.n; ++j) {
      int w = code.weight_of(j) - s;
      if (w >= 0 && w <= rho.n_qubits) allowed[w] = true;
    }
    for (int w = 0; w <= rho.n_qubits; ++w) {
      if (!allowed[w]) phi.amp[w] = 0.0;
    }
    if (phi.norm() < 1e-7) {
      throw std::runtime_error("full_decode: no support on the chosen syndrome");
    }
    phi = phi.normalized();
  } else {
    // Defer to the strict precondition check for the error message.
    syndrome_measure(rho, code, t, forced_s, rng);
  }

  SymmetricVector phi2 = rebalance(phi, code, s, t);
  DecodeTeleportResult dt = decode_teleport(phi2, code, s, t, forced_z, rng);

  result.alpha = dt.alpha;
  result.beta = dt.beta;
  result.s = s;
  result.z_outcome = dt.z_outcome;
  result.branch_probability = p_s * dt.outcome_probability;
  result.trace = std::move(syndrome_trace);
  for (const auto& op : dt.trace.ops) result.trace.add(op.first, op.second);
  return result;
}

}  // namespace pidel
