#include "mzm/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mzm/circuit.hpp"
#include "mzm/kitaev.hpp"
#include "mzm/state.hpp"
#include "mzm/teleport.hpp"

namespace mzm {

namespace {

constexpr double kPi = std::numbers::pi;

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                       double tol, double* max_err = nullptr) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Anchor the relative phase on the largest entry of b.
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return a.cwiseAbs().maxCoeff() < tol;
  const std::complex<double> phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  const double err = (a - phase * b).cwiseAbs().maxCoeff();
  if (max_err) *max_err = err;
  return err < tol;
}

// exp(i phi P) for a two-qubit bare Pauli string, as a 4x4 matrix.
Eigen::Matrix4cd exp_pauli(double phi, Pauli p1, Pauli p2) {
  PauliString p = PauliString::identity(2);
  p.factors = {p1, p2};
  const Eigen::MatrixXcd m = pauli_matrix(p);
  const std::complex<double> i1(0.0, 1.0);
  return (std::cos(phi) * Eigen::Matrix4cd::Identity() +
          i1 * std::sin(phi) * m).eval();
}

std::string spin_rep_string(const BraidGenerator& g) {
  const BraidSpinRep rep = braid_spin_rep(g, 2, 2);
  const bool plus = rep.s == Phase::from_exponent(1);
  std::string ps;
  for (Pauli f : rep.p.factors) ps += pauli_char(f);
  return std::string("(1 ") + (plus ? "+" : "-") + " i." + ps + ")/sqrt(2)";
}

// Sum of the (c1, c2) branch under no syndrome filtering.
AssembledState branch_density(const std::vector<RunOutcome>& outcomes, int c1, int c2) {
  AssembledState state;
  state.rho.n_qubits = 1;
  state.rho.entries = Eigen::MatrixXcd::Zero(2, 2);
  for (const RunOutcome& out : outcomes)
    if (out.c1 == c1 && out.c2 == c2) state.rho.entries += out.rho6;
  state.retained = state.rho.trace_real();
  state.empty = state.retained <= 1e-15;
  return state;
}

}  // namespace

std::vector<BraidTableEntry> braid_table() {
  using L = MajoranaLabel;
  const L l1 = L::edge_left(1), r1 = L::edge_right(1, 2);
  const L l2 = L::edge_left(2), r2 = L::edge_right(2, 2);
  std::vector<BraidTableEntry> table;
  table.push_back({{l1, r1}, "sqrt(Z1)", "", exp_pauli(kPi / 4, Pauli::Z, Pauli::I)});
  table.push_back({{l1, l2}, "sqrt(Y1 X2)", "", exp_pauli(-kPi / 4, Pauli::Y, Pauli::X)});
  table.push_back({{l1, r2}, "sqrt(Y1 Y2)", "", exp_pauli(-kPi / 4, Pauli::Y, Pauli::Y)});
  table.push_back({{r1, l2}, "sqrt(X1 X2)", "", exp_pauli(kPi / 4, Pauli::X, Pauli::X)});
  table.push_back({{r1, r2}, "sqrt(X1 Y2)", "", exp_pauli(kPi / 4, Pauli::X, Pauli::Y)});
  table.push_back({{l2, r2}, "sqrt(Z2)", "", exp_pauli(kPi / 4, Pauli::I, Pauli::Z)});
  for (BraidTableEntry& e : table) e.spin_rep = spin_rep_string(e.generator);
  return table;
}

std::vector<CheckResult> verify_braid_table() {
  std::vector<CheckResult> results;
  for (const BraidTableEntry& entry : braid_table()) {
    const Eigen::Matrix4cd actual = logical_action({entry.generator}, 2);
    CheckResult r;
    r.name = "braid table: " + entry.generator.a.str() + entry.generator.b.str() +
             " = " + entry.logical_name;
    r.pass = equal_up_to_phase(actual, entry.logical_matrix, 1e-9);
    r.detail = entry.spin_rep;
    results.push_back(r);
  }
  return results;
}

CheckResult verify_braid_soundness(int n_words, int max_len, std::uint64_t seed) {
  using L = MajoranaLabel;
  const std::vector<L> edges = {L::edge_left(1), L::edge_right(1, 2),
                                L::edge_left(2), L::edge_right(2, 2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<std::size_t> edge_dist(0, edges.size() - 1);

  CheckResult result;
  result.name = "compiler soundness (" + std::to_string(n_words) + " random words)";
  result.pass = true;
  const Eigen::Index dim = 16;
  for (int w = 0; w < n_words; ++w) {
    BraidWord word;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      std::size_t a = edge_dist(rng), b = edge_dist(rng);
      while (b == a) b = edge_dist(rng);
      word.push_back({edges[a], edges[b]});
    }
    Eigen::MatrixXcd symbolic = Eigen::MatrixXcd::Identity(dim, dim);
    for (const BraidGenerator& g : word) {
      const BraidSpinRep rep = braid_spin_rep(g, 2, 2);
      symbolic = ((Eigen::MatrixXcd::Identity(dim, dim) +
                   pauli_matrix(rep.signed_string())) /
                  std::sqrt(2.0)) *
                 symbolic;
    }
    const CircuitIR compiled = compile_braid_word(word, 2, 2);
    const Eigen::MatrixXcd numeric = circuit_unitary(4, compiled.gates);
    if (!equal_up_to_phase(numeric, symbolic, 1e-9)) {
      result.pass = false;
      result.detail = "word " + std::to_string(w) + " (length " +
                      std::to_string(len) + ") mismatch; first generator " +
                      word.front().a.str() + word.front().b.str();
      return result;
    }
  }
  result.detail = "all words matched within 1e-9";
  return result;
}

std::vector<CheckResult> verify_encoder_decoder() {
  std::vector<CheckResult> results;

  {
    std::vector<GateOp> gates = encoder_circuit(1, 2);
    const std::vector<GateOp> dec = decoder_circuit(1, 2, DecoderVariant::Standard);
    gates.insert(gates.end(), dec.begin(), dec.end());
    const Eigen::MatrixXcd u = circuit_unitary(2, gates);
    CheckResult r;
    r.name = "decoder inverts encoder";
    r.pass = (u - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12;
    results.push_back(r);
  }

  {
    // A single phase flip on the encoded chain decodes to |1> on the first
    // qubit with the data intact on the second.
    const std::complex<double> alpha(0.6, 0.0), beta(0.0, 0.8);
    const LogicalBasis basis = logical_states(2);
    StateVector s;
    s.n_qubits = 2;
    s.amplitudes = alpha * basis.zero_L.amplitudes + beta * basis.one_L.amplitudes;
    s = apply(s, GateOp::pauli_gate(PauliString::single(2, 1, Pauli::Z)));
    s = apply_all(s, decoder_circuit(1, 2, DecoderVariant::Standard));
    const double weight_q1_zero = project(s, 1, 0).norm_squared();
    const StateVector flagged = project(s, 1, 1);
    const DensityMatrix rho2 = partial_trace(flagged, {2});
    Eigen::Vector2cd data(alpha, beta);
    const std::complex<double> f = data.adjoint() * rho2.entries * data;
    CheckResult r;
    r.name = "phase flip reads out as |1> syndrome";
    r.pass = weight_q1_zero < 1e-12 && std::abs(f.real() - 1.0) < 1e-9;
    results.push_back(r);
  }

  {
    StateVector s = StateVector::zero(2);
    s = apply(s, GateOp::hadamard(1));
    s = apply(s, GateOp::hadamard(2));
    s = apply_all(s, decoder_circuit(1, 2, DecoderVariant::Modified));
    CheckResult r;
    r.name = "modified decoder maps |++> to |00>";
    r.pass = std::abs(std::abs(s.amplitudes(0)) - 1.0) < 1e-12;
    results.push_back(r);
  }

  {
    // Ancilla transparency: the doubled sqrt(X1 X2) braid applies logical X
    // to chain 1 and leaves the |++> helper chain untouched.
    StateVector s = StateVector::zero(4);
    const LogicalBasis basis = logical_states(2);
    // chain 1 (qubits 1,2) in |0_L>, chain 2 (qubits 3,4) in |++>.
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
    for (Eigen::Index a = 0; a < 4; ++a)
      for (Eigen::Index b = 0; b < 4; ++b)
        amps(a * 4 + b) = basis.zero_L.amplitudes(a) * 0.5;
    s.amplitudes = amps;
    const BraidGenerator g{MajoranaLabel::edge_right(1, 2), MajoranaLabel::edge_left(2)};
    const CircuitIR braid = compile_braid(g, 2, 2);
    s = apply_all(s, braid.gates);
    s = apply_all(s, braid.gates);
    const DensityMatrix helper = partial_trace(s, {3, 4});
    const DensityMatrix chain1 = partial_trace(s, {1, 2});
    Eigen::Vector4cd plus_plus = Eigen::Vector4cd::Constant(0.5);
    const std::complex<double> fh = plus_plus.adjoint() * helper.entries * plus_plus;
    const std::complex<double> f1 = basis.one_L.amplitudes.adjoint() * chain1.entries *
                                    basis.one_L.amplitudes;
    CheckResult r;
    r.name = "doubled braid: logical X with transparent helper chain";
    r.pass = std::abs(fh.real() - 1.0) < 1e-9 && std::abs(f1.real() - 1.0) < 1e-9;
    results.push_back(r);
  }

  return results;
}

CheckResult verify_correction_table(int n_random_inputs, std::uint64_t seed) {
  CheckResult result;
  result.name = "correction table (all four outcome branches)";
  result.pass = true;
  const TeleportDrawProgram program = TeleportDrawProgram::noiseless();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<InputStateSpec> inputs;
  for (const std::string& label : InputStateSpec::six_labels())
    inputs.push_back(InputStateSpec::from_label(label));
  for (int i = 0; i < n_random_inputs; ++i) {
    const double theta = std::acos(1.0 - 2.0 * uni(rng));
    const double phi = 2.0 * kPi * uni(rng);
    inputs.push_back(InputStateSpec::custom(
        std::cos(theta / 2.0),
        std::polar(std::sin(theta / 2.0), phi)));
  }

  for (const InputStateSpec& input : inputs) {
    for (int c1 = 0; c1 < 2 && result.pass; ++c1) {
      for (int c2 = 0; c2 < 2 && result.pass; ++c2) {
        const CorrectionVariant right = correction_for(c1, c2);
        const auto outcomes = run_teleport(input, program, right);
        const AssembledState branch = branch_density(outcomes, c1, c2);
        const double f = conditional_fidelity(branch, input.ket());
        if (std::abs(f - 1.0) > 1e-9) {
          result.pass = false;
          result.detail = "variant " + correction_name(right) + " failed on (" +
                          std::to_string(c1) + "," + std::to_string(c2) +
                          ") for input " + input.label;
        }
      }
    }
  }

  // Negative control: on a generic input every wrong variant corrupts the
  // branch, so the table rows are pinned uniquely.
  if (result.pass) {
    const InputStateSpec generic =
        InputStateSpec::custom({0.6, 0.0}, {0.0, 0.8});
    for (int c1 = 0; c1 < 2 && result.pass; ++c1) {
      for (int c2 = 0; c2 < 2 && result.pass; ++c2) {
        const CorrectionVariant right = correction_for(c1, c2);
        for (CorrectionVariant wrong :
             {CorrectionVariant::None, CorrectionVariant::X, CorrectionVariant::Z,
              CorrectionVariant::XZ}) {
          if (wrong == right) continue;
          const auto outcomes = run_teleport(generic, program, wrong);
          const AssembledState branch = branch_density(outcomes, c1, c2);
          const double f = conditional_fidelity(branch, generic.ket());
          if (f > 1.0 - 1e-6) {
            result.pass = false;
            result.detail = "wrong variant " + correction_name(wrong) +
                            " also teleports branch (" + std::to_string(c1) + "," +
                            std::to_string(c2) + ")";
          }
        }
      }
    }
  }
  if (result.pass) result.detail = "4 rows verified, wrong variants rejected";
  return result;
}

std::vector<CheckResult> verify_detection() {
  std::vector<CheckResult> results;
  const TeleportDrawProgram nominal = TeleportDrawProgram::noiseless();
  // Code-space boundaries of the pre-measurement program: after the encoder
  // block, between the two braids, and just before the decoders.
  const std::size_t enc_end = 2 + 3 * encoder_circuit(1, 2).size();
  const std::size_t braid_len =
      compile_braid({MajoranaLabel::edge_right(2, 2), MajoranaLabel::edge_left(3)}, 2, 4)
          .gates.size();
  const std::vector<std::size_t> positions = {enc_end, enc_end + braid_len,
                                              enc_end + 2 * braid_len};
  const InputStateSpec generic = InputStateSpec::custom({0.6, 0.0}, {0.0, 0.8});

  CheckResult flag_check;
  flag_check.name = "single phase flips at code-space boundaries are flagged or trivial";
  flag_check.pass = true;
  int flagged = 0, trivial = 0;
  for (std::size_t pos : positions) {
    for (int q = 1; q <= 6 && flag_check.pass; ++q) {
      TeleportDrawProgram injected = nominal;
      injected.pre_measure.insert(
          injected.pre_measure.begin() + static_cast<std::ptrdiff_t>(pos),
          GateOp::pauli_gate(PauliString::single(8, q, Pauli::Z)));
      const auto outcomes = run_teleport(generic, injected);
      const AssembledState es = assemble_density(outcomes, PostselectPolicy::ES);
      if (es.retained < 1e-9) {
        ++flagged;
        continue;
      }
      const double f = conditional_fidelity(es, generic.ket());
      if (std::abs(f - 1.0) < 1e-9) {
        ++trivial;
      } else {
        flag_check.pass = false;
        flag_check.detail = "Z on qubit " + std::to_string(q) + " at position " +
                            std::to_string(pos) + " retained with fidelity " +
                            std::to_string(f);
      }
    }
  }
  if (flag_check.pass)
    flag_check.detail = std::to_string(flagged) + " flagged, " +
                        std::to_string(trivial) + " trivial of " +
                        std::to_string(positions.size() * 6) + " injections";
  results.push_back(flag_check);

  {
    // Z on both qubits of the target chain is a logical phase flip: passes
    // the syndrome filter and zeroes the |+> fidelity.
    TeleportDrawProgram injected = nominal;
    PauliString zz = PauliString::single(8, 5, Pauli::Z);
    zz.factors[5] = Pauli::Z;
    injected.pre_measure.insert(
        injected.pre_measure.begin() + static_cast<std::ptrdiff_t>(positions[1]),
        GateOp::pauli_gate(zz));
    const InputStateSpec plus = InputStateSpec::from_label("+");
    const auto outcomes = run_teleport(plus, injected);
    const AssembledState es = assemble_density(outcomes, PostselectPolicy::ES);
    CheckResult r;
    r.name = "logical phase flip on the target chain evades detection";
    const double f = es.empty ? -1.0 : conditional_fidelity(es, plus.ket());
    r.pass = !es.empty && es.retained > 0.1 && std::abs(f) < 1e-9;
    r.detail = "retained " + std::to_string(es.retained) + ", |+> fidelity " +
               std::to_string(f);
    results.push_back(r);
  }

  return results;
}

std::vector<CheckResult> run_verify_suite() {
  std::vector<CheckResult> all = verify_braid_table();
  all.push_back(verify_braid_soundness(50, 6, 7));
  for (CheckResult& r : verify_encoder_decoder()) all.push_back(std::move(r));
  all.push_back(verify_correction_table(5, 11));
  for (CheckResult& r : verify_detection()) all.push_back(std::move(r));
  return all;
}

}  // namespace mzm
