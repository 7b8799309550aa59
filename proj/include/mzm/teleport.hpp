// End-to-end teleportation pipeline: input preparation, circuit execution,
// outcome-conditioned correction, exact branch enumeration via projectors,
// and syndrome postselection.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mzm/circuit.hpp"
#include "mzm/state.hpp"

namespace mzm {

struct InputStateSpec {
  std::string label;  // "0", "1", "+", "-", "+i", "-i" or "custom"
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};

  static InputStateSpec from_label(const std::string& label);
  static InputStateSpec custom(std::complex<double> alpha, std::complex<double> beta);
  static const std::vector<std::string>& six_labels();
  Eigen::Vector2cd ket() const { return Eigen::Vector2cd(alpha, beta); }
};

enum class PostselectPolicy { NS, ES };

// Correction required after measuring logical values (c1, c2) on chains 1, 2.
CorrectionVariant correction_for(int c1, int c2);
std::string correction_name(CorrectionVariant v);

// One gate program for a single Monte Carlo draw: a shared pre-measurement
// segment plus one correction segment per (c1, c2) branch. The noiseless
// draw is built straight from compile_teleport_program.
struct TeleportDrawProgram {
  std::vector<GateOp> pre_measure;
  // Indexed by 2*c1 + c2.
  std::array<std::vector<GateOp>, 4> corrections;

  static TeleportDrawProgram noiseless();
};

// One projector branch: correction bits from qubits 2 and 4, syndrome bits
// from qubits 1,3,5,7, ancilla bit from qubit 8, and the unnormalized
// reduced state of qubit 6 (its trace is the branch probability).
struct RunOutcome {
  int c1 = 0, c2 = 0;
  std::array<int, 4> syndromes{};
  int k = 0;
  Eigen::Matrix2cd rho6 = Eigen::Matrix2cd::Zero();
};

// Exact deterministic branch enumeration (4 x 16 x 2 = 128 outcomes). When
// `fixed_variant` is set the same correction program is applied on every
// (c1, c2) branch (the run-four-circuits mode); otherwise the matching
// correction is selected per branch (feed-forward mode).
std::vector<RunOutcome> run_teleport(
    const InputStateSpec& input, const TeleportDrawProgram& program,
    std::optional<CorrectionVariant> fixed_variant = std::nullopt);

struct AssembledState {
  DensityMatrix rho;        // unnormalized 1-qubit state
  double retained = 0.0;    // trace of rho = retained probability
  bool empty = false;       // true when every branch was filtered away
};

// NS sums every branch; ES keeps only branches with all syndromes zero. The
// ancilla bit k is never filtered.
AssembledState assemble_density(const std::vector<RunOutcome>& outcomes,
                                PostselectPolicy policy);

// <psi| rho |psi> / tr(rho) for an assembled (unnormalized) state.
double conditional_fidelity(const AssembledState& state, const Eigen::Vector2cd& psi);

}  // namespace mzm
