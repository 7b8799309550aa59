#include "mzm/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace mzm {

InputStateSpec InputStateSpec::from_label(const std::string& label) {
  const double r = 1.0 / std::sqrt(2.0);
  InputStateSpec s;
  s.label = label;
  if (label == "0") {
    s.alpha = 1.0; s.beta = 0.0;
  } else if (label == "1") {
    s.alpha = 0.0; s.beta = 1.0;
  } else if (label == "+") {
    s.alpha = r; s.beta = r;
  } else if (label == "-") {
    s.alpha = r; s.beta = -r;
  } else if (label == "+i") {
    s.alpha = r; s.beta = std::complex<double>(0.0, r);
  } else if (label == "-i") {
    s.alpha = r; s.beta = std::complex<double>(0.0, -r);
  } else {
    throw std::invalid_argument("InputStateSpec: unknown label '" + label + "'");
  }
  return s;
}

InputStateSpec InputStateSpec::custom(std::complex<double> alpha,
                                      std::complex<double> beta) {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument("InputStateSpec: (alpha, beta) not normalized");
  InputStateSpec s;
  s.label = "custom";
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

const std::vector<std::string>& InputStateSpec::six_labels() {
  static const std::vector<std::string> labels = {"0", "1", "+", "-", "+i", "-i"};
  return labels;
}

CorrectionVariant correction_for(int c1, int c2) {
  if ((c1 != 0 && c1 != 1) || (c2 != 0 && c2 != 1))
    throw std::invalid_argument("correction_for: bits must be 0/1");
  if (c1 == 0 && c2 == 0) return CorrectionVariant::Z;
  if (c1 == 0 && c2 == 1) return CorrectionVariant::X;
  if (c1 == 1 && c2 == 0) return CorrectionVariant::XZ;
  return CorrectionVariant::None;
}

std::string correction_name(CorrectionVariant v) {
  switch (v) {
    case CorrectionVariant::None: return "I";
    case CorrectionVariant::X: return "X3";
    case CorrectionVariant::Z: return "Z3";
    case CorrectionVariant::XZ: return "X3Z3";
  }
  return "?";
}

TeleportDrawProgram TeleportDrawProgram::noiseless() {
  TeleportDrawProgram p;
  bool first = true;
  for (CorrectionVariant v : {CorrectionVariant::None, CorrectionVariant::X,
                              CorrectionVariant::Z, CorrectionVariant::XZ}) {
    const CircuitIR full = compile_teleport_program(v);
    if (first) {
      p.pre_measure.assign(full.gates.begin(),
                           full.gates.begin() + static_cast<std::ptrdiff_t>(full.correction_start));
      first = false;
    }
    const int c1 = v == CorrectionVariant::XZ || v == CorrectionVariant::None ? 1 : 0;
    const int c2 = v == CorrectionVariant::X || v == CorrectionVariant::None ? 1 : 0;
    p.corrections[static_cast<std::size_t>(2 * c1 + c2)].assign(
        full.gates.begin() + static_cast<std::ptrdiff_t>(full.correction_start),
        full.gates.end());
  }
  return p;
}

std::vector<RunOutcome> run_teleport(const InputStateSpec& input,
                                     const TeleportDrawProgram& program,
                                     std::optional<CorrectionVariant> fixed_variant) {
  const int n = 8;
  StateVector psi0 = StateVector::zero(n);
  // Data qubit 2 carries alpha|0> + beta|1>; qubit 2's bit is n-2 from the
  // least significant end.
  psi0.amplitudes(0) = input.alpha;
  psi0.amplitudes(Eigen::Index(1) << (n - 2)) = input.beta;

  const StateVector pre = apply_all(psi0, program.pre_measure);

  std::vector<RunOutcome> outcomes;
  outcomes.reserve(128);
  for (int c1 = 0; c1 < 2; ++c1) {
    for (int c2 = 0; c2 < 2; ++c2) {
      StateVector branch = project(project(pre, 2, c1), 4, c2);
      std::size_t correction_idx = static_cast<std::size_t>(2 * c1 + c2);
      if (fixed_variant) {
        // Locate the program slot holding the fixed variant's gates.
        for (int b1 = 0; b1 < 2; ++b1)
          for (int b2 = 0; b2 < 2; ++b2)
            if (correction_for(b1, b2) == *fixed_variant)
              correction_idx = static_cast<std::size_t>(2 * b1 + b2);
      }
      branch = apply_all(branch, program.corrections[correction_idx]);
      for (int m1 = 0; m1 < 2; ++m1) {
        const StateVector s1 = project(branch, 1, m1);
        for (int m2 = 0; m2 < 2; ++m2) {
          const StateVector s2 = project(s1, 3, m2);
          for (int m3 = 0; m3 < 2; ++m3) {
            const StateVector s3 = project(s2, 5, m3);
            for (int m4 = 0; m4 < 2; ++m4) {
              const StateVector s4 = project(s3, 7, m4);
              for (int k = 0; k < 2; ++k) {
                const StateVector s5 = project(s4, 8, k);
                RunOutcome out;
                out.c1 = c1;
                out.c2 = c2;
                out.syndromes = {m1, m2, m3, m4};
                out.k = k;
                out.rho6 = partial_trace(s5, {6}).entries;
                outcomes.push_back(out);
              }
            }
          }
        }
      }
    }
  }
  return outcomes;
}

AssembledState assemble_density(const std::vector<RunOutcome>& outcomes,
                                PostselectPolicy policy) {
  AssembledState state;
  state.rho.n_qubits = 1;
  state.rho.entries = Eigen::MatrixXcd::Zero(2, 2);
  for (const RunOutcome& out : outcomes) {
    if (policy == PostselectPolicy::ES) {
      const bool clean = out.syndromes[0] == 0 && out.syndromes[1] == 0 &&
                         out.syndromes[2] == 0 && out.syndromes[3] == 0;
      if (!clean) continue;
    }
    state.rho.entries += out.rho6;
  }
  state.retained = state.rho.trace_real();
  state.empty = state.retained <= 1e-15;
  return state;
}

double conditional_fidelity(const AssembledState& state, const Eigen::Vector2cd& psi) {
  if (state.empty)
    throw std::domain_error("conditional_fidelity: empty retained set");
  const std::complex<double> v = psi.adjoint() * state.rho.entries * psi;
  return v.real() / state.retained;
}

}  // namespace mzm
