#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mzm/teleport.hpp"

using namespace mzm;
using std::complex;

namespace {
constexpr double kPi = std::numbers::pi;

double noiseless_fidelity(const InputStateSpec& input, PostselectPolicy policy) {
  const auto outcomes = run_teleport(input, TeleportDrawProgram::noiseless());
  return conditional_fidelity(assemble_density(outcomes, policy), input.ket());
}
}  // namespace

TEST_CASE("input state labels") {
  const InputStateSpec plus = InputStateSpec::from_label("+");
  CHECK(std::abs(plus.alpha - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(plus.beta - 1.0 / std::sqrt(2.0)) < 1e-12);
  const InputStateSpec mi = InputStateSpec::from_label("-i");
  CHECK(std::abs(mi.beta - complex<double>(0.0, -1.0) / std::sqrt(2.0)) < 1e-12);
  CHECK(InputStateSpec::six_labels().size() == 6);
  CHECK_THROWS_AS(InputStateSpec::from_label("q"), std::invalid_argument);
  const InputStateSpec c = InputStateSpec::custom({0.6, 0.0}, {0.0, 0.8});
  CHECK(std::abs(c.ket().norm() - 1.0) < 1e-12);
}

TEST_CASE("correction lookup table") {
  CHECK(correction_for(0, 0) == CorrectionVariant::Z);
  CHECK(correction_for(0, 1) == CorrectionVariant::X);
  CHECK(correction_for(1, 0) == CorrectionVariant::XZ);
  CHECK(correction_for(1, 1) == CorrectionVariant::None);
  CHECK(correction_name(CorrectionVariant::XZ) == "X3Z3");
}

TEST_CASE("noiseless teleportation is exact for every input") {
  for (const std::string& label : InputStateSpec::six_labels()) {
    const InputStateSpec input = InputStateSpec::from_label(label);
    CHECK(noiseless_fidelity(input, PostselectPolicy::NS) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(noiseless_fidelity(input, PostselectPolicy::ES) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  const InputStateSpec generic =
      InputStateSpec::custom({0.3, 0.4}, {-0.5, std::sqrt(0.5)});
  CHECK(noiseless_fidelity(generic, PostselectPolicy::NS) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("branch enumeration is complete and properly weighted") {
  const auto outcomes = run_teleport(InputStateSpec::from_label("+i"),
                                     TeleportDrawProgram::noiseless());
  CHECK(outcomes.size() == 128);
  double total = 0.0;
  for (const RunOutcome& o : outcomes) total += o.rho6.trace().real();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  // Each correction branch carries weight 1/4 in the noiseless program.
  double w[2][2] = {};
  for (const RunOutcome& o : outcomes) w[o.c1][o.c2] += o.rho6.trace().real();
  for (int a : {0, 1})
    for (int b : {0, 1})
      CHECK(w[a][b] == doctest::Approx(0.25).epsilon(1e-10));
  // Noiselessly, the ancilla-chain syndromes (qubits 7 readout and k) stay 0.
  for (const RunOutcome& o : outcomes) {
    if (o.syndromes[3] == 1 || o.k == 1)
      CHECK(o.rho6.trace().real() < 1e-12);
  }
}

TEST_CASE("noiseless runs leave no weight on nonzero syndromes (ES == NS)") {
  const auto outcomes = run_teleport(InputStateSpec::from_label("1"),
                                     TeleportDrawProgram::noiseless());
  const AssembledState ns = assemble_density(outcomes, PostselectPolicy::NS);
  const AssembledState es = assemble_density(outcomes, PostselectPolicy::ES);
  CHECK(ns.retained == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(es.retained == doctest::Approx(1.0).epsilon(1e-10));
  CHECK((ns.rho.entries - es.rho.entries).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("feed-forward equals the matching fixed-correction branch") {
  Eigen::Vector2cd v(std::complex<double>(0.8, 0.1), std::complex<double>(0.2, 0.55));
  v.normalize();
  const InputStateSpec input = InputStateSpec::custom(v(0), v(1));
  const TeleportDrawProgram program = TeleportDrawProgram::noiseless();
  const auto ff = run_teleport(input, program);
  for (int c1 : {0, 1}) {
    for (int c2 : {0, 1}) {
      const auto fixed = run_teleport(input, program, correction_for(c1, c2));
      // On the (c1, c2) branch the fixed program coincides with feed-forward.
      for (std::size_t i = 0; i < ff.size(); ++i) {
        if (ff[i].c1 != c1 || ff[i].c2 != c2) continue;
        CHECK((ff[i].rho6 - fixed[i].rho6).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
  // A wrong fixed correction degrades the teleported state.
  const auto wrong = run_teleport(input, program, CorrectionVariant::None);
  AssembledState mixed = assemble_density(wrong, PostselectPolicy::NS);
  CHECK(conditional_fidelity(mixed, input.ket()) < 0.999);
}

TEST_CASE("phase-flip injections are caught or harmless") {
  // A Z error on the input chain right after encoding flips a syndrome that
  // ES filters out; the surviving ES weight still teleports perfectly.
  TeleportDrawProgram program = TeleportDrawProgram::noiseless();
  const InputStateSpec input = InputStateSpec::custom({0.6, 0.0}, {0.0, 0.8});
  program.pre_measure.insert(
      program.pre_measure.begin() + 14,
      GateOp::pauli_gate(PauliString::single(8, 1, Pauli::Z)));
  const auto outcomes = run_teleport(input, program);
  const AssembledState es = assemble_density(outcomes, PostselectPolicy::ES);
  CHECK(es.retained < 1e-9);
  CHECK(es.empty);
  CHECK_THROWS_AS(conditional_fidelity(es, input.ket()), std::domain_error);
}

TEST_CASE("a detectable error reduces NS fidelity but not ES fidelity") {
  TeleportDrawProgram program = TeleportDrawProgram::noiseless();
  const InputStateSpec input = InputStateSpec::from_label("+");
  // Partial dephasing of qubit 6 at the second code-space boundary.
  program.pre_measure.insert(program.pre_measure.begin() + 22,
                             GateOp::rotation('z', 6, 0.4));
  const auto outcomes = run_teleport(input, program);
  const AssembledState ns = assemble_density(outcomes, PostselectPolicy::NS);
  const AssembledState es = assemble_density(outcomes, PostselectPolicy::ES);
  const double f_ns = conditional_fidelity(ns, input.ket());
  const double f_es = conditional_fidelity(es, input.ket());
  CHECK(f_ns < 1.0 - 1e-6);
  CHECK(f_es == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(es.retained < ns.retained - 1e-6);
}
