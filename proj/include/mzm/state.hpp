// Dense complex state-vector and density-matrix numerics for small qubit
// registers: gate application, projective measurement, expectations, and
// partial trace. Qubit 1 is the most significant bit of the amplitude index.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mzm/pauli.hpp"

namespace mzm {

// Rotation convention used throughout: R^xi(theta) = exp(+i sigma^xi theta/2).
// Axis 'h' denotes the Hadamard axis (x+z)/sqrt(2), used by the noise model.
struct GateOp {
  enum class Kind { Rotation, CZ, Hadamard, PauliGate, GlobalPhase };
  Kind kind = Kind::Rotation;
  char axis = 'z';       // Rotation only: 'x', 'y', 'z' or 'h'
  double angle = 0.0;    // Rotation / GlobalPhase (radians)
  int qubit = 0;         // 1-based; Rotation / Hadamard target, CZ first qubit
  int qubit2 = 0;        // CZ second qubit
  std::optional<PauliString> pauli;  // PauliGate only

  static GateOp rotation(char axis, int qubit, double angle);
  static GateOp cz(int a, int b);
  static GateOp hadamard(int qubit);
  static GateOp pauli_gate(PauliString p);
  static GateOp global_phase(double angle);
};

struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  // |00...0>.
  static StateVector zero(int n_qubits);
  double norm_squared() const { return amplitudes.squaredNorm(); }
};

struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd entries;

  static DensityMatrix from_state(const StateVector& s);
  double trace_real() const { return entries.trace().real(); }
};

// Applies one gate; pure (returns a new state). Throws std::out_of_range on
// bad qubit indices.
StateVector apply(const StateVector& state, const GateOp& gate);
StateVector apply_all(const StateVector& state, const std::vector<GateOp>& gates);

// Projects `qubit` onto |outcome>. The result is intentionally left
// unnormalized: its squared norm is the outcome probability.
StateVector project(const StateVector& state, int qubit, int outcome);

// <psi|P|psi>. Throws std::invalid_argument for non-Hermitian strings.
double expectation(const StateVector& state, const PauliString& p);

// Reduced density matrix over `keep` (1-based, must be nonempty and sorted
// ascending); remaining qubits are traced out. Trace is preserved.
DensityMatrix partial_trace(const DensityMatrix& dm, const std::vector<int>& keep);
DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep);

// Dense unitary of a gate list on n qubits (oracle-grade; small n only).
Eigen::MatrixXcd circuit_unitary(int n_qubits, const std::vector<GateOp>& gates);

// JSON text with explicit real/imaginary parts per entry (report format).
std::string density_matrix_json(const DensityMatrix& dm, int indent = -1);

}  // namespace mzm
