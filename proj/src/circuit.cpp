#include "mzm/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace mzm {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(+i pi/4 X_a X_b) as the CZ-based seven-gate sequence (plus the tracked
// global phase making the identity exact).
void emit_xx_braid(std::vector<GateOp>& out, int a, int b) {
  out.push_back(GateOp::rotation('y', a, -kPi / 2));
  out.push_back(GateOp::rotation('y', b, -kPi / 2));
  out.push_back(GateOp::cz(a, b));
  out.push_back(GateOp::rotation('z', a, kPi / 2));
  out.push_back(GateOp::rotation('z', b, kPi / 2));
  out.push_back(GateOp::rotation('y', a, kPi / 2));
  out.push_back(GateOp::rotation('y', b, kPi / 2));
  out.push_back(GateOp::global_phase(-kPi / 4));
}

// exp(-i pi/4 Y_a Y_b): the R^x-conjugated analogue.
void emit_yy_braid(std::vector<GateOp>& out, int a, int b) {
  out.push_back(GateOp::rotation('x', a, -kPi / 2));
  out.push_back(GateOp::rotation('x', b, -kPi / 2));
  out.push_back(GateOp::cz(a, b));
  out.push_back(GateOp::rotation('z', a, -kPi / 2));
  out.push_back(GateOp::rotation('z', b, -kPi / 2));
  out.push_back(GateOp::rotation('x', a, kPi / 2));
  out.push_back(GateOp::rotation('x', b, kPi / 2));
  out.push_back(GateOp::global_phase(kPi / 4));
}

// Generic exact compilation of exp(i phi P) for a bare Pauli string P:
// single-qubit basis changes onto Z, a CNOT parity ladder (CNOT spelled as
// H-CZ-H), a single R^z(2 phi), and the exact inverses.
void emit_pauli_exponent(std::vector<GateOp>& out, const PauliString& p, double phi) {
  std::vector<int> support;
  for (int q = 1; q <= static_cast<int>(p.num_qubits()); ++q)
    if (p.factors[static_cast<std::size_t>(q - 1)] != Pauli::I) support.push_back(q);
  if (support.empty()) {
    out.push_back(GateOp::global_phase(phi));
    return;
  }
  const int t = support.back();

  auto basis_in = [&](int q) {
    switch (p.factors[static_cast<std::size_t>(q - 1)]) {
      case Pauli::X: out.push_back(GateOp::hadamard(q)); break;
      case Pauli::Y: out.push_back(GateOp::rotation('x', q, -kPi / 2)); break;
      default: break;
    }
  };
  auto basis_out = [&](int q) {
    switch (p.factors[static_cast<std::size_t>(q - 1)]) {
      case Pauli::X: out.push_back(GateOp::hadamard(q)); break;
      case Pauli::Y: out.push_back(GateOp::rotation('x', q, kPi / 2)); break;
      default: break;
    }
  };
  auto cnot_onto_t = [&](int c) {
    out.push_back(GateOp::hadamard(t));
    out.push_back(GateOp::cz(c, t));
    out.push_back(GateOp::hadamard(t));
  };

  for (int q : support) basis_in(q);
  for (std::size_t i = 0; i + 1 < support.size(); ++i) cnot_onto_t(support[i]);
  out.push_back(GateOp::rotation('z', t, 2.0 * phi));
  for (std::size_t i = support.size() - 1; i-- > 0;) cnot_onto_t(support[i]);
  for (auto it = support.rbegin(); it != support.rend(); ++it) basis_out(*it);
}

void emit_braid(std::vector<GateOp>& out, const BraidGenerator& g,
                int chain_length, int num_chains) {
  const BraidSpinRep rep = braid_spin_rep(g, chain_length, num_chains);
  const bool plus_i = rep.s == Phase::from_exponent(1);
  std::vector<int> support;
  for (int q = 1; q <= static_cast<int>(rep.p.num_qubits()); ++q)
    if (rep.p.factors[static_cast<std::size_t>(q - 1)] != Pauli::I) support.push_back(q);

  if (support.size() == 2 && support[1] == support[0] + 1) {
    const Pauli fa = rep.p.factors[static_cast<std::size_t>(support[0] - 1)];
    const Pauli fb = rep.p.factors[static_cast<std::size_t>(support[1] - 1)];
    if (fa == Pauli::X && fb == Pauli::X && plus_i) {
      emit_xx_braid(out, support[0], support[1]);
      return;
    }
    if (fa == Pauli::Y && fb == Pauli::Y && !plus_i) {
      emit_yy_braid(out, support[0], support[1]);
      return;
    }
  }
  emit_pauli_exponent(out, rep.p, plus_i ? kPi / 4 : -kPi / 4);
}

}  // namespace

CircuitIR compile_braid(const BraidGenerator& g, int chain_length, int num_chains) {
  CircuitIR c;
  c.n_qubits = chain_length * num_chains;
  emit_braid(c.gates, g, chain_length, num_chains);
  c.correction_start = c.gates.size();
  return c;
}

CircuitIR compile_braid_word(const BraidWord& word, int chain_length, int num_chains) {
  if (word.empty()) throw std::invalid_argument("compile_braid_word: empty word");
  CircuitIR c;
  c.n_qubits = chain_length * num_chains;
  for (const BraidGenerator& g : word) emit_braid(c.gates, g, chain_length, num_chains);
  c.correction_start = c.gates.size();
  return c;
}

std::vector<GateOp> encoder_circuit(int a, int b) {
  if (a == b) throw std::invalid_argument("encoder_circuit: equal qubits");
  return {GateOp::hadamard(b), GateOp::hadamard(a), GateOp::cz(a, b),
          GateOp::hadamard(b)};
}

std::vector<GateOp> decoder_circuit(int a, int b, DecoderVariant variant) {
  if (a == b) throw std::invalid_argument("decoder_circuit: equal qubits");
  std::vector<GateOp> out = {GateOp::hadamard(b), GateOp::cz(a, b),
                             GateOp::hadamard(a)};
  if (variant == DecoderVariant::Standard) out.push_back(GateOp::hadamard(b));
  return out;
}

CircuitIR compile_teleport_program(CorrectionVariant variant) {
  const int N = 2, M = 4;
  CircuitIR c;
  c.n_qubits = N * M;

  auto append = [&c](const std::vector<GateOp>& gates) {
    c.gates.insert(c.gates.end(), gates.begin(), gates.end());
  };
  auto append_braid = [&](int chain_a, bool a_right, int chain_b, bool b_right) {
    BraidGenerator g{
        a_right ? MajoranaLabel::edge_right(chain_a, N) : MajoranaLabel::edge_left(chain_a),
        b_right ? MajoranaLabel::edge_right(chain_b, N) : MajoranaLabel::edge_left(chain_b)};
    emit_braid(c.gates, g, N, M);
  };

  // Ancilla chain (7,8) prepared as |++> = |+_L> + |tilde+_L> support; the
  // remaining chains are encoded from |0>(x)|data>.
  c.gates.push_back(GateOp::hadamard(7));
  c.gates.push_back(GateOp::hadamard(8));
  append(encoder_circuit(1, 2));
  append(encoder_circuit(3, 4));
  append(encoder_circuit(5, 6));
  append_braid(2, true, 3, false);   // sqrt(X2 X3): entangling braid
  append_braid(1, true, 2, false);   // sqrt(X1 X2)
  append(decoder_circuit(1, 2, DecoderVariant::Standard));
  append(decoder_circuit(3, 4, DecoderVariant::Standard));
  c.correction_start = c.gates.size();

  // Logical corrections on chain 3: X3 before Z3 when both apply.
  if (variant == CorrectionVariant::X || variant == CorrectionVariant::XZ) {
    append_braid(3, true, 4, false);  // sqrt(X3 X4)
    append_braid(3, true, 4, false);
  }
  if (variant == CorrectionVariant::Z || variant == CorrectionVariant::XZ) {
    append_braid(3, false, 3, true);  // sqrt(Z3)
    append_braid(3, false, 3, true);
  }
  append(decoder_circuit(5, 6, DecoderVariant::Standard));
  append(decoder_circuit(7, 8, DecoderVariant::Modified));

  c.roles = {{1, QubitRole::Syndrome},   {2, QubitRole::Correction},
             {3, QubitRole::Syndrome},   {4, QubitRole::Correction},
             {5, QubitRole::Syndrome},   {6, QubitRole::Tomography},
             {7, QubitRole::Syndrome},   {8, QubitRole::Ancilla}};
  return c;
}

std::string serialize_circuit(const CircuitIR& circuit) {
  std::string out;
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const GateOp& g : circuit.gates) {
    switch (g.kind) {
      case GateOp::Kind::Rotation: {
        const char axis = static_cast<char>(std::toupper(g.axis));
        out += std::string("R") + axis + " q" + std::to_string(g.qubit) + " " +
               fmt(g.angle) + "\n";
        break;
      }
      case GateOp::Kind::Hadamard:
        out += "H q" + std::to_string(g.qubit) + "\n";
        break;
      case GateOp::Kind::CZ:
        out += "CZ q" + std::to_string(g.qubit) + " q" + std::to_string(g.qubit2) + "\n";
        break;
      case GateOp::Kind::GlobalPhase:
        out += "GPHASE " + fmt(g.angle) + "\n";
        break;
      case GateOp::Kind::PauliGate:
        out += "PAULI " + g.pauli->str() + "\n";
        break;
    }
  }
  return out;
}

}  // namespace mzm
