// Compiles braid words, chain encoders/decoders, and the full eight-qubit
// teleportation program into a native-gate circuit IR (single-qubit
// rotations, CZ, Hadamard, tracked global phases).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzm/pauli.hpp"
#include "mzm/state.hpp"

namespace mzm {

enum class QubitRole { Syndrome, Correction, Ancilla, Tomography };

struct CircuitIR {
  int n_qubits = 0;
  // Gates stored in execution order (index 0 runs first).
  std::vector<GateOp> gates;
  // Measurement plan; roles are disjoint by construction (one per qubit).
  std::map<int, QubitRole> roles;
  // For the teleportation program: gates[0..correction_start) run before the
  // correction-register measurement, the rest after. Equal to gates.size()
  // for circuits without a mid-circuit measurement.
  std::size_t correction_start = 0;
};

// Compiles one braid generator (unitary (1 + sP)/sqrt(2)) to native gates on
// the N*M-qubit register. Two-qubit X_aX_{a+1} / Y_aY_{a+1} images use the
// dedicated seven-gate CZ sequences; other images use a generic Pauli-
// exponential ladder. The compiled matrix equals the symbolic unitary
// exactly (global phase included).
CircuitIR compile_braid(const BraidGenerator& g, int chain_length = 2,
                        int num_chains = 2);

// Compiles a whole braid word in execution order.
CircuitIR compile_braid_word(const BraidWord& word, int chain_length = 2,
                             int num_chains = 2);

// U_enc on qubits (a, b): maps |0>_a (alpha|0> + beta|1>)_b to the logical
// state alpha|0_L> + beta|1_L> of the two-site chain.
std::vector<GateOp> encoder_circuit(int a, int b);

enum class DecoderVariant { Standard, Modified };

// Standard decoder inverts the encoder; qubit `a` becomes the syndrome
// readout (|1> iff a single phase flip hit the encoded chain). The modified
// variant omits the trailing H on `a` and sends |+_L> to |00>.
std::vector<GateOp> decoder_circuit(int a, int b, DecoderVariant variant);

enum class CorrectionVariant { None, X, Z, XZ };

// Full eight-qubit teleportation program for one correction variant:
// encode chains (1,2),(3,4),(5,6), prepare the ancilla chain (7,8) as |++>,
// entangle with the sqrt(X2 X3) braid, apply the sqrt(X1 X2) braid, decode
// chains 1 and 2 (this is the pre-measurement segment), then apply the
// variant's logical correction to chain 3 (Z3 = two sqrt(Z3) braids, X3 =
// two sqrt(X3 X4) braids) and decode chains 3 and 4 (modified decoder on
// the ancilla chain).
CircuitIR compile_teleport_program(CorrectionVariant variant);

// Line-oriented text form, one gate per line, e.g.
//   RY q3 -1.5707963267948966
//   CZ q2 q3
//   GPHASE -0.7853981633974483
std::string serialize_circuit(const CircuitIR& circuit);

}  // namespace mzm
