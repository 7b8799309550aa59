// Symbolic / numeric identity suite: braid-table and compiler-soundness
// oracles, encoder/decoder properties, the correction table, and
// error-detection completeness. Shared by the CLI `verify` command and the
// test binaries.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzm/pauli.hpp"

namespace mzm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The six edge-MZM braids of a two-chain (N = 2) system together with their
// logical gate names and exact logical matrices.
struct BraidTableEntry {
  BraidGenerator generator;
  std::string logical_name;     // e.g. "sqrt(X1 X2)"
  std::string spin_rep;         // e.g. "(1 + i.IXXI)/sqrt(2)"
  Eigen::Matrix4cd logical_matrix;
};
std::vector<BraidTableEntry> braid_table();

// Each logical_action equals the table entry up to one global phase (1e-9).
std::vector<CheckResult> verify_braid_table();

// Compiled circuits of random braid words match the symbolic unitaries up to
// a global phase (16 x 16 brute force).
CheckResult verify_braid_soundness(int n_words, int max_len, std::uint64_t seed);

// Encoder/decoder identities: inversion, syndrome readout of a phase flip,
// the modified decoder on |++>, and ancilla transparency of a doubled braid.
std::vector<CheckResult> verify_encoder_decoder();

// All four (c1, c2) correction rows, pinned by random-input teleportation
// plus a wrong-variant negative control.
CheckResult verify_correction_table(int n_random_inputs, std::uint64_t seed);

// Single phase-flip injections at the code-space boundaries of the
// pre-measurement program are flagged or trivial; the undetectable logical
// phase flip on the target chain is confirmed as such.
std::vector<CheckResult> verify_detection();

// Everything above with default parameters; used by `verify`.
std::vector<CheckResult> run_verify_suite();

}  // namespace mzm
