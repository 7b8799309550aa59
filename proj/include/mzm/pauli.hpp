// Signed multi-qubit Pauli strings, Majorana operator labels, the
// Jordan-Wigner mapping, and the symbolic spin representation of braid
// operators. All algebra in this module is exact: phases live in the
// four-element group {+1, +i, -1, -i} and no floating point is involved.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mzm {

// Single-site Pauli factor.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

// Element of the phase group {+1, +i, -1, -i}, stored as the exponent k in
// i^k (mod 4).
class Phase {
 public:
  constexpr Phase() : k_(0) {}
  static constexpr Phase from_exponent(int k) {
    Phase p;
    p.k_ = ((k % 4) + 4) % 4;
    return p;
  }
  constexpr int exponent() const { return k_; }
  std::complex<double> value() const;
  bool is_real() const { return k_ % 2 == 0; }
  Phase operator*(Phase o) const { return from_exponent(k_ + o.k_); }
  Phase operator-() const { return from_exponent(k_ + 2); }
  bool operator==(const Phase&) const = default;
  // "+", "+i", "-" or "-i".
  std::string str() const;

 private:
  int k_;
};

// A signed Pauli operator phase * (factors[0] (x) factors[1] (x) ...),
// one factor per physical qubit. Qubit 1 corresponds to factors[0].
struct PauliString {
  Phase phase;
  std::vector<Pauli> factors;

  static PauliString identity(std::size_t n_qubits);
  // Single-site operator p acting on 1-based `qubit` within n_qubits.
  static PauliString single(std::size_t n_qubits, int qubit, Pauli p);

  std::size_t num_qubits() const { return factors.size(); }
  bool is_identity() const;
  // Hermitian iff the phase is real (each bare string is Hermitian).
  bool is_hermitian() const { return phase.is_real(); }
  // The same string with phase +1.
  PauliString bare() const;
  // Number of non-identity factors.
  int weight() const;
  // Text form such as "-i.YZXI".
  std::string str() const;
  bool operator==(const PauliString&) const = default;
};

// Exact signed product p*q. Throws std::invalid_argument on length mismatch.
PauliString multiply(const PauliString& p, const PauliString& q);

// Dense 2^n x 2^n matrix of a PauliString (tensor-product construction).
// Intended for oracles and small-n work.
Eigen::MatrixXcd pauli_matrix(const PauliString& p);

// Label of one Majorana operator: chain index m >= 1, site n in [1, N],
// and which of the site's two Majorana modes is meant.
struct MajoranaLabel {
  enum class Side { Left, Right };
  int chain = 1;
  int site = 1;
  Side side = Side::Left;

  // Edge shorthands: the left-most and right-most modes of a chain.
  static MajoranaLabel edge_left(int chain);
  static MajoranaLabel edge_right(int chain, int chain_length);
  bool operator==(const MajoranaLabel&) const = default;
  std::string str() const;
};

// Jordan-Wigner image of a Majorana operator as a PauliString over the
// global qubit register 1..N*M (chain-major order):
//   gamma_{g,left}  = Z_1 ... Z_{g-1} X_g
//   gamma_{g,right} = Z_1 ... Z_{g-1} Y_g
// where g = (chain-1)*N + site. Throws std::out_of_range on bad labels.
PauliString jordan_wigner(const MajoranaLabel& label, int chain_length,
                          int num_chains);

// One Majorana exchange; the unitary is (1 + gamma_a gamma_b)/sqrt(2).
struct BraidGenerator {
  MajoranaLabel a;
  MajoranaLabel b;
  bool operator==(const BraidGenerator&) const = default;
};

// Spin representation of a braid generator: the phase s in {+i, -i} and the
// bare Hermitian string P with s*P = JW(gamma_a) * JW(gamma_b), so that the
// braid unitary is (1 + s*P)/sqrt(2). Throws std::invalid_argument if a == b.
struct BraidSpinRep {
  Phase s;          // always +i or -i
  PauliString p;    // bare (phase +1), Hermitian
  // The signed string s*P.
  PauliString signed_string() const;
};
BraidSpinRep braid_spin_rep(const BraidGenerator& g, int chain_length,
                            int num_chains);

// Conjugation rule of a braid on Majorana labels:
//   B gamma_a B^dag = -gamma_b,  B gamma_b B^dag = +gamma_a,
// labels outside the braid are unchanged with sign +1.
struct SignedLabel {
  int sign = 1;  // +1 or -1
  MajoranaLabel label;
};
SignedLabel conjugate_majorana(const BraidGenerator& g,
                               const MajoranaLabel& target);

using BraidWord = std::vector<BraidGenerator>;

// Matrix of the spin-representation unitary of `word` restricted to the
// two-chain logical basis {|00_L>, |01_L>, |10_L>, |11_L>}. Word order is
// execution order (first element acts first). Requires M = 2 chains.
Eigen::Matrix4cd logical_action(const BraidWord& word, int chain_length);

}  // namespace mzm
