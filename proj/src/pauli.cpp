#include "mzm/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace mzm {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::complex<double> Phase::value() const {
  static const std::complex<double> table[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[k_];
}

std::string Phase::str() const {
  static const char* table[4] = {"+", "+i", "-", "-i"};
  return table[k_];
}

PauliString PauliString::identity(std::size_t n_qubits) {
  PauliString s;
  s.factors.assign(n_qubits, Pauli::I);
  return s;
}

PauliString PauliString::single(std::size_t n_qubits, int qubit, Pauli p) {
  if (qubit < 1 || static_cast<std::size_t>(qubit) > n_qubits)
    throw std::out_of_range("PauliString::single: qubit out of range");
  PauliString s = identity(n_qubits);
  s.factors[static_cast<std::size_t>(qubit - 1)] = p;
  return s;
}

bool PauliString::is_identity() const {
  for (Pauli f : factors)
    if (f != Pauli::I) return false;
  return true;
}

PauliString PauliString::bare() const {
  PauliString s = *this;
  s.phase = Phase();
  return s;
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli f : factors)
    if (f != Pauli::I) ++w;
  return w;
}

std::string PauliString::str() const {
  std::string out = phase.str();
  out += '.';
  for (Pauli f : factors) out += pauli_char(f);
  return out;
}

namespace {

// Single-site product: a*b = i^k * c. Returns (k, c).
std::pair<int, Pauli> site_product(Pauli a, Pauli b) {
  if (a == Pauli::I) return {0, b};
  if (b == Pauli::I) return {0, a};
  if (a == b) return {0, Pauli::I};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // X,Y,Z are 1,2,3; the third index completes {1,2,3}.
  const Pauli c = static_cast<Pauli>(6 - ia - ib);
  // Cyclic (X->Y->Z->X) picks up +i, anti-cyclic -i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? 1 : 3, c};
}

}  // namespace

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits())
    throw std::invalid_argument("multiply: PauliString length mismatch");
  PauliString out;
  out.factors.resize(p.num_qubits());
  int k = p.phase.exponent() + q.phase.exponent();
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    auto [dk, c] = site_product(p.factors[i], q.factors[i]);
    k += dk;
    out.factors[i] = c;
  }
  out.phase = Phase::from_exponent(k);
  return out;
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  using Eigen::Matrix2cd;
  using Eigen::MatrixXcd;
  const std::complex<double> i1(0.0, 1.0);
  Matrix2cd sig[4];
  sig[0] = Matrix2cd::Identity();
  sig[1] << 0, 1, 1, 0;
  sig[2] << 0, -i1, i1, 0;
  sig[3] << 1, 0, 0, -1;
  // Qubit 1 is the most significant factor: M = m_1 (x) m_2 (x) ... (x) m_n.
  MatrixXcd out = MatrixXcd::Identity(1, 1) * p.phase.value();
  for (Pauli f : p.factors) {
    const Matrix2cd& m = sig[static_cast<int>(f)];
    MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c)
        next.block(r * 2, c * 2, 2, 2) = out(r, c) * m;
    out.swap(next);
  }
  return out;
}

MajoranaLabel MajoranaLabel::edge_left(int chain) {
  return {chain, 1, Side::Left};
}

MajoranaLabel MajoranaLabel::edge_right(int chain, int chain_length) {
  return {chain, chain_length, Side::Right};
}

std::string MajoranaLabel::str() const {
  return "(" + std::to_string(chain) + "," + std::to_string(site) +
         (side == Side::Left ? ",l)" : ",r)");
}

PauliString jordan_wigner(const MajoranaLabel& label, int chain_length,
                          int num_chains) {
  if (label.chain < 1 || label.chain > num_chains)
    throw std::out_of_range("jordan_wigner: chain out of range");
  if (label.site < 1 || label.site > chain_length)
    throw std::out_of_range("jordan_wigner: site out of range");
  const std::size_t n = static_cast<std::size_t>(chain_length * num_chains);
  const int g = (label.chain - 1) * chain_length + label.site;
  PauliString s = PauliString::identity(n);
  for (int i = 1; i < g; ++i) s.factors[static_cast<std::size_t>(i - 1)] = Pauli::Z;
  s.factors[static_cast<std::size_t>(g - 1)] =
      label.side == MajoranaLabel::Side::Left ? Pauli::X : Pauli::Y;
  return s;
}

PauliString BraidSpinRep::signed_string() const {
  PauliString out = p;
  out.phase = out.phase * s;
  return out;
}

BraidSpinRep braid_spin_rep(const BraidGenerator& g, int chain_length,
                            int num_chains) {
  if (g.a == g.b)
    throw std::invalid_argument("braid_spin_rep: a and b must differ");
  const PauliString prod = multiply(jordan_wigner(g.a, chain_length, num_chains),
                                    jordan_wigner(g.b, chain_length, num_chains));
  // Distinct Majorana operators anticommute, so the product is always +/-i
  // times a Hermitian string.
  if (prod.phase.is_real())
    throw std::logic_error("braid_spin_rep: expected imaginary phase");
  BraidSpinRep rep;
  rep.s = prod.phase;
  rep.p = prod.bare();
  return rep;
}

SignedLabel conjugate_majorana(const BraidGenerator& g,
                               const MajoranaLabel& target) {
  if (target == g.a) return {-1, g.b};
  if (target == g.b) return {+1, g.a};
  return {+1, target};
}

namespace {

// |0_L> and |1_L> of one chain of `n` sites: (|+...+> +/- |-...->)/sqrt(2).
Eigen::VectorXcd chain_logical(int n, int logical_value) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::VectorXcd plus = Eigen::VectorXcd::Ones(dim);
  plus /= std::sqrt(static_cast<double>(dim));
  Eigen::VectorXcd minus(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const int ones = __builtin_popcountll(static_cast<unsigned long long>(b));
    minus(b) = (ones % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(dim));
  }
  const double sign = logical_value == 0 ? 1.0 : -1.0;
  return (plus + sign * minus) / std::sqrt(2.0);
}

}  // namespace

Eigen::Matrix4cd logical_action(const BraidWord& word, int chain_length) {
  const int num_chains = 2;
  const int n_qubits = chain_length * num_chains;
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const BraidGenerator& g : word) {
    const BraidSpinRep rep = braid_spin_rep(g, chain_length, num_chains);
    const Eigen::MatrixXcd b =
        (Eigen::MatrixXcd::Identity(dim, dim) + pauli_matrix(rep.signed_string())) /
        std::sqrt(2.0);
    u = b * u;  // later word elements act later (left in operator order)
  }
  // Logical basis columns |ab_L> = |a_L> (x) |b_L> (chain 1 is the
  // more-significant factor, matching global qubit order).
  Eigen::MatrixXcd basis(dim, 4);
  const Eigen::Index cdim = Eigen::Index(1) << chain_length;
  for (int a = 0; a < 2; ++a) {
    const Eigen::VectorXcd va = chain_logical(chain_length, a);
    for (int b = 0; b < 2; ++b) {
      const Eigen::VectorXcd vb = chain_logical(chain_length, b);
      Eigen::VectorXcd col(dim);
      for (Eigen::Index ia = 0; ia < cdim; ++ia)
        for (Eigen::Index ib = 0; ib < cdim; ++ib)
          col(ia * cdim + ib) = va(ia) * vb(ib);
      basis.col(a * 2 + b) = col;
    }
  }
  return (basis.adjoint() * u * basis).eval();
}

}  // namespace mzm
