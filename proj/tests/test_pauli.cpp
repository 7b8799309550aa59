#include <doctest.h>

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "mzm/pauli.hpp"

using namespace mzm;

namespace {
constexpr double kPi = std::numbers::pi;

PauliString make(const std::string& factors, int phase_exp = 0) {
  PauliString p = PauliString::identity(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    switch (factors[i]) {
      case 'I': p.factors[i] = Pauli::I; break;
      case 'X': p.factors[i] = Pauli::X; break;
      case 'Y': p.factors[i] = Pauli::Y; break;
      case 'Z': p.factors[i] = Pauli::Z; break;
    }
  }
  p.phase = Phase::from_exponent(phase_exp);
  return p;
}
}  // namespace

TEST_CASE("single-site Pauli products carry exact phases") {
  // (X (x) I) (Y (x) I) = +i (Z (x) I)
  CHECK(multiply(make("XI"), make("YI")) == make("ZI", 1));
  // sigma^x sigma^z = -i sigma^y
  CHECK(multiply(make("X"), make("Z")) == make("Y", 3));
  CHECK(multiply(make("Y"), make("Z")) == make("X", 1));
  CHECK(multiply(make("Z"), make("X")) == make("Y", 1));
  CHECK(multiply(make("X"), make("X")) == make("I"));
  CHECK_THROWS_AS(multiply(make("XI"), make("X")), std::invalid_argument);
}

TEST_CASE("string rendering") {
  CHECK(make("YZXI", 3).str() == "-i.YZXI");
  CHECK(make("II").str() == "+.II");
  CHECK(Phase::from_exponent(1).str() == "+i");
}

TEST_CASE("every string squares to +/- identity; real bare strings are traceless") {
  for (const std::string& f : {"X", "Y", "Z", "XY", "YZ", "ZZ", "XYZ"}) {
    const PauliString p = make(f);
    const PauliString sq = multiply(p, p);
    CHECK(sq.is_identity());
    CHECK(sq.phase.is_real());
    if (!p.is_identity())
      CHECK(std::abs(pauli_matrix(p).trace()) < 1e-12);
  }
}

TEST_CASE("Jordan-Wigner images of the edge operators") {
  // Single chain of 2 sites.
  CHECK(jordan_wigner(MajoranaLabel::edge_left(1), 2, 1) == make("XI"));
  CHECK(jordan_wigner(MajoranaLabel::edge_right(1, 2), 2, 1) == make("ZY"));
  // Two chains: the second chain's left edge carries the full Z string.
  CHECK(jordan_wigner(MajoranaLabel::edge_left(2), 2, 2) == make("ZZXI"));
  CHECK_THROWS_AS(jordan_wigner(MajoranaLabel{3, 1, MajoranaLabel::Side::Left}, 2, 2),
                  std::out_of_range);
  CHECK_THROWS_AS(jordan_wigner(MajoranaLabel{1, 3, MajoranaLabel::Side::Left}, 2, 2),
                  std::out_of_range);
}

TEST_CASE("Majorana operators square to identity and anticommute") {
  std::vector<MajoranaLabel> labels;
  for (int chain = 1; chain <= 2; ++chain)
    for (int site = 1; site <= 2; ++site)
      for (auto side : {MajoranaLabel::Side::Left, MajoranaLabel::Side::Right})
        labels.push_back({chain, site, side});
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const PauliString gi = jordan_wigner(labels[i], 2, 2);
    CHECK(multiply(gi, gi) == PauliString::identity(4));
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const PauliString gj = jordan_wigner(labels[j], 2, 2);
      const PauliString ab = multiply(gi, gj);
      const PauliString ba = multiply(gj, gi);
      CHECK(ab.bare() == ba.bare());
      CHECK(ab.phase == -ba.phase);
    }
  }
}

TEST_CASE("braid spin representations") {
  const BraidGenerator x1x2{MajoranaLabel::edge_right(1, 2), MajoranaLabel::edge_left(2)};
  const BraidSpinRep rep = braid_spin_rep(x1x2, 2, 2);
  CHECK(rep.s == Phase::from_exponent(1));
  CHECK(rep.p == make("IXXI"));

  const BraidGenerator z1{MajoranaLabel::edge_left(1), MajoranaLabel::edge_right(1, 2)};
  const BraidSpinRep rep_z = braid_spin_rep(z1, 2, 2);
  CHECK(rep_z.s == Phase::from_exponent(3));
  CHECK(rep_z.p == make("YYII"));

  // (s P)^2 = -1 for every generator, making (1 + sP)/sqrt(2) unitary.
  const BraidGenerator mixed{MajoranaLabel::edge_left(1), MajoranaLabel::edge_left(2)};
  const PauliString sp = braid_spin_rep(mixed, 2, 2).signed_string();
  CHECK(multiply(sp, sp) == [] {
    PauliString minus_one = PauliString::identity(4);
    minus_one.phase = Phase::from_exponent(2);
    return minus_one;
  }());
  CHECK_THROWS_AS(braid_spin_rep({z1.a, z1.a}, 2, 2), std::invalid_argument);
}

TEST_CASE("braid unitary equals the Majorana-pair exponential (matrix oracle)") {
  for (const BraidGenerator& g :
       {BraidGenerator{MajoranaLabel::edge_left(1), MajoranaLabel::edge_left(2)},
        BraidGenerator{MajoranaLabel::edge_right(1, 2), MajoranaLabel::edge_left(2)},
        BraidGenerator{MajoranaLabel::edge_left(1), MajoranaLabel::edge_right(1, 2)}}) {
    const Eigen::MatrixXcd ga = pauli_matrix(jordan_wigner(g.a, 2, 2));
    const Eigen::MatrixXcd gb = pauli_matrix(jordan_wigner(g.b, 2, 2));
    const Eigen::MatrixXcd expm = ((kPi / 4) * (ga * gb)).exp();
    const Eigen::MatrixXcd direct =
        (Eigen::MatrixXcd::Identity(16, 16) +
         pauli_matrix(braid_spin_rep(g, 2, 2).signed_string())) /
        std::sqrt(2.0);
    CHECK((expm - direct).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((direct * direct.adjoint() - Eigen::MatrixXcd::Identity(16, 16))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("conjugation rules: B gamma_a B+ = -gamma_b, B gamma_b B+ = gamma_a") {
  const BraidGenerator g{MajoranaLabel::edge_right(1, 2), MajoranaLabel::edge_left(2)};
  CHECK(conjugate_majorana(g, g.a).sign == -1);
  CHECK(conjugate_majorana(g, g.a).label == g.b);
  CHECK(conjugate_majorana(g, g.b).sign == +1);
  CHECK(conjugate_majorana(g, g.b).label == g.a);
  const MajoranaLabel other = MajoranaLabel::edge_right(2, 2);
  CHECK(conjugate_majorana(g, other).sign == +1);
  CHECK(conjugate_majorana(g, other).label == other);

  // Numeric consistency: U JW(gamma_a) U+ = -JW(gamma_b).
  const Eigen::MatrixXcd u =
      (Eigen::MatrixXcd::Identity(16, 16) +
       pauli_matrix(braid_spin_rep(g, 2, 2).signed_string())) /
      std::sqrt(2.0);
  const Eigen::MatrixXcd lhs = u * pauli_matrix(jordan_wigner(g.a, 2, 2)) * u.adjoint();
  CHECK((lhs + pauli_matrix(jordan_wigner(g.b, 2, 2))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("logical action of the braids on the two-chain code space") {
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> i1(0.0, 1.0);

  const BraidGenerator x1x2{MajoranaLabel::edge_right(1, 2), MajoranaLabel::edge_left(2)};
  const Eigen::Matrix4cd mx = logical_action({x1x2}, 2);
  // |00_L> -> (|00_L> + i |11_L>)/sqrt(2)
  CHECK(std::abs(mx(0, 0) - r) < 1e-9);
  CHECK(std::abs(mx(3, 0) - i1 * r) < 1e-9);
  CHECK(std::abs(mx(1, 0)) < 1e-9);
  CHECK(std::abs(mx(2, 0)) < 1e-9);

  const BraidGenerator z1{MajoranaLabel::edge_left(1), MajoranaLabel::edge_right(1, 2)};
  const Eigen::Matrix4cd mz = logical_action({z1}, 2);
  const std::complex<double> e = std::exp(i1 * kPi / 4.0);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(mz(k, k) - (k < 2 ? e : std::conj(e))) < 1e-9);
  }

  const BraidGenerator y1x2{MajoranaLabel::edge_left(1), MajoranaLabel::edge_left(2)};
  const Eigen::Matrix4cd my = logical_action({y1x2}, 2);
  // |00_L> -> (|00_L> + |11_L>)/sqrt(2)
  CHECK(std::abs(my(0, 0) - r) < 1e-9);
  CHECK(std::abs(my(3, 0) - r) < 1e-9);

  // The code space is invariant: columns stay normalized.
  for (int c = 0; c < 4; ++c) CHECK(std::abs(mx.col(c).norm() - 1.0) < 1e-9);
}
