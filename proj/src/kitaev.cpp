#include "mzm/kitaev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mzm {

Eigen::MatrixXcd build_hamiltonian(const ChainSpec& spec) {
  if (spec.n_sites < 2) throw std::invalid_argument("build_hamiltonian: N >= 2 required");
  if (spec.t <= 0) throw std::invalid_argument("build_hamiltonian: t > 0 required");
  if (spec.n_sites > 12) throw std::length_error("build_hamiltonian: dense cap is N <= 12");

  const int n = spec.n_sites;
  const std::size_t nq = static_cast<std::size_t>(n);
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  int n_terms = 0;
  if (spec.kind == ChainSpec::Kind::Trivial) {
    n_terms = n;
    for (int q = 1; q <= n; ++q) {
      h += (spec.t / 2.0) *
           (pauli_matrix(PauliString::identity(nq)) -
            pauli_matrix(PauliString::single(nq, q, Pauli::Z)));
    }
  } else {
    n_terms = n - 1;
    for (int q = 1; q < n; ++q) {
      PauliString xx = PauliString::single(nq, q, Pauli::X);
      xx.factors[static_cast<std::size_t>(q)] = Pauli::X;
      h += (spec.t / 2.0) *
           (pauli_matrix(PauliString::identity(nq)) - pauli_matrix(xx));
    }
  }
  if (spec.offset == ChainSpec::Offset::Shifted) {
    h = 2.0 * h -
        spec.t * n_terms * Eigen::MatrixXcd::Identity(dim, dim);
  }
  return h;
}

std::vector<double> spectrum(const ChainSpec& spec) {
  const Eigen::MatrixXcd h = build_hamiltonian(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

StateVector superpose_pm(int n, double sign) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  StateVector s;
  s.n_qubits = n;
  s.amplitudes = Eigen::VectorXcd::Zero(dim);
  // |+...+> has uniform amplitudes; |-...-> alternates with bit parity.
  const double a = 1.0 / std::sqrt(2.0 * dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const int parity = __builtin_popcountll(static_cast<unsigned long long>(b)) % 2;
    s.amplitudes(b) = a * (1.0 + sign * (parity == 0 ? 1.0 : -1.0));
  }
  return s;
}

}  // namespace

LogicalBasis logical_states(int n_sites) {
  if (n_sites < 2) throw std::invalid_argument("logical_states: N >= 2 required");
  LogicalBasis basis;
  basis.zero_L = superpose_pm(n_sites, +1.0);
  basis.one_L = superpose_pm(n_sites, -1.0);
  if (n_sites == 2) {
    // (|-+> +/- |+->)/sqrt(2) = Z_1 applied to the logical states.
    basis.tilde_zero_L = apply(basis.zero_L,
                               GateOp::pauli_gate(PauliString::single(2, 1, Pauli::Z)));
    basis.tilde_one_L = apply(basis.one_L,
                              GateOp::pauli_gate(PauliString::single(2, 1, Pauli::Z)));
  }
  return basis;
}

}  // namespace mzm
