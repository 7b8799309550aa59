// Spin-mapped trivial / paired-chain Hamiltonians, their spectra, and the
// logical (edge-mode) basis states.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mzm/state.hpp"

namespace mzm {

struct ChainSpec {
  enum class Kind { Trivial, Kitaev };
  enum class Offset { Raw, Shifted };
  int n_sites = 2;
  double t = 1.0;
  Kind kind = Kind::Kitaev;
  Offset offset = Offset::Raw;
};

// Dense Hermitian Hamiltonian, 2^N x 2^N:
//   trivial, raw:  (t/2) sum_n (1 - Z_n)
//   kitaev,  raw:  (t/2) sum_{n<N} (1 - X_n X_{n+1})
//   shifted: raw doubled and offset so the constant disappears, e.g. the
//   two-site paired chain becomes -t X_1 X_2.
// Throws std::invalid_argument on invalid specs and std::length_error above
// the dense-build cap (N <= 12).
Eigen::MatrixXcd build_hamiltonian(const ChainSpec& spec);

// Sorted eigenvalues of the chain's Hamiltonian.
std::vector<double> spectrum(const ChainSpec& spec);

struct LogicalBasis {
  StateVector zero_L;
  StateVector one_L;
  // Populated for N = 2 only (size 0 otherwise).
  StateVector tilde_zero_L;
  StateVector tilde_one_L;
};

// |0_L> = (|+...+> + |-...->)/sqrt(2), |1_L> with the minus sign; for N = 2
// also the orthogonal error states (|-+> +/- |+->)/sqrt(2).
LogicalBasis logical_states(int n_sites);

}  // namespace mzm
