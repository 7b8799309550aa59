// Single-qubit tomography: Bloch-vector extraction (exact or shot-sampled),
// a physicality-enforcing reconstruction, and fidelity evaluation.
#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "mzm/state.hpp"

namespace mzm {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
  double norm() const;
};

// Exact <X>,<Y>,<Z> of a 1-qubit density matrix; with `shots` set, each
// component is the frequency estimate from that many simulated projective
// measurements. Throws on shots <= 0.
BlochVector expectations_from_state(const DensityMatrix& rho,
                                    std::optional<int> shots = std::nullopt,
                                    std::uint64_t seed = 0);

// rho = (I + r.sigma)/2 with r projected onto the Bloch ball (the
// single-qubit maximum-likelihood estimate under isotropic noise). Always
// positive semidefinite with unit trace.
DensityMatrix reconstruct(const BlochVector& b);

// <psi|rho|psi>. Throws std::invalid_argument on dimension mismatch.
double fidelity(const DensityMatrix& rho, const Eigen::VectorXcd& psi);

}  // namespace mzm
