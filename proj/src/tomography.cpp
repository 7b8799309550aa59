#include "mzm/tomography.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mzm {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector expectations_from_state(const DensityMatrix& rho,
                                    std::optional<int> shots, std::uint64_t seed) {
  if (rho.n_qubits != 1 || rho.entries.rows() != 2)
    throw std::invalid_argument("expectations_from_state: expected a 1-qubit state");
  const double tr = rho.trace_real();
  if (tr <= 0.0)
    throw std::invalid_argument("expectations_from_state: non-positive trace");

  BlochVector exact;
  exact.x = 2.0 * rho.entries(0, 1).real() / tr;
  exact.y = -2.0 * rho.entries(0, 1).imag() / tr;
  exact.z = (rho.entries(0, 0).real() - rho.entries(1, 1).real()) / tr;
  if (!shots) return exact;
  if (*shots <= 0) throw std::invalid_argument("expectations_from_state: shots <= 0");

  std::mt19937_64 rng(seed);
  auto sample = [&](double mean) {
    // Measurement outcomes are +/-1 with p(+1) = (1 + mean)/2.
    std::binomial_distribution<int> bin(*shots, (1.0 + mean) / 2.0);
    const int plus = bin(rng);
    return (2.0 * plus - *shots) / *shots;
  };
  BlochVector b;
  b.x = sample(exact.x);
  b.y = sample(exact.y);
  b.z = sample(exact.z);
  return b;
}

DensityMatrix reconstruct(const BlochVector& b) {
  if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.z))
    throw std::invalid_argument("reconstruct: non-finite Bloch components");
  double x = b.x, y = b.y, z = b.z;
  const double n = b.norm();
  if (n > 1.0) {
    x /= n;
    y /= n;
    z /= n;
  }
  DensityMatrix rho;
  rho.n_qubits = 1;
  rho.entries = Eigen::MatrixXcd(2, 2);
  rho.entries(0, 0) = (1.0 + z) / 2.0;
  rho.entries(1, 1) = (1.0 - z) / 2.0;
  rho.entries(0, 1) = std::complex<double>(x, -y) / 2.0;
  rho.entries(1, 0) = std::complex<double>(x, y) / 2.0;
  return rho;
}

double fidelity(const DensityMatrix& rho, const Eigen::VectorXcd& psi) {
  if (rho.entries.rows() != psi.size())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const std::complex<double> v = psi.adjoint() * rho.entries * psi;
  return v.real();
}

}  // namespace mzm
