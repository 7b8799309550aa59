// Stochastic noise model: Gaussian gate-time jitter on single-qubit and CZ
// gates, mid-circuit dephasing pulses, and Monte Carlo fidelity estimation
// over the teleportation pipeline.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mzm/state.hpp"
#include "mzm/teleport.hpp"

namespace mzm {

enum class DephasingPolicy { Midpoint, PerMoment };

struct NoiseParams {
  // Widths are dimensionless (units of a pi rotation) standard deviations.
  std::array<double, 8> sigma_g{};    // per qubit
  std::array<double, 7> sigma_cz{};   // per adjacent pair (1,2)..(7,8)
  std::array<double, 8> sigma_d{};    // per qubit, derived from t2_star
  double c_d = 0.0;
  std::array<double, 8> t2_star{};    // microseconds
  DephasingPolicy policy = DephasingPolicy::Midpoint;

  static NoiseParams zero();
  // Shipped calibration (the default config file carries the same numbers).
  static NoiseParams calibrated_defaults();
  bool is_zero() const;
};

// sigma_d,i = c_d * t2_star_i / max_j t2_star_j. Throws on empty input or
// non-positive times.
std::array<double, 8> derive_sigma_d(const std::array<double, 8>& t2_star, double c_d);

// Per-draw random stream: independent deterministic stream per (seed, draw)
// so parallel and serial execution agree.
std::mt19937_64 draw_rng(std::uint64_t seed, std::uint64_t draw_index);

// Jittered replacement of one single-qubit gate: rotation angles scale by
// (1 + xi) with xi ~ Normal(0, sigma^2); Hadamard becomes an exact-at-zero
// pi rotation about the (x+z)/sqrt(2) axis.
std::vector<GateOp> sample_noisy_single(const GateOp& gate, double sigma,
                                        std::mt19937_64& rng);

// CZ followed by R^z(xi * pi) on the target (second) qubit.
std::vector<GateOp> sample_noisy_cz(const GateOp& gate, double sigma,
                                    std::mt19937_64& rng);

// Inserts the dephasing pulse set into a gate sequence. Midpoint: one
// R^z(xi_i * pi) per qubit at the temporal midpoint (before gate
// floor(n/2)). PerMoment: one pulse set per circuit layer with width
// sigma_d,i / sqrt(layers) (variance-preserving).
std::vector<GateOp> apply_dephasing(const std::vector<GateOp>& gates, int n_qubits,
                                    const std::array<double, 8>& sigma_d,
                                    DephasingPolicy policy, std::mt19937_64& rng);

// Full noisy program for one draw: jitter on every gate (corrections
// included), dephasing pulses in the pre-measurement segment.
TeleportDrawProgram make_noisy_draw(const TeleportDrawProgram& nominal,
                                    const NoiseParams& params, std::mt19937_64& rng);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int draws = 0;
  std::uint64_t seed = 0;
  // Draws whose ES-retained set was empty (reported, never hidden).
  int empty_draws = 0;
  // Mean retained probability of the policy's branch set.
  double mean_retained = 0.0;
};

struct TeleportMcResult {
  McEstimate ns;
  McEstimate es;
  // Mean of per-draw normalized teleported states (ES over non-empty draws).
  DensityMatrix rho_ns;
  DensityMatrix rho_es;
};

// Monte Carlo estimate of the teleportation fidelity under both
// postselection policies: per draw f = <psi|rho_6|psi>/tr(rho_6), averaged
// over `draws` independent noisy programs. Deterministic given the seed.
TeleportMcResult monte_carlo_teleport_full(const InputStateSpec& input,
                                           const NoiseParams& params, int draws,
                                           std::uint64_t seed);
std::pair<McEstimate, McEstimate> monte_carlo_teleport(const InputStateSpec& input,
                                                       const NoiseParams& params,
                                                       int draws, std::uint64_t seed);

// Closed-form mean fidelity of a jittered pi rotation: (1 + e^{-pi^2 s^2/2})/2.
double closed_form_jitter_fidelity(double sigma);

// Monte Carlo counterparts of the tabulated single-gate and CZ-gate
// calibration fidelities, computed through the state engine.
McEstimate mc_single_gate_fidelity(double sigma, int draws, std::uint64_t seed);
McEstimate mc_cz_fidelity(double sigma, int draws, std::uint64_t seed);

}  // namespace mzm
