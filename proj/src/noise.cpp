#include "mzm/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mzm {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

NoiseParams NoiseParams::zero() { return NoiseParams{}; }

NoiseParams NoiseParams::calibrated_defaults() {
  NoiseParams p;
  p.sigma_g = {0.016, 0.017, 0.017, 0.018, 0.014, 0.017, 0.013, 0.014};
  p.sigma_cz = {0.08287, 0.075524, 0.0729, 0.0757, 0.10285, 0.0528, 0.056};
  p.t2_star = {4.73, 2.25, 4.91, 1.25, 6.22, 2.39, 4.7, 2.89};
  p.c_d = 0.15;
  p.sigma_d = derive_sigma_d(p.t2_star, p.c_d);
  p.policy = DephasingPolicy::Midpoint;
  return p;
}

bool NoiseParams::is_zero() const {
  auto all_zero = [](const auto& a) {
    return std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; });
  };
  return all_zero(sigma_g) && all_zero(sigma_cz) && all_zero(sigma_d);
}

std::array<double, 8> derive_sigma_d(const std::array<double, 8>& t2_star, double c_d) {
  const double t2_max = *std::max_element(t2_star.begin(), t2_star.end());
  if (t2_max <= 0.0)
    throw std::invalid_argument("derive_sigma_d: T2* values must be positive");
  std::array<double, 8> out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (t2_star[i] <= 0.0)
      throw std::invalid_argument("derive_sigma_d: T2* values must be positive");
    out[i] = c_d * t2_star[i] / t2_max;
  }
  return out;
}

std::mt19937_64 draw_rng(std::uint64_t seed, std::uint64_t draw_index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(draw_index)));
}

std::vector<GateOp> sample_noisy_single(const GateOp& gate, double sigma,
                                        std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  switch (gate.kind) {
    case GateOp::Kind::Rotation: {
      const double xi = sigma > 0.0 ? sigma * gauss(rng) : 0.0;
      return {GateOp::rotation(gate.axis, gate.qubit, gate.angle * (1.0 + xi))};
    }
    case GateOp::Kind::Hadamard: {
      const double xi = sigma > 0.0 ? sigma * gauss(rng) : 0.0;
      // H = e^{-i pi/2} R^h(pi); jitter scales the rotation angle.
      return {GateOp::global_phase(-kPi / 2),
              GateOp::rotation('h', gate.qubit, kPi * (1.0 + xi))};
    }
    default:
      return {gate};
  }
}

std::vector<GateOp> sample_noisy_cz(const GateOp& gate, double sigma,
                                    std::mt19937_64& rng) {
  if (gate.kind != GateOp::Kind::CZ)
    throw std::invalid_argument("sample_noisy_cz: expected a CZ gate");
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double xi = sigma > 0.0 ? sigma * gauss(rng) : 0.0;
  return {gate, GateOp::rotation('z', gate.qubit2, xi * kPi)};
}

namespace {

void emit_pulse_set(std::vector<GateOp>& out, int n_qubits,
                    const std::array<double, 8>& widths, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int q = 1; q <= n_qubits; ++q) {
    const double s = widths[static_cast<std::size_t>(q - 1)];
    const double xi = s > 0.0 ? s * gauss(rng) : 0.0;
    out.push_back(GateOp::rotation('z', q, xi * kPi));
  }
}

// Greedy layer index (1-based) per gate; global phases ride along with the
// previous layer.
std::vector<int> gate_layers(const std::vector<GateOp>& gates, int n_qubits) {
  std::vector<int> depth(static_cast<std::size_t>(n_qubits) + 1, 0);
  std::vector<int> layers;
  layers.reserve(gates.size());
  int current = 1;
  for (const GateOp& g : gates) {
    int layer = 1;
    switch (g.kind) {
      case GateOp::Kind::Rotation:
      case GateOp::Kind::Hadamard:
        layer = depth[static_cast<std::size_t>(g.qubit)] + 1;
        depth[static_cast<std::size_t>(g.qubit)] = layer;
        break;
      case GateOp::Kind::CZ:
        layer = std::max(depth[static_cast<std::size_t>(g.qubit)],
                         depth[static_cast<std::size_t>(g.qubit2)]) + 1;
        depth[static_cast<std::size_t>(g.qubit)] = layer;
        depth[static_cast<std::size_t>(g.qubit2)] = layer;
        break;
      default:
        layer = current;
        break;
    }
    current = std::max(current, layer);
    layers.push_back(layer);
  }
  return layers;
}

}  // namespace

std::vector<GateOp> apply_dephasing(const std::vector<GateOp>& gates, int n_qubits,
                                    const std::array<double, 8>& sigma_d,
                                    DephasingPolicy policy, std::mt19937_64& rng) {
  std::vector<GateOp> out;
  if (policy == DephasingPolicy::Midpoint) {
    const std::size_t mid = gates.size() / 2;
    out.reserve(gates.size() + 8);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (i == mid) emit_pulse_set(out, n_qubits, sigma_d, rng);
      out.push_back(gates[i]);
    }
    if (gates.empty()) emit_pulse_set(out, n_qubits, sigma_d, rng);
    return out;
  }
  // PerMoment: a pulse set before every layer, widths scaled to preserve the
  // total variance.
  const std::vector<int> layers = gate_layers(gates, n_qubits);
  const int n_layers = layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
  if (n_layers == 0) return gates;
  std::array<double, 8> scaled{};
  for (std::size_t i = 0; i < scaled.size(); ++i)
    scaled[i] = sigma_d[i] / std::sqrt(static_cast<double>(n_layers));
  int seen = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    while (seen < layers[i]) {
      emit_pulse_set(out, n_qubits, scaled, rng);
      ++seen;
    }
    out.push_back(gates[i]);
  }
  return out;
}

namespace {

std::vector<GateOp> jitter_gates(const std::vector<GateOp>& gates,
                                 const NoiseParams& params, std::mt19937_64& rng) {
  std::vector<GateOp> out;
  out.reserve(gates.size() * 2);
  for (const GateOp& g : gates) {
    switch (g.kind) {
      case GateOp::Kind::Rotation:
      case GateOp::Kind::Hadamard: {
        const double s = params.sigma_g[static_cast<std::size_t>(g.qubit - 1)];
        for (GateOp& n : sample_noisy_single(g, s, rng)) out.push_back(std::move(n));
        break;
      }
      case GateOp::Kind::CZ: {
        const int lo = std::min(g.qubit, g.qubit2);
        const double s = params.sigma_cz[static_cast<std::size_t>(lo - 1)];
        for (GateOp& n : sample_noisy_cz(g, s, rng)) out.push_back(std::move(n));
        break;
      }
      default:
        out.push_back(g);
        break;
    }
  }
  return out;
}

}  // namespace

TeleportDrawProgram make_noisy_draw(const TeleportDrawProgram& nominal,
                                    const NoiseParams& params, std::mt19937_64& rng) {
  // Dephasing pulse positions are scheduled against the nominal gate list;
  // the pulses themselves are exact (only nominal gates are jittered).
  struct PulseSet {
    std::size_t before_gate;
    std::array<double, 8> widths;
  };
  std::vector<PulseSet> schedule;
  if (params.policy == DephasingPolicy::Midpoint) {
    schedule.push_back({nominal.pre_measure.size() / 2, params.sigma_d});
  } else {
    const std::vector<int> layers = gate_layers(nominal.pre_measure, 8);
    const int n_layers =
        layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
    if (n_layers > 0) {
      std::array<double, 8> scaled{};
      for (std::size_t i = 0; i < scaled.size(); ++i)
        scaled[i] = params.sigma_d[i] / std::sqrt(static_cast<double>(n_layers));
      int seen = 0;
      for (std::size_t i = 0; i < layers.size(); ++i) {
        while (seen < layers[i]) {
          schedule.push_back({i, scaled});
          ++seen;
        }
      }
    }
  }

  TeleportDrawProgram noisy;
  noisy.pre_measure.reserve(nominal.pre_measure.size() * 2 + schedule.size() * 8);
  std::size_t next_pulse = 0;
  for (std::size_t i = 0; i <= nominal.pre_measure.size(); ++i) {
    while (next_pulse < schedule.size() && schedule[next_pulse].before_gate == i) {
      emit_pulse_set(noisy.pre_measure, 8, schedule[next_pulse].widths, rng);
      ++next_pulse;
    }
    if (i == nominal.pre_measure.size()) break;
    const std::vector<GateOp> jittered = jitter_gates({nominal.pre_measure[i]}, params, rng);
    noisy.pre_measure.insert(noisy.pre_measure.end(), jittered.begin(), jittered.end());
  }
  for (std::size_t v = 0; v < noisy.corrections.size(); ++v)
    noisy.corrections[v] = jitter_gates(nominal.corrections[v], params, rng);
  return noisy;
}

TeleportMcResult monte_carlo_teleport_full(const InputStateSpec& input,
                                           const NoiseParams& params, int draws,
                                           std::uint64_t seed) {
  if (draws < 1) throw std::invalid_argument("monte_carlo_teleport: draws >= 1");
  const TeleportDrawProgram nominal = TeleportDrawProgram::noiseless();
  const Eigen::Vector2cd psi = input.ket();

  double sum_ns = 0.0, sum_sq_ns = 0.0;
  double sum_es = 0.0, sum_sq_es = 0.0;
  double sum_ret_ns = 0.0, sum_ret_es = 0.0;
  Eigen::Matrix2cd rho_ns_sum = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd rho_es_sum = Eigen::Matrix2cd::Zero();
  int es_count = 0, es_empty = 0;
  for (int n = 0; n < draws; ++n) {
    std::mt19937_64 rng = draw_rng(seed, static_cast<std::uint64_t>(n));
    const TeleportDrawProgram program = make_noisy_draw(nominal, params, rng);
    const std::vector<RunOutcome> outcomes = run_teleport(input, program);
    const AssembledState ns = assemble_density(outcomes, PostselectPolicy::NS);
    const AssembledState es = assemble_density(outcomes, PostselectPolicy::ES);
    const double f_ns = conditional_fidelity(ns, psi);
    sum_ns += f_ns;
    sum_sq_ns += f_ns * f_ns;
    sum_ret_ns += ns.retained;
    rho_ns_sum += ns.rho.entries / ns.retained;
    if (es.empty) {
      ++es_empty;
    } else {
      const double f_es = conditional_fidelity(es, psi);
      sum_es += f_es;
      sum_sq_es += f_es * f_es;
      sum_ret_es += es.retained;
      rho_es_sum += es.rho.entries / es.retained;
      ++es_count;
    }
  }

  auto finish = [seed](double sum, double sum_sq, int n, int total, int empty,
                       double sum_ret) {
    McEstimate e;
    e.draws = total;
    e.seed = seed;
    e.empty_draws = empty;
    if (n > 0) {
      e.mean = sum / n;
      const double var = std::max(0.0, sum_sq / n - e.mean * e.mean);
      e.std_error = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
      e.mean_retained = sum_ret / n;
    }
    return e;
  };
  TeleportMcResult result;
  result.ns = finish(sum_ns, sum_sq_ns, draws, draws, 0, sum_ret_ns);
  result.es = finish(sum_es, sum_sq_es, es_count, draws, es_empty, sum_ret_es);
  result.rho_ns.n_qubits = 1;
  result.rho_ns.entries = rho_ns_sum / static_cast<double>(draws);
  result.rho_es.n_qubits = 1;
  result.rho_es.entries = es_count > 0
                              ? Eigen::MatrixXcd(rho_es_sum / static_cast<double>(es_count))
                              : Eigen::MatrixXcd(Eigen::Matrix2cd::Zero());
  return result;
}

std::pair<McEstimate, McEstimate> monte_carlo_teleport(const InputStateSpec& input,
                                                       const NoiseParams& params,
                                                       int draws, std::uint64_t seed) {
  const TeleportMcResult r = monte_carlo_teleport_full(input, params, draws, seed);
  return {r.ns, r.es};
}

double closed_form_jitter_fidelity(double sigma) {
  return 0.5 * (1.0 + std::exp(-kPi * kPi * sigma * sigma / 2.0));
}

McEstimate mc_single_gate_fidelity(double sigma, int draws, std::uint64_t seed) {
  double sum = 0.0, sum_sq = 0.0;
  for (int n = 0; n < draws; ++n) {
    std::mt19937_64 rng = draw_rng(seed, static_cast<std::uint64_t>(n));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double xi = sigma * gauss(rng);
    StateVector s = StateVector::zero(1);
    s = apply(s, GateOp::rotation('x', 1, kPi * (1.0 + xi)));
    const double f = std::norm(s.amplitudes(1));
    sum += f;
    sum_sq += f * f;
  }
  McEstimate e;
  e.draws = draws;
  e.seed = seed;
  e.mean = sum / draws;
  const double var = std::max(0.0, sum_sq / draws - e.mean * e.mean);
  e.std_error = draws > 1 ? std::sqrt(var / (draws - 1)) : 0.0;
  return e;
}

McEstimate mc_cz_fidelity(double sigma, int draws, std::uint64_t seed) {
  // |<1-| R^z_2(xi pi) CZ |1+>|^2 through the two-qubit engine.
  StateVector in = StateVector::zero(2);
  in = apply(in, GateOp::pauli_gate(PauliString::single(2, 1, Pauli::X)));
  in = apply(in, GateOp::hadamard(2));
  StateVector target = StateVector::zero(2);
  target = apply(target, GateOp::pauli_gate(PauliString::single(2, 1, Pauli::X)));
  target = apply(target, GateOp::hadamard(2));
  target = apply(target, GateOp::pauli_gate(PauliString::single(2, 2, Pauli::Z)));

  double sum = 0.0, sum_sq = 0.0;
  for (int n = 0; n < draws; ++n) {
    std::mt19937_64 rng = draw_rng(seed, static_cast<std::uint64_t>(n));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double xi = sigma * gauss(rng);
    StateVector s = apply(in, GateOp::cz(1, 2));
    s = apply(s, GateOp::rotation('z', 2, xi * kPi));
    const double f = std::norm(target.amplitudes.dot(s.amplitudes));
    sum += f;
    sum_sq += f * f;
  }
  McEstimate e;
  e.draws = draws;
  e.seed = seed;
  e.mean = sum / draws;
  const double var = std::max(0.0, sum_sq / draws - e.mean * e.mean);
  e.std_error = draws > 1 ? std::sqrt(var / (draws - 1)) : 0.0;
  return e;
}

}  // namespace mzm
