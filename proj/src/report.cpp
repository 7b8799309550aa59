#include "mzm/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

namespace mzm {

namespace {

using nlohmann::ordered_json;

std::string fmt_double(double v, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

template <std::size_t N>
void read_array(const ordered_json& j, const char* key, std::array<double, N>& out) {
  if (!j.contains(key)) return;
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != N)
    throw ConfigError(std::string("config key '") + key + "' must be an array of " +
                      std::to_string(N) + " numbers");
  for (std::size_t i = 0; i < N; ++i) {
    if (!a[i].is_number())
      throw ConfigError(std::string("config key '") + key + "' must be numeric");
    out[i] = a[i].get<double>();
  }
}

ordered_json bloch_json(const BlochVector& b) {
  return {{"x", b.x}, {"y", b.y}, {"z", b.z}};
}

ordered_json rho_json(const DensityMatrix& rho) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < rho.entries.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < rho.entries.cols(); ++c)
      row.push_back({{"re", rho.entries(r, c).real()}, {"im", rho.entries(r, c).imag()}});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

RunConfig default_run_config() {
  RunConfig config;
  config.noise = NoiseParams::calibrated_defaults();
  return config;
}

RunConfig parse_run_config(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  static const std::set<std::string> known = {
      "sigma_g", "sigma_cz", "sigma_d", "t2_star",   "c_d",
      "dephasing_policy", "draws", "seed", "inputs", "postselect"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw ConfigError("unknown config key '" + it.key() + "'");

  RunConfig config = default_run_config();
  try {
    read_array(j, "sigma_g", config.noise.sigma_g);
    read_array(j, "sigma_cz", config.noise.sigma_cz);
    read_array(j, "t2_star", config.noise.t2_star);
    if (j.contains("c_d")) config.noise.c_d = j.at("c_d").get<double>();
    // sigma_d follows from t2_star and c_d unless explicitly pinned.
    config.noise.sigma_d = derive_sigma_d(config.noise.t2_star, config.noise.c_d);
    read_array(j, "sigma_d", config.noise.sigma_d);
    if (j.contains("dephasing_policy")) {
      const std::string policy = j.at("dephasing_policy").get<std::string>();
      if (policy == "midpoint") config.noise.policy = DephasingPolicy::Midpoint;
      else if (policy == "per_moment") config.noise.policy = DephasingPolicy::PerMoment;
      else throw ConfigError("dephasing_policy must be 'midpoint' or 'per_moment'");
    }
    if (j.contains("draws")) config.draws = j.at("draws").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("inputs"))
      config.inputs = j.at("inputs").get<std::vector<std::string>>();
    if (j.contains("postselect"))
      config.postselect = j.at("postselect").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }

  if (config.draws < 1) throw ConfigError("draws must be >= 1");
  if (config.inputs.empty()) throw ConfigError("inputs must be nonempty");
  for (const std::string& label : config.inputs) {
    try {
      InputStateSpec::from_label(label);
    } catch (const std::invalid_argument&) {
      throw ConfigError("unknown input label '" + label + "'");
    }
  }
  if (config.postselect != "ns" && config.postselect != "es" &&
      config.postselect != "both")
    throw ConfigError("postselect must be 'ns', 'es' or 'both'");
  return config;
}

std::string run_config_json(const RunConfig& config) {
  ordered_json j;
  j["sigma_g"] = config.noise.sigma_g;
  j["sigma_cz"] = config.noise.sigma_cz;
  j["sigma_d"] = config.noise.sigma_d;
  j["t2_star"] = config.noise.t2_star;
  j["c_d"] = config.noise.c_d;
  j["dephasing_policy"] =
      config.noise.policy == DephasingPolicy::Midpoint ? "midpoint" : "per_moment";
  j["draws"] = config.draws;
  j["seed"] = config.seed;
  j["inputs"] = config.inputs;
  j["postselect"] = config.postselect;
  return j.dump();
}

std::string config_hash_hex(const RunConfig& config) {
  const std::string text = run_config_json(config);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<TeleportExperimentRow> run_teleport_experiment(const RunConfig& config) {
  std::vector<TeleportExperimentRow> rows;
  for (const std::string& label : config.inputs) {
    TeleportExperimentRow row;
    row.input = label;
    row.mc = monte_carlo_teleport_full(InputStateSpec::from_label(label),
                                       config.noise, config.draws, config.seed);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fidelity_csv(const RunConfig& config,
                         const std::vector<TeleportExperimentRow>& rows) {
  std::string out = "input,f_ns,stderr_ns,f_es,stderr_es,draws,seed\n";
  double sum_ns = 0.0, sum_es = 0.0;
  for (const TeleportExperimentRow& row : rows) {
    out += row.input + "," + fmt_double(row.mc.ns.mean) + "," +
           fmt_double(row.mc.ns.std_error) + "," + fmt_double(row.mc.es.mean) + "," +
           fmt_double(row.mc.es.std_error) + "," + std::to_string(config.draws) + "," +
           std::to_string(config.seed) + "\n";
    sum_ns += row.mc.ns.mean;
    sum_es += row.mc.es.mean;
  }
  if (!rows.empty()) {
    out += "AVG," + fmt_double(sum_ns / rows.size()) + ",," +
           fmt_double(sum_es / rows.size()) + ",," + std::to_string(config.draws) +
           "," + std::to_string(config.seed) + "\n";
  }
  return out;
}

std::string summary_json(const RunConfig& config,
                         const std::vector<TeleportExperimentRow>& rows) {
  const double classical_bound = 2.0 / 3.0;
  ordered_json j;
  j["config_hash"] = config_hash_hex(config);
  j["seed"] = config.seed;
  j["draws"] = config.draws;
  j["dephasing_policy"] =
      config.noise.policy == DephasingPolicy::Midpoint ? "midpoint" : "per_moment";
  j["c_d"] = config.noise.c_d;
  j["postselect"] = config.postselect;
  j["classical_bound"] = classical_bound;
  ordered_json results = ordered_json::array();
  double sum_ns = 0.0, sum_es = 0.0;
  for (const TeleportExperimentRow& row : rows) {
    ordered_json r;
    r["input"] = row.input;
    if (config.postselect != "es") {
      r["f_ns"] = row.mc.ns.mean;
      r["stderr_ns"] = row.mc.ns.std_error;
      r["ns_exceeds_classical_bound"] = row.mc.ns.mean > classical_bound;
    }
    if (config.postselect != "ns") {
      r["f_es"] = row.mc.es.mean;
      r["stderr_es"] = row.mc.es.std_error;
      r["es_exceeds_classical_bound"] = row.mc.es.mean > classical_bound;
      r["es_mean_retained"] = row.mc.es.mean_retained;
      r["es_empty_draws"] = row.mc.es.empty_draws;
    }
    results.push_back(r);
    sum_ns += row.mc.ns.mean;
    sum_es += row.mc.es.mean;
  }
  j["results"] = results;
  if (!rows.empty()) {
    if (config.postselect != "es") j["avg_f_ns"] = sum_ns / rows.size();
    if (config.postselect != "ns") j["avg_f_es"] = sum_es / rows.size();
  }
  return j.dump(2) + "\n";
}

std::string tomography_json(const RunConfig& config,
                            const std::vector<TeleportExperimentRow>& rows) {
  ordered_json j;
  j["config_hash"] = config_hash_hex(config);
  j["seed"] = config.seed;
  ordered_json entries = ordered_json::array();
  for (const TeleportExperimentRow& row : rows) {
    ordered_json e;
    e["input"] = row.input;
    const BlochVector b_ns = expectations_from_state(row.mc.rho_ns);
    e["bloch_ns"] = bloch_json(b_ns);
    e["rho_ns"] = rho_json(reconstruct(b_ns));
    if (row.mc.es.empty_draws < row.mc.es.draws) {
      const BlochVector b_es = expectations_from_state(row.mc.rho_es);
      e["bloch_es"] = bloch_json(b_es);
      e["rho_es"] = rho_json(reconstruct(b_es));
    } else {
      e["es_retained_empty"] = true;
    }
    entries.push_back(e);
  }
  j["states"] = entries;
  return j.dump(2) + "\n";
}

std::vector<std::string> write_reports(const RunConfig& config,
                                       const std::vector<TeleportExperimentRow>& rows,
                                       const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const std::vector<std::pair<std::string, std::string>> files = {
      {"fidelity.csv", fidelity_csv(config, rows)},
      {"summary.json", summary_json(config, rows)},
      {"tomography.json", tomography_json(config, rows)},
  };
  std::vector<std::string> paths;
  for (const auto& [name, text] : files) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_reports: cannot open " + path.string());
    f << text;
    paths.push_back(path.string());
  }
  return paths;
}

}  // namespace mzm
