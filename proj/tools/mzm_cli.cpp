// Command-line front end: braid table, chain spectra, the teleportation
// Monte Carlo experiment, tomography output, and the identity-verification
// suite. Exit codes: 0 success, 1 verification failure, 2 config error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mzm/kitaev.hpp"
#include "mzm/report.hpp"
#include "mzm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

mzm::RunConfig load_config(const std::string& config_path) {
  if (config_path.empty()) return mzm::default_run_config();
  std::ifstream f(config_path, std::ios::binary);
  if (!f) throw mzm::ConfigError("cannot read config file: " + config_path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return mzm::parse_run_config(buf.str());
}

void apply_overrides(mzm::RunConfig& config, int draws, long long seed,
                     const std::string& input, const std::string& postselect) {
  if (draws > 0) config.draws = draws;
  if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
  if (!input.empty()) {
    mzm::InputStateSpec::from_label(input);  // validates
    config.inputs = {input};
  }
  if (!postselect.empty()) {
    if (postselect != "ns" && postselect != "es" && postselect != "both")
      throw mzm::ConfigError("postselect must be 'ns', 'es' or 'both'");
    config.postselect = postselect;
  }
}

int cmd_braids() {
  const auto table = mzm::braid_table();
  for (const auto& entry : table) {
    std::printf("%s%s  ->  %s   spin rep %s\n", entry.generator.a.str().c_str(),
                entry.generator.b.str().c_str(), entry.logical_name.c_str(),
                entry.spin_rep.c_str());
    for (int r = 0; r < 4; ++r) {
      std::printf("   ");
      for (int c = 0; c < 4; ++c) {
        const std::complex<double> v = entry.logical_matrix(r, c);
        std::printf(" (%+.4f%+.4fi)", v.real(), v.imag());
      }
      std::printf("\n");
    }
  }
  std::printf("%zu braids\n", table.size());
  return kExitOk;
}

int cmd_spectrum(const std::string& kind, int n, double t, const std::string& convention) {
  mzm::ChainSpec spec;
  spec.n_sites = n;
  spec.t = t;
  if (kind == "kitaev") spec.kind = mzm::ChainSpec::Kind::Kitaev;
  else if (kind == "trivial") spec.kind = mzm::ChainSpec::Kind::Trivial;
  else throw mzm::ConfigError("kind must be 'kitaev' or 'trivial'");
  if (convention == "raw") spec.offset = mzm::ChainSpec::Offset::Raw;
  else if (convention == "shifted") spec.offset = mzm::ChainSpec::Offset::Shifted;
  else throw mzm::ConfigError("convention must be 'raw' or 'shifted'");

  const std::vector<double> ev = mzm::spectrum(spec);
  std::printf("energy,multiplicity\n");
  const double tol = 1e-9 * t;
  std::size_t i = 0;
  while (i < ev.size()) {
    std::size_t j = i;
    while (j < ev.size() && std::abs(ev[j] - ev[i]) < tol) ++j;
    std::printf("%.12g,%zu\n", ev[i], j - i);
    i = j;
  }
  return kExitOk;
}

int cmd_teleport(const mzm::RunConfig& config, const std::string& out_dir) {
  const auto rows = mzm::run_teleport_experiment(config);
  const auto paths = mzm::write_reports(config, rows, out_dir);
  std::printf("%s", mzm::fidelity_csv(config, rows).c_str());
  for (const std::string& p : paths) std::printf("wrote %s\n", p.c_str());
  return kExitOk;
}

int cmd_tomo(const mzm::RunConfig& config, const std::string& out_dir) {
  const auto rows = mzm::run_teleport_experiment(config);
  const std::string text = mzm::tomography_json(config, rows);
  if (!out_dir.empty()) {
    mzm::write_reports(config, rows, out_dir);
    std::printf("wrote %s/tomography.json\n", out_dir.c_str());
  }
  std::printf("%s", text.c_str());
  return kExitOk;
}

int cmd_verify() {
  const auto results = mzm::run_verify_suite();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.empty() ? "" : " — ", r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%zu identities checked, %d failed\n", results.size(), failures);
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-mapped Majorana-chain braiding and teleportation simulator"};
  app.require_subcommand(1);

  std::string config_path, input, postselect, out_dir = "out";
  int draws = -1;
  long long seed = -1;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--draws", draws, "Monte Carlo draw count");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--input", input, "single input state label");
    sub->add_option("--postselect", postselect, "ns, es or both");
    sub->add_option("--out", out_dir, "output directory");
  };

  CLI::App* braids = app.add_subcommand("braids", "print the six-braid table");
  CLI::App* spectrum = app.add_subcommand("spectrum", "chain energy spectrum");
  std::string kind = "kitaev", convention = "raw";
  int n_sites = 2;
  double t = 1.0;
  spectrum->add_option("--kind", kind, "kitaev or trivial");
  spectrum->add_option("--n", n_sites, "sites per chain");
  spectrum->add_option("--t", t, "gap energy scale");
  spectrum->add_option("--convention", convention, "raw or shifted");
  CLI::App* teleport = app.add_subcommand("teleport", "run the teleportation experiment");
  add_run_flags(teleport);
  CLI::App* tomo = app.add_subcommand("tomo", "tomography of the teleported state");
  add_run_flags(tomo);
  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (braids->parsed()) return cmd_braids();
    if (spectrum->parsed()) return cmd_spectrum(kind, n_sites, t, convention);
    if (teleport->parsed() || tomo->parsed()) {
      mzm::RunConfig config = load_config(config_path);
      apply_overrides(config, draws, seed, input, postselect);
      return teleport->parsed() ? cmd_teleport(config, out_dir)
                                : cmd_tomo(config, out_dir);
    }
    if (verify->parsed()) return cmd_verify();
  } catch (const mzm::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerifyFailure;
  }
  return kExitConfigError;
}
