// landau_sg: stochastic-Galerkin particle solver for the homogeneous Landau equation.
//
// Usage:
//   landau_sg run --preset test1 [--out DIR] [--seed N] [--threads N] [--paper-scale]
//   landau_sg run --config run.ini [--dry-run]
//   landau_sg sweep --preset test2
//   landau_sg bkw [--preset test4]
//   landau_sg trubnikov [--preset test5-maxwell]
//   landau_sg selftest
//
// LANDAU_OUT_DIR and LANDAU_THREADS override the output directory and thread count
// unless the matching flag is given.

#include <omp.h>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "landau/config.hpp"
#include "landau/errors.hpp"
#include "landau/runner.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int threads = -1;
  bool paper_scale = false;
  bool dry_run = false;
};

landau::config::RunConfig resolve(const Options& opt, const std::string& default_preset) {
  using namespace landau::config;
  RunConfig cfg;
  if (!opt.config_path.empty()) {
    if (!opt.preset.empty()) {
      throw landau::ConfigurationError("give either --config or --preset, not both");
    }
    cfg = load_config(opt.config_path, opt.paper_scale);
  } else if (!opt.preset.empty()) {
    cfg = preset(opt.preset, opt.paper_scale);
  } else if (!default_preset.empty()) {
    cfg = preset(default_preset, opt.paper_scale);
  } else {
    throw landau::ConfigurationError("no configuration: pass --config PATH or --preset NAME");
  }
  if (opt.seed) {
    cfg.seed = *opt.seed;
  }
  if (!opt.out_dir.empty()) {
    cfg.output_dir = opt.out_dir;
  }
  if (opt.threads >= 0) {
    cfg.threads = opt.threads;
  }
  if (cfg.threads > 0) {
    omp_set_num_threads(cfg.threads);
  }
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic-Galerkin particle solver for the Landau-Fokker-Planck equation"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "Run configuration file")->check(CLI::ExistingFile);
  app.add_option("--preset", opt.preset, "Named test configuration");
  app.add_option("--out", opt.out_dir, "Output directory")->envname("LANDAU_OUT_DIR");
  app.add_option("--seed", opt.seed, "Sampling seed");
  app.add_option("--threads", opt.threads, "Worker threads (0: runtime default)")
      ->envname("LANDAU_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--paper-scale", opt.paper_scale, "Use the published particle counts");
  app.add_flag("--dry-run", opt.dry_run, "Resolve and echo the configuration without stepping");

  auto* run = app.add_subcommand("run", "Time-step a configuration and write moments.csv");
  auto* sweep = app.add_subcommand("sweep", "M-convergence study against a reference order");
  auto* bkw = app.add_subcommand("bkw", "Relative L2 error against the BKW solution");
  auto* trubnikov = app.add_subcommand("trubnikov", "Temperature relaxation against Trubnikov rates");
  auto* selftest = app.add_subcommand("selftest", "Fast internal consistency checks");
  auto* presets = app.add_subcommand("presets", "List the named configurations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets->parsed()) {
      for (const auto& name : landau::config::preset_names()) {
        std::cout << name << '\n';
      }
      return 0;
    }
    if (selftest->parsed()) {
      const auto outcome = landau::runner::selftest(std::cout);
      std::cout << outcome.message << '\n';
      return outcome.exit_code;
    }
    landau::runner::Outcome outcome;
    if (run->parsed()) {
      const auto cfg = resolve(opt, "");
      outcome = landau::runner::run(cfg, cfg.output_dir, opt.dry_run, std::cerr);
    } else if (sweep->parsed()) {
      const auto cfg = resolve(opt, "test1");
      outcome = landau::runner::sweep(cfg, cfg.output_dir, opt.dry_run, std::cerr);
    } else if (bkw->parsed()) {
      const auto cfg = resolve(opt, "test4");
      outcome = landau::runner::bkw(cfg, cfg.output_dir, opt.dry_run, std::cerr);
    } else if (trubnikov->parsed()) {
      const auto cfg = resolve(opt, "test5-maxwell");
      outcome = landau::runner::trubnikov(cfg, cfg.output_dir, opt.dry_run, std::cerr);
    }
    if (outcome.exit_code != landau::runner::ok) {
      std::cerr << "error: " << outcome.message << '\n';
    }
    return outcome.exit_code;
  } catch (const landau::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return landau::runner::numerical_error;
  } catch (const landau::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return landau::runner::config_error;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return landau::runner::config_error;
  }
}
