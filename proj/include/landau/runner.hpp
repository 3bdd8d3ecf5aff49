#ifndef LANDAU_RUNNER_HPP
#define LANDAU_RUNNER_HPP

// Experiment orchestration: builds an sG simulation from a RunConfig, steps it,
// checks the conservation guards and writes the run artifacts.

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "landau/config.hpp"
#include "landau/diagnostics.hpp"
#include "landau/gpc.hpp"
#include "landau/solver.hpp"

namespace landau::runner {

enum ExitCode : int { ok = 0, config_error = 1, numerical_error = 2, guard_violation = 3 };

std::shared_ptr<const gpc::SgBasis> make_basis(const config::RunConfig& cfg);

/// Collision parameters gamma(z_l), C, epsilon at every quadrature node.
std::vector<CollisionParams> node_parameters(const config::RunConfig& cfg, const gpc::SgBasis& basis);

SolverOptions solver_options(const config::RunConfig& cfg);

/// Per-node observables at one time level.
struct Snapshot {
  std::size_t step = 0;
  double time = 0.0;
  std::vector<diagnostics::Moments> moments;
  std::vector<diagnostics::Entropy> entropy;
  std::size_t truncated = 0;  // symmetric mode: particles near the grid boundary
};

/// One CSV row: mass, px, py, energy, M4, Tx, Ty, H, D.
using Columns = std::array<double, 9>;

Columns columns(const diagnostics::Moments& m, const diagnostics::Entropy& e);

/// Quadrature mean and centred variance of the per-node columns.
std::array<Columns, 2> statistics(const Snapshot& snapshot, const gpc::SgBasis& basis);

/// Forward-Euler sG run with the nodal field evaluation cached between
/// diagnostics and the step that reuses it.
class Simulation {
 public:
  explicit Simulation(config::RunConfig cfg);

  const config::RunConfig& config() const { return cfg_; }
  const SgState& state() const { return state_; }
  const gpc::SgBasis& basis() const { return *state_.basis; }
  const SolverOptions& options() const { return options_; }
  std::size_t step_index() const { return step_; }

  const NodalEvaluation& evaluation();

  /// Moments at every node; H and D too when with_entropy.
  Snapshot snapshot(bool with_entropy = true);

  /// One step of size dt. Throws NumericalError on non-finite coefficients.
  void advance();

 private:
  config::RunConfig cfg_;
  SolverOptions options_;
  SgState state_;
  std::size_t step_ = 0;
  std::optional<NodalEvaluation> evaluation_;
};

/// Mass and momentum-drift checks against the first snapshot.
class Guards {
 public:
  Guards(const Snapshot& initial, double momentum_tolerance, double mass_tolerance);

  /// Description of the first violated guard, if any.
  std::optional<std::string> check(const Snapshot& snapshot) const;

 private:
  std::vector<std::array<double, 2>> momentum_;
  double momentum_tolerance_;
  double mass_tolerance_;
};

/// "%.16e": 17 significant digits, round-trip exact.
std::string format_number(double value);

/// moments.csv: one row per node, then expectation and variance, per snapshot.
class MomentsWriter {
 public:
  explicit MomentsWriter(std::ostream& out);
  void write(const Snapshot& snapshot, const gpc::SgBasis& basis);

 private:
  std::ostream& out_;
};

struct Outcome {
  int exit_code = ok;
  std::string message;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
};

/// Writes config.ini, moments.csv, density grids and metadata.json into out_dir.
Outcome run(const config::RunConfig& cfg, const std::filesystem::path& out_dir, bool dry_run,
            std::ostream& log);

/// M-convergence of M4 against the reference order: convergence.csv.
Outcome sweep(const config::RunConfig& cfg, const std::filesystem::path& out_dir, bool dry_run,
              std::ostream& log);

/// Relative L2 error against the BKW solution in time: bkw_error.csv.
Outcome bkw(const config::RunConfig& cfg, const std::filesystem::path& out_dir, bool dry_run,
            std::ostream& log);

/// Temperature-anisotropy decay and fitted rates: trubnikov.csv, trubnikov_fit.csv.
Outcome trubnikov(const config::RunConfig& cfg, const std::filesystem::path& out_dir, bool dry_run,
                  std::ostream& log);

/// Fast internal consistency checks; exit code 0 when all pass.
Outcome selftest(std::ostream& log);

}  // namespace landau::runner

#endif  // LANDAU_RUNNER_HPP
