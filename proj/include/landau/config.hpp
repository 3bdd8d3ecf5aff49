#ifndef LANDAU_CONFIG_HPP
#define LANDAU_CONFIG_HPP

// Run specification: INI-style text, named presets, validation and a resolved echo.
//
// Grammar (one item per line, '#' starts a comment):
//   [section]
//   key = value
// Sections and keys are listed in README.md. Affine parameter maps accept
// expressions such as "1 + z/5", "-3*z2" or "0.5 + 0.1*z1" (z is an alias of z1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "landau/benchmarks.hpp"
#include "landau/gpc.hpp"
#include "landau/solver.hpp"

namespace landau::config {

struct ParameterSpec {
  gpc::ParameterDistribution distribution;
  int order = 3;
  int nodes = 0;  // 0 -> 2 (order + 1)

  int resolved_nodes() const { return nodes > 0 ? nodes : gpc::default_node_count(order); }
};

struct RunConfig {
  std::string preset = "custom";
  bool paper_scale = false;

  // [particles]
  std::size_t particles = 900;
  double extent = 4.0;                 // L_v
  std::optional<double> epsilon;       // default h^2

  // [collision]
  benchmarks::AffineMap gamma = benchmarks::AffineMap::constant(0.0);
  double strength = 1.0 / 16.0;
  Regularization regularization = Regularization::antisymmetric;
  int quadrature_points = 0;           // symmetric mode grid; 0 -> automatic

  // [parameter], [parameter2]
  std::vector<ParameterSpec> parameters{ParameterSpec{}};

  // [initial]
  benchmarks::InitialCondition initial;

  // [run]
  double dt = 0.01;
  double t_final = 1.0;
  int cadence = 10;
  std::uint64_t seed = 20240521;
  std::string output_dir = "out";
  int threads = 0;                     // 0 -> runtime default

  // [output]
  std::vector<double> density_times;
  int density_points = 200;
  double density_extent = 0.0;         // 0 -> 4 sqrt(2 T_hottest) (+ triangle radius)

  // [sweep]
  std::vector<int> sweep_orders{1, 2, 3, 4, 5, 6};
  int reference_order = 12;
  std::vector<double> sweep_times{1.0};

  // [trubnikov]
  double fit_begin = 0.0;
  double fit_end = 0.1;

  // [guards]
  double momentum_guard = 1e-10;
  double mass_guard = 1e-12;

  std::size_t steps() const;
  double resolved_epsilon() const;
  double resolved_density_extent() const;
  VelocityGrid density_grid() const;
  std::optional<VelocityGrid> solver_grid() const;

  /// Cross-field checks; throws ConfigurationError or ParameterError.
  void validate() const;

  /// The resolved configuration in the input grammar (parses back to an equal config).
  std::string to_text() const;
};

/// Affine map in z1, z2 from an expression; throws ParseError (line 0) on bad input.
benchmarks::AffineMap parse_affine(std::string_view text);

/// "uniform", "beta(a, b)".
gpc::ParameterDistribution parse_distribution(std::string_view text);

std::vector<std::string> preset_names();

/// Named configuration of the published tests; desk scale unless paper_scale.
RunConfig preset(std::string_view name, bool paper_scale = false);

/// Parses configuration text. A `preset` key in [run] selects the base
/// configuration; every other key overrides it regardless of order.
RunConfig parse_config(std::string_view text, bool paper_scale = false);

RunConfig load_config(const std::string& path, bool paper_scale = false);

}  // namespace landau::config

#endif  // LANDAU_CONFIG_HPP
