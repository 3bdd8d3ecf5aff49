#ifndef LANDAU_DIAGNOSTICS_HPP
#define LANDAU_DIAGNOSTICS_HPP

// Observables of particle ensembles and sG states.

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "landau/solver.hpp"

namespace landau::diagnostics {

/// Velocity moments of one ensemble. Temperatures are central second moments.
struct Moments {
  double mass = 0.0;
  double px = 0.0;
  double py = 0.0;
  double energy = 0.0;  // sum w |v|^2
  double m4 = 0.0;      // sum w |v|^4
  double tx = 0.0;
  double ty = 0.0;

  double temperature() const { return 0.5 * (tx + ty); }
};

Moments moments(const ParticleEnsemble& ensemble);

/// H = sum_i w_i log f(v_i) and D = 1/2 sum_ij w_i w_j b_ij . A_ij b_ij for the
/// anti-symmetric regularization.
struct Entropy {
  double H = 0.0;
  double D = 0.0;
};

Entropy discrete_entropy(const ParticleEnsemble& ensemble, const CollisionParams& params);

/// Same, reusing the gradients and densities of a field evaluation on that ensemble.
Entropy discrete_entropy(const ParticleEnsemble& ensemble, const FieldEvaluation& field,
                         const CollisionParams& params);

enum class Statistic { expectation, variance, nodal };

std::string to_string(Statistic s);

/// Blob-density values on a grid, row-major with the x index outermost.
struct DensityField {
  VelocityGrid grid;
  Statistic statistic = Statistic::expectation;
  std::size_t node = 0;  // for Statistic::nodal
  double time = 0.0;
  std::vector<double> values;

  double at(int a, int b) const { return values[static_cast<std::size_t>(a * grid.points + b)]; }

  /// Midpoint-rule integral over the grid.
  double integral() const;

  /// One header line (extent, points, statistic, time) followed by one text row per x index.
  void write(std::ostream& out) const;
};

/// Blob density of a single ensemble on the grid.
DensityField density_field(const ParticleEnsemble& ensemble, double epsilon, const VelocityGrid& grid);

/// E_z, Var_z or nodal blob density of an sG state, by quadrature over its nodes.
DensityField density_field(const SgState& state, const VelocityGrid& grid, Statistic statistic,
                           std::size_t node = 0);

/// sqrt(sum_l (M4_ref(z_l) - M4(z_l))^2 w_l) on the finer of the two quadrature rules.
double sg_error_m4(const SgState& state, const SgState& reference);

/// Per-node relative L2 errors ||f - f_exact|| / ||f_exact|| on the grid, and their expectation.
struct DensityError {
  std::vector<double> per_node;
  double expected = 0.0;
};

using AnalyticDensity = std::function<double(Vec2 v, const std::array<double, 2>& z)>;

DensityError l2_relative_density_error(const SgState& state, const AnalyticDensity& analytic,
                                       const VelocityGrid& grid);

}  // namespace landau::diagnostics

#endif  // LANDAU_DIAGNOSTICS_HPP
