#ifndef LANDAU_SOLVER_HPP
#define LANDAU_SOLVER_HPP

// Particle ensembles, the regularized Landau velocity field, and forward-Euler
// stepping for both the deterministic and the stochastic-Galerkin schemes.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "landau/detail/pairwise.hpp"
#include "landau/gpc.hpp"
#include "landau/kernels.hpp"
#include "landau/vec2.hpp"

namespace landau {

using kernels::CollisionParams;

/// N weighted particles in velocity space (structure of arrays).
struct ParticleEnsemble {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;

  /// Particles with w_i = 1/N.
  static ParticleEnsemble with_uniform_weights(std::vector<double> x, std::vector<double> y);

  std::size_t size() const { return x.size(); }
  Vec2 velocity(std::size_t i) const { return {x[i], y[i]}; }
  detail::ParticleSpan view() const { return {x, y, w}; }

  /// Throws ShapeError on ragged arrays, ParameterError unless weights are positive and sum to 1.
  void validate() const;
};

/// Uniform cell-centred grid on [-extent, extent]^2.
struct VelocityGrid {
  double extent = 4.0;
  int points = 200;

  double spacing() const { return 2.0 * extent / points; }
  double center(int k) const { return -extent + (k + 0.5) * spacing(); }
  void validate() const;
};

enum class Regularization { antisymmetric, symmetric };

struct SolverOptions {
  Regularization regularization = Regularization::antisymmetric;
  std::optional<VelocityGrid> grid;  // required by the symmetric regularization
};

/// epsilon = h^2 with h = 2 L_v / round(sqrt(N)).
double default_epsilon(std::size_t particles, double extent);

/// f(v) = sum_i w_i psi_eps(v - v_i), including any self term.
double blob_density(const ParticleEnsemble& ensemble, Vec2 at, double epsilon);

/// grad(dH/df)(v_i) for the anti-symmetric regularization:
///   grad f(v_i) / f(v_i) + sum_k w_k grad psi_eps(v_i - v_k) / f(v_k).
Vec2 entropy_variation_antisym(const ParticleEnsemble& ensemble, std::size_t index, double epsilon);

/// grad(dH/df)(v_i) = int grad psi_eps(v_i - v) log f(v) dv (symmetric regularization),
/// midpoint rule on the grid.
Vec2 entropy_variation_sym(const ParticleEnsemble& ensemble, std::size_t index, double epsilon,
                           const VelocityGrid& grid);

/// Everything computed while evaluating U_eps on one ensemble.
struct FieldEvaluation {
  std::vector<double> ux, uy;    // U_eps(v_i)
  std::vector<double> gx, gy;    // entropy-variation gradient at v_i
  std::vector<double> density;   // blob density at v_i (anti-symmetric mode only)
  std::size_t truncated = 0;     // particles too close to the grid boundary (symmetric mode)
};

/// U_i = -sum_j w_j A(v_i - v_j) (g_i - g_j).
FieldEvaluation velocity_field(detail::ParticleSpan particles, const CollisionParams& params,
                               const SolverOptions& options);
FieldEvaluation velocity_field(const ParticleEnsemble& ensemble, const CollisionParams& params,
                               const SolverOptions& options);

/// v_i <- v_i + dt U_i. Throws NumericalError on non-finite velocities.
ParticleEnsemble euler_step(const ParticleEnsemble& ensemble, const CollisionParams& params,
                            double dt, const SolverOptions& options);

/// Stochastic-Galerkin state: coefficients laid out [particle][mode][component].
struct SgState {
  std::shared_ptr<const gpc::SgBasis> basis;
  std::vector<double> coefficients;
  std::vector<double> weights;
  std::vector<CollisionParams> node_params;  // one per quadrature node
  double time = 0.0;

  std::size_t particles() const { return weights.size(); }
  std::size_t modes() const { return basis->modes(); }
  double coefficient(std::size_t i, std::size_t k, int c) const {
    return coefficients[(i * modes() + k) * 2 + static_cast<std::size_t>(c)];
  }

  void validate() const;

  /// Particle velocities at quadrature node l.
  ParticleEnsemble nodal_ensemble(std::size_t l) const;

  /// Particle velocities at an arbitrary parameter point.
  ParticleEnsemble ensemble_at(std::span<const double> z) const;
};

/// Nodal ensembles and their fields, the intermediate of one sG right-hand side.
struct NodalEvaluation {
  std::vector<ParticleEnsemble> ensembles;
  std::vector<FieldEvaluation> fields;
};

NodalEvaluation evaluate_nodes(const SgState& state, const SolverOptions& options);

/// d v_{i,k} / dt = sum_l U(v_i(z_l)) Psi_k(z_l) w_l, same layout as the coefficients.
std::vector<double> project_field(const SgState& state, const NodalEvaluation& nodal);
std::vector<double> sg_rhs(const SgState& state, const SolverOptions& options);

/// One forward-Euler step in coefficient space from a precomputed evaluation.
SgState sg_advance(const SgState& state, const NodalEvaluation& nodal, double dt);
SgState sg_euler_step(const SgState& state, double dt, const SolverOptions& options);

}  // namespace landau

#endif  // LANDAU_SOLVER_HPP
