#ifndef LANDAU_BENCHMARKS_HPP
#define LANDAU_BENCHMARKS_HPP

// Initial data samplers and closed-form references: the BKW solution and
// Trubnikov relaxation times.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "landau/gpc.hpp"
#include "landau/solver.hpp"

namespace landau::benchmarks {

/// c0 + c1 z1 + c2 z2.
struct AffineMap {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  static AffineMap constant(double c) { return {c, 0.0, 0.0}; }

  double operator()(const std::array<double, 2>& z) const { return c0 + c1 * z[0] + c2 * z[1]; }
  bool is_constant() const { return c1 == 0.0 && c2 == 0.0; }
  double min_on_unit_square() const;
  double max_on_unit_square() const;
  std::string describe() const;
};

enum class InitialKind { bimodal_radial, bkw, anisotropic_gaussian, triangle_gaussians };

std::string to_string(InitialKind kind);

/// Parameterized initial density f0(v, z).
///   bimodal_radial:       |v|^2 exp(-|v|^2 / T) / (pi T^2)
///   bkw:                  BKW profile at t = 0 (identical to bimodal_radial)
///   anisotropic_gaussian: centred Gaussian with variances (temperature, temperature_y)
///   triangle_gaussians:   mean of three Gaussians of variance temperature centred on
///                         the vertices of an equilateral triangle of circumradius `radius`
struct InitialCondition {
  InitialKind kind = InitialKind::bimodal_radial;
  AffineMap temperature = AffineMap::constant(1.0);
  AffineMap temperature_y = AffineMap::constant(0.5);
  double radius = 2.0;

  /// Throws ParameterError unless all temperatures are positive on the parameter domain.
  void validate() const;
  bool depends_on_parameter() const;
  double density(Vec2 v, const std::array<double, 2>& z) const;

  /// Total temperature (1/2) int |v|^2 f0 dv.
  double total_temperature(const std::array<double, 2>& z) const;

  /// Triangle vertices U_1, U_2, U_3.
  std::array<Vec2, 3> vertices() const;
};

/// Two uniforms in (0, 1) per particle, the shared randomness of every z.
struct UniformDraw {
  std::vector<double> u1;
  std::vector<double> u2;
};

UniformDraw draw_uniforms(std::size_t count, std::uint64_t seed);

/// Solves 1 - e^{-x}(1 + x) = u: the inverse CDF of Gamma(2, 1).
double gamma2_quantile(double u);

/// Transforms a shared draw into an ensemble of f0(., z) with weights 1/N.
ParticleEnsemble transform_draw(const InitialCondition& condition, const UniformDraw& draw,
                                const std::array<double, 2>& z);

ParticleEnsemble sample_initial(const InitialCondition& condition, std::size_t count,
                                const std::array<double, 2>& z, std::uint64_t seed);

/// Initial sG state: nodal samples (one shared draw) projected onto the basis. For
/// z-independent data v_0 is the sample and all higher modes are exactly zero.
SgState initial_state(const InitialCondition& condition, std::size_t count,
                      std::shared_ptr<const gpc::SgBasis> basis,
                      std::vector<CollisionParams> node_params, std::uint64_t seed);

/// K(t) = T (1 - e^{-t/8} / 2).
double bkw_k(double t, double temperature);

/// BKW density for Maxwell molecules with C = 1/16.
double bkw_density(Vec2 v, double t, double temperature);

enum class Potential { maxwell, coulomb };

/// tau_M = 1 / (8 C rho), tau_C = 4 T^{3/2} / (C rho sqrt(pi)).
double trubnikov_tau(Potential potential, double strength, double rho, double temperature);

struct DecayFit {
  double rate = 0.0;        // -(d/dt) log Delta T
  std::size_t points = 0;   // samples used
  bool truncated = false;   // window cut at the first non-positive value
};

/// Least-squares slope of log(values) against t over t_begin <= t <= t_end.
DecayFit fit_decay_rate(std::span<const double> t, std::span<const double> values, double t_begin,
                        double t_end);

}  // namespace landau::benchmarks

#endif  // LANDAU_BENCHMARKS_HPP
