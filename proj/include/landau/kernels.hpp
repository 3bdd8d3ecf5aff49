#ifndef LANDAU_KERNELS_HPP
#define LANDAU_KERNELS_HPP

#include "landau/vec2.hpp"

namespace landau::kernels {

/// Pairs closer than this are treated as coincident: A(q) b = 0.
inline constexpr double kCoincidenceCutoff = 1e-10;

/// Parameters of the collision cross-section A(q) = C |q|^(gamma+2) (I - q q^T / |q|^2)
/// and of the Gaussian mollifier of variance epsilon.
struct CollisionParams {
  double gamma = 0.0;
  double strength = 1.0 / 16.0;
  double epsilon = 1.0;
  int dimension = 2;

  /// Throws ParameterError unless C > 0, epsilon > 0, d == 2 and -d-1 <= gamma <= 1.
  void validate() const;
};

/// Gaussian mollifier psi_eps(q) = (2 pi eps)^(-1) exp(-|q|^2 / (2 eps)).
double mollifier(Vec2 q, double epsilon);

/// grad psi_eps(q) = -(q / eps) psi_eps(q).
Vec2 mollifier_gradient(Vec2 q, double epsilon);

/// C |q|^gamma, or 0 when |q| is below the coincidence cutoff.
double cross_section_scale(double q_norm2, double gamma, double strength);

/// Matrix-free A(q) b. Zero for coincident pairs regardless of gamma.
Vec2 collision_apply(Vec2 q, Vec2 b, const CollisionParams& params);

}  // namespace landau::kernels

#endif  // LANDAU_KERNELS_HPP
