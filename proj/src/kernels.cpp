#include "landau/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "landau/errors.hpp"

namespace landau::kernels {

namespace {

void require_positive_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw ParameterError("mollifier variance must be positive, got " + std::to_string(epsilon));
  }
}

}  // namespace

void CollisionParams::validate() const {
  if (dimension != 2) {
    throw ParameterError("only velocity dimension d = 2 is supported");
  }
  if (!(strength > 0.0)) {
    throw ParameterError("collision strength must be positive");
  }
  require_positive_epsilon(epsilon);
  const double lo = -static_cast<double>(dimension) - 1.0;
  if (!(gamma >= lo && gamma <= 1.0)) {
    throw ParameterError("gamma must lie in [-d-1, 1], got " + std::to_string(gamma));
  }
}

double mollifier(Vec2 q, double epsilon) {
  require_positive_epsilon(epsilon);
  return std::exp(-norm2(q) / (2.0 * epsilon)) / (2.0 * std::numbers::pi * epsilon);
}

Vec2 mollifier_gradient(Vec2 q, double epsilon) {
  const double psi = mollifier(q, epsilon);
  return (-psi / epsilon) * q;
}

double cross_section_scale(double q_norm2, double gamma, double strength) {
  if (q_norm2 < kCoincidenceCutoff * kCoincidenceCutoff) {
    return 0.0;
  }
  if (gamma == 0.0) {
    return strength;
  }
  return strength * std::exp(0.5 * gamma * std::log(q_norm2));
}

Vec2 collision_apply(Vec2 q, Vec2 b, const CollisionParams& params) {
  // |q|^2 b - (q.b) q == (q x b) q_perp in two dimensions.
  const double scale = cross_section_scale(norm2(q), params.gamma, params.strength);
  return (scale * cross(q, b)) * perp(q);
}

}  // namespace landau::kernels
