#include "landau/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "landau/errors.hpp"

namespace landau::benchmarks {

double AffineMap::min_on_unit_square() const {
  return c0 + std::min(c1, 0.0) + std::min(c2, 0.0);
}

double AffineMap::max_on_unit_square() const {
  return c0 + std::max(c1, 0.0) + std::max(c2, 0.0);
}

std::string AffineMap::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << c0;
  if (c1 != 0.0) {
    out << (c1 < 0.0 ? " - " : " + ") << std::fabs(c1) << "*z1";
  }
  if (c2 != 0.0) {
    out << (c2 < 0.0 ? " - " : " + ") << std::fabs(c2) << "*z2";
  }
  return out.str();
}

std::string to_string(InitialKind kind) {
  switch (kind) {
    case InitialKind::bimodal_radial:
      return "bimodal";
    case InitialKind::bkw:
      return "bkw";
    case InitialKind::anisotropic_gaussian:
      return "anisotropic";
    case InitialKind::triangle_gaussians:
      return "triangle";
  }
  return "unknown";
}

void InitialCondition::validate() const {
  if (!(temperature.min_on_unit_square() > 0.0)) {
    throw ParameterError("initial temperature must be positive on the parameter domain");
  }
  if (kind == InitialKind::anisotropic_gaussian && !(temperature_y.min_on_unit_square() > 0.0)) {
    throw ParameterError("initial y temperature must be positive on the parameter domain");
  }
  if (kind == InitialKind::triangle_gaussians && !(radius >= 0.0 && std::isfinite(radius))) {
    throw ParameterError("triangle radius must be non-negative");
  }
}

bool InitialCondition::depends_on_parameter() const {
  if (kind == InitialKind::anisotropic_gaussian) {
    return !temperature.is_constant() || !temperature_y.is_constant();
  }
  return !temperature.is_constant();
}

std::array<Vec2, 3> InitialCondition::vertices() const {
  const double s = 0.5 * std::sqrt(3.0) * radius;
  return {Vec2{0.0, radius}, Vec2{-s, -0.5 * radius}, Vec2{s, -0.5 * radius}};
}

double InitialCondition::density(Vec2 v, const std::array<double, 2>& z) const {
  const double t = temperature(z);
  switch (kind) {
    case InitialKind::bimodal_radial:
      return norm2(v) * std::exp(-norm2(v) / t) / (std::numbers::pi * t * t);
    case InitialKind::bkw:
      return bkw_density(v, 0.0, t);
    case InitialKind::anisotropic_gaussian: {
      const double ty = temperature_y(z);
      return std::exp(-0.5 * v.x * v.x / t - 0.5 * v.y * v.y / ty) /
             (2.0 * std::numbers::pi * std::sqrt(t * ty));
    }
    case InitialKind::triangle_gaussians: {
      double s = 0.0;
      for (const Vec2& u : vertices()) {
        s += std::exp(-0.5 * norm2(v - u) / t);
      }
      return s / (3.0 * 2.0 * std::numbers::pi * t);
    }
  }
  return 0.0;
}

double InitialCondition::total_temperature(const std::array<double, 2>& z) const {
  switch (kind) {
    case InitialKind::bimodal_radial:
    case InitialKind::bkw:
      return temperature(z);
    case InitialKind::anisotropic_gaussian:
      return 0.5 * (temperature(z) + temperature_y(z));
    case InitialKind::triangle_gaussians:
      return temperature(z) + 0.5 * radius * radius;
  }
  return 0.0;
}

UniformDraw draw_uniforms(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  UniformDraw draw;
  draw.u1.resize(count);
  draw.u2.resize(count);
  // 53 random bits mapped to the open interval (0, 1).
  const auto next = [&engine] {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
  };
  for (std::size_t i = 0; i < count; ++i) {
    draw.u1[i] = next();
    draw.u2[i] = next();
  }
  return draw;
}

namespace {

/// x - log(1 + x), accurate for small x.
double excess(double x) {
  if (x < 1e-2) {
    double term = x;
    double s = 0.0;
    for (int k = 2; k <= 10; ++k) {
      term *= -x;
      s -= term / k;
    }
    return s;
  }
  return x - std::log1p(x);
}

}  // namespace

double gamma2_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw ParameterError("quantile level must lie in (0, 1)");
  }
  // 1 - e^{-x}(1 + x) = u  <=>  x - log(1 + x) = -log(1 - u); the left side is convex
  // and increasing, so Newton converges from either side after one step.
  const double c = -std::log1p(-u);
  double x = std::max(std::sqrt(2.0 * c), c + std::log1p(c));
  for (int it = 0; it < 60; ++it) {
    const double step = (excess(x) - c) * (1.0 + x) / x;
    x -= step;
    if (std::fabs(step) <= 1e-16 * x) {
      break;
    }
  }
  return x;
}

ParticleEnsemble transform_draw(const InitialCondition& condition, const UniformDraw& draw,
                                const std::array<double, 2>& z) {
  condition.validate();
  const std::size_t n = draw.u1.size();
  std::vector<double> x(n), y(n);
  const double t = condition.temperature(z);
  const double two_pi = 2.0 * std::numbers::pi;
  switch (condition.kind) {
    case InitialKind::bimodal_radial:
    case InitialKind::bkw:
      // r^2 / T ~ Gamma(2, 1), angle uniform.
      for (std::size_t i = 0; i < n; ++i) {
        const double r = std::sqrt(t * gamma2_quantile(draw.u1[i]));
        const double a = two_pi * draw.u2[i];
        x[i] = r * std::cos(a);
        y[i] = r * std::sin(a);
      }
      break;
    case InitialKind::anisotropic_gaussian: {
      const double sx = std::sqrt(t);
      const double sy = std::sqrt(condition.temperature_y(z));
      for (std::size_t i = 0; i < n; ++i) {
        const double r = std::sqrt(-2.0 * std::log(draw.u1[i]));
        const double a = two_pi * draw.u2[i];
        x[i] = sx * r * std::cos(a);
        y[i] = sy * r * std::sin(a);
      }
      break;
    }
    case InitialKind::triangle_gaussians: {
      const auto u = condition.vertices();
      const double s = std::sqrt(t);
      for (std::size_t i = 0; i < n; ++i) {
        const double r = std::sqrt(-2.0 * std::log(draw.u1[i]));
        const double a = two_pi * draw.u2[i];
        const Vec2& c = u[i % 3];
        x[i] = c.x + s * r * std::cos(a);
        y[i] = c.y + s * r * std::sin(a);
      }
      break;
    }
  }
  return ParticleEnsemble::with_uniform_weights(std::move(x), std::move(y));
}

ParticleEnsemble sample_initial(const InitialCondition& condition, std::size_t count,
                                const std::array<double, 2>& z, std::uint64_t seed) {
  if (count < 1) {
    throw ConfigurationError("need at least one particle");
  }
  return transform_draw(condition, draw_uniforms(count, seed), z);
}

SgState initial_state(const InitialCondition& condition, std::size_t count,
                      std::shared_ptr<const gpc::SgBasis> basis,
                      std::vector<CollisionParams> node_params, std::uint64_t seed) {
  if (count < 1) {
    throw ConfigurationError("need at least one particle");
  }
  if (!basis) {
    throw ConfigurationError("initial state needs a basis");
  }
  const UniformDraw draw = draw_uniforms(count, seed);
  const std::size_t modes = basis->modes();
  const std::size_t nodes = basis->nodes();

  SgState state;
  state.basis = basis;
  state.node_params = std::move(node_params);
  state.weights.assign(count, 1.0 / static_cast<double>(count));
  state.coefficients.assign(count * modes * 2, 0.0);

  if (!condition.depends_on_parameter()) {
    const ParticleEnsemble e = transform_draw(condition, draw, {0.0, 0.0});
    for (std::size_t i = 0; i < count; ++i) {
      state.coefficients[i * modes * 2] = e.x[i];
      state.coefficients[i * modes * 2 + 1] = e.y[i];
    }
  } else {
    std::vector<ParticleEnsemble> nodal;
    nodal.reserve(nodes);
    for (std::size_t l = 0; l < nodes; ++l) {
      nodal.push_back(transform_draw(condition, draw, basis->node(l)));
    }
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t k = 0; k < modes; ++k) {
        double sx = 0.0;
        double sy = 0.0;
        for (std::size_t l = 0; l < nodes; ++l) {
          const double f = basis->psi(k, l) * basis->weight(l);
          sx += f * nodal[l].x[i];
          sy += f * nodal[l].y[i];
        }
        state.coefficients[(i * modes + k) * 2] = sx;
        state.coefficients[(i * modes + k) * 2 + 1] = sy;
      }
    }
  }
  state.validate();
  return state;
}

double bkw_k(double t, double temperature) {
  return temperature * (1.0 - 0.5 * std::exp(-t / 8.0));
}

double bkw_density(Vec2 v, double t, double temperature) {
  if (!(t >= 0.0)) {
    throw ParameterError("BKW time must be non-negative");
  }
  const double k = bkw_k(t, temperature);
  const double r2 = norm2(v);
  const double shape = (2.0 * k - temperature) / k + (temperature - k) / (2.0 * k * k) * r2;
  return std::exp(-0.5 * r2 / k) / (2.0 * std::numbers::pi * k) * shape;
}

double trubnikov_tau(Potential potential, double strength, double rho, double temperature) {
  if (!(strength > 0.0) || !(rho > 0.0) || !(temperature > 0.0)) {
    throw ParameterError("Trubnikov time needs positive C, rho and T");
  }
  if (potential == Potential::maxwell) {
    return 1.0 / (8.0 * strength * rho);
  }
  return 4.0 * std::pow(temperature, 1.5) / (strength * rho * std::sqrt(std::numbers::pi));
}

DecayFit fit_decay_rate(std::span<const double> t, std::span<const double> values, double t_begin,
                        double t_end) {
  if (t.size() != values.size()) {
    throw ShapeError("time and value series differ in length");
  }
  DecayFit fit;
  double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_begin || t[k] > t_end) {
      continue;
    }
    if (!(values[k] > 0.0)) {
      fit.truncated = true;
      break;
    }
    const double l = std::log(values[k]);
    st += t[k];
    sl += l;
    stt += t[k] * t[k];
    stl += t[k] * l;
    ++fit.points;
  }
  if (fit.points < 2) {
    throw ParameterError("decay fit needs at least two positive samples in the window");
  }
  const double n = static_cast<double>(fit.points);
  const double denom = n * stt - st * st;
  fit.rate = denom == 0.0 ? 0.0 : -(n * stl - st * sl) / denom;
  return fit;
}

}  // namespace landau::benchmarks
