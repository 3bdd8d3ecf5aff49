#include "landau/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "landau/errors.hpp"

namespace landau {

ParticleEnsemble ParticleEnsemble::with_uniform_weights(std::vector<double> x, std::vector<double> y) {
  ParticleEnsemble e;
  const std::size_t n = x.size();
  e.x = std::move(x);
  e.y = std::move(y);
  e.w.assign(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return e;
}

void ParticleEnsemble::validate() const {
  if (y.size() != x.size() || w.size() != x.size()) {
    throw ShapeError("ensemble arrays have different lengths");
  }
  if (x.empty()) {
    throw ParameterError("ensemble is empty");
  }
  double total = 0.0;
  for (double wi : w) {
    if (!(wi > 0.0)) {
      throw ParameterError("particle weights must be positive");
    }
    total += wi;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw ParameterError("particle weights must sum to 1");
  }
}

void VelocityGrid::validate() const {
  if (!(extent > 0.0)) {
    throw ParameterError("grid extent must be positive");
  }
  if (points < 1) {
    throw ParameterError("grid needs at least one point per dimension");
  }
}

double default_epsilon(std::size_t particles, double extent) {
  const double per_dim = std::round(std::sqrt(static_cast<double>(particles)));
  const double h = 2.0 * extent / std::max(per_dim, 1.0);
  return h * h;
}

double blob_density(const ParticleEnsemble& ensemble, Vec2 at, double epsilon) {
  double f = 0.0;
  const double tx[1] = {at.x};
  const double ty[1] = {at.y};
  detail::blob_density(ensemble.view(), tx, ty, epsilon, std::span<double>(&f, 1), {}, {});
  return f;
}

namespace {

void check_index(const ParticleEnsemble& ensemble, std::size_t index) {
  if (index >= ensemble.size()) {
    throw ShapeError("particle index " + std::to_string(index) + " out of range");
  }
}

/// Symmetric-regularization gradients for all particles; returns the truncation count.
std::size_t symmetric_variation(detail::ParticleSpan particles, double epsilon,
                                const VelocityGrid& grid, std::span<double> gx,
                                std::span<double> gy) {
  grid.validate();
  const int n = grid.points;
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<double> cx(cells), cy(cells), f(cells);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cx[static_cast<std::size_t>(a * n + b)] = grid.center(a);
      cy[static_cast<std::size_t>(a * n + b)] = grid.center(b);
    }
  }
  detail::blob_density(particles, cx, cy, epsilon, f, {}, {});

  // int grad psi(v_i - v) log f(v) dv is a blob-gradient sum with cell weights h^2 log f.
  const double h2 = grid.spacing() * grid.spacing();
  std::vector<double> cw(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    cw[c] = h2 * std::log(std::max(f[c], 1e-300));
  }
  std::vector<double> unused(particles.size());
  detail::blob_density({cx, cy, cw}, particles.x, particles.y, epsilon, unused, gx, gy);

  const double margin = grid.extent - 6.0 * std::sqrt(epsilon);
  std::size_t truncated = 0;
  for (std::size_t i = 0; i < particles.size(); ++i) {
    if (std::fabs(particles.x[i]) > margin || std::fabs(particles.y[i]) > margin) {
      ++truncated;
    }
  }
  return truncated;
}

}  // namespace

Vec2 entropy_variation_antisym(const ParticleEnsemble& ensemble, std::size_t index, double epsilon) {
  check_index(ensemble, index);
  kernels::CollisionParams{0.0, 1.0, epsilon, 2}.validate();
  std::vector<double> gx(ensemble.size()), gy(ensemble.size());
  detail::antisymmetric_variation(ensemble.view(), epsilon, gx, gy, {});
  return {gx[index], gy[index]};
}

Vec2 entropy_variation_sym(const ParticleEnsemble& ensemble, std::size_t index, double epsilon,
                           const VelocityGrid& grid) {
  check_index(ensemble, index);
  kernels::CollisionParams{0.0, 1.0, epsilon, 2}.validate();
  std::vector<double> gx(ensemble.size()), gy(ensemble.size());
  symmetric_variation(ensemble.view(), epsilon, grid, gx, gy);
  return {gx[index], gy[index]};
}

FieldEvaluation velocity_field(detail::ParticleSpan particles, const CollisionParams& params,
                               const SolverOptions& options) {
  params.validate();
  const std::size_t n = particles.size();
  FieldEvaluation out;
  out.gx.resize(n);
  out.gy.resize(n);
  out.ux.resize(n);
  out.uy.resize(n);
  if (options.regularization == Regularization::antisymmetric) {
    out.density.resize(n);
    detail::antisymmetric_variation(particles, params.epsilon, out.gx, out.gy, out.density);
  } else {
    if (!options.grid) {
      throw ConfigurationError("the symmetric regularization needs a velocity grid");
    }
    out.truncated = symmetric_variation(particles, params.epsilon, *options.grid, out.gx, out.gy);
  }
  detail::collision_field(particles, out.gx, out.gy, params.gamma, params.strength, out.ux, out.uy);
  return out;
}

FieldEvaluation velocity_field(const ParticleEnsemble& ensemble, const CollisionParams& params,
                               const SolverOptions& options) {
  return velocity_field(ensemble.view(), params, options);
}

namespace {

void check_finite(std::span<const double> x, std::span<const double> y, const char* what) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      std::ostringstream msg;
      msg << "non-finite " << what << " at particle " << i;
      throw NumericalError(msg.str());
    }
  }
}

void check_dt(double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw ParameterError("time step must be non-negative and finite");
  }
}

}  // namespace

ParticleEnsemble euler_step(const ParticleEnsemble& ensemble, const CollisionParams& params,
                            double dt, const SolverOptions& options) {
  check_dt(dt);
  const FieldEvaluation field = velocity_field(ensemble, params, options);
  ParticleEnsemble next = ensemble;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    next.x[i] += dt * field.ux[i];
    next.y[i] += dt * field.uy[i];
  }
  check_finite(next.x, next.y, "velocity");
  return next;
}

void SgState::validate() const {
  if (!basis) {
    throw ConfigurationError("sG state has no basis");
  }
  if (coefficients.size() != particles() * modes() * 2) {
    throw ShapeError("coefficient array does not match N x (M+1) x 2");
  }
  if (node_params.size() != basis->nodes()) {
    throw ShapeError("need one set of collision parameters per quadrature node");
  }
  for (const auto& p : node_params) {
    p.validate();
  }
}

ParticleEnsemble SgState::nodal_ensemble(std::size_t l) const {
  const std::size_t n = particles();
  const std::size_t k_count = modes();
  ParticleEnsemble e;
  e.x.resize(n);
  e.y.resize(n);
  e.w = weights;
  for (std::size_t i = 0; i < n; ++i) {
    const double* c = coefficients.data() + i * k_count * 2;
    double vx = 0.0;
    double vy = 0.0;
    for (std::size_t k = 0; k < k_count; ++k) {
      const double psi = basis->psi(k, l);
      vx += c[2 * k] * psi;
      vy += c[2 * k + 1] * psi;
    }
    e.x[i] = vx;
    e.y[i] = vy;
  }
  return e;
}

ParticleEnsemble SgState::ensemble_at(std::span<const double> z) const {
  const auto psi = basis->values_at(z);
  const std::size_t n = particles();
  const std::size_t k_count = modes();
  ParticleEnsemble e;
  e.x.resize(n);
  e.y.resize(n);
  e.w = weights;
  for (std::size_t i = 0; i < n; ++i) {
    const double* c = coefficients.data() + i * k_count * 2;
    double vx = 0.0;
    double vy = 0.0;
    for (std::size_t k = 0; k < k_count; ++k) {
      vx += c[2 * k] * psi[k];
      vy += c[2 * k + 1] * psi[k];
    }
    e.x[i] = vx;
    e.y[i] = vy;
  }
  return e;
}

NodalEvaluation evaluate_nodes(const SgState& state, const SolverOptions& options) {
  state.validate();
  NodalEvaluation out;
  const std::size_t nodes = state.basis->nodes();
  out.ensembles.reserve(nodes);
  out.fields.reserve(nodes);
  for (std::size_t l = 0; l < nodes; ++l) {
    out.ensembles.push_back(state.nodal_ensemble(l));
    out.fields.push_back(velocity_field(out.ensembles.back(), state.node_params[l], options));
  }
  return out;
}

std::vector<double> project_field(const SgState& state, const NodalEvaluation& nodal) {
  const std::size_t n = state.particles();
  const std::size_t k_count = state.modes();
  const std::size_t nodes = state.basis->nodes();
  if (nodal.fields.size() != nodes) {
    throw ShapeError("nodal evaluation does not match the basis");
  }
  std::vector<double> rhs(n * k_count * 2, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* r = rhs.data() + i * k_count * 2;
    for (std::size_t k = 0; k < k_count; ++k) {
      double sx = 0.0;
      double sy = 0.0;
      for (std::size_t l = 0; l < nodes; ++l) {
        const double f = state.basis->psi(k, l) * state.basis->weight(l);
        sx += f * nodal.fields[l].ux[i];
        sy += f * nodal.fields[l].uy[i];
      }
      r[2 * k] = sx;
      r[2 * k + 1] = sy;
    }
  }
  return rhs;
}

std::vector<double> sg_rhs(const SgState& state, const SolverOptions& options) {
  return project_field(state, evaluate_nodes(state, options));
}

SgState sg_advance(const SgState& state, const NodalEvaluation& nodal, double dt) {
  check_dt(dt);
  const std::vector<double> rhs = project_field(state, nodal);
  SgState next = state;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    next.coefficients[j] += dt * rhs[j];
  }
  for (std::size_t j = 0; j < rhs.size(); j += 2) {
    if (!std::isfinite(next.coefficients[j]) || !std::isfinite(next.coefficients[j + 1])) {
      std::ostringstream msg;
      msg << "non-finite gPC coefficient for particle " << j / (2 * state.modes());
      throw NumericalError(msg.str());
    }
  }
  next.time = state.time + dt;
  return next;
}

SgState sg_euler_step(const SgState& state, double dt, const SolverOptions& options) {
  return sg_advance(state, evaluate_nodes(state, options), dt);
}

}  // namespace landau
