#include "landau/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "landau/errors.hpp"

namespace landau::diagnostics {

Moments moments(const ParticleEnsemble& ensemble) {
  Moments m;
  const std::size_t n = ensemble.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = ensemble.w[i];
    const double x = ensemble.x[i];
    const double y = ensemble.y[i];
    const double r2 = x * x + y * y;
    m.mass += w;
    m.px += w * x;
    m.py += w * y;
    m.energy += w * r2;
    m.m4 += w * r2 * r2;
  }
  const double ux = m.px / m.mass;
  const double uy = m.py / m.mass;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = ensemble.x[i] - ux;
    const double dy = ensemble.y[i] - uy;
    m.tx += ensemble.w[i] * dx * dx;
    m.ty += ensemble.w[i] * dy * dy;
  }
  m.tx /= m.mass;
  m.ty /= m.mass;
  return m;
}

Entropy discrete_entropy(const ParticleEnsemble& ensemble, const CollisionParams& params) {
  SolverOptions options;
  options.regularization = Regularization::antisymmetric;
  const FieldEvaluation field = velocity_field(ensemble, params, options);
  return discrete_entropy(ensemble, field, params);
}

Entropy discrete_entropy(const ParticleEnsemble& ensemble, const FieldEvaluation& field,
                         const CollisionParams& params) {
  if (field.density.size() != ensemble.size()) {
    throw ConfigurationError("discrete entropy needs the anti-symmetric field evaluation");
  }
  Entropy e;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    e.H += ensemble.w[i] * std::log(field.density[i]);
  }
  e.D = detail::dissipation(ensemble.view(), field.gx, field.gy, params.gamma, params.strength);
  return e;
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::expectation:
      return "expectation";
    case Statistic::variance:
      return "variance";
    case Statistic::nodal:
      return "nodal";
  }
  return "unknown";
}

double DensityField::integral() const {
  double s = 0.0;
  for (double v : values) {
    s += v;
  }
  return s * grid.spacing() * grid.spacing();
}

void DensityField::write(std::ostream& out) const {
  out << "# extent=" << grid.extent << " points=" << grid.points
      << " statistic=" << to_string(statistic);
  if (statistic == Statistic::nodal) {
    out << " node=" << node;
  }
  out << " time=" << time << '\n';
  char buf[32];
  for (int a = 0; a < grid.points; ++a) {
    for (int b = 0; b < grid.points; ++b) {
      std::snprintf(buf, sizeof buf, "%.16e", at(a, b));
      out << (b == 0 ? "" : " ") << buf;
    }
    out << '\n';
  }
}

namespace {

void grid_centers(const VelocityGrid& grid, std::vector<double>& cx, std::vector<double>& cy) {
  const auto n = static_cast<std::size_t>(grid.points);
  cx.resize(n * n);
  cy.resize(n * n);
  for (int a = 0; a < grid.points; ++a) {
    for (int b = 0; b < grid.points; ++b) {
      cx[static_cast<std::size_t>(a * grid.points + b)] = grid.center(a);
      cy[static_cast<std::size_t>(a * grid.points + b)] = grid.center(b);
    }
  }
}

std::vector<double> grid_density(const ParticleEnsemble& ensemble, double epsilon,
                                 const std::vector<double>& cx, const std::vector<double>& cy) {
  std::vector<double> f(cx.size());
  detail::blob_density(ensemble.view(), cx, cy, epsilon, f, {}, {});
  return f;
}

}  // namespace

DensityField density_field(const ParticleEnsemble& ensemble, double epsilon, const VelocityGrid& grid) {
  grid.validate();
  std::vector<double> cx, cy;
  grid_centers(grid, cx, cy);
  DensityField field;
  field.grid = grid;
  field.statistic = Statistic::nodal;
  field.values = grid_density(ensemble, epsilon, cx, cy);
  return field;
}

DensityField density_field(const SgState& state, const VelocityGrid& grid, Statistic statistic,
                           std::size_t node) {
  state.validate();
  grid.validate();
  std::vector<double> cx, cy;
  grid_centers(grid, cx, cy);
  DensityField field;
  field.grid = grid;
  field.statistic = statistic;
  field.node = node;
  field.time = state.time;

  const std::size_t nodes = state.basis->nodes();
  if (statistic == Statistic::nodal) {
    if (node >= nodes) {
      throw ShapeError("node index out of range");
    }
    field.values = grid_density(state.nodal_ensemble(node), state.node_params[node].epsilon, cx, cy);
    return field;
  }

  std::vector<std::vector<double>> nodal(nodes);
  for (std::size_t l = 0; l < nodes; ++l) {
    nodal[l] = grid_density(state.nodal_ensemble(l), state.node_params[l].epsilon, cx, cy);
  }
  field.values.assign(cx.size(), 0.0);
  for (std::size_t c = 0; c < cx.size(); ++c) {
    double mean = 0.0;
    for (std::size_t l = 0; l < nodes; ++l) {
      mean += state.basis->weight(l) * nodal[l][c];
    }
    if (statistic == Statistic::expectation) {
      field.values[c] = mean;
      continue;
    }
    // Centred form: non-negative up to rounding of the weights.
    double var = 0.0;
    for (std::size_t l = 0; l < nodes; ++l) {
      const double d = nodal[l][c] - mean;
      var += state.basis->weight(l) * d * d;
    }
    field.values[c] = std::max(var, 0.0);
  }
  return field;
}

double sg_error_m4(const SgState& state, const SgState& reference) {
  state.validate();
  reference.validate();
  if (state.particles() != reference.particles()) {
    throw ConfigurationError("sG error needs equal particle counts");
  }
  if (state.basis->dimensions() != reference.basis->dimensions()) {
    throw ConfigurationError("sG error needs bases over the same parameters");
  }
  const gpc::SgBasis& fine =
      reference.basis->nodes() >= state.basis->nodes() ? *reference.basis : *state.basis;
  const auto dims = static_cast<std::size_t>(fine.dimensions());
  double sum = 0.0;
  for (std::size_t l = 0; l < fine.nodes(); ++l) {
    const auto point = fine.node(l);
    const std::span<const double> z(point.data(), dims);
    const double a = moments(state.ensemble_at(z)).m4;
    const double b = moments(reference.ensemble_at(z)).m4;
    sum += fine.weight(l) * (a - b) * (a - b);
  }
  return std::sqrt(sum);
}

DensityError l2_relative_density_error(const SgState& state, const AnalyticDensity& analytic,
                                       const VelocityGrid& grid) {
  state.validate();
  grid.validate();
  std::vector<double> cx, cy;
  grid_centers(grid, cx, cy);
  DensityError out;
  for (std::size_t l = 0; l < state.basis->nodes(); ++l) {
    const auto f = grid_density(state.nodal_ensemble(l), state.node_params[l].epsilon, cx, cy);
    const auto z = state.basis->node(l);
    double diff = 0.0;
    double norm = 0.0;
    for (std::size_t c = 0; c < cx.size(); ++c) {
      const double exact = analytic({cx[c], cy[c]}, z);
      diff += (exact - f[c]) * (exact - f[c]);
      norm += exact * exact;
    }
    if (!(norm > 0.0)) {
      throw DomainError("analytic density vanishes on the grid");
    }
    out.per_node.push_back(std::sqrt(diff / norm));
    out.expected += state.basis->weight(l) * out.per_node.back();
  }
  return out;
}

}  // namespace landau::diagnostics
