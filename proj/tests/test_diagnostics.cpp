#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "landau/benchmarks.hpp"
#include "landau/diagnostics.hpp"
#include "landau/errors.hpp"
#include "oracles.hpp"

using namespace landau;
using namespace landau::diagnostics;

namespace {

ParticleEnsemble gaussian(std::size_t n, double temperature, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, std::sqrt(temperature));
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = g(rng);
    y[i] = g(rng);
  }
  return ParticleEnsemble::with_uniform_weights(std::move(x), std::move(y));
}

SgState bkw_state(std::size_t n, int order) {
  auto basis = std::make_shared<const gpc::SgBasis>(
      gpc::build_basis(gpc::ParameterDistribution::uniform(), order));
  benchmarks::InitialCondition ic;
  ic.kind = benchmarks::InitialKind::bkw;
  ic.temperature = {0.5, 0.1, 0.0};
  const double eps = default_epsilon(n, 4.0);
  std::vector<CollisionParams> params(basis->nodes(), CollisionParams{0.0, 1.0 / 16.0, eps, 2});
  return benchmarks::initial_state(ic, n, basis, params, 99);
}

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("moments closed forms") {
  const auto pair = ParticleEnsemble::with_uniform_weights({-1.0, 1.0}, {0.0, 0.0});
  const Moments m = moments(pair);
  CHECK(m.mass == 1.0);
  CHECK(m.px == 0.0);
  CHECK(m.py == 0.0);
  CHECK(m.energy == 1.0);
  CHECK(m.m4 == 1.0);
  CHECK(m.tx == 1.0);
  CHECK(m.ty == 0.0);

  const Moments o = moments(ParticleEnsemble::with_uniform_weights({0.0}, {0.0}));
  CHECK(o.mass == 1.0);
  CHECK(o.energy == 0.0);
  CHECK(o.m4 == 0.0);
  CHECK(o.tx == 0.0);

  // |v|^2 ~ Exp(mean 2T) for a 2-D Maxwellian: standard error 2T / sqrt(N).
  const Moments g = moments(gaussian(10000, 0.5, 1));
  CHECK(std::fabs(g.energy - 1.0) < 3.0 * 1.0 / 100.0);
}

TEST_CASE("entropy and dissipation") {
  const auto one = ParticleEnsemble::with_uniform_weights({0.3}, {0.1});
  const Entropy e1 = discrete_entropy(one, {0.0, 1.0 / 16.0, 1.0, 2});
  CHECK(e1.H == doctest::Approx(std::log(1.0 / (2.0 * std::numbers::pi))).epsilon(1e-15));
  CHECK(e1.D == 0.0);

  for (std::size_t n : {2u, 4u, 6u}) {
    const auto e = gaussian(n, 1.0, n);
    for (double gamma : {0.0, -3.0, -0.7}) {
      const Entropy d = discrete_entropy(e, {gamma, 0.5, 0.2, 2});
      const double exact = oracle::dissipation({e.x, e.y, e.w}, gamma, 0.5, 0.2);
      CHECK(std::fabs(d.D - exact) < 1e-13 * std::max(1.0, exact));
      double h = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        h += e.w[i] * std::log(oracle::density({e.x, e.y, e.w}, e.x[i], e.y[i], 0.2));
      }
      CHECK(std::fabs(d.H - h) < 1e-13);
    }
  }

  const auto random50 = gaussian(50, 2.0, 77);
  CHECK(discrete_entropy(random50, {-3.0, 1.0, 0.05, 2}).D >= -1e-14);

  // A Maxwellian lattice dissipates less than a two-bump configuration.
  std::vector<double> x, y, w;
  double wsum = 0.0;
  for (int a = 0; a < 24; ++a) {
    for (int b = 0; b < 24; ++b) {
      const double u = -3.45 + 0.3 * a;
      const double v = -3.45 + 0.3 * b;
      x.push_back(u);
      y.push_back(v);
      w.push_back(std::exp(-0.5 * (u * u + v * v)));
      wsum += w.back();
    }
  }
  for (double& wi : w) {
    wi /= wsum;
  }
  const ParticleEnsemble lattice{x, y, w};
  ParticleEnsemble bumps = lattice;
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    bumps.x[i] += bumps.x[i] > 0.0 ? 1.5 : -1.5;
  }
  const CollisionParams p{0.0, 1.0 / 16.0, 0.09, 2};
  const double d_eq = discrete_entropy(lattice, p).D;
  const double d_far = discrete_entropy(bumps, p).D;
  CHECK(d_eq >= 0.0);
  CHECK(d_eq < d_far);

  FieldEvaluation missing;
  CHECK_THROWS_AS(discrete_entropy(one, missing, {0.0, 1.0, 1.0, 2}), ConfigurationError);
}

TEST_CASE("density fields over z") {
  const SgState s = bkw_state(400, 3);
  const VelocityGrid grid{4.0 * std::sqrt(1.2), 120};
  const DensityField mean = density_field(s, grid, Statistic::expectation);
  CHECK(std::fabs(mean.integral() - 1.0) < 1e-6);
  const DensityField var = density_field(s, grid, Statistic::variance);
  double vmax = 0.0;
  for (double v : var.values) {
    CHECK(v >= 0.0);
    vmax = std::max(vmax, v);
  }
  CHECK(vmax > 1e-6);

  // z-independent data: no variance.
  auto flat = s;
  for (std::size_t i = 0; i < flat.particles(); ++i) {
    for (std::size_t k = 1; k < flat.modes(); ++k) {
      flat.coefficients[(i * flat.modes() + k) * 2] = 0.0;
      flat.coefficients[(i * flat.modes() + k) * 2 + 1] = 0.0;
    }
  }
  for (double v : density_field(flat, grid, Statistic::variance).values) {
    CHECK(v <= 1e-12);
  }

  // One mode, one node: the expectation is the nodal blob density.
  const SgState single = bkw_state(100, 0);
  REQUIRE(single.basis->nodes() == 2);
  auto basis1 = std::make_shared<const gpc::SgBasis>(
      gpc::build_basis(gpc::ParameterDistribution::uniform(), 0, 1));
  SgState one = single;
  one.basis = basis1;
  one.node_params.resize(1);
  const auto e = density_field(one, grid, Statistic::expectation);
  const auto n = density_field(one.nodal_ensemble(0), one.node_params[0].epsilon, grid);
  CHECK(e.values == n.values);

  CHECK_THROWS_AS(density_field(s, grid, Statistic::nodal, 99), ShapeError);
}

TEST_CASE("density grid text format") {
  const auto e = ParticleEnsemble::with_uniform_weights({0.0}, {0.0});
  DensityField f = density_field(e, 1.0, VelocityGrid{1.0, 3});
  f.time = 2.5;
  std::ostringstream out;
  f.write(out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "# extent=1 points=3 statistic=nodal node=0 time=2.5");
  std::string row;
  int rows = 0;
  while (std::getline(in, row)) {
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("sG error of the fourth moment") {
  const SgState s = bkw_state(200, 3);
  CHECK(sg_error_m4(s, s) == 0.0);
  const SgState r = bkw_state(200, 6);
  const double err = sg_error_m4(s, r);
  CHECK(std::isfinite(err));
  CHECK(err < 1e-5);  // T(z) affine: the order-3 projection of sqrt(T(z)) is already close
  CHECK(sg_error_m4(bkw_state(200, 1), r) > 10.0 * err);
  const SgState small = bkw_state(100, 3);
  CHECK_THROWS_AS(sg_error_m4(small, r), ConfigurationError);
}

TEST_CASE("relative L2 density error") {
  const SgState s = bkw_state(900, 3);
  const VelocityGrid grid{4.0 * std::sqrt(1.2), 80};
  const auto err = l2_relative_density_error(
      s,
      [](Vec2 v, const std::array<double, 2>& z) { return benchmarks::bkw_density(v, 0.0, 0.5 + 0.1 * z[0]); },
      grid);
  CHECK(err.per_node.size() == s.basis->nodes());
  CHECK(err.expected > 0.0);
  CHECK(err.expected < 1.0);
  CHECK_THROWS_AS(l2_relative_density_error(s, [](Vec2, const std::array<double, 2>&) { return 0.0; }, grid),
                  DomainError);
}

}
