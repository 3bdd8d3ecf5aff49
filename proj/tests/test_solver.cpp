#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include "landau/errors.hpp"
#include "landau/solver.hpp"
#include "oracles.hpp"

using namespace landau;

namespace {

ParticleEnsemble random_ensemble(std::size_t n, std::uint64_t seed, double spread = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, spread);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = g(rng);
    y[i] = g(rng);
  }
  return ParticleEnsemble::with_uniform_weights(std::move(x), std::move(y));
}

oracle::Particles copy(const ParticleEnsemble& e) {
  return {e.x, e.y, e.w};
}

double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::fabs(a[i] - b[i]));
  }
  return m;
}

SgState make_state(std::shared_ptr<const gpc::SgBasis> basis, const std::vector<double>& coefficients,
                   double gamma0, double gamma1, double strength, double eps) {
  SgState s;
  s.basis = basis;
  s.coefficients = coefficients;
  const std::size_t n = coefficients.size() / (2 * basis->modes());
  s.weights.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t l = 0; l < basis->nodes(); ++l) {
    s.node_params.push_back({gamma0 + gamma1 * basis->node(l)[0], strength, eps, 2});
  }
  return s;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("blob density") {
  const auto one = ParticleEnsemble::with_uniform_weights({0.0}, {0.0});
  CHECK(blob_density(one, {0.0, 0.0}, 1.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
  const auto pair = ParticleEnsemble::with_uniform_weights({-1.0, 1.0}, {0.0, 0.0});
  CHECK(blob_density(pair, {0.0, 0.0}, 0.7) == doctest::Approx(oracle::psi(1.0, 0.0, 0.7)).epsilon(1e-15));

  const auto e = random_ensemble(10, 3);
  for (const Vec2 v : {Vec2{0.1, -0.2}, Vec2{e.x[3], e.y[3]}, Vec2{2.0, 1.0}}) {
    const double exact = oracle::density(copy(e), v.x, v.y, 0.2);
    CHECK(std::fabs(blob_density(e, v, 0.2) - exact) <= 1e-14 * exact);
  }
}

TEST_CASE("anti-symmetric variation") {
  const auto one = ParticleEnsemble::with_uniform_weights({0.4}, {-0.3});
  CHECK(entropy_variation_antisym(one, 0, 0.5) == Vec2{0.0, 0.0});

  const auto pair = ParticleEnsemble::with_uniform_weights({-0.6, 0.6}, {0.0, 0.0});
  const Vec2 a = entropy_variation_antisym(pair, 0, 0.3);
  const Vec2 b = entropy_variation_antisym(pair, 1, 0.3);
  CHECK(a.x == doctest::Approx(-b.x).epsilon(1e-14));
  CHECK(std::fabs(a.y) < 1e-15);

  const auto e = random_ensemble(5, 11);
  for (std::size_t i = 0; i < 5; ++i) {
    const Vec2 g = entropy_variation_antisym(e, i, 0.3);
    const auto o = oracle::variation(copy(e), i, 0.3);
    CHECK(std::fabs(g.x - o[0]) < 1e-13 * std::max(1.0, std::fabs(o[0])));
    CHECK(std::fabs(g.y - o[1]) < 1e-13 * std::max(1.0, std::fabs(o[1])));
  }
  CHECK_THROWS_AS(entropy_variation_antisym(e, 5, 0.3), ShapeError);
}

TEST_CASE("symmetric variation") {
  const auto one = ParticleEnsemble::with_uniform_weights({0.0}, {0.0});
  const Vec2 g = entropy_variation_sym(one, 0, 0.1, VelocityGrid{3.0, 120});
  CHECK(std::fabs(g.x) < 1e-10);
  CHECK(std::fabs(g.y) < 1e-10);

  // The integrand is smooth and decays inside the box, so the midpoint rule converges
  // faster than any power of the cell size.
  const auto e = random_ensemble(5, 5, 0.5);
  const double eps = 0.2;
  const Vec2 g1 = entropy_variation_sym(e, 2, eps, VelocityGrid{4.5, 30});
  const Vec2 g2 = entropy_variation_sym(e, 2, eps, VelocityGrid{4.5, 60});
  const Vec2 g4 = entropy_variation_sym(e, 2, eps, VelocityGrid{4.5, 120});
  CHECK(norm(g2 - g4) < norm(g1 - g2));
  CHECK(norm(g2 - g4) < 1e-8 * norm(g4));

  // A unit Gaussian carried by a weighted lattice: the symmetric form is grad log of
  // the mollified density, -v / (1 + eps); the antisymmetric form recovers -v to O(eps^2).
  std::vector<double> x, y, w;
  double total = 0.0;
  for (int a = 0; a < 41; ++a) {
    for (int b = 0; b < 41; ++b) {
      const double u = -4.0 + 0.2 * a;
      const double v = -4.0 + 0.2 * b;
      x.push_back(u);
      y.push_back(v);
      w.push_back(std::exp(-0.5 * (u * u + v * v)));
      total += w.back();
    }
  }
  for (double& wi : w) {
    wi /= total;
  }
  const ParticleEnsemble lattice{x, y, w};
  const double le = 0.04;
  for (std::size_t i : {840u, 845u, 640u, 1050u}) {
    const Vec2 v{x[i], y[i]};
    const double scale = std::max(1.0, norm(v));
    const Vec2 s = entropy_variation_sym(lattice, i, le, VelocityGrid{6.0, 240});
    const Vec2 a2 = entropy_variation_antisym(lattice, i, le);
    CHECK(norm(s + (1.0 / (1.0 + le)) * v) < 0.005 * scale);
    CHECK(norm(a2 + v) < 0.005 * scale);
  }
}

TEST_CASE("velocity field structure and triple-loop oracle") {
  const auto e = random_ensemble(4, 21);
  const CollisionParams p{0.0, 1.0 / 16.0, 0.01, 2};
  const auto f = velocity_field(e, p, {});
  const auto o = oracle::field(copy(e), 0.0, 1.0 / 16.0, 0.01);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::fabs(f.ux[i] - o[i][0]) < 1e-13 * std::max(1.0, std::fabs(o[i][0])));
    CHECK(std::fabs(f.uy[i] - o[i][1]) < 1e-13 * std::max(1.0, std::fabs(o[i][1])));
  }

  for (double gamma : {0.0, -3.0, -1.3, 0.5}) {
    const auto big = random_ensemble(30, 8);
    const CollisionParams q{gamma, 0.5, 0.3, 2};
    const auto fb = velocity_field(big, q, {});
    const auto ob = oracle::field(copy(big), gamma, 0.5, 0.3);
    double px = 0.0, py = 0.0, en = 0.0, err = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < 30; ++i) {
      px += big.w[i] * fb.ux[i];
      py += big.w[i] * fb.uy[i];
      en += big.w[i] * (big.x[i] * fb.ux[i] + big.y[i] * fb.uy[i]);
      err = std::max({err, std::fabs(fb.ux[i] - ob[i][0]), std::fabs(fb.uy[i] - ob[i][1])});
      mag = std::max({mag, std::fabs(ob[i][0]), std::fabs(ob[i][1])});
    }
    CHECK(std::fabs(px) < 1e-12);
    CHECK(std::fabs(py) < 1e-12);
    CHECK(std::fabs(en) < 1e-12);
    CHECK(err < 1e-13 * std::max(1.0, mag));
  }
}

TEST_CASE("blocked pair sums against a direct oracle") {
  // Large enough for several row blocks.
  const auto e = random_ensemble(300, 4);
  const auto p = copy(e);
  const double eps = 0.05;
  std::vector<std::array<double, 2>> g(300);
  for (std::size_t i = 0; i < 300; ++i) {
    g[i] = oracle::variation(p, i, eps);
  }
  for (double gamma : {0.0, -3.0, -2.2}) {
    const auto f = velocity_field(e, {gamma, 1.0 / 16.0, eps, 2}, {});
    double err = 0.0, mag = 0.0, gerr = 0.0;
    for (std::size_t i = 0; i < 300; ++i) {
      double ux = 0.0, uy = 0.0;
      for (std::size_t j = 0; j < 300; ++j) {
        const auto a = oracle::matrix(p.x[i] - p.x[j], p.y[i] - p.y[j], gamma, 1.0 / 16.0);
        const double bx = g[i][0] - g[j][0];
        const double by = g[i][1] - g[j][1];
        ux -= p.w[j] * (a[0] * bx + a[1] * by);
        uy -= p.w[j] * (a[2] * bx + a[3] * by);
      }
      err = std::max({err, std::fabs(f.ux[i] - ux), std::fabs(f.uy[i] - uy)});
      mag = std::max({mag, std::fabs(ux), std::fabs(uy)});
      gerr = std::max({gerr, std::fabs(f.gx[i] - g[i][0]), std::fabs(f.gy[i] - g[i][1])});
    }
    CHECK(err < 1e-12 * mag);
    CHECK(gerr < 1e-11);
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto e = random_ensemble(500, 9);
  const CollisionParams p{-3.0, 1.0 / 16.0, 0.02, 2};
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto a = velocity_field(e, p, {});
  omp_set_num_threads(4);
  const auto b = velocity_field(e, p, {});
  omp_set_num_threads(saved);
  CHECK(a.ux == b.ux);
  CHECK(a.uy == b.uy);
  CHECK(a.gx == b.gx);
  CHECK(a.density == b.density);
}

TEST_CASE("forward Euler step") {
  const auto e = random_ensemble(200, 13);
  const CollisionParams p{0.0, 1.0 / 16.0, 0.05, 2};
  const auto same = euler_step(e, p, 0.0, {});
  CHECK(same.x == e.x);
  CHECK(same.y == e.y);
  CHECK_THROWS_AS(euler_step(e, p, -0.1, {}), ParameterError);

  const auto field = velocity_field(e, p, {});
  double u2 = 0.0, e0 = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    u2 += e.w[i] * (field.ux[i] * field.ux[i] + field.uy[i] * field.uy[i]);
    e0 += e.w[i] * (e.x[i] * e.x[i] + e.y[i] * e.y[i]);
  }
  const auto drift = [&](double dt) {
    const auto next = euler_step(e, p, dt, {});
    double en = 0.0, px = 0.0, py = 0.0, px0 = 0.0, py0 = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      en += next.w[i] * (next.x[i] * next.x[i] + next.y[i] * next.y[i]);
      px += next.w[i] * next.x[i];
      py += next.w[i] * next.y[i];
      px0 += e.w[i] * e.x[i];
      py0 += e.w[i] * e.y[i];
    }
    CHECK(std::fabs(px - px0) < 1e-12);
    CHECK(std::fabs(py - py0) < 1e-12);
    CHECK(next.w == e.w);
    return en - e0;
  };
  const double d1 = drift(0.01);
  const double d2 = drift(0.005);
  CHECK(std::fabs(d1 - 1e-4 * u2) <= 1e-6 * 1e-4 * u2 + 1e-15);
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.1));

  auto bad = e;
  bad.x[7] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(euler_step(bad, p, 0.01, {}), NumericalError);
}

TEST_CASE("symmetric mode needs a grid") {
  const auto e = random_ensemble(10, 1);
  SolverOptions o;
  o.regularization = Regularization::symmetric;
  CHECK_THROWS_AS(velocity_field(e, {0.0, 1.0, 0.1, 2}, o), ConfigurationError);
  o.grid = VelocityGrid{4.0, 80};
  const auto f = velocity_field(e, {0.0, 1.0, 0.1, 2}, o);
  double px = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    px += e.w[i] * f.ux[i];
  }
  CHECK(std::fabs(px) < 1e-12);
  CHECK(f.density.empty());
}

TEST_CASE("sG right-hand side against the brute-force oracle") {
  // N = 4, M = 2, L = 6, gamma(z) = -3 z.
  auto basis = std::make_shared<const gpc::SgBasis>(
      gpc::build_basis(gpc::ParameterDistribution::uniform(), 2, 6));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> c(4 * 3 * 2);
  std::vector<std::vector<std::array<double, 2>>> oc(4, std::vector<std::array<double, 2>>(3));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t m = 0; m < 3; ++m) {
      const double scale = m == 0 ? 1.0 : 0.2;
      c[(i * 3 + m) * 2] = oc[i][m][0] = scale * g(rng);
      c[(i * 3 + m) * 2 + 1] = oc[i][m][1] = scale * g(rng);
    }
  }
  const double eps = 0.3;
  const SgState s = make_state(basis, c, 0.0, -3.0, 1.0 / 16.0, eps);
  const auto rhs = sg_rhs(s, {});
  const auto o = oracle::sg_rhs(oc, s.weights, 6, 0.0, -3.0, 1.0 / 16.0, eps);
  double err = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t m = 0; m < 3; ++m) {
      err = std::max({err, std::fabs(rhs[(i * 3 + m) * 2] - o[i][m][0]),
                      std::fabs(rhs[(i * 3 + m) * 2 + 1] - o[i][m][1])});
    }
  }
  CHECK(err < 1e-13);
}

TEST_CASE("sG degenerates to the deterministic solver") {
  const auto e = random_ensemble(50, 17);
  auto basis = std::make_shared<const gpc::SgBasis>(
      gpc::build_basis(gpc::ParameterDistribution::uniform(), 0, 1));
  std::vector<double> c(100);
  for (std::size_t i = 0; i < 50; ++i) {
    c[2 * i] = e.x[i];
    c[2 * i + 1] = e.y[i];
  }
  const CollisionParams p{-3.0, 1.0 / 16.0, 0.1, 2};
  const SgState s = make_state(basis, c, -3.0, 0.0, 1.0 / 16.0, 0.1);
  const auto rhs = sg_rhs(s, {});
  const auto f = velocity_field(e, p, {});
  double err = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    err = std::max({err, std::fabs(rhs[2 * i] - f.ux[i]), std::fabs(rhs[2 * i + 1] - f.uy[i])});
  }
  CHECK(err < 1e-14);

  const SgState next = sg_euler_step(s, 0.01, {});
  const auto det = euler_step(e, p, 0.01, {});
  const auto nodal = next.nodal_ensemble(0);
  CHECK(nodal.x == det.x);
  CHECK(nodal.y == det.y);
  const SgState still = sg_euler_step(s, 0.0, {});
  CHECK(still.coefficients == s.coefficients);
}

TEST_CASE("z-independent data keeps higher modes at rest") {
  const auto e = random_ensemble(40, 19);
  auto basis = std::make_shared<const gpc::SgBasis>(
      gpc::build_basis(gpc::ParameterDistribution::beta_law(2.0, 5.0), 3));
  std::vector<double> c(40 * 4 * 2, 0.0);
  for (std::size_t i = 0; i < 40; ++i) {
    c[i * 8] = e.x[i];
    c[i * 8 + 1] = e.y[i];
  }
  const SgState s = make_state(basis, c, -1.0, 0.0, 1.0 / 16.0, 0.1);
  const auto rhs = sg_rhs(s, {});
  for (std::size_t i = 0; i < 40; ++i) {
    for (std::size_t m = 1; m < 4; ++m) {
      CHECK(std::fabs(rhs[(i * 4 + m) * 2]) < 1e-13);
      CHECK(std::fabs(rhs[(i * 4 + m) * 2 + 1]) < 1e-13);
    }
  }
}

TEST_CASE("sG step conserves momentum at every node") {
  auto basis = std::make_shared<const gpc::SgBasis>(
      gpc::build_basis(gpc::ParameterDistribution::uniform(), 3));
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> c(60 * 4 * 2);
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = (k % 8 < 2 ? 1.0 : 0.1) * g(rng);
  }
  const SgState s = make_state(basis, c, 0.0, -3.0, 1.0 / 16.0, 0.1);
  const SgState next = sg_euler_step(s, 0.01, {});
  CHECK(next.time == doctest::Approx(0.01));
  for (std::size_t l = 0; l < basis->nodes(); ++l) {
    const auto a = s.nodal_ensemble(l);
    const auto b = next.nodal_ensemble(l);
    double dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      dx += a.w[i] * (b.x[i] - a.x[i]);
      dy += a.w[i] * (b.y[i] - a.y[i]);
    }
    CHECK(std::fabs(dx) < 1e-12);
    CHECK(std::fabs(dy) < 1e-12);
  }
  SgState broken = s;
  broken.node_params.pop_back();
  CHECK_THROWS_AS(sg_rhs(broken, {}), ShapeError);
}

TEST_CASE("ensemble and grid validation") {
  ParticleEnsemble e;
  e.x = {1.0, 2.0};
  e.y = {1.0};
  e.w = {0.5, 0.5};
  CHECK_THROWS_AS(e.validate(), ShapeError);
  e.y = {1.0, 2.0};
  e.w = {0.5, 0.4};
  CHECK_THROWS_AS(e.validate(), ParameterError);
  CHECK_THROWS_AS((VelocityGrid{0.0, 10}.validate()), ParameterError);
  CHECK(default_epsilon(900, 4.0) == doctest::Approx(std::pow(8.0 / 30.0, 2)));
}

}
