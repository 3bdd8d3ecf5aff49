#ifndef LANDAU_TESTS_ORACLES_HPP
#define LANDAU_TESTS_ORACLES_HPP

// Brute-force reference implementations sharing no code with the library:
// explicit loops, dense 2x2 matrices and an independent Gauss-Legendre rule.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

struct Particles {
  std::vector<double> x, y, w;
  std::size_t size() const { return x.size(); }
};

inline double psi(double qx, double qy, double eps) {
  return std::exp(-(qx * qx + qy * qy) / (2.0 * eps)) / (2.0 * std::numbers::pi * eps);
}

inline double density(const Particles& p, double vx, double vy, double eps) {
  double f = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    f += p.w[j] * psi(vx - p.x[j], vy - p.y[j], eps);
  }
  return f;
}

/// grad f(v_i)/f(v_i) + sum_k w_k grad psi(v_i - v_k)/f(v_k), from scratch.
inline std::array<double, 2> variation(const Particles& p, std::size_t i, double eps) {
  double f_i = 0.0, gfx = 0.0, gfy = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double qx = p.x[i] - p.x[j];
    const double qy = p.y[i] - p.y[j];
    const double s = psi(qx, qy, eps);
    f_i += p.w[j] * s;
    gfx += p.w[j] * (-qx / eps) * s;
    gfy += p.w[j] * (-qy / eps) * s;
  }
  double sx = gfx / f_i;
  double sy = gfy / f_i;
  for (std::size_t k = 0; k < p.size(); ++k) {
    double f_k = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      f_k += p.w[j] * psi(p.x[k] - p.x[j], p.y[k] - p.y[j], eps);
    }
    const double qx = p.x[i] - p.x[k];
    const double qy = p.y[i] - p.y[k];
    const double s = psi(qx, qy, eps);
    sx += p.w[k] * (-qx / eps) * s / f_k;
    sy += p.w[k] * (-qy / eps) * s / f_k;
  }
  return {sx, sy};
}

/// Dense A(q) = C |q|^(gamma+2) (I - q q^T / |q|^2).
inline std::array<double, 4> matrix(double qx, double qy, double gamma, double c) {
  const double r2 = qx * qx + qy * qy;
  if (std::sqrt(r2) < 1e-10) {
    return {0.0, 0.0, 0.0, 0.0};
  }
  const double s = c * std::pow(std::sqrt(r2), gamma + 2.0);
  return {s * (1.0 - qx * qx / r2), -s * qx * qy / r2, -s * qx * qy / r2, s * (1.0 - qy * qy / r2)};
}

/// U_i = -sum_j w_j A(v_i - v_j)(g_i - g_j), recomputing every g inside the pair loop.
inline std::vector<std::array<double, 2>> field(const Particles& p, double gamma, double c, double eps) {
  std::vector<std::array<double, 2>> u(p.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto gi = variation(p, i, eps);
      const auto gj = variation(p, j, eps);
      const double bx = gi[0] - gj[0];
      const double by = gi[1] - gj[1];
      const auto a = matrix(p.x[i] - p.x[j], p.y[i] - p.y[j], gamma, c);
      u[i][0] -= p.w[j] * (a[0] * bx + a[1] * by);
      u[i][1] -= p.w[j] * (a[2] * bx + a[3] * by);
    }
  }
  return u;
}

/// 1/2 sum_ij w_i w_j b_ij . A_ij b_ij.
inline double dissipation(const Particles& p, double gamma, double c, double eps) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto gi = variation(p, i, eps);
      const auto gj = variation(p, j, eps);
      const double bx = gi[0] - gj[0];
      const double by = gi[1] - gj[1];
      const auto a = matrix(p.x[i] - p.x[j], p.y[i] - p.y[j], gamma, c);
      d += 0.5 * p.w[i] * p.w[j] * (bx * (a[0] * bx + a[1] * by) + by * (a[2] * bx + a[3] * by));
    }
  }
  return d;
}

/// Gauss-Legendre rule mapped to [0, 1] with weights summing to 1 (Newton on P_n).
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double t = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * t * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::fabs(step) < 1e-16) {
        break;
      }
    }
    nodes[static_cast<std::size_t>(k)] = 0.5 * (1.0 - t);
    weights[static_cast<std::size_t>(k)] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

/// Orthonormal shifted Legendre polynomial of degree m at z in [0, 1].
inline double legendre(int m, double z) {
  const double t = 2.0 * z - 1.0;
  double p0 = 1.0, p1 = t;
  if (m == 0) {
    return 1.0;
  }
  for (int k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return std::sqrt(2.0 * m + 1.0) * p1;
}

/// d vhat_{i,m}/dt for a uniform parameter: evaluate at each node, triple-loop field, project.
/// coeff[i][m] = {x, y}.
inline std::vector<std::vector<std::array<double, 2>>> sg_rhs(
    const std::vector<std::vector<std::array<double, 2>>>& coeff, const std::vector<double>& w,
    int nodes, double gamma0, double gamma1, double c, double eps) {
  std::vector<double> z, omega;
  gauss_legendre(nodes, z, omega);
  const std::size_t n = coeff.size();
  const int modes = static_cast<int>(coeff[0].size());
  std::vector<std::vector<std::array<double, 2>>> rhs(
      n, std::vector<std::array<double, 2>>(static_cast<std::size_t>(modes), {0.0, 0.0}));
  for (int l = 0; l < nodes; ++l) {
    Particles p;
    p.w = w;
    for (std::size_t i = 0; i < n; ++i) {
      double vx = 0.0, vy = 0.0;
      for (int m = 0; m < modes; ++m) {
        vx += coeff[i][static_cast<std::size_t>(m)][0] * legendre(m, z[static_cast<std::size_t>(l)]);
        vy += coeff[i][static_cast<std::size_t>(m)][1] * legendre(m, z[static_cast<std::size_t>(l)]);
      }
      p.x.push_back(vx);
      p.y.push_back(vy);
    }
    const auto u = field(p, gamma0 + gamma1 * z[static_cast<std::size_t>(l)], c, eps);
    for (std::size_t i = 0; i < n; ++i) {
      for (int m = 0; m < modes; ++m) {
        const double f = legendre(m, z[static_cast<std::size_t>(l)]) * omega[static_cast<std::size_t>(l)];
        rhs[i][static_cast<std::size_t>(m)][0] += f * u[i][0];
        rhs[i][static_cast<std::size_t>(m)][1] += f * u[i][1];
      }
    }
  }
  return rhs;
}

}  // namespace oracle

#endif  // LANDAU_TESTS_ORACLES_HPP
