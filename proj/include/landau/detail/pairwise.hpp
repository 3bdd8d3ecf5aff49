#ifndef LANDAU_DETAIL_PAIRWISE_HPP
#define LANDAU_DETAIL_PAIRWISE_HPP

// O(N^2) particle-pair sums behind the solver and the diagnostics.
//
// Symmetric sums visit each unordered pair once. Pairs are split into row blocks
// fixed by N alone; every block accumulates privately and blocks are reduced in
// index order, so results do not depend on the number of threads.

#include <span>

namespace landau::detail {

/// Structure-of-arrays view of a weighted particle set.
struct ParticleSpan {
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> w;

  std::size_t size() const { return x.size(); }
};

/// Blob density f(v) = sum_j w_j psi_eps(v - v_j) and its gradient at each target point.
/// grad_x/grad_y may be empty when only the density is needed.
void blob_density(ParticleSpan particles, std::span<const double> tx, std::span<const double> ty,
                  double epsilon, std::span<double> density, std::span<double> grad_x,
                  std::span<double> grad_y);

/// Gradient of the anti-symmetric entropy variation at every particle:
///   g_i = grad f(v_i) / f(v_i) + sum_k w_k grad psi_eps(v_i - v_k) / f(v_k).
/// Also returns f(v_i) in `density` when it is non-empty.
void antisymmetric_variation(ParticleSpan particles, double epsilon, std::span<double> gx,
                             std::span<double> gy, std::span<double> density);

/// U_i = -sum_j w_j A(v_i - v_j) (g_i - g_j).
void collision_field(ParticleSpan particles, std::span<const double> gx,
                     std::span<const double> gy, double gamma, double strength,
                     std::span<double> ux, std::span<double> uy);

/// D = 1/2 sum_ij w_i w_j b_ij . A(v_i - v_j) b_ij with b_ij = g_i - g_j.
double dissipation(ParticleSpan particles, std::span<const double> gx,
                   std::span<const double> gy, double gamma, double strength);

}  // namespace landau::detail

#endif  // LANDAU_DETAIL_PAIRWISE_HPP
