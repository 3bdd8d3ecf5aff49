#include "landau/detail/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "landau/detail/fast_math.hpp"
#include "landau/kernels.hpp"

namespace landau::detail {

namespace {

constexpr double kCutoff2 = kernels::kCoincidenceCutoff * kernels::kCoincidenceCutoff;

// Upper bound on the number of row blocks of the pair triangle. The layout
// depends only on N, never on the worker count.
constexpr std::ptrdiff_t kMaxBlocks = 32;

// |q|^gamma as a function of |q|^2, specialised for the exponents the presets use.
struct MaxwellScale {
  double operator()(double) const { return 1.0; }
};
struct CoulombScale {
  double operator()(double r2) const { return 1.0 / (r2 * std::sqrt(r2)); }
};
struct PowerScale {
  double half_gamma;
  double operator()(double r2) const { return exp_fast(half_gamma * log_fast(r2)); }
};

template <class Body>
void dispatch_scale(double gamma, Body&& body) {
  if (gamma == 0.0) {
    body(MaxwellScale{});
  } else if (gamma == -3.0) {
    body(CoulombScale{});
  } else {
    body(PowerScale{0.5 * gamma});
  }
}

/// Row boundaries splitting the strict upper pair triangle into blocks of
/// roughly equal pair count.
std::vector<std::ptrdiff_t> triangle_blocks(std::ptrdiff_t n) {
  const std::ptrdiff_t blocks = std::clamp<std::ptrdiff_t>(n / 64, 1, kMaxBlocks);
  const double total = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  std::vector<std::ptrdiff_t> first(static_cast<std::size_t>(blocks + 1), n);
  first[0] = 0;
  std::ptrdiff_t row = 0;
  double pairs = 0.0;
  for (std::ptrdiff_t b = 1; b < blocks; ++b) {
    const double target = total * static_cast<double>(b) / static_cast<double>(blocks);
    while (row < n && pairs < target) {
      pairs += static_cast<double>(n - 1 - row);
      ++row;
    }
    first[static_cast<std::size_t>(b)] = row;
  }
  return first;
}

/// Private accumulators per block, summed in block order afterwards.
class BlockAccumulators {
 public:
  BlockAccumulators(std::ptrdiff_t n, std::ptrdiff_t arrays)
      : n_(n), arrays_(arrays), first_(triangle_blocks(n)),
        data_(static_cast<std::size_t>(blocks() * arrays * n), 0.0) {}

  std::ptrdiff_t blocks() const { return static_cast<std::ptrdiff_t>(first_.size()) - 1; }
  std::ptrdiff_t begin_row(std::ptrdiff_t b) const { return first_[static_cast<std::size_t>(b)]; }
  std::ptrdiff_t end_row(std::ptrdiff_t b) const { return first_[static_cast<std::size_t>(b + 1)]; }

  double* array(std::ptrdiff_t b, std::ptrdiff_t k) { return data_.data() + (b * arrays_ + k) * n_; }

  void reduce(std::ptrdiff_t k, double* out) const {
    const std::ptrdiff_t nb = blocks();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n_; ++j) {
      double s = 0.0;
      for (std::ptrdiff_t b = 0; b < nb; ++b) {
        s += data_[static_cast<std::size_t>((b * arrays_ + k) * n_ + j)];
      }
      out[j] = s;
    }
  }

 private:
  std::ptrdiff_t n_;
  std::ptrdiff_t arrays_;
  std::vector<std::ptrdiff_t> first_;
  std::vector<double> data_;
};

// Over pairs i < j with e = exp(-|q_ij|^2 / 2eps):
//   s_i += c_j e,  s_j += c_i e,  m_i += c_j e q_ij,  m_j -= c_i e q_ij.
void mollifier_pair_rows(const double* __restrict x, const double* __restrict y,
                         const double* __restrict c, std::ptrdiff_t n, std::ptrdiff_t lo,
                         std::ptrdiff_t hi, double exponent, double* __restrict s,
                         double* __restrict mx, double* __restrict my) {
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    const double px = x[i];
    const double py = y[i];
    const double ci = c[i];
    double si = 0.0;
    double mxi = 0.0;
    double myi = 0.0;
#pragma omp simd reduction(+ : si, mxi, myi)
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      const double dx = px - x[j];
      const double dy = py - y[j];
      const double e = exp_fast(exponent * (dx * dx + dy * dy));
      const double ej = c[j] * e;
      const double ei = ci * e;
      si += ej;
      mxi += ej * dx;
      myi += ej * dy;
      s[j] += ei;
      mx[j] -= ei * dx;
      my[j] -= ei * dy;
    }
    s[i] += si;
    mx[i] += mxi;
    my[i] += myi;
  }
}

/// (sum_{j != i} c_j e_ij, sum_{j != i} c_j e_ij q_ij) for every particle i.
void mollifier_pair_sums(ParticleSpan particles, const double* c, double exponent,
                         std::vector<double>& s, std::vector<double>& mx,
                         std::vector<double>& my) {
  const auto n = static_cast<std::ptrdiff_t>(particles.size());
  BlockAccumulators acc(n, 3);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t b = 0; b < acc.blocks(); ++b) {
    mollifier_pair_rows(particles.x.data(), particles.y.data(), c, n, acc.begin_row(b),
                        acc.end_row(b), exponent, acc.array(b, 0), acc.array(b, 1),
                        acc.array(b, 2));
  }
  s.resize(particles.size());
  mx.resize(particles.size());
  my.resize(particles.size());
  acc.reduce(0, s.data());
  acc.reduce(1, mx.data());
  acc.reduce(2, my.data());
}

// P_ij = |q|^gamma (q x b) perp(q) is antisymmetric under i <-> j, so
//   u_i -= w_j P_ij,  u_j += w_i P_ij.
template <class Scale>
void collision_pair_rows(const double* __restrict x, const double* __restrict y,
                         const double* __restrict w, const double* __restrict gx,
                         const double* __restrict gy, std::ptrdiff_t n, std::ptrdiff_t lo,
                         std::ptrdiff_t hi, Scale scale, double* __restrict ux,
                         double* __restrict uy) {
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    const double px = x[i];
    const double py = y[i];
    const double gxi = gx[i];
    const double gyi = gy[i];
    const double wi = w[i];
    double sx = 0.0;
    double sy = 0.0;
#pragma omp simd reduction(+ : sx, sy)
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      const double dx = px - x[j];
      const double dy = py - y[j];
      const double r2 = dx * dx + dy * dy;
      const bool coincident = r2 < kCutoff2;
      const double k = scale(coincident ? kCutoff2 : r2);
      const double t = coincident ? 0.0 : k * (dx * (gyi - gy[j]) - dy * (gxi - gx[j]));
      const double px_ = -t * dy;
      const double py_ = t * dx;
      sx += w[j] * px_;
      sy += w[j] * py_;
      ux[j] += wi * px_;
      uy[j] += wi * py_;
    }
    ux[i] -= sx;
    uy[i] -= sy;
  }
}

template <class Scale>
void dissipation_pair_rows(const double* __restrict x, const double* __restrict y,
                           const double* __restrict w, const double* __restrict gx,
                           const double* __restrict gy, std::ptrdiff_t n, std::ptrdiff_t lo,
                           std::ptrdiff_t hi, Scale scale, double* __restrict rows) {
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    const double px = x[i];
    const double py = y[i];
    const double gxi = gx[i];
    const double gyi = gy[i];
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      const double dx = px - x[j];
      const double dy = py - y[j];
      const double r2 = dx * dx + dy * dy;
      const bool coincident = r2 < kCutoff2;
      const double cr = dx * (gyi - gy[j]) - dy * (gxi - gx[j]);
      const double k = scale(coincident ? kCutoff2 : r2);
      acc += coincident ? 0.0 : w[j] * k * cr * cr;
    }
    rows[i] = w[i] * acc;
  }
}

}  // namespace

void blob_density(ParticleSpan particles, std::span<const double> tx, std::span<const double> ty,
                  double epsilon, std::span<double> density, std::span<double> grad_x,
                  std::span<double> grad_y) {
  const double* __restrict x = particles.x.data();
  const double* __restrict y = particles.y.data();
  const double* __restrict w = particles.w.data();
  const auto n = static_cast<std::ptrdiff_t>(particles.size());
  const auto targets = static_cast<std::ptrdiff_t>(tx.size());
  const double norm = 1.0 / (2.0 * std::numbers::pi * epsilon);
  const double exponent = -0.5 / epsilon;
  const double grad_factor = -norm / epsilon;
  const bool with_gradient = !grad_x.empty();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < targets; ++t) {
    const double px = tx[t];
    const double py = ty[t];
    double s = 0.0;
    double sx = 0.0;
    double sy = 0.0;
#pragma omp simd reduction(+ : s, sx, sy)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      const double dx = px - x[j];
      const double dy = py - y[j];
      const double e = w[j] * exp_fast(exponent * (dx * dx + dy * dy));
      s += e;
      sx += e * dx;
      sy += e * dy;
    }
    density[t] = norm * s;
    if (with_gradient) {
      grad_x[t] = grad_factor * sx;
      grad_y[t] = grad_factor * sy;
    }
  }
}

void antisymmetric_variation(ParticleSpan particles, double epsilon, std::span<double> gx,
                             std::span<double> gy, std::span<double> density) {
  const std::size_t count = particles.size();
  const double norm = 1.0 / (2.0 * std::numbers::pi * epsilon);
  const double exponent = -0.5 / epsilon;
  const double grad_factor = -norm / epsilon;

  // f(v_i) and grad f(v_i); the self term contributes w_i psi(0) and no gradient.
  std::vector<double> s, sx, sy;
  mollifier_pair_sums(particles, particles.w.data(), exponent, s, sx, sy);
  std::vector<double> f(count);
  std::vector<double> wf(count);
  for (std::size_t k = 0; k < count; ++k) {
    f[k] = norm * (s[k] + particles.w[k]);
    wf[k] = particles.w[k] / f[k];
  }

  // sum_k (w_k / f_k) grad psi(v_i - v_k)
  std::vector<double> h, hx, hy;
  mollifier_pair_sums(particles, wf.data(), exponent, h, hx, hy);
  for (std::size_t i = 0; i < count; ++i) {
    gx[i] = grad_factor * (sx[i] / f[i] + hx[i]);
    gy[i] = grad_factor * (sy[i] / f[i] + hy[i]);
  }

  if (!density.empty()) {
    std::copy(f.begin(), f.end(), density.begin());
  }
}

void collision_field(ParticleSpan particles, std::span<const double> gx,
                     std::span<const double> gy, double gamma, double strength,
                     std::span<double> ux, std::span<double> uy) {
  const auto n = static_cast<std::ptrdiff_t>(particles.size());
  BlockAccumulators acc(n, 2);
  dispatch_scale(gamma, [&](auto scale) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < acc.blocks(); ++b) {
      collision_pair_rows(particles.x.data(), particles.y.data(), particles.w.data(), gx.data(),
                          gy.data(), n, acc.begin_row(b), acc.end_row(b), scale, acc.array(b, 0),
                          acc.array(b, 1));
    }
  });
  acc.reduce(0, ux.data());
  acc.reduce(1, uy.data());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    ux[i] *= strength;
    uy[i] *= strength;
  }
}

double dissipation(ParticleSpan particles, std::span<const double> gx,
                   std::span<const double> gy, double gamma, double strength) {
  const auto n = static_cast<std::ptrdiff_t>(particles.size());
  const auto first = triangle_blocks(n);
  const auto blocks = static_cast<std::ptrdiff_t>(first.size()) - 1;
  std::vector<double> rows(particles.size(), 0.0);
  dispatch_scale(gamma, [&](auto scale) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
      dissipation_pair_rows(particles.x.data(), particles.y.data(), particles.w.data(), gx.data(),
                            gy.data(), n, first[static_cast<std::size_t>(b)],
                            first[static_cast<std::size_t>(b + 1)], scale, rows.data());
    }
  });

  // Unordered pairs, so the 1/2 of the double sum is already accounted for.
  double total = 0.0;
  for (double r : rows) {
    total += r;
  }
  return strength * total;
}

}  // namespace landau::detail
