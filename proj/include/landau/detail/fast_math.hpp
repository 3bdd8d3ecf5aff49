#ifndef LANDAU_DETAIL_FAST_MATH_HPP
#define LANDAU_DETAIL_FAST_MATH_HPP

// Branch-free exp/log that the compiler can inline and vectorize inside the
// O(N^2) pair loops. Both are accurate to a couple of ulp on their ranges.

#include <bit>
#include <cstdint>

namespace landau::detail {

/// e^x for x <= 709; returns 0 below -708 (the mollifier tail).
inline double exp_fast(double x) {
  constexpr double kLog2e = 1.4426950408889634074;
  constexpr double kLn2Hi = 6.93147180369123816490e-01;
  constexpr double kLn2Lo = 1.90821492927058770002e-10;
  constexpr double kShifter = 0x1.8p52;

  const double xc = x < -708.0 ? -708.0 : (x > 709.0 ? 709.0 : x);
  const double kd_shifted = xc * kLog2e + kShifter;
  const std::int64_t k =
      std::bit_cast<std::int64_t>(kd_shifted) - std::bit_cast<std::int64_t>(kShifter);
  const double kd = kd_shifted - kShifter;
  const double r = (xc - kd * kLn2Hi) - kd * kLn2Lo;

  // Taylor series of e^r on |r| <= ln2/2, truncation below 1e-17.
  double p = 1.0 / 6227020800.0;
  p = p * r + 1.0 / 479001600.0;
  p = p * r + 1.0 / 39916800.0;
  p = p * r + 1.0 / 3628800.0;
  p = p * r + 1.0 / 362880.0;
  p = p * r + 1.0 / 40320.0;
  p = p * r + 1.0 / 5040.0;
  p = p * r + 1.0 / 720.0;
  p = p * r + 1.0 / 120.0;
  p = p * r + 1.0 / 24.0;
  p = p * r + 1.0 / 6.0;
  p = p * r + 0.5;
  p = p * r + 1.0;
  p = p * r + 1.0;

  const double scale = std::bit_cast<double>(static_cast<std::uint64_t>(k + 1023) << 52);
  return x < -708.0 ? 0.0 : p * scale;
}

/// Natural log for positive normal x.
inline double log_fast(double x) {
  constexpr double kLn2 = 0.69314718055994530942;
  constexpr double kSqrtHalf = 0.70710678118654752440;

  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  std::int64_t e = static_cast<std::int64_t>((bits >> 52) & 0x7ff) - 1023;
  double m = std::bit_cast<double>((bits & 0x000fffffffffffffULL) | 0x3ff0000000000000ULL);
  // m in [1,2); fold to [sqrt(1/2), sqrt(2)).
  const bool fold = m > 2.0 * kSqrtHalf;
  m = fold ? 0.5 * m : m;
  e = fold ? e + 1 : e;

  const double s = (m - 1.0) / (m + 1.0);
  const double s2 = s * s;
  // atanh series: log m = 2 (s + s^3/3 + s^5/5 + ...), |s| <= 0.1716.
  double p = 1.0 / 23.0;
  p = p * s2 + 1.0 / 21.0;
  p = p * s2 + 1.0 / 19.0;
  p = p * s2 + 1.0 / 17.0;
  p = p * s2 + 1.0 / 15.0;
  p = p * s2 + 1.0 / 13.0;
  p = p * s2 + 1.0 / 11.0;
  p = p * s2 + 1.0 / 9.0;
  p = p * s2 + 1.0 / 7.0;
  p = p * s2 + 1.0 / 5.0;
  p = p * s2 + 1.0 / 3.0;
  const double log_m = 2.0 * s + 2.0 * s * s2 * p;
  return static_cast<double>(e) * kLn2 + log_m;
}

}  // namespace landau::detail

#endif  // LANDAU_DETAIL_FAST_MATH_HPP
