#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixr/dh.hpp"
#include "sixr/kinematics.hpp"
#include "sixr/rng.hpp"
#include "sixr/scalar_field.hpp"

namespace sixr {

/// Hard ceilings on the trigonometric degree of det(J) along each torus
/// axis (x2,x3,x4,x5). A trig degree b corresponds to a polynomial degree
/// 2b in the half-angle variable tan(x/2).
inline constexpr std::array<int, 4> kHarmonicBounds = {7, 6, 5, 4};

/// Maximum sign crossings a generator circle may show per axis (twice the
/// trig degree: a degree-b trig polynomial has at most 2b zeros per period).
inline constexpr std::array<int, 4> kCrossingBounds = {14, 12, 10, 8};

struct DegreeReport {
  int axis = 0;                    ///< 0..3 for x2..x5
  int bound = 0;                   ///< allowed max harmonic index
  int max_harmonic = 0;            ///< largest significant harmonic observed
  double max_suppressed_rel = 0.0; ///< largest |coef|/|coef|_max above the bound
  bool pass = false;               ///< max_harmonic <= bound
  int circles = 0;
  int samples_per_circle = 0;
};

namespace detail {

/// |c_k| for k = 0..N/2 of samples v_s taken at uniformly spaced angles.
inline std::vector<double> harmonic_magnitudes(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> mag(n / 2 + 1, 0.0);
  for (int k = 0; k <= n / 2; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (int s = 0; s < n; ++s) {
      const double ang = -2.0 * kPi * k * s / n;
      acc += v[s] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    mag[k] = std::abs(acc) / n;
  }
  return mag;
}

}  // namespace detail

/// Sample `fn` along `circles` random generator circles of `axis`, DFT each,
/// and report the largest harmonic whose magnitude exceeds rel_tol times the
/// largest magnitude.
inline DegreeReport fourier_degree(const AngleFn4& fn, int axis, int circles,
                                   int samples_per_circle, double rel_tol,
                                   std::uint64_t seed = 7u) {
  if (axis < 0 || axis > 3) throw std::invalid_argument("fourier_degree: axis must be 0..3");
  const int bound = kHarmonicBounds[axis];
  if (samples_per_circle < 4 * (bound + 1))
    throw std::invalid_argument("fourier_degree: samples_per_circle must be >= 4*(bound+1)");
  if (circles < 8) throw std::invalid_argument("fourier_degree: circles must be >= 8");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("fourier_degree: rel_tol must be positive");

  DegreeReport report;
  report.axis = axis;
  report.bound = bound;
  report.circles = circles;
  report.samples_per_circle = samples_per_circle;

  SplitMix64 rng(seed);
  std::vector<double> v(static_cast<std::size_t>(samples_per_circle));
  for (int c = 0; c < circles; ++c) {
    std::array<double, 4> base{};
    for (int j = 0; j < 4; ++j)
      base[j] = rng.uniform_at(static_cast<std::uint64_t>(c) * 4 + j, -kPi, kPi);
    for (int s = 0; s < samples_per_circle; ++s) {
      auto x = base;
      x[axis] = -kPi + (s + 0.5) * 2.0 * kPi / samples_per_circle;
      v[static_cast<std::size_t>(s)] = fn(x);
    }
    const auto mag = detail::harmonic_magnitudes(v);
    double peak = 0.0;
    for (double m : mag) peak = std::max(peak, m);
    if (peak == 0.0) continue;  // flat circle contributes nothing
    for (int k = 0; k < static_cast<int>(mag.size()); ++k) {
      if (mag[k] > rel_tol * peak) report.max_harmonic = std::max(report.max_harmonic, k);
      if (k > bound) report.max_suppressed_rel = std::max(report.max_suppressed_rel, mag[k] / peak);
    }
  }
  report.pass = report.max_harmonic <= bound;
  return report;
}

inline DegreeReport fourier_degree(const ManipulatorModel& model, int axis, int circles,
                                   int samples_per_circle, double rel_tol,
                                   std::uint64_t seed = 7u) {
  return fourier_degree(torus_det_fn(model), axis, circles, samples_per_circle, rel_tol, seed);
}

}  // namespace sixr
