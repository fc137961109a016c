#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixr/dh.hpp"
#include "sixr/kinematics.hpp"
#include "sixr/rng.hpp"
#include "sixr/scalar_field.hpp"
#include "sixr/topology.hpp"

namespace sixr {

enum class Genericity { generic, non_generic, undetermined };

inline const char* to_string(Genericity g) {
  switch (g) {
    case Genericity::generic: return "generic";
    case Genericity::non_generic: return "non-generic";
    default: return "undetermined";
  }
}

struct GenericityResult {
  Genericity verdict = Genericity::undetermined;
  int witness_corank = 0;
  std::vector<double> witness;  ///< torus angles of a corank >= 2 point, if found
  int samples_checked = 0;
  int samples_skipped = 0;
  std::string note;
};

namespace detail {

/// Orthonormal basis of the hyperplane orthogonal to g (D-1 vectors).
template <int D>
std::vector<std::array<double, D>> tangent_basis(const std::array<double, D>& g) {
  // Gram-Schmidt of the coordinate axes against g.
  std::vector<std::array<double, D>> basis;
  double gn = 0.0;
  for (double v : g) gn += v * v;
  gn = std::sqrt(gn);
  std::array<double, D> gu{};
  for (int j = 0; j < D; ++j) gu[j] = g[j] / gn;
  for (int axis = 0; axis < D && static_cast<int>(basis.size()) < D - 1; ++axis) {
    std::array<double, D> v{};
    v[axis] = 1.0;
    double dot = gu[axis];
    for (int j = 0; j < D; ++j) v[j] -= dot * gu[j];
    for (const auto& b : basis) {
      double d = 0.0;
      for (int j = 0; j < D; ++j) d += v[j] * b[j];
      for (int j = 0; j < D; ++j) v[j] -= d * b[j];
    }
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (n < 1e-8) continue;
    for (int j = 0; j < D; ++j) v[j] /= n;
    basis.push_back(v);
  }
  return basis;
}

template <int D, typename DetFn>
std::array<double, D> fd_gradient(const DetFn& f, const std::array<double, D>& x, double h) {
  std::array<double, D> g{};
  for (int j = 0; j < D; ++j) {
    auto xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    g[j] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

/// Pull a point back onto {f = 0} along the gradient direction.
template <int D, typename DetFn>
bool project_to_surface(const DetFn& f, std::array<double, D>& x, double f_floor) {
  for (int it = 0; it < 8; ++it) {
    const double v = f(x);
    if (std::abs(v) <= f_floor) return true;
    const auto g = fd_gradient<D>(f, x, 1e-6);
    double gn2 = 0.0;
    for (double c : g) gn2 += c * c;
    if (gn2 < 1e-30) return false;
    for (int j = 0; j < D; ++j) x[j] -= v * g[j] / gn2;
  }
  return std::abs(f(x)) <= 16.0 * f_floor;
}

/// Sharpen a located singular configuration: walk the singular surface from
/// `start` toward the minimum of the corank indicator (second-smallest over
/// largest singular value), staying within `radius` of the start. Where two
/// surface sheets cross transversally the indicator reaches zero inside the
/// surrounding cell, which is exactly a corank >= 2 point; on a smooth piece
/// of surface it stays bounded away from zero.
///
/// The radius matters: every arm, degenerate or not, has isolated corank-2
/// pinch points (a codimension-4 condition), but only structurally degenerate
/// arms carry positive-dimensional corank-2 loci. Keeping the walk local
/// makes the hit probability scale with the locus dimension, so random edge
/// sampling finds crossing loci and ignores isolated pinches.
template <int D, typename DetFn, typename IndFn>
std::array<double, D> descend_indicator(const DetFn& f, const IndFn& indicator,
                                        const std::array<double, D>& start, double step,
                                        double radius, double f_floor) {
  std::array<double, D> best = start;
  double best_r = indicator(best);
  double s = step;
  for (int round = 0; round < 120 && s > 1e-11; ++round) {
    const auto g = fd_gradient<D>(f, best, 1e-6);
    double gn = 0.0;
    for (double c : g) gn += c * c;
    if (gn < 1e-30) break;  // gradient vanishes: already at a degenerate point
    const auto basis = tangent_basis<D>(g);
    bool improved = false;
    for (const auto& t : basis) {
      for (double dir : {1.0, -1.0}) {
        auto trial = best;
        for (int j = 0; j < D; ++j) trial[j] += dir * s * t[j];
        if (!project_to_surface<D>(f, trial, f_floor)) continue;
        double dist2 = 0.0;
        for (int j = 0; j < D; ++j) dist2 += (trial[j] - start[j]) * (trial[j] - start[j]);
        if (dist2 > radius * radius) continue;
        const double r = indicator(trial);
        if (r < best_r) {
          best_r = r;
          best = trial;
          improved = true;
        }
      }
    }
    if (!improved) s *= 0.5;
  }
  return best;
}

}  // namespace detail

/// Shared engine over a D-torus sign field: pick random sign-change edges,
/// bisect det along each to land on the singular surface, then descend the
/// corank indicator along the surface and measure the corank at the end.
template <int D, typename DetFn, typename IndFn, typename CorankFn>
GenericityResult check_genericity_engine(const SignField<D>& signs, const ScalarField<D>& field,
                                         const DetFn& f, const IndFn& indicator,
                                         const CorankFn& corank_of, int samples, double tol,
                                         std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("check_genericity: samples must be >= 100");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("check_genericity: tol in (0,1)");

  GenericityResult result;
  const double scale = field.abs_max();
  if (scale == 0.0) {
    result.verdict = Genericity::non_generic;
    result.note = "field numerically zero";
    return result;
  }

  const auto& g = signs.grid;
  const std::int64_t total = g.node_count();

  // count sign-change edges, then pick sampled ranks in a second pass
  std::int64_t edge_total = 0;
  for (std::int64_t u = 0; u < total; ++u)
    for (int axis = 0; axis < D; ++axis)
      if (signs.signs[static_cast<std::size_t>(u)] !=
          signs.signs[static_cast<std::size_t>(g.neighbor(u, axis))])
        ++edge_total;
  if (edge_total == 0) {
    result.verdict = Genericity::generic;
    result.note = "empty zero set";
    return result;
  }

  SplitMix64 rng(seed);
  const int want = samples;
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(2 * want));
  for (std::size_t i = 0; i < ranks.size(); ++i)
    ranks[i] = static_cast<std::int64_t>(rng.at(i) % static_cast<std::uint64_t>(edge_total));
  std::sort(ranks.begin(), ranks.end());

  const double f_floor = 1e-13 * scale;
  double min_step = g.spacing(0), max_step = 0.0;
  for (int j = 0; j < D; ++j) {
    min_step = std::min(min_step, g.spacing(j));
    max_step = std::max(max_step, g.spacing(j));
  }
  const double radius = 1.5 * max_step;

  std::int64_t rank_pos = 0, edge_seen = 0;
  for (std::int64_t u = 0; u < total && rank_pos < static_cast<std::int64_t>(ranks.size()) &&
                           result.samples_checked < want;
       ++u) {
    for (int axis = 0; axis < D; ++axis) {
      if (signs.signs[static_cast<std::size_t>(u)] ==
          signs.signs[static_cast<std::size_t>(g.neighbor(u, axis))])
        continue;
      bool selected = false;
      while (rank_pos < static_cast<std::int64_t>(ranks.size()) &&
             ranks[static_cast<std::size_t>(rank_pos)] == edge_seen) {
        selected = true;
        ++rank_pos;
      }
      ++edge_seen;
      if (!selected || result.samples_checked >= want) continue;

      auto xa = g.angles(g.coords(u));
      auto xb = xa;
      xb[axis] += g.spacing(axis);
      double fa = f(xa), fb = f(xb);
      if (fa == 0.0) fa = -static_cast<double>(signs.signs[static_cast<std::size_t>(u)]) * f_floor;
      if ((fa > 0.0) == (fb > 0.0)) {
        ++result.samples_skipped;  // band artifact, no true bracket on this edge
        continue;
      }
      for (int it = 0; it < 90; ++it) {
        auto xm = xa;
        xm[axis] = 0.5 * (xa[axis] + xb[axis]);
        const double fm = f(xm);
        if ((fm > 0.0) == (fa > 0.0)) {
          xa = xm;
          fa = fm;
        } else {
          xb = xm;
        }
      }
      auto located = xa;
      located[axis] = 0.5 * (xa[axis] + xb[axis]);
      const auto refined =
          detail::descend_indicator<D>(f, indicator, located, min_step, radius, f_floor);
      ++result.samples_checked;
      const int corank = corank_of(refined);
      if (corank >= 2) {
        result.verdict = Genericity::non_generic;
        result.witness_corank = corank;
        result.witness.assign(refined.begin(), refined.end());
        result.note = "corank >= 2 witness located on the singular surface";
        return result;
      }
    }
  }

  if (result.samples_checked == 0) {
    result.verdict = Genericity::undetermined;
    result.note = "no sampled edge produced a sign bracket";
    return result;
  }
  result.verdict = Genericity::generic;
  result.note = "all located singular configurations have corank 1";
  return result;
}

/// 6R arm over the (x2,x3,x4,x5) torus with x1 = x6 = 0.
inline GenericityResult check_genericity(const ManipulatorModel& model, const SignField4& signs,
                                         const ScalarField4& field, int samples, double tol,
                                         std::uint64_t seed) {
  const auto f = [&model](const std::array<double, 4>& x) { return det_on_torus(model, x); };
  const auto indicator = [&model](const std::array<double, 4>& x) {
    return corank2_indicator(model, JointConfig(0.0, x[0], x[1], x[2], x[3], 0.0));
  };
  const auto corank_of = [&model, tol](const std::array<double, 4>& x) {
    return jacobian_corank(model, JointConfig(0.0, x[0], x[1], x[2], x[3], 0.0), tol);
  };
  return check_genericity_engine<4>(signs, field, f, indicator, corank_of, samples, tol, seed);
}

/// 3R positioning arm over the (x2,x3) torus with x1 = 0.
inline GenericityResult check_genericity_3r(const Arm3R& arm, const SignField2& signs,
                                            const ScalarField2& field, int samples, double tol,
                                            std::uint64_t seed) {
  const auto f = [&arm](const std::array<double, 2>& x) { return det_on_torus_3r(arm, x); };
  const auto indicator = [&arm](const std::array<double, 2>& x) {
    return corank2_indicator_3r(arm, Eigen::Vector3d(0.0, x[0], x[1]));
  };
  const auto corank_of = [&arm, tol](const std::array<double, 2>& x) {
    return corank_3r(arm, Eigen::Vector3d(0.0, x[0], x[1]), tol);
  };
  return check_genericity_engine<2>(signs, field, f, indicator, corank_of, samples, tol, seed);
}

}  // namespace sixr
