// Independent reference implementations used only by tests. These must not
// share code paths with the library routines they check.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "sixr/dh.hpp"
#include "sixr/grid.hpp"
#include "sixr/scalar_field.hpp"
#include "sixr/topology.hpp"

namespace oracles {

using Mat4 = Eigen::Matrix4d;

// --- elementary-matrix DH oracle ---------------------------------------------

inline Mat4 rot_z(double t) {
  Mat4 m = Mat4::Identity();
  m(0, 0) = std::cos(t);
  m(0, 1) = -std::sin(t);
  m(1, 0) = std::sin(t);
  m(1, 1) = std::cos(t);
  return m;
}

inline Mat4 rot_x(double t) {
  Mat4 m = Mat4::Identity();
  m(1, 1) = std::cos(t);
  m(1, 2) = -std::sin(t);
  m(2, 1) = std::sin(t);
  m(2, 2) = std::cos(t);
  return m;
}

inline Mat4 trans(double x, double y, double z) {
  Mat4 m = Mat4::Identity();
  m(0, 3) = x;
  m(1, 3) = y;
  m(2, 3) = z;
  return m;
}

/// Product of the four elementary transforms, composed explicitly.
inline Mat4 dh_elementary(const sixr::DHRow& row, double theta) {
  return rot_z(theta + row.theta_offset) * trans(0, 0, row.d) * trans(row.a, 0, 0) *
         rot_x(row.alpha);
}

/// Left fold of the elementary link matrices: the end-effector pose.
inline Mat4 fk_chain(const sixr::ManipulatorModel& model, const Eigen::Matrix<double, 6, 1>& x) {
  Mat4 m = Mat4::Identity();
  for (int i = 0; i < 6; ++i) m = m * dh_elementary(model.rows[static_cast<std::size_t>(i)], x[i]);
  return m;
}

// --- cofactor-expansion determinant (long double) ----------------------------

inline long double det_cofactor(const std::vector<long double>& a, int n) {
  if (n == 1) return a[0];
  long double det = 0.0L;
  std::vector<long double> minor(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int col = 0; col < n; ++col) {
    for (int r = 1; r < n; ++r) {
      int mc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor[static_cast<std::size_t>((r - 1) * (n - 1) + mc++)] =
            a[static_cast<std::size_t>(r * n + c)];
      }
    }
    const long double sign = (col % 2 == 0) ? 1.0L : -1.0L;
    det += sign * a[static_cast<std::size_t>(col)] * det_cofactor(minor, n - 1);
  }
  return det;
}

inline long double det6_cofactor(const Eigen::Matrix<double, 6, 6>& m) {
  std::vector<long double> a(36);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) a[static_cast<std::size_t>(r * 6 + c)] = m(r, c);
  return det_cofactor(a, 6);
}

// --- finite-difference twist oracle ------------------------------------------

/// Rotation log (axis * angle) of a near-identity rotation.
inline Eigen::Vector3d rotation_log(const Eigen::Matrix3d& r) {
  const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(c);
  Eigen::Vector3d axis(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  if (angle < 1e-12) return axis / 2.0;
  return axis * (angle / (2.0 * std::sin(angle)));
}

/// Central-difference end-effector twist for a perturbation of joint i:
/// angular via rotation log, linear via position difference.
inline Eigen::Matrix<double, 6, 1> fd_twist(const sixr::ManipulatorModel& model,
                                            const Eigen::Matrix<double, 6, 1>& x, int joint,
                                            double h) {
  auto xp = x, xm = x;
  xp[joint] += h;
  xm[joint] -= h;
  const Mat4 tp = fk_chain(model, xp);
  const Mat4 tm = fk_chain(model, xm);
  const Eigen::Matrix3d dr = tp.topLeftCorner<3, 3>() * tm.topLeftCorner<3, 3>().transpose();
  Eigen::Matrix<double, 6, 1> twist;
  twist.head<3>() = rotation_log(dr) / (2.0 * h);
  twist.tail<3>() = (tp.topRightCorner<3, 1>() - tm.topRightCorner<3, 1>()) / (2.0 * h);
  return twist;
}

// --- breadth-first component oracle ------------------------------------------

template <int D>
std::vector<std::vector<std::int64_t>> bfs_components(const sixr::ZeroCellSet<D>& cells) {
  std::set<std::int64_t> unvisited(cells.cells.begin(), cells.cells.end());
  std::vector<std::vector<std::int64_t>> components;
  while (!unvisited.empty()) {
    std::vector<std::int64_t> comp;
    std::deque<std::int64_t> queue = {*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      const std::int64_t cell = queue.front();
      queue.pop_front();
      comp.push_back(cell);
      const auto coords = cells.grid.coords(cell);
      for (int axis = 0; axis < D; ++axis) {
        for (int step : {-1, 1}) {
          auto c = coords;
          c[axis] = cells.grid.wrap(axis, c[axis] + step);
          const std::int64_t nb = cells.grid.index(c);
          auto it = unvisited.find(nb);
          if (it != unvisited.end()) {
            unvisited.erase(it);
            queue.push_back(nb);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end());
  return components;
}

// --- marching-squares contour tracer (2D) ------------------------------------
//
// Traces the zero curves of a sampled field on the 2-torus by following
// interpolated edge crossings from cell to cell. Curves are oriented with
// the positive side on the left; windings count parametrized wraps (w2, w3).
// The pipeline's signed class relates to these as (I2, I3) = (-w3, +w2).

struct TracedCurve {
  int winding_x2 = 0;
  int winding_x3 = 0;
  int steps = 0;
  bool closed = false;
  bool separating() const { return winding_x2 == 0 && winding_x3 == 0; }
};

class ContourTracer {
 public:
  ContourTracer(const sixr::ScalarField2& field, const sixr::AngleFn2& fn)
      : field_(field), fn_(fn) {}

  std::vector<TracedCurve> trace() {
    curves_.clear();
    visited_.clear();
    const auto& g = field_.grid;
    for (int i = 0; i < g.n[0]; ++i)
      for (int j = 0; j < g.n[1]; ++j)
        for (int side = 0; side < 4; ++side) {
          const Cell cell{i, j};
          if (!side_crossing(cell, side)) continue;
          if (visited_.count(edge_id(cell, side))) continue;
          follow(cell, side);
        }
    std::sort(curves_.begin(), curves_.end(), [](const TracedCurve& a, const TracedCurve& b) {
      return std::tie(a.winding_x2, a.winding_x3, a.steps) <
             std::tie(b.winding_x2, b.winding_x3, b.steps);
    });
    return curves_;
  }

 private:
  struct Cell {
    int i, j;
    bool operator==(const Cell& o) const { return i == o.i && j == o.j; }
  };

  double value(int i, int j) const {
    const auto& g = field_.grid;
    return field_.values[static_cast<std::size_t>(g.index({g.wrap(0, i), g.wrap(1, j)}))];
  }

  // corners: A=(i,j) B=(i+1,j) C=(i+1,j+1) D=(i,j+1); axis 0 runs with i.
  // sides: 0 = A-B, 1 = B-C, 2 = D-C, 3 = A-D.
  bool side_crossing(Cell c, int side) const {
    double v0, v1;
    corner_values(c, side, v0, v1);
    return (v0 > 0) != (v1 > 0);
  }

  void corner_values(Cell c, int side, double& v0, double& v1) const {
    switch (side) {
      case 0: v0 = value(c.i, c.j); v1 = value(c.i + 1, c.j); break;
      case 1: v0 = value(c.i + 1, c.j); v1 = value(c.i + 1, c.j + 1); break;
      case 2: v0 = value(c.i, c.j + 1); v1 = value(c.i + 1, c.j + 1); break;
      default: v0 = value(c.i, c.j); v1 = value(c.i, c.j + 1); break;
    }
  }

  /// Unique id of the undirected grid edge carrying this cell side.
  std::int64_t edge_id(Cell c, int side) const {
    const auto& g = field_.grid;
    int i = c.i, j = c.j, dir;
    switch (side) {
      case 0: dir = 0; break;
      case 1: dir = 1; i = c.i + 1; break;
      case 2: dir = 0; j = c.j + 1; break;
      default: dir = 1; break;
    }
    i = g.wrap(0, i);
    j = g.wrap(1, j);
    return (static_cast<std::int64_t>(i) * g.n[1] + j) * 2 + dir;
  }

  /// Crossing point on a cell side, anchored to the cell's base corner (so
  /// coordinates within one cell never wrap).
  std::array<double, 2> side_point(Cell c, int side) const {
    const auto& g = field_.grid;
    const double u = g.node_angle(0, c.i), v = g.node_angle(1, c.j);
    const double h0 = g.spacing(0), h1 = g.spacing(1);
    double v0, v1;
    corner_values(c, side, v0, v1);
    const double t = v0 / (v0 - v1);
    switch (side) {
      case 0: return {u + t * h0, v};
      case 1: return {u + h0, v + t * h1};
      case 2: return {u + t * h0, v + h1};
      default: return {u, v + t * h1};
    }
  }

  int exit_side(Cell c, int in_side) const {
    std::vector<int> sides;
    for (int s = 0; s < 4; ++s)
      if (side_crossing(c, s)) sides.push_back(s);
    if (sides.size() == 2) return sides[0] == in_side ? sides[1] : sides[0];
    if (sides.size() == 4) {
      // saddle: the center sample decides which crossings pair up
      const auto& g = field_.grid;
      const std::array<double, 2> center = {g.node_angle(0, c.i) + 0.5 * g.spacing(0),
                                            g.node_angle(1, c.j) + 0.5 * g.spacing(1)};
      const bool center_pos = fn_(center) > 0;
      const bool corner_a_pos = value(c.i, c.j) > 0;
      if (center_pos == corner_a_pos) {
        // corners A and C connect through the middle: pair {0,3} and {1,2}
        switch (in_side) {
          case 0: return 3;
          case 3: return 0;
          case 1: return 2;
          default: return 1;
        }
      }
      switch (in_side) {  // pair {0,1} and {2,3}
        case 0: return 1;
        case 1: return 0;
        case 2: return 3;
        default: return 2;
      }
    }
    return -1;
  }

  Cell neighbor(Cell c, int side, int& enter_side) const {
    const auto& g = field_.grid;
    switch (side) {
      case 0: enter_side = 2; return {c.i, g.wrap(1, c.j - 1)};
      case 1: enter_side = 3; return {g.wrap(0, c.i + 1), c.j};
      case 2: enter_side = 0; return {c.i, g.wrap(1, c.j + 1)};
      default: enter_side = 1; return {g.wrap(0, c.i - 1), c.j};
    }
  }

  void follow(Cell start, int start_side) {
    TracedCurve curve;
    Cell cell = start;
    int in_side = start_side;
    double acc0 = 0.0, acc1 = 0.0;
    double first_d0 = 0.0, first_d1 = 0.0;
    std::array<double, 2> first_point = side_point(start, start_side);
    const std::int64_t limit = 8 * field_.grid.node_count();

    while (true) {
      visited_.insert(edge_id(cell, in_side));
      const int out = exit_side(cell, in_side);
      if (out < 0) break;  // inconsistent cell, abandon this trace
      visited_.insert(edge_id(cell, out));
      const auto p_in = side_point(cell, in_side);
      const auto p_out = side_point(cell, out);
      acc0 += p_out[0] - p_in[0];
      acc1 += p_out[1] - p_in[1];
      if (curve.steps == 0) {
        first_d0 = p_out[0] - p_in[0];
        first_d1 = p_out[1] - p_in[1];
      }
      ++curve.steps;
      int enter = 0;
      cell = neighbor(cell, out, enter);
      in_side = enter;
      if (cell == start && in_side == start_side) {
        curve.closed = true;
        break;
      }
      if (curve.steps > limit) break;
    }
    if (!curve.closed) {
      curves_.push_back(curve);
      return;
    }

    int w2 = static_cast<int>(std::lround(acc0 / (2.0 * sixr::kPi)));
    int w3 = static_cast<int>(std::lround(acc1 / (2.0 * sixr::kPi)));

    // orient with the positive side on the left of the travel direction
    const double len = std::hypot(first_d0, first_d1);
    if (len > 0) {
      const std::array<double, 2> probe = {first_point[0] + 0.5 * first_d0 - 0.4 * first_d1,
                                           first_point[1] + 0.5 * first_d1 + 0.4 * first_d0};
      if (fn_(probe) < 0) {
        w2 = -w2;
        w3 = -w3;
      }
    }
    curve.winding_x2 = w2;
    curve.winding_x3 = w3;
    curves_.push_back(curve);
  }

  sixr::ScalarField2 field_;
  sixr::AngleFn2 fn_;
  std::vector<TracedCurve> curves_;
  std::set<std::int64_t> visited_;
};

// --- polynomial fit helper -----------------------------------------------------

/// Max residual of the best degree-`deg` polynomial through samples (q, y).
inline double poly_fit_residual(const std::vector<double>& q, const std::vector<double>& y,
                                int deg) {
  const int m = static_cast<int>(q.size());
  Eigen::MatrixXd vand(m, deg + 1);
  for (int r = 0; r < m; ++r) {
    double p = 1.0;
    for (int c = 0; c <= deg; ++c) {
      vand(r, c) = p;
      p *= q[static_cast<std::size_t>(r)];
    }
  }
  Eigen::Map<const Eigen::VectorXd> rhs(y.data(), m);
  const Eigen::VectorXd coef = vand.colPivHouseholderQr().solve(rhs);
  return (vand * coef - rhs).cwiseAbs().maxCoeff();
}

}  // namespace oracles
