#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sixr {

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y = kPi;
  return y;
}

/// One Denavit-Hartenberg row (classic/distal convention):
/// link transform = Rz(theta + theta_offset) * Tz(d) * Tx(a) * Rx(alpha).
struct DHRow {
  double alpha = 0.0;         ///< twist about x, radians, canonical in (-pi, pi]
  double a = 0.0;             ///< link length along x (may be negative)
  double d = 0.0;             ///< offset along z (may be negative)
  double theta_offset = 0.0;  ///< constant joint-angle offset, radians, canonical in (-pi, pi]

  DHRow() = default;
  DHRow(double alpha_, double a_, double d_, double offset_)
      : alpha(wrap_angle(alpha_)), a(a_), d(d_), theta_offset(wrap_angle(offset_)) {
    if (!std::isfinite(alpha_) || !std::isfinite(a_) || !std::isfinite(d_) ||
        !std::isfinite(offset_)) {
      throw std::invalid_argument("DHRow: non-finite parameter");
    }
  }
};

/// A 6R serial arm. length_scale is max(|a_i|, |d_i|) and falls back to 1
/// when the geometry carries no lengths; it normalizes determinant values
/// so tolerances are comparable across models.
struct ManipulatorModel {
  std::array<DHRow, 6> rows{};
  double length_scale = 1.0;
  std::string name;

  ManipulatorModel() = default;
  explicit ManipulatorModel(const std::array<DHRow, 6>& r, std::string model_name = "")
      : rows(r), name(std::move(model_name)) {
    double s = 0.0;
    for (const auto& row : rows) s = std::max({s, std::abs(row.a), std::abs(row.d)});
    length_scale = (s > 0.0) ? s : 1.0;
  }
};

/// A 3R positioning arm (first three joints of a 6R chain).
struct Arm3R {
  std::array<DHRow, 3> rows{};
  double length_scale = 1.0;
  std::string name;

  Arm3R() = default;
  explicit Arm3R(const std::array<DHRow, 3>& r, std::string arm_name = "")
      : rows(r), name(std::move(arm_name)) {
    double s = 0.0;
    for (const auto& row : rows) s = std::max({s, std::abs(row.a), std::abs(row.d)});
    length_scale = (s > 0.0) ? s : 1.0;
  }

  static Arm3R from_model(const ManipulatorModel& m) {
    return Arm3R({m.rows[0], m.rows[1], m.rows[2]}, m.name);
  }
};

/// Six joint angles in radians, each understood modulo 2*pi.
struct JointConfig {
  Eigen::Matrix<double, 6, 1> x = Eigen::Matrix<double, 6, 1>::Zero();

  JointConfig() = default;
  explicit JointConfig(const Eigen::Matrix<double, 6, 1>& angles) : x(angles) {
    if (!x.allFinite()) throw std::invalid_argument("JointConfig: non-finite angle");
  }
  JointConfig(double x1, double x2, double x3, double x4, double x5, double x6) {
    x << x1, x2, x3, x4, x5, x6;
    if (!x.allFinite()) throw std::invalid_argument("JointConfig: non-finite angle");
  }
};

}  // namespace sixr
