#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <stdexcept>

#include "sixr/dh.hpp"
#include "sixr/rigid_transform.hpp"

namespace sixr {

using Jacobian6 = Eigen::Matrix<double, 6, 6>;  ///< columns are screws (angular; linear)

/// Link transform for one DH row: Rz(theta + offset) * Tz(d) * Tx(a) * Rx(alpha).
template <typename Scalar = double>
RigidTransformT<Scalar> dh_transform(const DHRow& row, Scalar theta) {
  if (!std::isfinite(static_cast<double>(theta)))
    throw std::invalid_argument("dh_transform: non-finite theta");
  const Scalar t = theta + static_cast<Scalar>(row.theta_offset);
  const Scalar ct = std::cos(t), st = std::sin(t);
  const Scalar ca = std::cos(static_cast<Scalar>(row.alpha));
  const Scalar sa = std::sin(static_cast<Scalar>(row.alpha));
  const Scalar a = static_cast<Scalar>(row.a), d = static_cast<Scalar>(row.d);
  RigidTransformT<Scalar> out;
  out.rotation << ct, -st * ca, st * sa,
                  st,  ct * ca, -ct * sa,
                  Scalar(0), sa, ca;
  out.translation << a * ct, a * st, d;
  return out;
}

/// Frames 0..6 in the base frame; frame 0 is the identity, frame k is
/// frame (k-1) composed with link k evaluated at joint angle x_k.
template <typename Scalar = double>
std::array<RigidTransformT<Scalar>, 7> forward_kinematics(const ManipulatorModel& model,
                                                          const Eigen::Matrix<Scalar, 6, 1>& x) {
  std::array<RigidTransformT<Scalar>, 7> frames;
  frames[0] = RigidTransformT<Scalar>::Identity();
  for (int i = 0; i < 6; ++i) frames[i + 1] = frames[i] * dh_transform<Scalar>(model.rows[i], x[i]);
  return frames;
}

inline std::array<RigidTransform, 7> forward_kinematics(const ManipulatorModel& model,
                                                        const JointConfig& config) {
  return forward_kinematics<double>(model, config.x);
}

/// Base-frame geometric Jacobian, reference point at the end-effector origin.
/// Column i is (z_{i-1}; z_{i-1} x (p_end - p_{i-1})).
template <typename Scalar = double>
Eigen::Matrix<Scalar, 6, 6> spatial_jacobian(const ManipulatorModel& model,
                                             const Eigen::Matrix<Scalar, 6, 1>& x) {
  const auto frames = forward_kinematics<Scalar>(model, x);
  const Eigen::Matrix<Scalar, 3, 1> p_end = frames[6].translation;
  Eigen::Matrix<Scalar, 6, 6> jac;
  for (int i = 0; i < 6; ++i) {
    const Eigen::Matrix<Scalar, 3, 1> z = frames[i].rotation.col(2);
    const Eigen::Matrix<Scalar, 3, 1> p = frames[i].translation;
    jac.template block<3, 1>(0, i) = z;
    jac.template block<3, 1>(3, i) = z.cross(p_end - p);
  }
  return jac;
}

inline Jacobian6 spatial_jacobian(const ManipulatorModel& model, const JointConfig& config) {
  return spatial_jacobian<double>(model, config.x);
}

/// det(J) computed by pivoted elimination, normalized by length_scale^3 (the
/// three linear rows carry one length factor each).
template <typename Scalar = double>
Scalar det_jacobian(const ManipulatorModel& model, const Eigen::Matrix<Scalar, 6, 1>& x) {
  const Eigen::Matrix<Scalar, 6, 6> jac = spatial_jacobian<Scalar>(model, x);
  const Scalar ls = static_cast<Scalar>(model.length_scale);
  return jac.determinant() / (ls * ls * ls);
}

inline double det_jacobian(const ManipulatorModel& model, const JointConfig& config) {
  return det_jacobian<double>(model, config.x);
}

/// det(J) on the (x2,x3,x4,x5) torus slice with x1 = x6 = 0.
inline double det_on_torus(const ManipulatorModel& model, const std::array<double, 4>& x2345) {
  Eigen::Matrix<double, 6, 1> x;
  x << 0.0, x2345[0], x2345[1], x2345[2], x2345[3], 0.0;
  return det_jacobian<double>(model, x);
}

/// Corank = number of singular values below tol relative to the largest
/// (6 when the Jacobian vanishes entirely).
inline int jacobian_corank(const ManipulatorModel& model, const JointConfig& config, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("jacobian_corank: tol must be in (0,1)");
  const Jacobian6 jac = spatial_jacobian(model, config);
  Eigen::JacobiSVD<Jacobian6> svd(jac);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return 6;
  int corank = 0;
  for (int i = 0; i < 6; ++i)
    if (sv(i) / smax < tol) ++corank;
  return corank;
}

/// Ratio sigma_5 / sigma_1 (second-smallest over largest): near zero exactly
/// where the corank exceeds one.
inline double corank2_indicator(const ManipulatorModel& model, const JointConfig& config) {
  const Jacobian6 jac = spatial_jacobian(model, config);
  Eigen::JacobiSVD<Jacobian6> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(4) / sv(0);
}

// --- 3R positioning arm -----------------------------------------------------

/// Frames 0..3 of the 3R chain.
inline std::array<RigidTransform, 4> forward_kinematics_3r(const Arm3R& arm,
                                                           const Eigen::Vector3d& x) {
  std::array<RigidTransform, 4> frames;
  frames[0] = RigidTransform::Identity();
  for (int i = 0; i < 3; ++i) frames[i + 1] = frames[i] * dh_transform<double>(arm.rows[i], x[i]);
  return frames;
}

/// Positional 3x3 Jacobian of the 3R arm: column i is z_{i-1} x (p_3 - p_{i-1}).
inline Eigen::Matrix3d positional_jacobian_3r(const Arm3R& arm, const Eigen::Vector3d& x) {
  const auto frames = forward_kinematics_3r(arm, x);
  const Eigen::Vector3d p_end = frames[3].translation;
  Eigen::Matrix3d jac;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d z = frames[i].rotation.col(2);
    jac.col(i) = z.cross(p_end - frames[i].translation);
  }
  return jac;
}

/// det of the positional Jacobian, normalized by length_scale^3, x1 = 0.
inline double det_on_torus_3r(const Arm3R& arm, const std::array<double, 2>& x23) {
  const Eigen::Vector3d x(0.0, x23[0], x23[1]);
  const double ls = arm.length_scale;
  return positional_jacobian_3r(arm, x).determinant() / (ls * ls * ls);
}

inline int corank_3r(const Arm3R& arm, const Eigen::Vector3d& x, double tol) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(positional_jacobian_3r(arm, x));
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 3;
  int corank = 0;
  for (int i = 0; i < 3; ++i)
    if (sv(i) / sv(0) < tol) ++corank;
  return corank;
}

inline double corank2_indicator_3r(const Arm3R& arm, const Eigen::Vector3d& x) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(positional_jacobian_3r(arm, x));
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(1) / sv(0);
}

}  // namespace sixr
