#pragma once

#include <Eigen/Core>

namespace sixr {

/// Proper rigid motion: y = rotation * x + translation.
template <typename Scalar>
struct RigidTransformT {
  Eigen::Matrix<Scalar, 3, 3> rotation = Eigen::Matrix<Scalar, 3, 3>::Identity();
  Eigen::Matrix<Scalar, 3, 1> translation = Eigen::Matrix<Scalar, 3, 1>::Zero();

  RigidTransformT operator*(const RigidTransformT& other) const {
    RigidTransformT out;
    out.rotation.noalias() = rotation * other.rotation;
    out.translation.noalias() = translation + rotation * other.translation;
    return out;
  }

  Eigen::Matrix<Scalar, 3, 1> apply(const Eigen::Matrix<Scalar, 3, 1>& p) const {
    return rotation * p + translation;
  }

  static RigidTransformT Identity() { return RigidTransformT{}; }
};

using RigidTransform = RigidTransformT<double>;

}  // namespace sixr
