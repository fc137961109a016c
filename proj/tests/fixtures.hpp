// Shared fixture arms for tests. Values are irregular on purpose: no exact
// right angles or rational ratios anywhere except the wrist fixture, whose
// rows 4-5 are exactly the concurrent-axes construction.
#pragma once

#include "sixr/dh.hpp"

namespace fixtures {

inline sixr::ManipulatorModel fixture_a() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(-1.66, 0.23, 0.74, 0.31),
          sixr::DHRow(0.27, 1.09, 0.18, -0.55),
          sixr::DHRow(-1.42, 0.35, 0.92, 0.77),
          sixr::DHRow(1.51, 0.27, 0.81, -0.22),
          sixr::DHRow(-1.38, 0.42, 0.19, 0.49),
          sixr::DHRow(0.92, 0.16, 0.33, 0.13),
      },
      "fixture-a");
}

inline sixr::ManipulatorModel fixture_b() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(1.21, 0.44, 0.52, -0.37),
          sixr::DHRow(-1.73, 0.97, 0.26, 0.63),
          sixr::DHRow(0.58, 0.61, 0.47, -0.11),
          sixr::DHRow(-1.19, 0.33, 0.88, 0.41),
          sixr::DHRow(1.47, 0.29, 0.23, -0.58),
          sixr::DHRow(-0.77, 0.21, 0.36, 0.27),
      },
      "fixture-b");
}

inline sixr::ManipulatorModel fixture_c() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(-0.93, 0.31, 0.67, 0.52),
          sixr::DHRow(1.38, 1.12, 0.14, -0.29),
          sixr::DHRow(-1.57 + 0.21, 0.48, 0.73, 0.35),
          sixr::DHRow(1.08, 0.22, 0.95, -0.47),
          sixr::DHRow(-1.26, 0.39, 0.28, 0.61),
          sixr::DHRow(0.69, 0.18, 0.42, -0.15),
      },
      "fixture-c");
}

/// Axes of joints 4, 5, 6 concurrent (a4 = a5 = d5 = 0): the singular
/// surface self-intersects, so the arm is not generic.
inline sixr::ManipulatorModel wrist_model() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(-1.44, 0.30, 0.60, 0.20),
          sixr::DHRow(0.11, 0.90, 0.00, -0.35),
          sixr::DHRow(-1.45, 0.20, 0.10, 0.50),
          sixr::DHRow(-sixr::kPi / 2, 0.00, 0.80, 0.00),
          sixr::DHRow(sixr::kPi / 2, 0.00, 0.00, 0.00),
          sixr::DHRow(0.40, 0.15, 0.25, 0.00),
      },
      "wrist");
}

/// The wrist fixture with the concurrency broken by small offsets.
inline sixr::ManipulatorModel wrist_perturbed() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(-1.44, 0.30, 0.60, 0.20),
          sixr::DHRow(0.11, 0.90, 0.00, -0.35),
          sixr::DHRow(-1.45, 0.20, 0.10, 0.50),
          sixr::DHRow(-sixr::kPi / 2 + 0.11, 0.12, 0.80, 0.07),
          sixr::DHRow(sixr::kPi / 2 - 0.09, 0.09, 0.11, -0.06),
          sixr::DHRow(0.40, 0.15, 0.25, 0.00),
      },
      "wrist-perturbed");
}

inline sixr::ManipulatorModel all_zero_model() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(0, 0, 0, 0),
          sixr::DHRow(0, 0, 0, 0),
          sixr::DHRow(0, 0, 0, 0),
          sixr::DHRow(0, 0, 0, 0),
          sixr::DHRow(0, 0, 0, 0),
          sixr::DHRow(0, 0, 0, 0),
      },
      "all-zero");
}

/// All six joint axes parallel: the angular rows span one dimension.
inline sixr::ManipulatorModel parallel_axes_model() {
  return sixr::ManipulatorModel(
      {
          sixr::DHRow(0, 0.4, 0.1, 0.3),
          sixr::DHRow(0, 0.7, 0.2, -0.2),
          sixr::DHRow(0, 0.5, 0.15, 0.5),
          sixr::DHRow(0, 0.6, 0.05, -0.4),
          sixr::DHRow(0, 0.3, 0.25, 0.1),
          sixr::DHRow(0, 0.45, 0.12, 0.6),
      },
      "parallel-axes");
}

// 3R positioning fixtures for the 2-torus path.

inline sixr::Arm3R arm3r_1() {
  return sixr::Arm3R(
      {
          sixr::DHRow(-1.47, 0.35, 0.62, 0.15),
          sixr::DHRow(0.12, 1.00, 0.10, -0.30),
          sixr::DHRow(0.20, 0.75, 0.15, 0.40),
      },
      "arm3r-1");
}

inline sixr::Arm3R arm3r_2() {
  return sixr::Arm3R(
      {
          sixr::DHRow(1.30, 0.50, 0.30, 0.05),
          sixr::DHRow(-1.20, 0.80, 0.20, 0.60),
          sixr::DHRow(0.15, 0.60, 0.40, -0.20),
      },
      "arm3r-2");
}

inline sixr::Arm3R arm3r_3() {
  return sixr::Arm3R(
      {
          sixr::DHRow(-1.62, 0.21, 0.55, 0.33),
          sixr::DHRow(0.44, 0.92, 0.31, -0.18),
          sixr::DHRow(-0.37, 0.68, 0.22, 0.51),
      },
      "arm3r-3");
}

inline sixr::Arm3R arm3r_4() {
  return sixr::Arm3R(
      {
          sixr::DHRow(1.05, 0.62, 0.41, -0.24),
          sixr::DHRow(-0.88, 0.77, 0.18, 0.37),
          sixr::DHRow(1.33, 0.54, 0.29, -0.45),
      },
      "arm3r-4");
}

inline sixr::Arm3R arm3r_5() {
  return sixr::Arm3R(
      {
          sixr::DHRow(-1.12, 0.48, 0.36, 0.22),
          sixr::DHRow(1.29, 0.85, 0.27, -0.39),
          sixr::DHRow(-0.64, 0.71, 0.19, 0.58),
      },
      "arm3r-5");
}

/// All three axes parallel: the positional Jacobian never reaches rank 3.
inline sixr::Arm3R arm3r_planar() {
  return sixr::Arm3R(
      {
          sixr::DHRow(0, 0.5, 0.1, 0.2),
          sixr::DHRow(0, 0.8, 0.2, -0.3),
          sixr::DHRow(0, 0.6, 0.15, 0.4),
      },
      "arm3r-planar");
}

}  // namespace fixtures
