#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "sixr/dh.hpp"

namespace sixr {

/// Periodic uniform grid on the D-torus. Node k on axis j sits at
/// -pi + (k + phase[j]) * 2*pi / n[j]; phase is in node-spacing units.
/// Linearization is row-major with the last axis fastest.
template <int D>
struct GridSpec {
  std::array<int, D> n{};
  std::array<double, D> phase{};

  GridSpec() {
    for (int j = 0; j < D; ++j) {
      n[j] = 64;
      phase[j] = 0.5;
    }
  }
  GridSpec(const std::array<int, D>& res, const std::array<double, D>& ph) : n(res), phase(ph) {
    validate();
  }
  explicit GridSpec(const std::array<int, D>& res) : n(res) {
    for (int j = 0; j < D; ++j) phase[j] = 0.5;
    validate();
  }

  void validate() const {
    for (int j = 0; j < D; ++j) {
      if (n[j] < 16 || n[j] % 2 != 0)
        throw std::invalid_argument("GridSpec: resolution must be even and >= 16");
      if (!(phase[j] >= 0.0 && phase[j] < 1.0))
        throw std::invalid_argument("GridSpec: phase must be in [0,1)");
    }
  }

  double spacing(int axis) const { return 2.0 * kPi / n[axis]; }

  double node_angle(int axis, int k) const {
    return -kPi + (static_cast<double>(k) + phase[axis]) * spacing(axis);
  }

  std::int64_t node_count() const {
    std::int64_t total = 1;
    for (int j = 0; j < D; ++j) total *= n[j];
    return total;
  }

  std::int64_t stride(int axis) const {
    std::int64_t s = 1;
    for (int j = D - 1; j > axis; --j) s *= n[j];
    return s;
  }

  std::int64_t index(const std::array<int, D>& coords) const {
    std::int64_t id = 0;
    for (int j = 0; j < D; ++j) id = id * n[j] + coords[j];
    return id;
  }

  std::array<int, D> coords(std::int64_t id) const {
    std::array<int, D> c{};
    for (int j = D - 1; j >= 0; --j) {
      c[j] = static_cast<int>(id % n[j]);
      id /= n[j];
    }
    return c;
  }

  int wrap(int axis, int k) const {
    const int m = n[axis];
    k %= m;
    return k < 0 ? k + m : k;
  }

  std::array<double, D> angles(const std::array<int, D>& coords) const {
    std::array<double, D> x{};
    for (int j = 0; j < D; ++j) x[j] = node_angle(j, coords[j]);
    return x;
  }

  /// Neighbor one step along `axis` (periodic).
  std::int64_t neighbor(std::int64_t id, int axis) const {
    const std::int64_t s = stride(axis);
    const int c = static_cast<int>((id / s) % n[axis]);
    return (c == n[axis] - 1) ? id - static_cast<std::int64_t>(n[axis] - 1) * s : id + s;
  }

  bool operator==(const GridSpec& o) const { return n == o.n && phase == o.phase; }
};

using GridSpec4 = GridSpec<4>;
using GridSpec2 = GridSpec<2>;

}  // namespace sixr
