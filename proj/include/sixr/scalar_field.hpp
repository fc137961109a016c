#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sixr/dh.hpp"
#include "sixr/grid.hpp"
#include "sixr/kinematics.hpp"

namespace sixr {

template <int D>
using AngleFn = std::function<double(const std::array<double, D>&)>;

using AngleFn4 = AngleFn<4>;
using AngleFn2 = AngleFn<2>;

/// Thrown by sign_field when every node lies inside the zero band.
struct FieldZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <int D>
struct ScalarField {
  GridSpec<D> grid;
  std::vector<double> values;  ///< row-major, last axis fastest

  double abs_max() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

template <int D>
struct SignField {
  GridSpec<D> grid;
  std::vector<std::int8_t> signs;        ///< entries are +1 or -1, never 0
  std::vector<std::int64_t> nudged;      ///< nodes whose sign came from the tie-break, sorted
};

using ScalarField4 = ScalarField<4>;
using SignField4 = SignField<4>;
using ScalarField2 = ScalarField<2>;
using SignField2 = SignField<2>;

namespace detail {

/// Static block partition; chunk boundaries do not affect computed values,
/// so output is identical for any thread count.
inline void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t, std::int64_t)>& body) {
  int t = threads;
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  t = static_cast<int>(std::min<std::int64_t>(t, std::max<std::int64_t>(count, 1)));
  if (t == 1) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::int64_t chunk = (count + t - 1) / t;
  for (int i = 0; i < t; ++i) {
    const std::int64_t lo = i * chunk;
    const std::int64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Evaluate fn at every grid node. Each node is computed independently, so
/// the result is bit-identical across runs and thread counts.
template <int D>
ScalarField<D> sample_field(const AngleFn<D>& fn, const GridSpec<D>& grid, int threads = 0) {
  grid.validate();
  ScalarField<D> field;
  field.grid = grid;
  field.values.resize(static_cast<std::size_t>(grid.node_count()));
  detail::parallel_for(grid.node_count(), threads, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t id = lo; id < hi; ++id) {
      const double v = fn(grid.angles(grid.coords(id)));
      if (!std::isfinite(v))
        throw std::runtime_error("sample_field: non-finite value at node " + std::to_string(id));
      field.values[static_cast<std::size_t>(id)] = v;
    }
  });
  return field;
}

/// det(J) sampler over (x2,x3,x4,x5) with x1 = x6 = 0.
inline AngleFn4 torus_det_fn(const ManipulatorModel& model) {
  return [model](const std::array<double, 4>& x) { return det_on_torus(model, x); };
}

inline ScalarField4 sample_field(const ManipulatorModel& model, const GridSpec4& grid,
                                 int threads = 0) {
  return sample_field<4>(torus_det_fn(model), grid, threads);
}

/// det of the 3R positional Jacobian over (x2,x3) with x1 = 0.
inline AngleFn2 torus_det_fn_3r(const Arm3R& arm) {
  return [arm](const std::array<double, 2>& x) { return det_on_torus_3r(arm, x); };
}

namespace detail {

/// Golden-ratio fractions used for the deterministic tie-break nudge.
inline double golden_fraction(int axis) {
  const double g = 0.6180339887498949;
  const double v = (axis + 1) * g;
  return v - std::floor(v);
}

}  // namespace detail

/// Threshold a field into {+1,-1}. Values inside the band |v| <= eps*max|v|
/// take the sign of fn re-evaluated at the node shifted by half a spacing
/// scaled by a per-axis golden-ratio fraction (a deterministic nudge).
/// fn may be null when no node can fall inside the band.
template <int D>
SignField<D> sign_field(const ScalarField<D>& field, double eps, const AngleFn<D>& fn = nullptr) {
  if (!(eps > 0.0)) throw std::invalid_argument("sign_field: eps must be positive");
  const double band = eps * field.abs_max();
  SignField<D> out;
  out.grid = field.grid;
  out.signs.resize(field.values.size());
  std::int64_t decided = 0;
  for (std::size_t id = 0; id < field.values.size(); ++id) {
    const double v = field.values[id];
    if (v > band) {
      out.signs[id] = 1;
      ++decided;
    } else if (v < -band) {
      out.signs[id] = -1;
      ++decided;
    } else {
      out.signs[id] = 0;  // resolved below
    }
  }
  if (decided == 0) throw FieldZeroError("sign_field: field numerically zero");
  if (decided < static_cast<std::int64_t>(field.values.size())) {
    if (!fn)
      throw std::invalid_argument("sign_field: in-band nodes present but no evaluator given");
    for (std::size_t id = 0; id < out.signs.size(); ++id) {
      if (out.signs[id] != 0) continue;
      auto x = field.grid.angles(field.grid.coords(static_cast<std::int64_t>(id)));
      for (int j = 0; j < D; ++j)
        x[j] += 0.5 * field.grid.spacing(j) * detail::golden_fraction(j);
      out.signs[id] = (fn(x) >= 0.0) ? 1 : -1;
      out.nudged.push_back(static_cast<std::int64_t>(id));
    }
  }
  return out;
}

// --- SGF4 binary field dump --------------------------------------------------
//
// 64-byte header: magic "SGF4", 4 x u32 resolution, 4 x f64 phase, zero pad;
// then node values as little-endian f64 in row-major (i2,i3,i4,i5) order.

inline void write_sgf4(const ScalarField4& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_sgf4: cannot open " + path);
  char header[64] = {0};
  std::memcpy(header, "SGF4", 4);
  for (int j = 0; j < 4; ++j) {
    const std::uint32_t n = static_cast<std::uint32_t>(field.grid.n[j]);
    std::memcpy(header + 4 + 4 * j, &n, 4);
  }
  for (int j = 0; j < 4; ++j) std::memcpy(header + 20 + 8 * j, &field.grid.phase[j], 8);
  out.write(header, sizeof(header));
  out.write(reinterpret_cast<const char*>(field.values.data()),
            static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("write_sgf4: write failed for " + path);
}

inline ScalarField4 read_sgf4(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_sgf4: cannot open " + path);
  char header[64];
  in.read(header, sizeof(header));
  if (!in || std::memcmp(header, "SGF4", 4) != 0)
    throw std::runtime_error("read_sgf4: bad header in " + path);
  std::array<int, 4> n{};
  std::array<double, 4> phase{};
  for (int j = 0; j < 4; ++j) {
    std::uint32_t v;
    std::memcpy(&v, header + 4 + 4 * j, 4);
    n[j] = static_cast<int>(v);
  }
  for (int j = 0; j < 4; ++j) std::memcpy(&phase[j], header + 20 + 8 * j, 8);
  ScalarField4 field;
  field.grid = GridSpec4(n, phase);
  field.values.resize(static_cast<std::size_t>(field.grid.node_count()));
  in.read(reinterpret_cast<char*>(field.values.data()),
          static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("read_sgf4: truncated value block in " + path);
  return field;
}

}  // namespace sixr
