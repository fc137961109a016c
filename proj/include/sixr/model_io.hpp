#pragma once

#include <array>
#include <string>

#include "sixr/dh.hpp"

namespace sixr {

/// Parse a manipulator description: {"name": str, "dh": [6 x {"alpha","a","d","theta_offset"}]}.
/// Parsing is strict: unknown keys are rejected with the offending key named.
ManipulatorModel parse_model(const std::string& json_text);

ManipulatorModel load_model(const std::string& path);

std::string model_to_json(const ManipulatorModel& model);

void save_model(const ManipulatorModel& model, const std::string& path);

/// Per-joint uniform sampling boxes for DH parameters.
struct DHBox {
  std::array<double, 2> alpha{};
  std::array<double, 2> a{};
  std::array<double, 2> d{};
  std::array<double, 2> theta_offset{};
};

struct DHRanges {
  std::array<DHBox, 6> joints{};
};

/// Parse {"joints": [6 x {"alpha":[lo,hi],"a":[lo,hi],"d":[lo,hi],"theta_offset":[lo,hi]}]}.
/// Strict, like parse_model.
DHRanges parse_ranges(const std::string& json_text);

DHRanges load_ranges(const std::string& path);

}  // namespace sixr
