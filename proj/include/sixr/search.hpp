#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sixr/catalog.hpp"
#include "sixr/classify.hpp"
#include "sixr/model_io.hpp"

namespace sixr {

struct SearchResult {
  bool found = false;
  int attempt = -1;  ///< index of the first matching attempt
  std::optional<ManipulatorModel> model;
  std::optional<ClassificationReport> report;
  std::map<std::string, int> histogram;  ///< outcome label (or verdict) -> count
};

/// Draw DH tables uniformly from `ranges` (SplitMix64 stream derived from
/// `seed`), classify each, and return the first generic, resolved model whose
/// label multiset equals `target`. Deterministic for a fixed seed. Targets
/// that violate the wrap bounds (or are otherwise forbidden) are rejected
/// up front with std::invalid_argument.
SearchResult search_class(const HomotopyLabel& target, int attempts, std::uint64_t seed,
                          const DHRanges& ranges, const GridSpec4& grid,
                          const ClassifyOptions& options = {});

}  // namespace sixr
