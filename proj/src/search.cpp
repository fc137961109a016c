#include "sixr/search.hpp"

#include <stdexcept>

#include "sixr/rng.hpp"

namespace sixr {

namespace {

ManipulatorModel sample_model(const DHRanges& ranges, const SplitMix64& rng, std::uint64_t attempt,
                              int index) {
  std::array<DHRow, 6> rows;
  for (int i = 0; i < 6; ++i) {
    const DHBox& box = ranges.joints[static_cast<std::size_t>(i)];
    const std::uint64_t base = attempt * 24 + static_cast<std::uint64_t>(i) * 4;
    rows[static_cast<std::size_t>(i)] =
        DHRow(rng.uniform_at(base + 0, box.alpha[0], box.alpha[1]),
              rng.uniform_at(base + 1, box.a[0], box.a[1]),
              rng.uniform_at(base + 2, box.d[0], box.d[1]),
              rng.uniform_at(base + 3, box.theta_offset[0], box.theta_offset[1]));
  }
  return ManipulatorModel(rows, "search-" + std::to_string(index));
}

}  // namespace

SearchResult search_class(const HomotopyLabel& target, int attempts, std::uint64_t seed,
                          const DHRanges& ranges, const GridSpec4& grid,
                          const ClassifyOptions& options) {
  if (attempts < 1) throw std::invalid_argument("search_class: attempts must be >= 1");
  if (target.width != 4) throw std::invalid_argument("search_class: target must be a 4-tuple label");
  {
    const Verdict v = validate_combination(target);
    if (v.status == VerdictStatus::forbidden)
      throw std::invalid_argument("search_class: target rejected: " + v.reason);
  }
  HomotopyLabel canon = target;
  canon.canonicalize();
  const std::string wanted = format_label(canon);

  SearchResult result;
  SplitMix64 rng(seed);
  ClassifyOptions opt = options;
  for (int a = 0; a < attempts; ++a) {
    const ManipulatorModel model =
        sample_model(ranges, rng, static_cast<std::uint64_t>(a), a);
    opt.seed = SplitMix64::mix(seed ^ static_cast<std::uint64_t>(a) + 0x51ce);
    ClassificationReport report = classify(model, grid, opt);

    std::string key;
    if (!report.resolved)
      key = "unresolved";
    else if (report.genericity != "generic")
      key = report.genericity;
    else
      key = report.label_multiset;
    result.histogram[key]++;

    if (report.classification_applicable && report.label_multiset == wanted) {
      result.found = true;
      result.attempt = a;
      result.model = model;
      result.report = std::move(report);
      return result;
    }
  }
  return result;
}

}  // namespace sixr
