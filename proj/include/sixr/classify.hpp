#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sixr/catalog.hpp"
#include "sixr/dh.hpp"
#include "sixr/genericity.hpp"
#include "sixr/grid.hpp"
#include "sixr/scalar_field.hpp"
#include "sixr/topology.hpp"

namespace sixr {

struct ClassifyOptions {
  double eps = 1e-9;            ///< relative zero band for sign thresholding
  double corank_tol = 1e-8;     ///< relative singular-value cutoff
  int genericity_samples = 200;
  std::uint64_t seed = 1;
  int threads = 0;              ///< 0 = hardware concurrency
  bool refine = true;           ///< one doubled-resolution pass on ambiguity
  bool run_genericity = true;
};

struct ClassificationReport {
  std::string model_name;
  std::array<int, 4> resolution{};
  std::array<double, 4> phase{};
  std::array<int, 4> initial_resolution{};
  bool refined = false;

  std::string genericity;  ///< generic | non-generic | undetermined
  bool resolved = true;    ///< false when ambiguity flags survive refinement
  bool classification_applicable = false;

  std::vector<BranchData<4>> branches;
  std::string label_multiset;  ///< canonical, empty when not applicable
  SheetDecomposition sheets;
  std::array<int, 4> max_crossings{};
  std::array<int, 4> class_signed_sum{};

  double field_abs_max = 0.0;
  std::int64_t nudged_nodes = 0;
  std::vector<std::string> diagnostics;
  GenericityResult genericity_detail;
};

/// Full pipeline on the 4-torus: sample det(J), threshold, extract cells,
/// split into branches, classify each, test separating, count sheets, guard
/// genericity. One doubled-resolution pass is attempted on flagged axes
/// before an ambiguity is reported as unresolved.
ClassificationReport classify(const ManipulatorModel& model, const GridSpec4& grid,
                              const ClassifyOptions& options = {});

/// Same pipeline over an arbitrary scalar field (synthetic inputs, tests).
/// The genericity stage is skipped; the verdict is reported as undetermined.
ClassificationReport classify_field(const AngleFn4& fn, const GridSpec4& grid,
                                    const ClassifyOptions& options = {},
                                    const std::string& name = "synthetic");

struct Report3R {
  std::string model_name;
  std::array<int, 2> resolution{};
  std::array<double, 2> phase{};
  bool refined = false;

  std::string genericity;
  bool resolved = true;
  bool classification_applicable = false;

  std::vector<BranchData<2>> branches;
  std::string label_multiset;  ///< width-2 canonical label
  bool in_h2 = false;          ///< label is one of the eight T^2 classes
  SheetDecomposition sheets;
  std::array<int, 2> class_signed_sum{};

  double field_abs_max = 0.0;
  std::vector<std::string> diagnostics;
  GenericityResult genericity_detail;
};

/// 2-torus pipeline for a 3R positioning arm over (x2,x3) with x1 = 0.
/// The positional det is checked to be x1-invariant before sampling.
Report3R classify_3r(const Arm3R& arm, const GridSpec2& grid,
                     const ClassifyOptions& options = {});

}  // namespace sixr
