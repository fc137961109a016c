#include "sixr/classify.hpp"

#include <algorithm>
#include <sstream>

#include "sixr/fourier.hpp"
#include "sixr/rng.hpp"

namespace sixr {

namespace {

template <int D>
struct FieldAnalysis {
  ScalarField<D> field;
  SignField<D> signs;
  BranchPartition<D> part;
  SheetDecomposition sheets;
  TopologyFlags<D> flags;
  std::array<int, D> max_crossings{};
  bool field_zero = false;
  double abs_max = 0.0;
};

template <int D>
FieldAnalysis<D> analyze(const AngleFn<D>& fn, const GridSpec<D>& grid,
                         const ClassifyOptions& opt) {
  FieldAnalysis<D> a;
  a.field = sample_field<D>(fn, grid, opt.threads);
  a.abs_max = a.field.abs_max();
  if (a.abs_max == 0.0) {
    a.field_zero = true;
    return a;
  }
  try {
    a.signs = sign_field<D>(a.field, opt.eps, fn);
  } catch (const FieldZeroError&) {
    a.field_zero = true;
    return a;
  }
  const auto cells = extract_zero_cells<D>(a.signs);
  a.part = branches<D>(cells);
  a.flags = compute_branch_classes<D>(a.part, a.signs);
  const EdgeOwnerIndex owners = build_edge_owner_index<D>(a.part, a.signs);
  for (auto& br : a.part.branches) {
    br.separating = is_separating<D>(a.part, br.id, a.signs, &owners);
    if (br.separating != br.parity_even) {
      a.flags.raise(-1, "branch " + std::to_string(br.id) +
                            ": separating test disagrees with crossing parity");
      br.resolved = false;
    }
  }
  a.sheets = count_sheets<D>(a.signs);
  a.max_crossings = max_circle_crossings<D>(a.signs);
  return a;
}

template <int D>
GridSpec<D> refined_grid(const GridSpec<D>& g, const TopologyFlags<D>& flags) {
  GridSpec<D> out = g;
  bool any_axis = false;
  for (int j = 0; j < D; ++j)
    if (flags.axis[static_cast<std::size_t>(j)]) any_axis = true;
  for (int j = 0; j < D; ++j)
    if (!any_axis || flags.axis[static_cast<std::size_t>(j)]) out.n[j] *= 2;
  return out;
}

template <int D>
std::array<int, D> signed_sum(const std::vector<BranchData<D>>& branches) {
  std::array<int, D> sum{};
  for (const auto& b : branches)
    for (int j = 0; j < D; ++j) sum[j] += b.class_signed[j];
  return sum;
}

/// Shared pipeline driver: analyze, refine once on flags, collect notes.
template <int D>
FieldAnalysis<D> run_pipeline(const AngleFn<D>& fn, GridSpec<D>& grid, const ClassifyOptions& opt,
                              bool& refined, std::vector<std::string>& diagnostics) {
  FieldAnalysis<D> a = analyze<D>(fn, grid, opt);
  refined = false;
  if (!a.field_zero && a.flags.any() && opt.refine) {
    for (const auto& note : a.flags.notes) diagnostics.push_back("pre-refinement: " + note);
    const GridSpec<D> finer = refined_grid<D>(grid, a.flags);
    std::ostringstream msg;
    msg << "refinement pass: resolution doubled to (";
    for (int j = 0; j < D; ++j) msg << (j ? "," : "") << finer.n[j];
    msg << ")";
    diagnostics.push_back(msg.str());
    a = analyze<D>(fn, finer, opt);
    grid = finer;
    refined = true;
  }
  for (const auto& note : a.flags.notes) diagnostics.push_back(note);
  return a;
}

}  // namespace

ClassificationReport classify(const ManipulatorModel& model, const GridSpec4& grid,
                              const ClassifyOptions& options) {
  grid.validate();
  const AngleFn4 fn = torus_det_fn(model);

  ClassificationReport report;
  report.model_name = model.name;
  report.initial_resolution = grid.n;

  GridSpec4 used = grid;
  bool refined = false;
  FieldAnalysis<4> a = run_pipeline<4>(fn, used, options, refined, report.diagnostics);
  report.resolution = used.n;
  report.phase = used.phase;
  report.refined = refined;
  report.field_abs_max = a.abs_max;

  if (a.field_zero) {
    report.genericity = "non-generic";
    report.genericity_detail.verdict = Genericity::non_generic;
    report.genericity_detail.note = "field numerically zero";
    report.resolved = true;
    report.classification_applicable = false;
    report.diagnostics.push_back("det(J) vanishes everywhere at this resolution");
    report.label_multiset = "not applicable (non-generic)";
    return report;
  }

  report.branches = a.part.branches;
  report.sheets = a.sheets;
  report.nudged_nodes = static_cast<std::int64_t>(a.signs.nudged.size());
  report.max_crossings = a.max_crossings;
  report.class_signed_sum = signed_sum<4>(report.branches);
  report.resolved = !a.flags.any();

  for (int j = 0; j < 4; ++j) {
    if (a.max_crossings[j] > kCrossingBounds[static_cast<std::size_t>(j)]) {
      std::ostringstream msg;
      msg << "degree violation: axis x" << j + 2 << " shows " << a.max_crossings[j]
          << " crossings on one circle (max " << kCrossingBounds[static_cast<std::size_t>(j)]
          << "); under-resolved or non-generic";
      report.diagnostics.push_back(msg.str());
    }
  }
  if (report.class_signed_sum != std::array<int, 4>{} && report.resolved)
    report.diagnostics.push_back("defect: signed classes do not sum to zero");

  if (options.run_genericity) {
    report.genericity_detail =
        check_genericity(model, a.signs, a.field, options.genericity_samples, options.corank_tol,
                         options.seed);
    report.genericity = to_string(report.genericity_detail.verdict);
  } else {
    report.genericity = "undetermined";
    report.genericity_detail.note = "genericity stage disabled";
  }

  report.classification_applicable =
      report.resolved && report.genericity_detail.verdict == Genericity::generic;
  if (report.classification_applicable) {
    std::vector<std::array<int, 4>> tuples;
    for (const auto& b : report.branches) tuples.push_back(b.class_label);
    report.label_multiset = tuples.empty() ? "(empty)" : format_label(label_from_tuples(tuples));
  } else if (report.genericity_detail.verdict == Genericity::non_generic) {
    report.label_multiset = "not applicable (non-generic)";
  } else if (!report.resolved) {
    report.label_multiset = "unresolved";
  }
  return report;
}

ClassificationReport classify_field(const AngleFn4& fn, const GridSpec4& grid,
                                    const ClassifyOptions& options, const std::string& name) {
  grid.validate();
  ClassificationReport report;
  report.model_name = name;
  report.initial_resolution = grid.n;

  GridSpec4 used = grid;
  bool refined = false;
  FieldAnalysis<4> a = run_pipeline<4>(fn, used, options, refined, report.diagnostics);
  report.resolution = used.n;
  report.phase = used.phase;
  report.refined = refined;
  report.field_abs_max = a.abs_max;
  report.genericity = "undetermined";
  report.genericity_detail.note = "genericity not evaluated for a raw field";

  if (a.field_zero) {
    report.resolved = true;
    report.diagnostics.push_back("field vanishes everywhere at this resolution");
    report.label_multiset = "not applicable (zero field)";
    return report;
  }

  report.branches = a.part.branches;
  report.sheets = a.sheets;
  report.nudged_nodes = static_cast<std::int64_t>(a.signs.nudged.size());
  report.max_crossings = a.max_crossings;
  report.class_signed_sum = signed_sum<4>(report.branches);
  report.resolved = !a.flags.any();
  if (report.resolved) {
    std::vector<std::array<int, 4>> tuples;
    for (const auto& b : report.branches) tuples.push_back(b.class_label);
    report.label_multiset = tuples.empty() ? "(empty)" : format_label(label_from_tuples(tuples));
  } else {
    report.label_multiset = "unresolved";
  }
  return report;
}

Report3R classify_3r(const Arm3R& arm, const GridSpec2& grid, const ClassifyOptions& options) {
  grid.validate();

  // the positional det must not depend on x1
  {
    SplitMix64 rng(options.seed ^ 0x3717u);
    double max_abs = 0.0, max_diff = 0.0;
    for (int i = 0; i < 32; ++i) {
      const double x1 = rng.uniform(-kPi, kPi);
      const double x2 = rng.uniform(-kPi, kPi);
      const double x3 = rng.uniform(-kPi, kPi);
      const double ls = arm.length_scale;
      const double with_x1 =
          positional_jacobian_3r(arm, Eigen::Vector3d(x1, x2, x3)).determinant() / (ls * ls * ls);
      const double at_zero = det_on_torus_3r(arm, {x2, x3});
      max_abs = std::max(max_abs, std::abs(at_zero));
      max_diff = std::max(max_diff, std::abs(with_x1 - at_zero));
    }
    if (max_abs > 0.0 && max_diff > 1e-9 * max_abs)
      throw std::invalid_argument("classify_3r: positional det depends on x1");
  }

  const AngleFn2 fn = torus_det_fn_3r(arm);

  Report3R report;
  report.model_name = arm.name;

  GridSpec2 used = grid;
  bool refined = false;
  FieldAnalysis<2> a = run_pipeline<2>(fn, used, options, refined, report.diagnostics);
  report.resolution = used.n;
  report.phase = used.phase;
  report.refined = refined;
  report.field_abs_max = a.abs_max;

  if (a.field_zero) {
    report.genericity = "non-generic";
    report.genericity_detail.verdict = Genericity::non_generic;
    report.genericity_detail.note = "field numerically zero";
    report.resolved = true;
    report.label_multiset = "not applicable (non-generic)";
    return report;
  }

  report.branches = a.part.branches;
  report.sheets = a.sheets;
  report.class_signed_sum = signed_sum<2>(report.branches);
  report.resolved = !a.flags.any();

  if (options.run_genericity) {
    report.genericity_detail = check_genericity_3r(arm, a.signs, a.field,
                                                   options.genericity_samples,
                                                   options.corank_tol, options.seed);
    report.genericity = to_string(report.genericity_detail.verdict);
  } else {
    report.genericity = "undetermined";
  }

  report.classification_applicable =
      report.resolved && report.genericity_detail.verdict == Genericity::generic;
  if (report.classification_applicable) {
    HomotopyLabel label;
    label.width = 2;
    for (const auto& b : report.branches)
      label.terms.emplace_back(std::array<int, 4>{b.class_label[0], b.class_label[1], 0, 0}, 1);
    label.canonicalize();
    report.label_multiset = report.branches.empty() ? "(empty)" : format_label(label);
    if (!report.branches.empty()) {
      report.in_h2 = false;
      for (const auto& e : h2_catalog())
        if (e.label == label) report.in_h2 = true;
      if (!report.in_h2)
        report.diagnostics.push_back(
            "class outside the eight T^2 classes: resolution or genericity problem");
    }
  } else if (report.genericity_detail.verdict == Genericity::non_generic) {
    report.label_multiset = "not applicable (non-generic)";
  } else if (!report.resolved) {
    report.label_multiset = "unresolved";
  }
  return report;
}

}  // namespace sixr
