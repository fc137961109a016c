// Command-line front end: classify 6R manipulators by the topology of their
// singular surface on the 4-torus, verify the degree bounds, browse the
// separating-class catalogs, and search DH space for a target class.

#include <array>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sixr/catalog.hpp"
#include "sixr/classify.hpp"
#include "sixr/fourier.hpp"
#include "sixr/model_io.hpp"
#include "sixr/report_io.hpp"
#include "sixr/search.hpp"

namespace {

// exit codes: 0 ok / resolved generic, 1 input error, 2 non-generic or
// target not found or failed degree check, 3 unresolved ambiguity
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNegative = 2;
constexpr int kExitUnresolved = 3;

std::array<int, 4> parse_resolution(const std::string& text) {
  std::array<int, 4> n{};
  std::stringstream ss(text);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count >= 4) throw std::invalid_argument("--resolution needs exactly 4 values");
    n[static_cast<std::size_t>(count++)] = std::stoi(item);
  }
  if (count == 1) {  // single value applies to all axes
    n[1] = n[2] = n[3] = n[0];
    count = 4;
  }
  if (count != 4) throw std::invalid_argument("--resolution needs exactly 4 values");
  return n;
}

int parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  return std::stoi(text);
}

int axis_from_name(const std::string& name) {
  if (name == "x2") return 0;
  if (name == "x3") return 1;
  if (name == "x4") return 2;
  if (name == "x5") return 3;
  throw std::invalid_argument("--axis must be one of x2,x3,x4,x5");
}

struct CommonOpts {
  std::string model_path;
  std::string resolution = "64,64,64,64";
  double eps = 1e-9;
  double corank_tol = 1e-8;
  std::uint64_t seed = 1;
  std::string threads = "auto";
  std::string out_dir = ".";
  std::string format = "json";
  std::string dump_field;
  int genericity_samples = 200;
};

int run_analyze(const CommonOpts& opts) {
  const sixr::ManipulatorModel model = sixr::load_model(opts.model_path);
  const sixr::GridSpec4 grid(parse_resolution(opts.resolution));
  sixr::ClassifyOptions copts;
  copts.eps = opts.eps;
  copts.corank_tol = opts.corank_tol;
  copts.seed = opts.seed;
  copts.threads = parse_threads(opts.threads);
  copts.genericity_samples = opts.genericity_samples;

  if (!opts.dump_field.empty()) {
    const auto field = sixr::sample_field(model, grid, copts.threads);
    sixr::write_sgf4(field, opts.dump_field);
  }

  const sixr::ClassificationReport report = sixr::classify(model, grid, copts);

  std::filesystem::create_directories(opts.out_dir);
  const std::filesystem::path out(opts.out_dir);
  if (opts.format == "json" || opts.format == "both")
    sixr::write_text_file((out / "report.json").string(), sixr::report_to_json(report));
  if (opts.format == "csv" || opts.format == "both")
    sixr::write_text_file((out / "branches.csv").string(), sixr::branches_to_csv(report));

  if (report.classification_applicable) {
    std::vector<std::array<int, 4>> tuples;
    for (const auto& b : report.branches) tuples.push_back(b.class_label);
    const auto validation =
        sixr::validate_labels(sixr::label_from_tuples(tuples), tuples);
    sixr::write_text_file((out / "validation.json").string(),
                          sixr::validation_to_json(validation));
  }

  std::cout << "model: " << report.model_name << "\n"
            << "genericity: " << report.genericity << "\n"
            << "label: " << report.label_multiset << "\n"
            << "branches: " << report.branches.size() << ", sheets: " << report.sheets.count
            << "\n";
  for (const auto& d : report.diagnostics) std::cout << "note: " << d << "\n";

  if (!report.resolved || report.genericity == "undetermined") return kExitUnresolved;
  if (report.genericity == "non-generic") return kExitNegative;
  return kExitOk;
}

int run_degrees(const CommonOpts& opts, const std::string& axis_filter, int circles, int samples,
                double rel_tol, int synthetic_cos) {
  sixr::AngleFn4 fn;
  std::string source;
  if (synthetic_cos > 0) {
    // test hook: replace det(J) with cos(k * x_axis) on the filtered axis (x2 default)
    const int axis = axis_filter.empty() ? 0 : axis_from_name(axis_filter);
    const int k = synthetic_cos;
    fn = [axis, k](const std::array<double, 4>& x) { return std::cos(k * x[axis]); };
    source = "synthetic cos(" + std::to_string(k) + "x)";
  } else {
    const sixr::ManipulatorModel model = sixr::load_model(opts.model_path);
    fn = sixr::torus_det_fn(model);
    source = model.name;
  }

  std::vector<int> axes;
  if (axis_filter.empty())
    axes = {0, 1, 2, 3};
  else
    axes = {axis_from_name(axis_filter)};

  bool all_pass = true;
  std::cout << "degree report for " << source << " (circles=" << circles
            << ", samples=" << samples << ", rel_tol=" << rel_tol << ")\n";
  for (int axis : axes) {
    const auto rep = sixr::fourier_degree(fn, axis, circles, samples, rel_tol, opts.seed);
    std::cout << "axis x" << axis + 2 << ": max harmonic " << rep.max_harmonic << " (bound "
              << rep.bound << "), suppressed " << rep.max_suppressed_rel << " -> "
              << (rep.pass ? "pass" : "FAIL") << "\n";
    if (!rep.pass) all_pass = false;
  }
  return all_pass ? kExitOk : kExitNegative;
}

int run_catalog(const std::string& what) {
  auto print = [](const std::vector<sixr::CatalogEntry>& entries) {
    for (const auto& e : entries) std::cout << e.display << "\n";
  };
  if (what == "h2") {
    print(sixr::h2_catalog());
    return kExitOk;
  }
  if (what == "h3") {
    print(sixr::h3_catalog());
    return kExitOk;
  }
  if (what == "h4") {
    print(sixr::h4_catalog());
    return kExitOk;
  }
  const sixr::HomotopyLabel label = sixr::parse_label(what);
  const sixr::Verdict verdict = sixr::validate_combination(label);
  std::cout << sixr::format_label(label) << ": " << sixr::to_string(verdict.status) << " ("
            << verdict.reason << ")\n";
  return kExitOk;
}

int run_search(const CommonOpts& opts, const std::string& target_text,
               const std::string& ranges_path, int attempts) {
  const sixr::HomotopyLabel target = sixr::parse_label(target_text);
  const sixr::DHRanges ranges = sixr::load_ranges(ranges_path);
  const sixr::GridSpec4 grid(parse_resolution(opts.resolution));
  sixr::ClassifyOptions copts;
  copts.eps = opts.eps;
  copts.corank_tol = opts.corank_tol;
  copts.seed = opts.seed;
  copts.threads = parse_threads(opts.threads);
  copts.genericity_samples = opts.genericity_samples;

  const sixr::SearchResult result =
      sixr::search_class(target, attempts, opts.seed, ranges, grid, copts);

  if (result.found) {
    std::filesystem::create_directories(opts.out_dir);
    const std::filesystem::path out(opts.out_dir);
    sixr::save_model(*result.model, (out / "found_model.json").string());
    sixr::write_text_file((out / "report.json").string(), sixr::report_to_json(*result.report));
    std::cout << "found at attempt " << result.attempt << ": " << result.report->label_multiset
              << "\nmodel written to " << (out / "found_model.json").string() << "\n";
    return kExitOk;
  }
  std::cout << "no match in " << attempts << " attempts; classes encountered:\n";
  for (const auto& [label, count] : result.histogram)
    std::cout << "  " << count << " x " << label << "\n";
  return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"6R manipulator singular-surface classification on the 4-torus"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto add_common = [&opts](CLI::App* cmd, bool with_model) {
    if (with_model)
      cmd->add_option("--model", opts.model_path, "manipulator description file (JSON)");
    cmd->add_option("--resolution", opts.resolution, "grid n2,n3,n4,n5 (or one value for all)");
    cmd->add_option("--eps", opts.eps, "relative zero band for sign thresholding");
    cmd->add_option("--corank-tol", opts.corank_tol, "relative singular-value cutoff");
    cmd->add_option("--seed", opts.seed, "seed for all randomness (SplitMix64 streams)");
    cmd->add_option("--threads", opts.threads, "worker threads, or 'auto'");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--genericity-samples", opts.genericity_samples,
                    "singular-surface samples for the genericity guard");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "classify a manipulator");
  add_common(analyze, true);
  analyze->add_option("--format", opts.format, "report files: json|csv|both");
  analyze->add_option("--dump-field", opts.dump_field, "write the sampled field (SGF4 binary)");

  CLI::App* degrees = app.add_subcommand("degrees", "verify per-axis degree bounds");
  add_common(degrees, true);
  std::string axis_filter;
  int circles = 16, samples = 64, synthetic_cos = 0;
  double rel_tol = 1e-8;
  degrees->add_option("--axis", axis_filter, "restrict to one axis: x2|x3|x4|x5");
  degrees->add_option("--circles", circles, "random circles per axis");
  degrees->add_option("--samples", samples, "samples per circle");
  degrees->add_option("--rel-tol", rel_tol, "relative threshold for significant harmonics");
  degrees->add_option("--synthetic-cos", synthetic_cos,
                      "test hook: analyze cos(k*x) instead of det(J)");

  CLI::App* catalog = app.add_subcommand("catalog", "print a catalog or evaluate a label");
  std::string catalog_arg;
  catalog->add_option("what", catalog_arg, "h2 | h3 | h4 | label such as \"2(0,0,0,0)\"")
      ->required();

  CLI::App* search = app.add_subcommand("search", "search DH space for a target class");
  add_common(search, false);
  std::string target_text, ranges_path;
  int attempts = 100;
  search->add_option("--target", target_text, "target label, e.g. \"2(1,0,0,0)\"")->required();
  search->add_option("--ranges", ranges_path, "DH sampling box file (JSON)")->required();
  search->add_option("--attempts", attempts, "maximum attempts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(opts);
    if (degrees->parsed())
      return run_degrees(opts, axis_filter, circles, samples, rel_tol, synthetic_cos);
    if (catalog->parsed()) return run_catalog(catalog_arg);
    if (search->parsed()) return run_search(opts, target_text, ranges_path, attempts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
