#include "sixr/report_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sixr {

namespace {

using ordered = nlohmann::ordered_json;

template <int D>
ordered branch_json(const BranchData<D>& b) {
  ordered j;
  j["id"] = b.id;
  j["class_label"] = b.class_label;
  j["class_signed"] = b.class_signed;
  j["separating"] = b.separating;
  j["parity_even"] = b.parity_even;
  j["resolved"] = b.resolved;
  j["cell_count"] = b.cell_count;
  j["crossing_max"] = b.crossing_max;
  return j;
}

ordered sheets_json(const SheetDecomposition& s) {
  ordered j;
  j["count"] = s.count;
  j["sizes"] = s.sizes;
  return j;
}

ordered genericity_json(const GenericityResult& g) {
  ordered j;
  j["verdict"] = to_string(g.verdict);
  j["witness_corank"] = g.witness_corank;
  j["witness"] = g.witness;
  j["samples_checked"] = g.samples_checked;
  j["samples_skipped"] = g.samples_skipped;
  j["note"] = g.note;
  return j;
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  ordered j;
  j["model"] = r.model_name;
  j["resolution"] = r.resolution;
  j["phase"] = r.phase;
  j["initial_resolution"] = r.initial_resolution;
  j["refined"] = r.refined;
  j["genericity"] = r.genericity;
  j["resolved"] = r.resolved;
  j["classification_applicable"] = r.classification_applicable;
  j["label_multiset"] = r.label_multiset;
  j["branches"] = ordered::array();
  for (const auto& b : r.branches) j["branches"].push_back(branch_json<4>(b));
  j["sheets"] = sheets_json(r.sheets);
  j["max_crossings"] = r.max_crossings;
  j["class_signed_sum"] = r.class_signed_sum;
  j["field_abs_max"] = r.field_abs_max;
  j["nudged_nodes"] = r.nudged_nodes;
  j["diagnostics"] = r.diagnostics;
  j["genericity_detail"] = genericity_json(r.genericity_detail);
  return j.dump(2) + "\n";
}

std::string report_to_json(const Report3R& r) {
  ordered j;
  j["model"] = r.model_name;
  j["resolution"] = r.resolution;
  j["phase"] = r.phase;
  j["refined"] = r.refined;
  j["genericity"] = r.genericity;
  j["resolved"] = r.resolved;
  j["classification_applicable"] = r.classification_applicable;
  j["label_multiset"] = r.label_multiset;
  j["in_h2"] = r.in_h2;
  j["branches"] = ordered::array();
  for (const auto& b : r.branches) j["branches"].push_back(branch_json<2>(b));
  j["sheets"] = sheets_json(r.sheets);
  j["class_signed_sum"] = r.class_signed_sum;
  j["field_abs_max"] = r.field_abs_max;
  j["diagnostics"] = r.diagnostics;
  j["genericity_detail"] = genericity_json(r.genericity_detail);
  return j.dump(2) + "\n";
}

std::string branches_to_csv(const ClassificationReport& r) {
  std::ostringstream out;
  out << "id,label,I2,I3,I4,I5,s2,s3,s4,s5,separating,cells,cross2,cross3,cross4,cross5\n";
  for (const auto& b : r.branches) {
    out << b.id << ",\"(" << b.class_label[0] << ',' << b.class_label[1] << ','
        << b.class_label[2] << ',' << b.class_label[3] << ")\"";
    for (int v : b.class_label) out << ',' << v;
    for (int v : b.class_signed) out << ',' << v;
    out << ',' << (b.separating ? 1 : 0) << ',' << b.cell_count;
    for (int v : b.crossing_max) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

std::string validation_to_json(const ReportValidation& v) {
  ordered j;
  j["summary"] = v.summary;
  j["defect"] = v.defect;
  j["overall"] = {{"status", to_string(v.overall.status)}, {"reason", v.overall.reason}};
  j["branches"] = ordered::array();
  for (const auto& [label, verdict] : v.branch_verdicts) {
    ordered b;
    b["label"] = label;
    b["status"] = to_string(verdict.status);
    b["reason"] = verdict.reason;
    j["branches"].push_back(b);
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sixr
