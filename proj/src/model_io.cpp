#include "sixr/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sixr {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      throw std::invalid_argument("unknown key \"" + it.key() + "\" in " + where);
  }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw std::invalid_argument("missing key \"" + key + "\" in " + where);
  const json& v = obj.at(key);
  if (!v.is_number()) throw std::invalid_argument("key \"" + key + "\" in " + where + " must be a number");
  return v.get<double>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument(what + ": not valid JSON");
  return j;
}

}  // namespace

ManipulatorModel parse_model(const std::string& json_text) {
  const json root = parse_json(json_text, "model file");
  if (!root.is_object()) throw std::invalid_argument("model file: top level must be an object");
  reject_unknown_keys(root, {"name", "dh"}, "model file");
  if (!root.contains("name") || !root.at("name").is_string())
    throw std::invalid_argument("model file: missing string key \"name\"");
  if (!root.contains("dh") || !root.at("dh").is_array())
    throw std::invalid_argument("model file: missing array key \"dh\"");
  const json& dh = root.at("dh");
  if (dh.size() != 6)
    throw std::invalid_argument("model file: \"dh\" must have exactly 6 rows");

  std::array<DHRow, 6> rows;
  for (std::size_t i = 0; i < 6; ++i) {
    const json& row = dh.at(i);
    const std::string where = "dh[" + std::to_string(i) + "]";
    if (!row.is_object()) throw std::invalid_argument(where + " must be an object");
    reject_unknown_keys(row, {"alpha", "a", "d", "theta_offset"}, where);
    rows[i] = DHRow(require_number(row, "alpha", where), require_number(row, "a", where),
                    require_number(row, "d", where), require_number(row, "theta_offset", where));
  }
  return ManipulatorModel(rows, root.at("name").get<std::string>());
}

ManipulatorModel load_model(const std::string& path) { return parse_model(read_file(path)); }

std::string model_to_json(const ManipulatorModel& model) {
  nlohmann::ordered_json root;
  root["name"] = model.name;
  root["dh"] = nlohmann::ordered_json::array();
  for (const auto& row : model.rows) {
    nlohmann::ordered_json r;
    r["alpha"] = row.alpha;
    r["a"] = row.a;
    r["d"] = row.d;
    r["theta_offset"] = row.theta_offset;
    root["dh"].push_back(r);
  }
  return root.dump(2) + "\n";
}

void save_model(const ManipulatorModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << model_to_json(model);
}

namespace {

std::array<double, 2> require_range(const json& obj, const std::string& key,
                                    const std::string& where) {
  if (!obj.contains(key)) throw std::invalid_argument("missing key \"" + key + "\" in " + where);
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v.at(0).is_number() || !v.at(1).is_number())
    throw std::invalid_argument("key \"" + key + "\" in " + where + " must be [lo, hi]");
  std::array<double, 2> r = {v.at(0).get<double>(), v.at(1).get<double>()};
  if (!(r[0] <= r[1]))
    throw std::invalid_argument("key \"" + key + "\" in " + where + ": lo must be <= hi");
  return r;
}

}  // namespace

DHRanges parse_ranges(const std::string& json_text) {
  const json root = parse_json(json_text, "ranges file");
  if (!root.is_object()) throw std::invalid_argument("ranges file: top level must be an object");
  reject_unknown_keys(root, {"joints"}, "ranges file");
  if (!root.contains("joints") || !root.at("joints").is_array() || root.at("joints").size() != 6)
    throw std::invalid_argument("ranges file: \"joints\" must be an array of 6 objects");
  DHRanges ranges;
  for (std::size_t i = 0; i < 6; ++i) {
    const json& box = root.at("joints").at(i);
    const std::string where = "joints[" + std::to_string(i) + "]";
    if (!box.is_object()) throw std::invalid_argument(where + " must be an object");
    reject_unknown_keys(box, {"alpha", "a", "d", "theta_offset"}, where);
    ranges.joints[i].alpha = require_range(box, "alpha", where);
    ranges.joints[i].a = require_range(box, "a", where);
    ranges.joints[i].d = require_range(box, "d", where);
    ranges.joints[i].theta_offset = require_range(box, "theta_offset", where);
  }
  return ranges;
}

DHRanges load_ranges(const std::string& path) { return parse_ranges(read_file(path)); }

}  // namespace sixr
