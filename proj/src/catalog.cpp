#include "sixr/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sixr {

void HomotopyLabel::canonicalize() {
  std::map<std::array<int, 4>, int> merged;
  for (const auto& [tuple, mult] : terms) merged[tuple] += mult;
  terms.assign(merged.begin(), merged.end());
}

std::string format_label(const HomotopyLabel& label) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [tuple, mult] : label.terms) {
    if (!first) out << '+';
    first = false;
    if (mult != 1) out << mult;
    out << '(';
    for (int j = 0; j < label.width; ++j) {
      if (j) out << ',';
      out << tuple[static_cast<std::size_t>(j)];
    }
    out << ')';
  }
  return out.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_uint(const std::string& s, std::size_t& i, const char* what) {
  skip_ws(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw std::invalid_argument(std::string("label: expected ") + what);
  return std::stoi(s.substr(start, i - start));
}

}  // namespace

HomotopyLabel parse_label(const std::string& text) {
  HomotopyLabel label;
  label.width = 0;
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw std::invalid_argument("label: empty");
  while (i < text.size()) {
    skip_ws(text, i);
    int mult = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      mult = parse_uint(text, i, "multiplicity");
    if (mult < 1) throw std::invalid_argument("label: multiplicity must be >= 1");
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '(') throw std::invalid_argument("label: expected '('");
    ++i;
    std::array<int, 4> tuple{};
    int arity = 0;
    while (true) {
      if (arity >= 4) throw std::invalid_argument("label: tuple has more than 4 entries");
      tuple[static_cast<std::size_t>(arity++)] = parse_uint(text, i, "tuple entry");
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != ')') throw std::invalid_argument("label: expected ')'");
    ++i;
    if (arity != 2 && arity != 4) throw std::invalid_argument("label: tuples must have 2 or 4 entries");
    if (label.width == 0)
      label.width = arity;
    else if (label.width != arity)
      throw std::invalid_argument("label: mixed tuple arities");
    label.terms.emplace_back(tuple, mult);
    skip_ws(text, i);
    if (i < text.size()) {
      if (text[i] != '+') throw std::invalid_argument("label: expected '+'");
      ++i;
      skip_ws(text, i);
      if (i >= text.size()) throw std::invalid_argument("label: dangling '+'");
    }
  }
  label.canonicalize();
  return label;
}

HomotopyLabel label_from_tuples(const std::vector<std::array<int, 4>>& tuples) {
  HomotopyLabel label;
  label.width = 4;
  for (const auto& t : tuples) label.terms.emplace_back(t, 1);
  label.canonicalize();
  return label;
}

namespace {

CatalogEntry make_entry(const std::string& display, const std::string& rule) {
  CatalogEntry entry;
  entry.display = display;
  entry.rule = rule;
  entry.separating = true;
  entry.label = parse_label(display);
  return entry;
}

std::string tuple4(int a, int b, int c, int d) {
  std::ostringstream out;
  out << '(' << a << ',' << b << ',' << c << ',' << d << ')';
  return out.str();
}

std::string composite(const std::string& head, int j, const std::string& unit) {
  std::ostringstream out;
  out << head << " + ";
  if (j != 1) out << j;
  out << unit;
  return out.str();
}

}  // namespace

std::vector<CatalogEntry> h2_catalog() {
  static const char* kList[] = {"(0,0)",  "2(0,0)", "(0,0)+2(1,0)", "2(1,0)",
                                "4(1,0)", "2(0,1)", "2(1,1)",       "2(2,1)"};
  std::vector<CatalogEntry> out;
  for (const char* s : kList) out.push_back(make_entry(s, "H2-list"));
  return out;
}

std::vector<CatalogEntry> h3_catalog() {
  std::vector<CatalogEntry> out;
  for (int j = 1; j <= 11; ++j)
    out.push_back(make_entry(composite(tuple4(12 - j, 14, 0, 0), j, "(1,0,0,0)"), "H3-list"));
  for (int j = 1; j <= 13; ++j)
    out.push_back(make_entry(composite(tuple4(12, 14 - j, 0, 0), j, "(0,1,0,0)"), "H3-list"));
  return out;
}

std::vector<CatalogEntry> h4_catalog() {
  std::vector<CatalogEntry> out;
  for (int j = 1; j <= 7; ++j)
    out.push_back(make_entry(composite(tuple4(0, 0, 8 - j, 10), j, "(0,0,1,0)"), "H4-list"));
  for (int j = 1; j <= 9; ++j)
    out.push_back(make_entry(composite(tuple4(0, 0, 8, 10 - j), j, "(0,0,0,1)"), "H4-list"));
  return out;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::separating_admissible: return "separating-admissible";
    case VerdictStatus::non_separating: return "non-separating";
    case VerdictStatus::forbidden: return "forbidden";
    default: return "unknown";
  }
}

namespace {

bool is_zero_tuple(const std::array<int, 4>& t) {
  return t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0;
}

/// Axis of a single-generator tuple (exactly one nonzero entry), else -1.
int single_axis(const std::array<int, 4>& t) {
  int axis = -1;
  for (int j = 0; j < 4; ++j) {
    if (t[static_cast<std::size_t>(j)] == 0) continue;
    if (axis >= 0) return -1;
    axis = j;
  }
  return axis;
}

bool front_only(const std::array<int, 4>& t) { return t[2] == 0 && t[3] == 0; }
bool back_only(const std::array<int, 4>& t) { return t[0] == 0 && t[1] == 0; }

/// Multiset of 2-tuples on the chosen half, including `extra_zeros` copies
/// of (0,0), as a canonical width-2 label.
HomotopyLabel half_label(const std::vector<std::pair<std::array<int, 4>, int>>& terms, bool front,
                         int extra_zeros) {
  HomotopyLabel out;
  out.width = 2;
  for (const auto& [t, m] : terms) {
    std::array<int, 4> pair{};
    pair[0] = front ? t[0] : t[2];
    pair[1] = front ? t[1] : t[3];
    out.terms.emplace_back(pair, m);
  }
  if (extra_zeros > 0) out.terms.emplace_back(std::array<int, 4>{}, extra_zeros);
  out.canonicalize();
  return out;
}

bool in_catalog(const HomotopyLabel& label, const std::vector<CatalogEntry>& catalog) {
  for (const auto& e : catalog)
    if (e.label == label) return true;
  return false;
}

/// Match the composite separating forms: an H2 multiset embedded in one
/// half of the coordinates plus either a single branch or a second H2
/// multiset on the other half. Null branches may be assigned to either half.
bool matches_h2_composite(const HomotopyLabel& label) {
  static const std::vector<CatalogEntry> h2 = h2_catalog();

  std::vector<std::pair<std::array<int, 4>, int>> front, back;
  int zeros = 0;
  for (const auto& [t, m] : label.terms) {
    if (is_zero_tuple(t)) {
      zeros += m;
    } else if (front_only(t)) {
      front.emplace_back(t, m);
    } else if (back_only(t)) {
      back.emplace_back(t, m);
    } else {
      return false;  // a tuple wrapping both halves fits no composite form
    }
  }

  int back_count = 0;
  for (const auto& [t, m] : back) back_count += m;
  int front_count = 0;
  for (const auto& [t, m] : front) front_count += m;

  for (int zf = 0; zf <= zeros; ++zf) {
    const int zb = zeros - zf;
    const bool front_h2 =
        (front_count + zf > 0) && in_catalog(half_label(front, true, zf), h2);
    const bool back_h2 = (back_count + zb > 0) && in_catalog(half_label(back, false, zb), h2);
    // (H2,0,0) + (0,0,H2)
    if (front_h2 && back_h2) return true;
    // (H2,0,0) + one (0,0,I4,I5) branch
    if (front_h2 && back.size() <= 1 && back_count + zb == 1) return true;
    // one (I2,I3,0,0) branch + (0,0,H2)
    if (back_h2 && front.size() <= 1 && front_count + zf == 1) return true;
  }
  return false;
}

}  // namespace

Verdict validate_combination(const HomotopyLabel& label) {
  if (label.terms.empty()) throw std::invalid_argument("validate_combination: empty label");

  if (label.width == 2) {
    // T^2 labels: only list membership is defined.
    static const std::vector<CatalogEntry> h2 = h2_catalog();
    HomotopyLabel canon = label;
    canon.canonicalize();
    if (in_catalog(canon, h2)) return {VerdictStatus::separating_admissible, "H2-list"};
    return {VerdictStatus::unknown, "not in the enumerated T^2 classes"};
  }
  if (label.width != 4) throw std::invalid_argument("validate_combination: bad label width");

  HomotopyLabel canon = label;
  canon.canonicalize();

  // (a) per-axis wrap bounds
  static const char* kAxisName[] = {"I2", "I3", "I4", "I5"};
  for (const auto& [t, m] : canon.terms) {
    for (int j = 0; j < 4; ++j) {
      if (t[static_cast<std::size_t>(j)] > kClassBounds[static_cast<std::size_t>(j)]) {
        std::ostringstream why;
        why << "bound rule: " << kAxisName[j] << "=" << t[static_cast<std::size_t>(j)]
            << " exceeds " << kClassBounds[static_cast<std::size_t>(j)];
        return {VerdictStatus::forbidden, why.str()};
      }
      if (t[static_cast<std::size_t>(j)] < 0)
        throw std::invalid_argument("validate_combination: negative entry");
    }
  }

  // (b) single-generator classes with wrap > 1 backtrack and self-intersect
  for (const auto& [t, m] : canon.terms) {
    const int axis = single_axis(t);
    if (axis >= 0 && t[static_cast<std::size_t>(axis)] > 1) {
      std::ostringstream why;
      why << "helical rule: " << kAxisName[axis] << "=" << t[static_cast<std::size_t>(axis)]
          << " wraps one generator more than once";
      return {VerdictStatus::forbidden, why.str()};
    }
  }

  // (c) at most four coexisting null branches (eight generator crossings)
  int null_count = 0;
  for (const auto& [t, m] : canon.terms)
    if (is_zero_tuple(t)) null_count += m;
  if (null_count > 4)
    return {VerdictStatus::forbidden,
            "null-branch rule: more than 4 coexisting (0,0,0,0) branches exceed 8 generator "
            "crossings"};

  // (d) a lone unit class cannot divide the torus
  if (canon.terms.size() == 1 && canon.terms[0].second == 1) {
    const auto& t = canon.terms[0].first;
    const int axis = single_axis(t);
    if (axis >= 0 && t[static_cast<std::size_t>(axis)] == 1)
      return {VerdictStatus::non_separating, "a lone unit class cannot divide the torus"};
  }

  // (e) enumerated separating families
  if (canon.terms.size() == 1 && is_zero_tuple(canon.terms[0].first)) {
    if (canon.terms[0].second == 1)
      return {VerdictStatus::separating_admissible, "rule-1: a null branch is separating"};
    if (canon.terms[0].second <= 4)
      return {VerdictStatus::separating_admissible,
              "rule-2: up to four null branches are separating"};
  }
  {
    static const std::vector<CatalogEntry> h3 = h3_catalog();
    static const std::vector<CatalogEntry> h4 = h4_catalog();
    if (in_catalog(canon, h3)) return {VerdictStatus::separating_admissible, "H3-list"};
    if (in_catalog(canon, h4)) return {VerdictStatus::separating_admissible, "H4-list"};
  }
  if (matches_h2_composite(canon))
    return {VerdictStatus::separating_admissible,
            "rule-3: separating T^2 classes embedded on complementary tori"};

  // (f) unit branches on the two back generators must intersect each other
  bool has_0010 = false, has_0001 = false;
  for (const auto& [t, m] : canon.terms) {
    if (t == std::array<int, 4>{0, 0, 1, 0}) has_0010 = true;
    if (t == std::array<int, 4>{0, 0, 0, 1}) has_0001 = true;
  }
  if (has_0010 && has_0001)
    return {VerdictStatus::forbidden,
            "intersecting-branch rule: (0,0,1,0) and (0,0,0,1) cannot coexist without crossing"};

  // (g)
  return {VerdictStatus::unknown, "combination not covered by the enumerated rules"};
}

ReportValidation validate_labels(const HomotopyLabel& multiset,
                                 const std::vector<std::array<int, 4>>& branch_tuples) {
  ReportValidation out;
  if (branch_tuples.empty()) {
    out.summary = "no singular set";
    out.overall = {VerdictStatus::unknown, "no branches to validate"};
    return out;
  }
  out.overall = validate_combination(multiset);
  if (out.overall.status == VerdictStatus::forbidden) out.defect = true;
  for (const auto& t : branch_tuples) {
    HomotopyLabel single;
    single.width = 4;
    single.terms.emplace_back(t, 1);
    Verdict v = validate_combination(single);
    if (v.status == VerdictStatus::forbidden) out.defect = true;
    out.branch_verdicts.emplace_back(format_label(single), v);
  }
  std::ostringstream sum;
  sum << "label " << format_label(multiset) << ": " << to_string(out.overall.status);
  if (out.defect) sum << " (forbidden verdict present: pipeline defect)";
  out.summary = sum.str();
  return out;
}

}  // namespace sixr
