#pragma once

#include <array>
#include <string>
#include <vector>

namespace sixr {

/// Multiset of branch class tuples, e.g. "(0,0,0,0)+2(1,0,0,0)".
/// width is 4 for the full torus, 2 for the (I2,I3) torus catalogs; width-2
/// tuples occupy the first two entries and the rest stay zero.
struct HomotopyLabel {
  int width = 4;
  std::vector<std::pair<std::array<int, 4>, int>> terms;  ///< (tuple, multiplicity), canonical

  void canonicalize();
  bool operator==(const HomotopyLabel& other) const {
    return width == other.width && terms == other.terms;
  }
};

/// Render in the canonical grammar: terms sorted, "k(...)" with k omitted
/// when 1, joined by '+'.
std::string format_label(const HomotopyLabel& label);

/// Parse the canonical grammar (whitespace tolerated). Throws
/// std::invalid_argument on malformed input.
HomotopyLabel parse_label(const std::string& text);

/// Build a width-4 label from per-branch class tuples.
HomotopyLabel label_from_tuples(const std::vector<std::array<int, 4>>& tuples);

struct CatalogEntry {
  HomotopyLabel label;
  bool separating = true;
  std::string rule;     ///< one of H2-list, H3-list, H4-list, rule-1, rule-2, rule-3
  std::string display;  ///< published listing form, e.g. "(11,14,0,0) + (1,0,0,0)"
};

/// The eight separating classes of the 2-torus.
std::vector<CatalogEntry> h2_catalog();

/// The 24 separating composites on the (I2,I3) torus:
/// (12-j,14,0,0) + j(1,0,0,0) for j=1..11 and (12,14-j,0,0) + j(0,1,0,0) for j=1..13.
std::vector<CatalogEntry> h3_catalog();

/// The 16 separating composites on the (I4,I5) torus:
/// (0,0,8-j,10) + j(0,0,1,0) for j=1..7 and (0,0,8,10-j) + j(0,0,0,1) for j=1..9.
std::vector<CatalogEntry> h4_catalog();

enum class VerdictStatus { separating_admissible, non_separating, forbidden, unknown };

const char* to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::unknown;
  std::string reason;
};

/// Wrap-count ceilings per axis: I2 <= 12, I3 <= 14, I4 <= 8, I5 <= 10.
inline constexpr std::array<int, 4> kClassBounds = {12, 14, 8, 10};

/// Apply the admissibility rules in order: axis bounds; single-generator
/// classes with wrap > 1; more than four null branches; a lone unit class;
/// membership in the enumerated separating families; the intersecting
/// unit-branch pattern; otherwise unknown (the enumeration is not complete).
Verdict validate_combination(const HomotopyLabel& label);

struct ReportValidation {
  Verdict overall;
  std::vector<std::pair<std::string, Verdict>> branch_verdicts;
  bool defect = false;  ///< some verdict is forbidden: pipeline output is impossible
  std::string summary;
};

/// Validate a classification outcome: the full label multiset plus each
/// branch label. Any forbidden verdict marks the result as a defect.
ReportValidation validate_labels(const HomotopyLabel& multiset,
                                 const std::vector<std::array<int, 4>>& branch_tuples);

}  // namespace sixr
