#pragma once

#include <string>

#include "sixr/catalog.hpp"
#include "sixr/classify.hpp"

namespace sixr {

/// Deterministic JSON rendering: key order and float formatting are fixed,
/// so identical reports serialize to identical bytes.
std::string report_to_json(const ClassificationReport& report);
std::string report_to_json(const Report3R& report);

/// One row per branch: id, label, signed class, separating, cells, crossings.
std::string branches_to_csv(const ClassificationReport& report);

std::string validation_to_json(const ReportValidation& validation);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sixr
