#pragma once

#include <string>

#include <json.hpp>

#include "ringloss/model.hpp"
#include "ringloss/report.hpp"

namespace ringloss {

// Versioned JSON model documents (format_version 1).  Key order is fixed
// and numbers use shortest round-trip formatting, so saving the same model
// twice produces byte-identical files and load reproduces the payload bit
// for bit.
nlohmann::ordered_json model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const nlohmann::ordered_json& doc);

// save_model writes atomically (temp file + rename).  load_model raises
// IoError when the file cannot be read, FormatError when the document is
// malformed, VersionError when format_version is not 1.
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

// Comparison report documents: EvalReport fields one-to-one plus a
// schema_version field.
nlohmann::ordered_json report_to_json(const EvalReport& report);
void save_report(const EvalReport& report, const std::string& path);

}  // namespace ringloss
