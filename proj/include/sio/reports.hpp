// Report assembly: JSON verdict documents, CSV point clouds, SVG plots, and
// the oracle cross-check battery behind --verify. Every floating number in a
// JSON report is emitted as {"value": ..., "tol": ...}.
#pragma once

#include <string>

#include "sio/config.hpp"

namespace sio {

std::string report_check_bounded(const AnalysisConfig& cfg);
std::string report_fredholm(const AnalysisConfig& cfg, bool verify);
std::string report_index(const AnalysisConfig& cfg, bool verify);
std::string spectrum_csv(const AnalysisConfig& cfg);
std::string spectrum_svg(const AnalysisConfig& cfg);
std::string report_verify(const AnalysisConfig& cfg);

// Exit-code hint stored in each JSON report under "exit": 0 ok / positive
// verdict, 2 negative verdict, 3 precondition failure.
int report_exit_code(const std::string& report_json);

}  // namespace sio
