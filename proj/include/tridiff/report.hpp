// Report emission: CSV summary and per-segment tables, a JSON mirror, and
// optional SVG speed profiles. Data files are byte-reproducible for
// identical inputs.
#pragma once

#include <string>
#include <vector>

#include "tridiff/scenario.hpp"

namespace tridiff {

/// Deterministic shortest round-trip formatting for report values.
std::string format_double(double value);

struct EmittedFiles {
    std::vector<std::string> paths;  // in emission order
};

/// Writes summary.csv, segments.csv and report.json into out_dir (created
/// if missing), plus plot_<plan>.svg per plan when scenario.plots is set.
EmittedFiles emit_reports(const Scenario& scenario, const RunArtifacts& artifacts,
                          const std::string& out_dir);

}  // namespace tridiff
