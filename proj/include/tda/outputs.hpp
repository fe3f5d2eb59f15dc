#pragma once

#include "tda/pipeline.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace tda {

struct ManifestEntry {
    std::string path; // relative to the output directory
    std::string sha256;
};

struct Manifest {
    std::vector<ManifestEntry> entries; // sorted by path
};

/// Serialize one diagram as {"dim": p, "pairs": [[birth, death], ...]} with
/// null for infinite deaths.
std::string diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const std::string& text);

/// CSV `date,norm,feature_count,max_persistence`.
std::string norms_to_csv(const std::vector<NormRecord>& records);

/// Parse the norms CSV back into records.
std::vector<NormRecord> norms_from_csv(std::istream& in);

/// Minimal SVG line plot of the norm series (polyline + axis ticks).
std::string norms_to_svg(const std::vector<NormRecord>& records);

/// Write norms.csv, diagrams/<date>.json, skipped.csv, config.json and
/// norms.svg under `dir`; also writes manifest.json and returns the manifest.
Manifest emit_outputs(const AnalysisResult& result, const PipelineConfig& cfg,
                      const std::filesystem::path& dir);

} // namespace tda
