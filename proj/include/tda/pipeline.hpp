#pragma once

#include "tda/embed.hpp"
#include "tda/landscape.hpp"
#include "tda/persistence.hpp"
#include "tda/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tda {

enum class NormKind { Landscape, TotalPersistence };

struct NormConfig {
    NormKind kind = NormKind::Landscape;
    double p = 2.0;
    int k_max = 5;
    int grid_nodes = 512;
};

/// Feature counting threshold: a fraction of the window's max persistence,
/// or an absolute persistence value.
struct ThresholdPolicy {
    bool relative = true;
    double value = 0.25;
};

struct PipelineConfig {
    EmbeddingConfig embedding;
    int max_dim = 2;
    std::optional<double> r_max; // nullopt = enclosing radius per window
    NormConfig norm;
    ThresholdPolicy threshold;
    bool strict = true;   // reject windows containing flagged days
    bool verify = false;  // oracle cross-checks on a sample of windows
    bool parallel = true; // OpenMP fan-out over windows

    void validate() const;
    /// Stable hex digest of all fields; embedded in every output.
    std::string fingerprint() const;
    std::string to_json() const;
    static PipelineConfig from_json(const std::string& text);
};

struct NormRecord {
    Instant date = 0; // window base date (its first day)
    double norm = 0.0;
    int feature_count = 0;
    double max_persistence = 0.0;
};

struct WindowDiagram {
    Instant date = 0;
    PersistenceDiagram diagram; // dim 1
};

struct SkippedWindow {
    std::size_t window_index = 0;
    Instant date = 0;
    std::string reason;
};

struct VerifyStats {
    int checked = 0;
    int passed = 0;
};

struct AnalysisResult {
    std::vector<NormRecord> records;
    std::vector<WindowDiagram> diagrams;
    std::vector<SkippedWindow> skipped;
    std::string fingerprint;
    VerifyStats verify;
};

/// The full per-window pipeline: embed -> distances -> VR filtration ->
/// reduction -> H1 diagram -> norm and feature count. Deterministic for a
/// given config; windows fan out to OpenMP threads when cfg.parallel is set,
/// results are merged in window order.
AnalysisResult run_analysis(const TimeSeries& series, const PipelineConfig& cfg);

/// Single-threaded reference path, kept for testing and benchmarking.
AnalysisResult run_analysis_serial(const TimeSeries& series, const PipelineConfig& cfg);

/// Pearson correlation between the norm series and a scalar series, inner
/// join on calendar date. Requires >= 3 overlapping dates.
struct Correlation {
    double pearson_r = 0.0;
    int n_overlap = 0;
};
Correlation correlate(const std::vector<NormRecord>& norms, const TimeSeries& other);

} // namespace tda
