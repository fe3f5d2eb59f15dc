#include "tda/pipeline.hpp"

#include "tda/errors.hpp"
#include "tda/hash.hpp"
#include "tda/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <variant>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tda {

using nlohmann::json;

void PipelineConfig::validate() const {
    embedding.validate();
    if (max_dim < 2)
        throw ConfigError("max_dim must be >= 2 (H1 deaths need 2-simplices)");
    if (r_max && !(*r_max > 0.0))
        throw ConfigError("fixed r_max must be positive");
    if (norm.p < 1.0)
        throw ConfigError("norm p must be >= 1");
    if (norm.k_max < 1 || norm.grid_nodes < 2)
        throw ConfigError("norm k_max >= 1 and grid_nodes >= 2 required");
    if (threshold.value < 0.0)
        throw ConfigError("feature threshold must be >= 0");
    if (threshold.relative && threshold.value > 1.0)
        throw ConfigError("relative feature threshold must be in [0, 1]");
}

std::string PipelineConfig::to_json() const {
    json j;
    j["m"] = embedding.m;
    j["tau"] = embedding.tau;
    j["window"] = embedding.window;
    j["step"] = embedding.step;
    j["zscore"] = embedding.zscore;
    j["max_dim"] = max_dim;
    if (r_max)
        j["r_max"] = *r_max;
    else
        j["r_max"] = "enclosing";
    j["norm_kind"] = norm.kind == NormKind::Landscape ? "landscape" : "total";
    j["norm_p"] = norm.p;
    j["k_max"] = norm.k_max;
    j["grid_nodes"] = norm.grid_nodes;
    j["threshold_kind"] = threshold.relative ? "relative" : "absolute";
    j["threshold_value"] = threshold.value;
    j["strict"] = strict;
    return j.dump(2);
}

PipelineConfig PipelineConfig::from_json(const std::string& text) {
    json j = json::parse(text);
    PipelineConfig cfg;
    if (j.contains("m")) cfg.embedding.m = j["m"];
    if (j.contains("tau")) cfg.embedding.tau = j["tau"];
    if (j.contains("window")) cfg.embedding.window = j["window"];
    if (j.contains("step")) cfg.embedding.step = j["step"];
    if (j.contains("zscore")) cfg.embedding.zscore = j["zscore"];
    if (j.contains("max_dim")) cfg.max_dim = j["max_dim"];
    if (j.contains("r_max")) {
        if (j["r_max"].is_number())
            cfg.r_max = j["r_max"].get<double>();
        else if (j["r_max"] != "enclosing")
            throw ConfigError("r_max must be a number or \"enclosing\"");
    }
    if (j.contains("norm_kind")) {
        const std::string k = j["norm_kind"];
        if (k == "landscape")
            cfg.norm.kind = NormKind::Landscape;
        else if (k == "total")
            cfg.norm.kind = NormKind::TotalPersistence;
        else
            throw ConfigError("unknown norm kind: " + k);
    }
    if (j.contains("norm_p")) cfg.norm.p = j["norm_p"];
    if (j.contains("k_max")) cfg.norm.k_max = j["k_max"];
    if (j.contains("grid_nodes")) cfg.norm.grid_nodes = j["grid_nodes"];
    if (j.contains("threshold_kind")) cfg.threshold.relative = j["threshold_kind"] == "relative";
    if (j.contains("threshold_value")) cfg.threshold.value = j["threshold_value"];
    if (j.contains("strict")) cfg.strict = j["strict"];
    return cfg;
}

std::string PipelineConfig::fingerprint() const {
    return sha256_hex(to_json()).substr(0, 16);
}

namespace {

struct WindowOutcome {
    bool skipped = false;
    std::string skip_reason;
    Instant date = 0;
    std::size_t window_index = 0;
    NormRecord record;
    PersistenceDiagram diagram;
    bool verify_checked = false;
    bool verify_passed = false;
};

double norm_of_diagram(const PersistenceDiagram& d, const NormConfig& cfg) {
    if (d.pairs.empty())
        return 0.0;
    if (cfg.kind == NormKind::TotalPersistence)
        return total_persistence(d, cfg.p);
    double max_death = 0.0;
    for (const PersistencePair& pr : d.pairs)
        max_death = std::max(max_death, pr.death);
    const GridSpec grid{0.0, 1.05 * max_death, cfg.grid_nodes};
    return landscape_norm(build_landscape(d, cfg.k_max, grid), cfg.p);
}

WindowOutcome process_window(const TimeSeries& series, const PipelineConfig& cfg,
                             std::size_t window_index, std::size_t start, bool do_verify) {
    WindowOutcome out;
    out.window_index = window_index;
    out.date = series.samples[start].timestamp;

    const auto w = static_cast<std::size_t>(cfg.embedding.window);
    const Instant day = cadence_step(series.cadence);
    std::vector<double> values(w);
    for (std::size_t i = 0; i < w; ++i) {
        const Sample& s = series.samples[start + i];
        if (i > 0 && s.timestamp - series.samples[start + i - 1].timestamp != day) {
            out.skipped = true;
            out.skip_reason = "gap";
            return out;
        }
        if (cfg.strict && s.flagged) {
            out.skipped = true;
            out.skip_reason = "flagged-day";
            return out;
        }
        values[i] = s.value;
    }

    if (cfg.embedding.zscore) {
        try {
            values = zscore_window(values);
        } catch (const DataError&) {
            out.skipped = true;
            out.skip_reason = "zero-variance";
            return out;
        }
    }

    const PointCloud cloud = sliding_window_embed(values, cfg.embedding, start, out.date);
    const DistanceMatrix dm = pairwise_distances(cloud);
    const double radius = cfg.r_max ? *cfg.r_max : enclosing_radius(dm);

    if (radius > 0.0) {
        const Filtration f = build_vr_filtration(dm, cfg.max_dim, radius);
        const BoundaryMatrix bm = boundary_matrix(f);
        const Pairing pairing = reduce(bm);
        out.diagram = extract_diagram(pairing, bm, f, 1);
        if (do_verify) {
            out.verify_checked = true;
            const Pairing naive = validate::naive_reduce(bm);
            bool ok = naive == pairing && validate::chain_complex_check(bm);
            if (ok) {
                // interval count at the midpoint radius vs. the rank formula
                const double r = 0.5 * radius;
                int intervals = 0;
                for (const PersistencePair& pr : out.diagram.pairs)
                    if (pr.birth <= r && r < pr.death)
                        ++intervals;
                ok = intervals == validate::betti_at(f, r, 1).betti;
            }
            out.verify_passed = ok;
        }
    } else {
        out.diagram.dim = 1; // degenerate cloud: all points coincide
        if (do_verify) {
            out.verify_checked = true;
            out.verify_passed = true;
        }
    }

    out.record.date = out.date;
    out.record.norm = norm_of_diagram(out.diagram, cfg.norm);
    out.record.max_persistence = max_persistence(out.diagram);
    const double thr = cfg.threshold.relative ? cfg.threshold.value * out.record.max_persistence
                                              : cfg.threshold.value;
    out.record.feature_count = count_features(out.diagram, thr);
    return out;
}

AnalysisResult run_impl(const TimeSeries& series, const PipelineConfig& cfg, bool parallel) {
    cfg.validate();
    if (series.cadence != Cadence::Daily)
        throw DataError("analysis requires a daily series (aggregate first)");
    if (series.size() < static_cast<std::size_t>(cfg.embedding.window))
        throw DataError("series too short: " + std::to_string(series.size()) + " samples < window " +
                        std::to_string(cfg.embedding.window));

    const std::vector<std::size_t> starts = schedule_windows(series.size(), cfg.embedding);
    // Verify is expensive (the oracle is cubic); sample every 10th window.
    const std::size_t verify_stride = 10;

    std::vector<WindowOutcome> outcomes(starts.size());
    const auto count = static_cast<std::int64_t>(starts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t k = 0; k < count; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const bool do_verify = cfg.verify && idx % verify_stride == 0;
        outcomes[idx] = process_window(series, cfg, idx, starts[idx], do_verify);
    }

    AnalysisResult result;
    result.fingerprint = cfg.fingerprint();
    for (WindowOutcome& o : outcomes) {
        if (o.skipped) {
            result.skipped.push_back({o.window_index, o.date, o.skip_reason});
            continue;
        }
        result.records.push_back(o.record);
        result.diagrams.push_back({o.date, std::move(o.diagram)});
        if (o.verify_checked) {
            ++result.verify.checked;
            if (o.verify_passed)
                ++result.verify.passed;
        }
    }
    if (result.records.empty())
        throw DataError("all " + std::to_string(starts.size()) + " windows were skipped");
    return result;
}

} // namespace

AnalysisResult run_analysis(const TimeSeries& series, const PipelineConfig& cfg) {
    return run_impl(series, cfg, cfg.parallel);
}

AnalysisResult run_analysis_serial(const TimeSeries& series, const PipelineConfig& cfg) {
    return run_impl(series, cfg, false);
}

Correlation correlate(const std::vector<NormRecord>& norms, const TimeSeries& other) {
    std::map<Instant, double> by_date;
    for (const Sample& s : other.samples)
        by_date[floor_to_day(s.timestamp)] = s.value;

    std::vector<double> xs, ys;
    for (const NormRecord& r : norms) {
        const auto it = by_date.find(floor_to_day(r.date));
        if (it != by_date.end()) {
            xs.push_back(r.norm);
            ys.push_back(it->second);
        }
    }
    const int n = static_cast<int>(xs.size());
    if (n < 3)
        throw DataError("correlate: only " + std::to_string(n) + " overlapping dates (need >= 3)");

    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += xs[static_cast<std::size_t>(i)];
        my += ys[static_cast<std::size_t>(i)];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - mx;
        const double dy = ys[static_cast<std::size_t>(i)] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DataError("correlate: zero variance on one side");
    return {sxy / std::sqrt(sxx * syy), n};
}

} // namespace tda
