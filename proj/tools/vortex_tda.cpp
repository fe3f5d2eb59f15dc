// Command-line front end for the sliding-window persistence pipeline.
//
// Subcommands: ingest, synth, analyze, correlate, verify, plot.
// Exit codes: 0 success, 1 data error, 2 configuration error.

#include "CLI11.hpp"

#include "tda/errors.hpp"
#include "tda/outputs.hpp"
#include "tda/pipeline.hpp"
#include "tda/series.hpp"
#include "tda/synth.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

bool verbose_logging() {
    const char* level = std::getenv("VORTEX_TDA_LOG");
    return level != nullptr && std::string(level) == "debug";
}

void log_debug(const std::string& msg) {
    if (verbose_logging())
        std::cerr << "[debug] " << msg << '\n';
}

tda::TimeSeries load_series(const std::string& path, tda::Cadence cadence) {
    std::ifstream in(path);
    if (!in)
        throw tda::DataError("cannot open " + path);
    return tda::parse_series(in, cadence, path);
}

void save_series(const std::string& path, const tda::TimeSeries& ts) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw tda::DataError("cannot open for writing: " + path);
    tda::write_series(out, ts);
}

struct AnalyzeFlags {
    std::string input;
    std::string config_file;
    std::string out_dir;
    std::optional<int> m, tau, window, step, max_dim, k_max, grid_nodes;
    std::optional<double> r_max, p, threshold_value;
    std::optional<std::string> norm_kind, threshold_kind;
    bool zscore = false, lenient = false, verify = false, serial = false;
};

// Defaults < config file < explicit flags.
tda::PipelineConfig resolve_config(const AnalyzeFlags& f) {
    tda::PipelineConfig cfg;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in)
            throw tda::ConfigError("cannot open config file " + f.config_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        cfg = tda::PipelineConfig::from_json(buf.str());
    }
    if (f.m) cfg.embedding.m = *f.m;
    if (f.tau) cfg.embedding.tau = *f.tau;
    if (f.window) cfg.embedding.window = *f.window;
    if (f.step) cfg.embedding.step = *f.step;
    if (f.zscore) cfg.embedding.zscore = true;
    if (f.max_dim) cfg.max_dim = *f.max_dim;
    if (f.r_max) cfg.r_max = *f.r_max;
    if (f.norm_kind)
        cfg.norm.kind = *f.norm_kind == "total" ? tda::NormKind::TotalPersistence
                                                : tda::NormKind::Landscape;
    if (f.p) cfg.norm.p = *f.p;
    if (f.k_max) cfg.norm.k_max = *f.k_max;
    if (f.grid_nodes) cfg.norm.grid_nodes = *f.grid_nodes;
    if (f.threshold_kind) cfg.threshold.relative = *f.threshold_kind == "relative";
    if (f.threshold_value) cfg.threshold.value = *f.threshold_value;
    if (f.lenient) cfg.strict = false;
    if (f.verify) cfg.verify = true;
    if (f.serial) cfg.parallel = false;
    cfg.validate();
    return cfg;
}

void add_analyze_flags(CLI::App* cmd, AnalyzeFlags& f) {
    cmd->add_option("--input", f.input, "daily series CSV")->required();
    cmd->add_option("--config", f.config_file, "pipeline config JSON");
    cmd->add_option("--m", f.m, "number of delays (point dimension is m+1)");
    cmd->add_option("--tau", f.tau, "delay step in samples");
    cmd->add_option("--window", f.window, "samples per analysis window");
    cmd->add_option("--step", f.step, "samples to advance between windows");
    cmd->add_flag("--zscore", f.zscore, "z-score each window before embedding");
    cmd->add_option("--max-dim", f.max_dim, "simplex dimension cap");
    cmd->add_option("--r-max", f.r_max, "fixed filtration radius (default: enclosing)");
    cmd->add_option("--norm", f.norm_kind, "norm kind: landscape|total")
        ->check(CLI::IsMember({"landscape", "total"}));
    cmd->add_option("--p", f.p, "norm exponent");
    cmd->add_option("--k-max", f.k_max, "landscape levels");
    cmd->add_option("--grid", f.grid_nodes, "landscape grid nodes");
    cmd->add_option("--threshold-kind", f.threshold_kind, "feature threshold: relative|absolute")
        ->check(CLI::IsMember({"relative", "absolute"}));
    cmd->add_option("--threshold", f.threshold_value, "feature threshold value");
    cmd->add_flag("--lenient", f.lenient, "keep windows containing flagged days");
    cmd->add_flag("--verify", f.verify, "oracle cross-checks on a sample of windows");
    cmd->add_flag("--serial", f.serial, "disable the OpenMP window fan-out");
}

void print_verify(const tda::VerifyStats& v) {
    std::cout << "verify: " << v.passed << "/" << v.checked << " sampled windows passed\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Sliding-window persistent homology for scalar time series"};
    app.require_subcommand(1);

    // ingest
    std::string in_path, out_path = "-", gaps_path, start_str, end_str, cadence_str = "hourly";
    bool do_aggregate = false;
    auto* ingest = app.add_subcommand("ingest", "load, validate, aggregate and slice a series");
    ingest->add_option("--input", in_path, "input CSV")->required();
    ingest->add_option("--cadence", cadence_str, "input cadence: hourly|daily")
        ->check(CLI::IsMember({"hourly", "daily"}));
    ingest->add_flag("--aggregate", do_aggregate, "average hourly values into daily means");
    ingest->add_option("--start", start_str, "slice start (inclusive, ISO-8601)");
    ingest->add_option("--end", end_str, "slice end (exclusive, ISO-8601)");
    ingest->add_option("--output", out_path, "output CSV ('-' for stdout)");
    ingest->add_option("--gaps", gaps_path, "write a gap report CSV here");

    // synth
    std::string kind = "sine", synth_out = "-", synth_start = "2015-01-01";
    double amplitude = 1.0, period = 20.0, phase = 0.0, noise_sd = 0.1, dt = 0.01;
    double sigma = 10.0, rho = 28.0, beta = 8.0 / 3.0, x0 = 1.0, y0 = 1.0, z0 = 1.0;
    int length = 120, warmup = 1000;
    std::uint64_t seed = 0;
    auto* synth = app.add_subcommand("synth", "generate a synthetic daily series");
    synth->add_option("--kind", kind, "sine|noisy_sine|lorenz63")
        ->check(CLI::IsMember({"sine", "noisy_sine", "lorenz63"}));
    synth->add_option("--amplitude", amplitude);
    synth->add_option("--period", period, "period in samples");
    synth->add_option("--phase", phase, "phase in radians");
    synth->add_option("--length", length, "number of samples");
    synth->add_option("--noise-sd", noise_sd);
    synth->add_option("--seed", seed);
    synth->add_option("--sigma", sigma);
    synth->add_option("--rho", rho);
    synth->add_option("--beta", beta);
    synth->add_option("--x0", x0);
    synth->add_option("--y0", y0);
    synth->add_option("--z0", z0);
    synth->add_option("--dt", dt);
    synth->add_option("--warmup", warmup, "transient steps to discard");
    synth->add_option("--start-date", synth_start, "date of the first sample");
    synth->add_option("--output", synth_out, "output CSV ('-' for stdout)");

    // analyze
    AnalyzeFlags af;
    auto* analyze = app.add_subcommand("analyze", "run the full pipeline and emit outputs");
    add_analyze_flags(analyze, af);
    analyze->add_option("--out", af.out_dir, "output directory")->required();

    // correlate
    std::string norms_path, series_path;
    std::string corr_cadence = "daily";
    auto* corr = app.add_subcommand("correlate", "Pearson r between a norm series and a scalar series");
    corr->add_option("--norms", norms_path, "norms CSV from analyze")->required();
    corr->add_option("--series", series_path, "scalar series CSV")->required();
    corr->add_option("--cadence", corr_cadence, "cadence of the scalar series")
        ->check(CLI::IsMember({"hourly", "daily"}));

    // verify
    AnalyzeFlags vf;
    auto* verify = app.add_subcommand("verify", "oracle cross-checks without writing outputs");
    add_analyze_flags(verify, vf);

    // plot
    std::string plot_norms, plot_out;
    auto* plot = app.add_subcommand("plot", "render a norms CSV as an SVG line plot");
    plot->add_option("--norms", plot_norms, "norms CSV")->required();
    plot->add_option("--output", plot_out, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    if (*ingest) {
        auto ts = load_series(in_path, tda::cadence_from_name(cadence_str));
        log_debug("loaded " + std::to_string(ts.size()) + " samples");
        if (do_aggregate)
            ts = aggregate_daily(ts);
        if (!start_str.empty() || !end_str.empty()) {
            const tda::Instant lo = start_str.empty() ? ts.samples.front().timestamp
                                                      : tda::parse_instant(start_str);
            const tda::Instant hi = end_str.empty() ? ts.samples.back().timestamp + 1
                                                    : tda::parse_instant(end_str);
            ts = slice_range(ts, lo, hi);
        }
        if (!gaps_path.empty()) {
            std::ofstream out(gaps_path);
            write_gap_report(out, find_gaps(ts));
        }
        if (out_path == "-")
            tda::write_series(std::cout, ts);
        else
            save_series(out_path, ts);
        return 0;
    }

    if (*synth) {
        const tda::Instant start = tda::parse_instant(synth_start);
        tda::TimeSeries ts;
        if (kind == "sine")
            ts = tda::synth_sine({amplitude, period, phase, length, start});
        else if (kind == "noisy_sine")
            ts = tda::synth_noisy_sine({{amplitude, period, phase, length, start}, noise_sd, seed});
        else
            ts = tda::synth_lorenz63({sigma, rho, beta, x0, y0, z0, dt, length, warmup, start});
        if (synth_out == "-")
            tda::write_series(std::cout, ts);
        else
            save_series(synth_out, ts);
        return 0;
    }

    if (*analyze) {
        const auto cfg = resolve_config(af);
        const auto ts = load_series(af.input, tda::Cadence::Daily);
        const auto result = tda::run_analysis(ts, cfg);
        const auto manifest = tda::emit_outputs(result, cfg, af.out_dir);
        std::cout << "windows: " << result.records.size() << " analyzed, "
                  << result.skipped.size() << " skipped\n";
        std::cout << "fingerprint: " << result.fingerprint << '\n';
        std::cout << "wrote " << manifest.entries.size() + 1 << " files to " << af.out_dir << '\n';
        if (cfg.verify) {
            print_verify(result.verify);
            if (result.verify.passed != result.verify.checked)
                return 1;
        }
        return 0;
    }

    if (*corr) {
        std::ifstream nin(norms_path);
        if (!nin)
            throw tda::DataError("cannot open " + norms_path);
        const auto norms = tda::norms_from_csv(nin);
        const auto series = load_series(series_path, tda::cadence_from_name(corr_cadence));
        const auto r = tda::correlate(norms, series);
        std::cout << "pearson_r=" << r.pearson_r << " n_overlap=" << r.n_overlap << '\n';
        return 0;
    }

    if (*verify) {
        auto cfg = resolve_config(vf);
        cfg.verify = true;
        const auto ts = load_series(vf.input, tda::Cadence::Daily);
        const auto result = tda::run_analysis(ts, cfg);
        print_verify(result.verify);
        return result.verify.passed == result.verify.checked ? 0 : 1;
    }

    if (*plot) {
        std::ifstream nin(plot_norms);
        if (!nin)
            throw tda::DataError("cannot open " + plot_norms);
        const auto norms = tda::norms_from_csv(nin);
        std::ofstream out(plot_out, std::ios::binary);
        if (!out)
            throw tda::DataError("cannot open for writing: " + plot_out);
        out << tda::norms_to_svg(norms);
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tda::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const tda::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
