#include "doctest.h"

#include "tda/errors.hpp"
#include "tda/pipeline.hpp"
#include "tda/synth.hpp"

#include <algorithm>
#include <cmath>

using namespace tda;

namespace {

PipelineConfig default_config() {
    PipelineConfig cfg;
    cfg.parallel = false;
    return cfg;
}

TimeSeries constant_series(int length, double value) {
    TimeSeries ts;
    ts.cadence = Cadence::Daily;
    for (int i = 0; i < length; ++i)
        ts.samples.push_back({1420070400 + i * kSecondsPerDay, value, false});
    return ts;
}

} // namespace

TEST_CASE("synth_sine basics") {
    SineParams p;
    p.amplitude = 1.0;
    p.period = 20;
    p.length = 40;
    const auto ts = synth_sine(p);
    REQUIRE(ts.size() == 40);
    CHECK(ts.samples[5].value == doctest::Approx(1.0)); // quarter period
    CHECK(ts.samples[0].value == doctest::Approx(0.0));
    CHECK(ts.cadence == Cadence::Daily);
}

TEST_CASE("noisy sine is deterministic per seed") {
    NoisySineParams p;
    p.seed = 42;
    const auto a = synth_noisy_sine(p);
    const auto b = synth_noisy_sine(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a.samples[i].value == b.samples[i].value);
    p.seed = 43;
    const auto c = synth_noisy_sine(p);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        any_diff |= a.samples[i].value != c.samples[i].value;
    CHECK(any_diff);
}

TEST_CASE("lorenz63 stays on the attractor") {
    for (int seed = 0; seed < 10; ++seed) {
        Lorenz63Params p;
        p.x0 = 1.0 + 0.1 * seed;
        p.length = 500;
        const auto ts = synth_lorenz63(p);
        for (const Sample& s : ts.samples)
            CHECK(std::abs(s.value) < 25.0);
    }
}

TEST_CASE("constant series gives all-zero norms") {
    const auto result = run_analysis_serial(constant_series(60, 4.2), default_config());
    CHECK(result.records.size() == 31);
    for (const NormRecord& r : result.records) {
        CHECK(r.norm == 0.0);
        CHECK(r.feature_count == 0);
        CHECK(r.max_persistence == 0.0);
    }
}

TEST_CASE("pure sinusoid: one feature per window, constant norm") {
    SineParams p;
    p.period = 20;
    p.length = 120;
    const auto result = run_analysis_serial(synth_sine(p), default_config());
    REQUIRE(result.records.size() == 91);
    double lo = 1e300, hi = -1e300;
    for (const NormRecord& r : result.records) {
        CHECK(r.feature_count == 1);
        lo = std::min(lo, r.norm);
        hi = std::max(hi, r.norm);
    }
    CHECK(hi - lo < 1e-6);
    CHECK(lo > 0.0);
}

TEST_CASE("amplitude-modulated sinusoid localizes the event") {
    SineParams p;
    p.period = 20;
    p.length = 120;
    auto ts = synth_sine(p);
    for (int i = 40; i < 80; ++i)
        ts.samples[static_cast<std::size_t>(i)].value *= 3.0;

    const auto result = run_analysis_serial(ts, default_config());
    const auto best = std::max_element(result.records.begin(), result.records.end(),
                                       [](const NormRecord& a, const NormRecord& b) {
                                           return a.norm < b.norm;
                                       });
    const auto day = (best->date - ts.samples[0].timestamp) / kSecondsPerDay;
    CHECK(day >= 40);
    CHECK(day <= 80);

    // envelope as seen by each window: mean amplitude over the days it covers
    TimeSeries envelope;
    envelope.cadence = Cadence::Daily;
    const auto amp = [](int day) { return (day >= 40 && day < 80) ? 3.0 : 1.0; };
    for (std::size_t b = 0; b < result.records.size(); ++b) {
        double mean = 0.0;
        for (int j = 0; j < 30; ++j)
            mean += amp(static_cast<int>(b) + j);
        envelope.samples.push_back({result.records[b].date, mean / 30.0, false});
    }
    const auto corr = correlate(result.records, envelope);
    CHECK(corr.pearson_r > 0.7);
    CHECK(corr.n_overlap == static_cast<int>(result.records.size()));
}

TEST_CASE("parallel and serial paths agree exactly") {
    SineParams p;
    p.period = 20;
    p.length = 90;
    NoisySineParams np;
    np.sine = p;
    np.seed = 5;
    const auto ts = synth_noisy_sine(np);
    auto cfg = default_config();
    const auto serial = run_analysis_serial(ts, cfg);
    cfg.parallel = true;
    const auto parallel = run_analysis(ts, cfg);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].date == parallel.records[i].date);
        CHECK(serial.records[i].norm == parallel.records[i].norm);
        CHECK(serial.records[i].feature_count == parallel.records[i].feature_count);
        CHECK(serial.records[i].max_persistence == parallel.records[i].max_persistence);
    }
}

TEST_CASE("translation invariance of the whole pipeline") {
    NoisySineParams np;
    np.sine.period = 15;
    np.sine.length = 70;
    np.seed = 9;
    auto ts = synth_noisy_sine(np);
    const auto base = run_analysis_serial(ts, default_config());
    for (Sample& s : ts.samples)
        s.value += 123.456;
    const auto shifted = run_analysis_serial(ts, default_config());
    REQUIRE(base.records.size() == shifted.records.size());
    for (std::size_t i = 0; i < base.records.size(); ++i) {
        // distances shift by at most an ulp of the added constant
        CHECK(base.records[i].norm ==
              doctest::Approx(shifted.records[i].norm).epsilon(1e-9));
        CHECK(base.records[i].feature_count == shifted.records[i].feature_count);
        CHECK(base.records[i].max_persistence ==
              doctest::Approx(shifted.records[i].max_persistence).epsilon(1e-9));
    }
}

TEST_CASE("scale equivariance of births, deaths and counts") {
    NoisySineParams np;
    np.sine.period = 18;
    np.sine.length = 60;
    np.seed = 13;
    auto ts = synth_noisy_sine(np);
    const auto base = run_analysis_serial(ts, default_config());
    const double lambda = 2.5;
    for (Sample& s : ts.samples)
        s.value *= lambda;
    const auto scaled = run_analysis_serial(ts, default_config());
    REQUIRE(base.diagrams.size() == scaled.diagrams.size());
    for (std::size_t i = 0; i < base.diagrams.size(); ++i) {
        const auto& a = base.diagrams[i].diagram;
        const auto& b = scaled.diagrams[i].diagram;
        REQUIRE(a.pairs.size() == b.pairs.size());
        for (std::size_t j = 0; j < a.pairs.size(); ++j) {
            CHECK(b.pairs[j].birth == doctest::Approx(lambda * a.pairs[j].birth));
            CHECK(b.pairs[j].death == doctest::Approx(lambda * a.pairs[j].death));
        }
        CHECK(base.records[i].feature_count == scaled.records[i].feature_count);
        CHECK(scaled.records[i].max_persistence ==
              doctest::Approx(lambda * base.records[i].max_persistence));
    }
}

TEST_CASE("strict mode skips windows with flagged days") {
    auto ts = constant_series(40, 1.0);
    for (std::size_t i = 0; i < ts.size(); ++i)
        ts.samples[i].value = std::sin(0.4 * static_cast<double>(i));
    ts.samples[35].flagged = true;
    auto cfg = default_config();
    const auto strict = run_analysis_serial(ts, cfg);
    CHECK(strict.skipped.size() == 5); // windows 6..10 contain day 35
    for (const auto& s : strict.skipped)
        CHECK(s.reason == "flagged-day");
    cfg.strict = false;
    const auto lenient = run_analysis_serial(ts, cfg);
    CHECK(lenient.skipped.empty());
}

TEST_CASE("windows crossing a gap are skipped") {
    auto ts = constant_series(45, 0.0);
    for (std::size_t i = 0; i < ts.size(); ++i)
        ts.samples[i].value = std::sin(0.37 * static_cast<double>(i));
    ts.samples.erase(ts.samples.begin() + 40); // leave a 1-day hole
    const auto result = run_analysis_serial(ts, default_config());
    for (const auto& s : result.skipped)
        CHECK(s.reason == "gap");
    CHECK(!result.skipped.empty());
    CHECK(result.records.size() + result.skipped.size() ==
          schedule_windows(ts.size(), default_config().embedding).size());
}

TEST_CASE("error reporting") {
    CHECK_THROWS_AS(run_analysis_serial(constant_series(10, 1.0), default_config()), DataError);
    auto hourly = constant_series(60, 1.0);
    hourly.cadence = Cadence::Hourly;
    CHECK_THROWS_AS(run_analysis_serial(hourly, default_config()), DataError);
    auto cfg = default_config();
    cfg.norm.p = 0.5;
    CHECK_THROWS_AS(run_analysis_serial(constant_series(60, 1.0), cfg), ConfigError);
}

TEST_CASE("verify mode cross-checks windows") {
    SineParams p;
    p.period = 20;
    p.length = 50;
    auto cfg = default_config();
    cfg.verify = true;
    const auto result = run_analysis_serial(synth_sine(p), cfg);
    CHECK(result.verify.checked > 0);
    CHECK(result.verify.passed == result.verify.checked);
}

TEST_CASE("calendar alignment of record dates") {
    SineParams p;
    p.period = 12;
    p.length = 60;
    const auto ts = synth_sine(p);
    const auto result = run_analysis_serial(ts, default_config());
    for (std::size_t k = 0; k < result.records.size(); ++k)
        CHECK(result.records[k].date ==
              ts.samples[0].timestamp + static_cast<Instant>(k) * kSecondsPerDay);
}

TEST_CASE("correlate basics") {
    std::vector<NormRecord> norms;
    TimeSeries self, neg;
    self.cadence = neg.cadence = Cadence::Daily;
    for (int i = 0; i < 10; ++i) {
        const Instant t = 1420070400 + i * kSecondsPerDay;
        const double v = std::sin(0.9 * i) + 0.1 * i;
        norms.push_back({t, v, 0, 0.0});
        self.samples.push_back({t, v, false});
        neg.samples.push_back({t, -v, false});
    }
    CHECK(correlate(norms, self).pearson_r == doctest::Approx(1.0));
    CHECK(correlate(norms, neg).pearson_r == doctest::Approx(-1.0));
    CHECK(correlate(norms, self).n_overlap == 10);

    TimeSeries disjoint;
    disjoint.cadence = Cadence::Daily;
    disjoint.samples.push_back({0, 1.0, false});
    CHECK_THROWS_AS(correlate(norms, disjoint), DataError);
}

TEST_CASE("config json round trip and fingerprint stability") {
    PipelineConfig cfg;
    cfg.embedding.m = 5;
    cfg.r_max = 3.25;
    cfg.norm.kind = NormKind::TotalPersistence;
    cfg.threshold.relative = false;
    cfg.threshold.value = 0.1;
    const auto back = PipelineConfig::from_json(cfg.to_json());
    CHECK(back.fingerprint() == cfg.fingerprint());
    CHECK(back.embedding.m == 5);
    REQUIRE(back.r_max.has_value());
    CHECK(*back.r_max == 3.25);
    CHECK(back.norm.kind == NormKind::TotalPersistence);
    CHECK(!back.threshold.relative);

    PipelineConfig other;
    CHECK(other.fingerprint() != cfg.fingerprint());
    CHECK(!PipelineConfig::from_json("{}").r_max.has_value());
}
