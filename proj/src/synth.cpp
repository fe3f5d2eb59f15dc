#include "tda/synth.hpp"

#include "tda/errors.hpp"

#include <array>
#include <cmath>
#include <random>

namespace tda {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

TimeSeries daily_series(std::string label, Instant start, const std::vector<double>& values) {
    TimeSeries ts;
    ts.cadence = Cadence::Daily;
    ts.label = std::move(label);
    ts.samples.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        ts.samples.push_back({start + static_cast<Instant>(i) * kSecondsPerDay, values[i], false});
    return ts;
}

} // namespace

TimeSeries synth_sine(const SineParams& p) {
    if (p.length < 1 || !(p.period > 0.0))
        throw ConfigError("sine: length >= 1 and period > 0 required");
    std::vector<double> values(static_cast<std::size_t>(p.length));
    for (int i = 0; i < p.length; ++i)
        values[static_cast<std::size_t>(i)] = p.amplitude * std::sin(kTwoPi * i / p.period + p.phase);
    return daily_series("sine", p.start, values);
}

TimeSeries synth_noisy_sine(const NoisySineParams& p) {
    TimeSeries ts = synth_sine(p.sine);
    ts.label = "noisy_sine";
    std::mt19937_64 rng(p.seed);
    std::normal_distribution<double> noise(0.0, p.noise_sd);
    for (Sample& s : ts.samples)
        s.value += noise(rng);
    return ts;
}

TimeSeries synth_lorenz63(const Lorenz63Params& p) {
    if (p.length < 1 || !(p.dt > 0.0) || p.warmup_steps < 0)
        throw ConfigError("lorenz63: length >= 1, dt > 0, warmup >= 0 required");

    using State = std::array<double, 3>;
    const auto deriv = [&p](const State& s) -> State {
        return {p.sigma * (s[1] - s[0]),
                s[0] * (p.rho - s[2]) - s[1],
                s[0] * s[1] - p.beta * s[2]};
    };
    const auto rk4_step = [&](State s) -> State {
        const State k1 = deriv(s);
        State t;
        for (int i = 0; i < 3; ++i) t[i] = s[i] + 0.5 * p.dt * k1[i];
        const State k2 = deriv(t);
        for (int i = 0; i < 3; ++i) t[i] = s[i] + 0.5 * p.dt * k2[i];
        const State k3 = deriv(t);
        for (int i = 0; i < 3; ++i) t[i] = s[i] + p.dt * k3[i];
        const State k4 = deriv(t);
        for (int i = 0; i < 3; ++i)
            s[i] += p.dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        return s;
    };

    State s{p.x0, p.y0, p.z0};
    for (int i = 0; i < p.warmup_steps; ++i)
        s = rk4_step(s);

    std::vector<double> values(static_cast<std::size_t>(p.length));
    for (int i = 0; i < p.length; ++i) {
        values[static_cast<std::size_t>(i)] = s[0];
        s = rk4_step(s);
    }
    return daily_series("lorenz63", p.start, values);
}

} // namespace tda
