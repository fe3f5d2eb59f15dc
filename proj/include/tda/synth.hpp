#pragma once

#include "tda/series.hpp"

#include <cstdint>

namespace tda {

struct SineParams {
    double amplitude = 1.0;
    double period = 20.0; // in samples
    double phase = 0.0;   // radians
    int length = 120;
    Instant start = 1420070400; // 2015-01-01
};

struct NoisySineParams {
    SineParams sine;
    double noise_sd = 0.1;
    std::uint64_t seed = 0;
};

struct Lorenz63Params {
    double sigma = 10.0;
    double rho = 28.0;
    double beta = 8.0 / 3.0;
    double x0 = 1.0, y0 = 1.0, z0 = 1.0;
    double dt = 0.01;
    int length = 365;
    int warmup_steps = 1000;
    Instant start = 1420070400;
};

/// Daily series, value[i] = A * sin(2*pi*i/period + phase).
TimeSeries synth_sine(const SineParams& p);

/// Sine plus Gaussian noise; deterministic for a given seed.
TimeSeries synth_noisy_sine(const NoisySineParams& p);

/// x-coordinate of a fixed-step RK4 Lorenz-63 trajectory, one value per step
/// after the warm-up transient is discarded.
TimeSeries synth_lorenz63(const Lorenz63Params& p);

} // namespace tda
