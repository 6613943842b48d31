#pragma once

#include <optional>
#include <vector>

#include "iirkit/sos.hpp"
#include "iirkit/transform.hpp"

namespace iirkit {

enum class Family { butterworth, chebyshev1, elliptic };

// User-facing design request; digital-domain edges in Hz.
struct FilterSpec {
    Family family = Family::butterworth;
    BandShape band = BandShape::lowpass;
    double sample_rate = 8000.0;
    std::vector<double> passband_edges;  // 1 edge for lp/hp, 2 for bp/bs
    std::vector<double> stopband_edges;
    double passband_ripple_db = 2.0;
    double stopband_atten_db = 35.0;
    std::optional<int> order_override;
};

struct DesignPlan {
    int order = 0;
    Family family;
    BandShape band;
    double sample_rate;
    std::vector<double> analog_passband_edges;  // prewarped rad/s
    std::vector<double> analog_stopband_edges;
    double passband_ripple_db;
    double stopband_atten_db;
    // low-pass-equivalent selectivity ratio (omega_s/omega_p after any
    // band reduction)
    double selectivity_ratio = 0.0;
};

void validate_spec(const FilterSpec& spec);

// 2 fs tan(pi f / fs): analog frequency whose bilinear image is f.
double prewarp(double frequency, double sample_rate);

int minimum_order(Family family, double omega_p, double omega_s, double rp, double rs);

DesignPlan plan(const FilterSpec& spec);

// Full pipeline: prototype -> band transform -> bilinear.
DigitalFilter design_filter(const FilterSpec& spec);

// Analog cutoff used for a Butterworth design: the frequency where the
// transformed low-pass reaches the half-power point, placed so that the
// passband edge meets the ripple constraint exactly.
double butterworth_cutoff(const DesignPlan& p);

}  // namespace iirkit
