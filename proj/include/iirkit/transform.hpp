#pragma once

#include <vector>

#include "iirkit/prototype.hpp"

namespace iirkit {

enum class BandShape { lowpass, highpass, bandpass, bandstop };

// Unnormalized analog filter (rad/s roots).
struct AnalogFilter {
    std::vector<Complex> zeros;
    std::vector<Complex> poles;
    double gain = 1.0;
};

// z-plane filter; sample_rate carries the sampling period used by the
// bilinear map that produced it.
struct DigitalFilter {
    std::vector<Complex> zeros;
    std::vector<Complex> poles;
    double gain = 1.0;
    double sample_rate = 0.0;
};

// Rewrites near-conjugate root pairs as exact conjugates so downstream
// real-coefficient grouping is lossless.
void enforce_conjugate_symmetry(std::vector<Complex>& roots);

// Low-pass prototype -> requested band shape, in the analog domain.
// edges: {cutoff} for LP/HP, {lower, upper} band corners for BP/BS
// (center = geometric mean, bandwidth = difference).
AnalogFilter transform_band(const AnalogPrototype& proto, BandShape band,
                            const std::vector<double>& edges);

// s -> z via z = (2 fs + s)/(2 fs - s); zero deficit filled at z = -1.
DigitalFilter bilinear(const AnalogFilter& analog, double sample_rate);

}  // namespace iirkit
