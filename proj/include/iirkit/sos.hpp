#pragma once

#include <span>
#include <vector>

#include "iirkit/transform.hpp"

namespace iirkit {

// One second-order section, a0 implicitly 1. Denominator stored in the
// subtraction convention: y[m] = b0 x[m] + b1 x[m-1] + b2 x[m-2]
//                               - a1 y[m-1] - a2 y[m-2].
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

struct SOSCascade {
    std::vector<Biquad> sections;
    double overall_gain = 1.0;  // applied to the input of the first section
};

// Per-section delay registers, direct-form II transposed.
class FilterState {
public:
    FilterState(const SOSCascade& cascade, double sample_rate);

    void reset();
    size_t section_count() const { return regs_.size(); }
    double sample_rate() const { return sample_rate_; }

    double (&registers(size_t section))[2] { return regs_[section].v; }

private:
    struct Regs {
        double v[2] = {0.0, 0.0};
    };
    std::vector<Regs> regs_;
    double sample_rate_;
};

struct StabilityReport {
    bool stable;
    double margin;  // 1 - max pole modulus
};

SOSCascade zpk_to_sos(const DigitalFilter& filter);

// Roots the section quadratics back into z-plane zeros/poles/gain.
DigitalFilter sos_to_zpk(const SOSCascade& cascade, double sample_rate);

// Streaming difference-equation evaluation; stateful across calls.
std::vector<double> filter_stream(FilterState& state, const SOSCascade& cascade,
                                  std::span<const double> input);

std::vector<double> impulse_response(const SOSCascade& cascade, size_t length,
                                     double sample_rate = 1.0);

StabilityReport is_stable(const DigitalFilter& filter);
StabilityReport is_stable(const SOSCascade& cascade);

}  // namespace iirkit
