#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "iirkit/design.hpp"
#include "iirkit/sos.hpp"
#include "iirkit/transform.hpp"

namespace iirkit {

enum class ResponseKind { impulse, magnitude_db, phase_rad, group_delay_samples, spectrum_db };

struct ResponseSeries {
    ResponseKind kind;
    std::vector<double> abscissa;  // Hz, or sample index for impulse
    std::vector<double> ordinate;
};

struct PoleZeroReport {
    std::vector<Complex> poles;  // modulus-descending, conjugates adjacent
    std::vector<Complex> zeros;
};

struct BandMetrics {
    double passband_deviation_db = 0.0;
    double stopband_attenuation_db = 0.0;
    double transition_width_hz = 0.0;
    double phase_linearity_error_rad = 0.0;
};

constexpr double kDbFloor = -200.0;

double to_db(double magnitude);

// H(e^{j 2 pi f / fs}) from the factored zero/pole form.
std::vector<Complex> frequency_response(const DigitalFilter& filter,
                                        std::span<const double> frequencies,
                                        double sample_rate);
std::vector<Complex> frequency_response(const SOSCascade& cascade,
                                        std::span<const double> frequencies,
                                        double sample_rate);

// Removes 2 pi jumps in place.
void unwrap_phase(std::vector<double>& phase);

ResponseSeries response_series(const DigitalFilter& filter, ResponseKind kind,
                               size_t points, double sample_rate);
ResponseSeries response_series(const SOSCascade& cascade, ResponseKind kind,
                               size_t points, double sample_rate);

PoleZeroReport pole_zero(const DigitalFilter& filter);
PoleZeroReport pole_zero(const SOSCascade& cascade);

BandMetrics measure_band_metrics(const DigitalFilter& filter, const FilterSpec& spec);

std::string to_string(ResponseKind kind);

}  // namespace iirkit
