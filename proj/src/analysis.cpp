#include "iirkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iirkit {

namespace {

struct Interval {
    double lo, hi;
};

std::vector<double> grid(const Interval& iv, size_t points) {
    std::vector<double> out;
    out.reserve(points);
    for (size_t i = 0; i < points; ++i) {
        out.push_back(iv.lo + (iv.hi - iv.lo) * static_cast<double>(i) /
                                  static_cast<double>(points - 1));
    }
    return out;
}

double attenuation_at(const DigitalFilter& f, double freq, double fs) {
    std::vector<double> one{freq};
    return -to_db(std::abs(frequency_response(f, one, fs)[0]));
}

// Bisects the attenuation crossing `level` between f_a (below) and f_b
// (above), to 0.1 Hz.
double bisect_crossing(const DigitalFilter& f, double fs, double f_below, double f_above,
                       double level) {
    if (attenuation_at(f, f_below, fs) >= level) return f_below;
    double lo = f_below, hi = f_above;
    while (std::fabs(hi - lo) > 0.1) {
        double mid = 0.5 * (lo + hi);
        if (attenuation_at(f, mid, fs) >= level) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<Complex> sorted_conjugate_roots(std::vector<Complex> roots) {
    enforce_conjugate_symmetry(roots);
    struct Unit {
        std::vector<Complex> members;
        double modulus;
    };
    std::vector<Unit> units;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].imag() > 0.0 && i + 1 < roots.size() &&
            roots[i + 1] == std::conj(roots[i])) {
            units.push_back({{roots[i], roots[i + 1]}, std::abs(roots[i])});
            ++i;
        } else {
            units.push_back({{roots[i]}, std::abs(roots[i])});
        }
    }
    std::stable_sort(units.begin(), units.end(),
                     [](const Unit& a, const Unit& b) { return a.modulus > b.modulus; });
    std::vector<Complex> out;
    for (const Unit& u : units) out.insert(out.end(), u.members.begin(), u.members.end());
    return out;
}

}  // namespace

double to_db(double magnitude) {
    if (magnitude < 1e-10) return kDbFloor;
    return 20.0 * std::log10(magnitude);
}

std::vector<Complex> frequency_response(const DigitalFilter& filter,
                                        std::span<const double> frequencies,
                                        double sample_rate) {
    std::vector<Complex> out;
    out.reserve(frequencies.size());
    for (double f : frequencies) {
        if (f < 0.0 || f > sample_rate / 2.0 + 1e-9) {
            throw std::invalid_argument("out-of-band frequency: must lie in [0, Nyquist]");
        }
        Complex z = std::polar(1.0, 2.0 * M_PI * f / sample_rate);
        Complex h(filter.gain, 0.0);
        for (const Complex& zero : filter.zeros) h *= (z - zero);
        for (const Complex& pole : filter.poles) h /= (z - pole);
        out.push_back(h);
    }
    return out;
}

std::vector<Complex> frequency_response(const SOSCascade& cascade,
                                        std::span<const double> frequencies,
                                        double sample_rate) {
    return frequency_response(sos_to_zpk(cascade, sample_rate), frequencies, sample_rate);
}

void unwrap_phase(std::vector<double>& phase) {
    for (size_t i = 1; i < phase.size(); ++i) {
        double d = phase[i] - phase[i - 1];
        while (d > M_PI) {
            phase[i] -= 2.0 * M_PI;
            d = phase[i] - phase[i - 1];
        }
        while (d < -M_PI) {
            phase[i] += 2.0 * M_PI;
            d = phase[i] - phase[i - 1];
        }
    }
}

ResponseSeries response_series(const DigitalFilter& filter, ResponseKind kind,
                               size_t points, double sample_rate) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    ResponseSeries out;
    out.kind = kind;

    if (kind == ResponseKind::impulse) {
        SOSCascade cascade = zpk_to_sos(filter);
        out.ordinate = impulse_response(cascade, points, sample_rate);
        for (size_t i = 0; i < points; ++i) out.abscissa.push_back(static_cast<double>(i));
        return out;
    }
    if (kind == ResponseKind::spectrum_db) {
        throw std::invalid_argument("invalid kind: spectrum_db is a signal series, not a filter series");
    }

    out.abscissa = grid({0.0, sample_rate / 2.0}, points);
    std::vector<Complex> h = frequency_response(filter, out.abscissa, sample_rate);

    if (kind == ResponseKind::magnitude_db) {
        for (const Complex& v : h) out.ordinate.push_back(to_db(std::abs(v)));
        return out;
    }

    std::vector<double> phase;
    phase.reserve(points);
    for (const Complex& v : h) phase.push_back(std::arg(v));
    unwrap_phase(phase);

    if (kind == ResponseKind::phase_rad) {
        out.ordinate = std::move(phase);
        return out;
    }

    // group delay, samples: -dphi/domega with omega in rad/sample
    double domega = 2.0 * M_PI * (out.abscissa[1] - out.abscissa[0]) / sample_rate;
    out.ordinate.resize(points);
    for (size_t i = 0; i < points; ++i) {
        size_t lo = (i == 0) ? 0 : i - 1;
        size_t hi = (i + 1 == points) ? i : i + 1;
        out.ordinate[i] = -(phase[hi] - phase[lo]) / (domega * static_cast<double>(hi - lo));
    }
    return out;
}

ResponseSeries response_series(const SOSCascade& cascade, ResponseKind kind,
                               size_t points, double sample_rate) {
    if (kind == ResponseKind::impulse) {
        ResponseSeries out;
        out.kind = kind;
        out.ordinate = impulse_response(cascade, points, sample_rate);
        for (size_t i = 0; i < points; ++i) out.abscissa.push_back(static_cast<double>(i));
        return out;
    }
    return response_series(sos_to_zpk(cascade, sample_rate), kind, points, sample_rate);
}

PoleZeroReport pole_zero(const DigitalFilter& filter) {
    PoleZeroReport report;
    report.poles = sorted_conjugate_roots(filter.poles);
    report.zeros = sorted_conjugate_roots(filter.zeros);
    return report;
}

PoleZeroReport pole_zero(const SOSCascade& cascade) {
    return pole_zero(sos_to_zpk(cascade, 1.0));
}

BandMetrics measure_band_metrics(const DigitalFilter& filter, const FilterSpec& spec) {
    validate_spec(spec);
    double fs = spec.sample_rate;
    double nyq = fs / 2.0;
    const auto& fp = spec.passband_edges;
    const auto& fst = spec.stopband_edges;

    std::vector<Interval> passbands, stopbands;
    // transitions listed passband-edge first
    std::vector<std::pair<double, double>> transitions;
    switch (spec.band) {
        case BandShape::lowpass:
            passbands = {{0.0, fp[0]}};
            stopbands = {{fst[0], nyq}};
            transitions = {{fp[0], fst[0]}};
            break;
        case BandShape::highpass:
            passbands = {{fp[0], nyq}};
            stopbands = {{0.0, fst[0]}};
            transitions = {{fp[0], fst[0]}};
            break;
        case BandShape::bandpass:
            passbands = {{fp[0], fp[1]}};
            stopbands = {{0.0, fst[0]}, {fst[1], nyq}};
            transitions = {{fp[0], fst[0]}, {fp[1], fst[1]}};
            break;
        case BandShape::bandstop:
            passbands = {{0.0, fp[0]}, {fp[1], nyq}};
            stopbands = {{fst[0], fst[1]}};
            transitions = {{fp[0], fst[0]}, {fp[1], fst[1]}};
            break;
    }

    constexpr size_t kGrid = 1024;
    BandMetrics metrics;

    std::vector<double> pass_freqs;
    for (const Interval& iv : passbands) {
        auto g = grid(iv, kGrid);
        pass_freqs.insert(pass_freqs.end(), g.begin(), g.end());
    }
    std::vector<Complex> h_pass = frequency_response(filter, pass_freqs, fs);
    for (const Complex& v : h_pass) {
        metrics.passband_deviation_db =
            std::max(metrics.passband_deviation_db, std::fabs(to_db(std::abs(v))));
    }

    double min_atten = 1e9;
    for (const Interval& iv : stopbands) {
        for (const Complex& v : frequency_response(filter, grid(iv, kGrid), fs)) {
            min_atten = std::min(min_atten, -to_db(std::abs(v)));
        }
    }
    metrics.stopband_attenuation_db = min_atten;

    for (auto [f_pass, f_stop] : transitions) {
        double f_rp = bisect_crossing(filter, fs, f_pass, f_stop, spec.passband_ripple_db);
        double f_rs = bisect_crossing(filter, fs, f_pass, f_stop, spec.stopband_atten_db);
        metrics.transition_width_hz += std::fabs(f_rs - f_rp);
    }

    // max residual from the least-squares line of the unwrapped passband phase
    std::vector<double> phase;
    phase.reserve(h_pass.size());
    for (const Complex& v : h_pass) phase.push_back(std::arg(v));
    unwrap_phase(phase);
    double n = static_cast<double>(phase.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < phase.size(); ++i) {
        sx += pass_freqs[i];
        sy += phase[i];
        sxx += pass_freqs[i] * pass_freqs[i];
        sxy += pass_freqs[i] * phase[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    for (size_t i = 0; i < phase.size(); ++i) {
        double resid = std::fabs(phase[i] - (slope * pass_freqs[i] + intercept));
        metrics.phase_linearity_error_rad = std::max(metrics.phase_linearity_error_rad, resid);
    }
    return metrics;
}

std::string to_string(ResponseKind kind) {
    switch (kind) {
        case ResponseKind::impulse: return "impulse";
        case ResponseKind::magnitude_db: return "magnitude_db";
        case ResponseKind::phase_rad: return "phase_rad";
        case ResponseKind::group_delay_samples: return "group_delay_samples";
        case ResponseKind::spectrum_db: return "spectrum_db";
    }
    return "unknown";
}

}  // namespace iirkit
