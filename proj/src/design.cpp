#include "iirkit/design.hpp"

#include <cmath>
#include <stdexcept>

#include "iirkit/elliptic_functions.hpp"

namespace iirkit {

namespace {

bool is_band_filter(BandShape band) {
    return band == BandShape::bandpass || band == BandShape::bandstop;
}

// Corner frequencies of the band whose center/width are (w0, bw).
std::vector<double> corners_from_center(double w0sq, double bw) {
    double lo = 0.5 * (-bw + std::sqrt(bw * bw + 4.0 * w0sq));
    return {lo, lo + bw};
}

}  // namespace

void validate_spec(const FilterSpec& spec) {
    double nyquist = spec.sample_rate / 2.0;
    if (spec.sample_rate <= 0.0) throw std::invalid_argument("sample rate must be positive");

    size_t expected = is_band_filter(spec.band) ? 2 : 1;
    if (spec.passband_edges.size() != expected || spec.stopband_edges.size() != expected) {
        throw std::invalid_argument("invalid edges: band shape expects " +
                                    std::to_string(expected) + " passband and stopband edge(s)");
    }
    for (double f : spec.passband_edges) {
        if (f <= 0.0 || f >= nyquist) throw std::invalid_argument("edge outside (0, Nyquist)");
    }
    for (double f : spec.stopband_edges) {
        if (f <= 0.0 || f >= nyquist) throw std::invalid_argument("edge outside (0, Nyquist)");
    }

    const auto& fp = spec.passband_edges;
    const auto& fs = spec.stopband_edges;
    bool ok = true;
    switch (spec.band) {
        case BandShape::lowpass: ok = fp[0] < fs[0]; break;
        case BandShape::highpass: ok = fs[0] < fp[0]; break;
        case BandShape::bandpass:
            ok = fs[0] < fp[0] && fp[0] < fp[1] && fp[1] < fs[1];
            break;
        case BandShape::bandstop:
            ok = fp[0] < fs[0] && fs[0] < fs[1] && fs[1] < fp[1];
            break;
    }
    if (!ok) throw std::invalid_argument("infeasible spec: band edges out of order");

    if (spec.passband_ripple_db <= 0.0 || spec.stopband_atten_db <= spec.passband_ripple_db) {
        throw std::invalid_argument("infeasible spec: need 0 < rp < rs");
    }
    if (spec.order_override && *spec.order_override < 1) {
        throw std::invalid_argument("invalid order: override must be >= 1");
    }
}

double prewarp(double frequency, double sample_rate) {
    if (frequency <= 0.0 || frequency >= sample_rate / 2.0) {
        throw std::invalid_argument("out-of-band frequency: must lie in (0, Nyquist)");
    }
    return 2.0 * sample_rate * std::tan(M_PI * frequency / sample_rate);
}

int minimum_order(Family family, double omega_p, double omega_s, double rp, double rs) {
    if (omega_s <= omega_p) throw std::invalid_argument("infeasible spec: omega_s <= omega_p");
    if (rp <= 0.0 || rs <= rp) throw std::invalid_argument("infeasible spec: need 0 < rp < rs");

    double ratio = omega_s / omega_p;
    double d = (std::pow(10.0, rs / 10.0) - 1.0) / (std::pow(10.0, rp / 10.0) - 1.0);

    double n = 0.0;
    switch (family) {
        case Family::butterworth:
            n = std::log(d) / (2.0 * std::log(ratio));
            break;
        case Family::chebyshev1:
            n = std::acosh(std::sqrt(d)) / std::acosh(ratio);
            break;
        case Family::elliptic: {
            double k = 1.0 / ratio;
            double k1 = 1.0 / std::sqrt(d);
            n = complete_elliptic_integral(k) * complementary_elliptic_integral(k1) /
                (complementary_elliptic_integral(k) * complete_elliptic_integral(k1));
            break;
        }
    }
    int order = static_cast<int>(std::ceil(n));
    return order < 1 ? 1 : order;
}

DesignPlan plan(const FilterSpec& spec) {
    validate_spec(spec);

    DesignPlan out;
    out.family = spec.family;
    out.band = spec.band;
    out.sample_rate = spec.sample_rate;
    out.passband_ripple_db = spec.passband_ripple_db;
    out.stopband_atten_db = spec.stopband_atten_db;
    for (double f : spec.passband_edges) {
        out.analog_passband_edges.push_back(prewarp(f, spec.sample_rate));
    }
    for (double f : spec.stopband_edges) {
        out.analog_stopband_edges.push_back(prewarp(f, spec.sample_rate));
    }

    const auto& wp = out.analog_passband_edges;
    const auto& ws = out.analog_stopband_edges;
    switch (spec.band) {
        case BandShape::lowpass:
            out.selectivity_ratio = ws[0] / wp[0];
            break;
        case BandShape::highpass:
            out.selectivity_ratio = wp[0] / ws[0];
            break;
        case BandShape::bandpass: {
            double w0sq = wp[0] * wp[1];
            double bw = wp[1] - wp[0];
            double v_lo = std::fabs(ws[0] * ws[0] - w0sq) / (bw * ws[0]);
            double v_hi = std::fabs(ws[1] * ws[1] - w0sq) / (bw * ws[1]);
            out.selectivity_ratio = std::min(v_lo, v_hi);
            break;
        }
        case BandShape::bandstop: {
            double w0sq = wp[0] * wp[1];
            double bw = wp[1] - wp[0];
            double v_lo = bw * ws[0] / std::fabs(w0sq - ws[0] * ws[0]);
            double v_hi = bw * ws[1] / std::fabs(w0sq - ws[1] * ws[1]);
            out.selectivity_ratio = std::min(v_lo, v_hi);
            break;
        }
    }
    if (out.selectivity_ratio <= 1.0) {
        throw std::invalid_argument("infeasible spec: degenerate transition band");
    }

    out.order = spec.order_override
                    ? *spec.order_override
                    : minimum_order(spec.family, 1.0, out.selectivity_ratio,
                                    spec.passband_ripple_db, spec.stopband_atten_db);
    return out;
}

double butterworth_cutoff(const DesignPlan& p) {
    if (p.band != BandShape::lowpass && p.band != BandShape::highpass) {
        throw std::invalid_argument("butterworth_cutoff is defined for lowpass/highpass plans");
    }
    double adjust = std::pow(std::pow(10.0, p.passband_ripple_db / 10.0) - 1.0,
                             -1.0 / (2.0 * p.order));
    double wp = p.analog_passband_edges[0];
    return p.band == BandShape::lowpass ? wp * adjust : wp / adjust;
}

DigitalFilter design_filter(const FilterSpec& spec) {
    DesignPlan pl = plan(spec);

    AnalogPrototype proto;
    switch (spec.family) {
        case Family::butterworth:
            proto = butterworth_prototype(pl.order);
            break;
        case Family::chebyshev1:
            proto = chebyshev1_prototype(pl.order, pl.passband_ripple_db);
            break;
        case Family::elliptic:
            proto = elliptic_prototype(pl.order, pl.passband_ripple_db, pl.stopband_atten_db);
            break;
    }

    // Chebyshev/elliptic prototypes are normalized at the passband edge;
    // the Butterworth prototype is normalized at its half-power point, so
    // stretch it until the passband edge meets rp exactly.
    double adjust = 1.0;
    if (spec.family == Family::butterworth) {
        adjust = std::pow(std::pow(10.0, pl.passband_ripple_db / 10.0) - 1.0,
                          -1.0 / (2.0 * pl.order));
    }

    const auto& wp = pl.analog_passband_edges;
    std::vector<double> edges;
    switch (spec.band) {
        case BandShape::lowpass:
            edges = {wp[0] * adjust};
            break;
        case BandShape::highpass:
            edges = {wp[0] / adjust};
            break;
        case BandShape::bandpass:
            edges = corners_from_center(wp[0] * wp[1], (wp[1] - wp[0]) * adjust);
            break;
        case BandShape::bandstop:
            edges = corners_from_center(wp[0] * wp[1], (wp[1] - wp[0]) / adjust);
            break;
    }

    AnalogFilter analog = transform_band(proto, spec.band, edges);
    return bilinear(analog, spec.sample_rate);
}

}  // namespace iirkit
