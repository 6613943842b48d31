#include "iirkit/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iirkit {

namespace {

Complex product_of_negated(const std::vector<Complex>& roots) {
    Complex acc(1.0, 0.0);
    for (const Complex& r : roots) acc *= -r;
    return acc;
}

void scale_roots(std::vector<Complex>& roots, double factor) {
    for (Complex& r : roots) r *= factor;
}

}  // namespace

void enforce_conjugate_symmetry(std::vector<Complex>& roots) {
    std::vector<Complex> real_roots, upper;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        const Complex& r = roots[i];
        double scale = 1.0 + std::abs(r);
        if (std::fabs(r.imag()) < 1e-9 * scale) {
            real_roots.emplace_back(r.real(), 0.0);
            used[i] = true;
            continue;
        }
        // nearest unused conjugate candidate
        size_t best = roots.size();
        double best_dist = 1e-6 * scale;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(std::conj(r) - roots[j]);
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best == roots.size()) {
            throw std::runtime_error("conjugate-symmetry error: unmatched complex root");
        }
        Complex avg(0.5 * (r.real() + roots[best].real()),
                    0.5 * (std::fabs(r.imag()) + std::fabs(roots[best].imag())));
        upper.push_back(avg);
        used[i] = used[best] = true;
    }

    roots.clear();
    for (const Complex& r : upper) {
        roots.push_back(r);
        roots.push_back(std::conj(r));
    }
    roots.insert(roots.end(), real_roots.begin(), real_roots.end());
}

AnalogFilter transform_band(const AnalogPrototype& proto, BandShape band,
                            const std::vector<double>& edges) {
    size_t expected = (band == BandShape::lowpass || band == BandShape::highpass) ? 1 : 2;
    if (edges.size() != expected) {
        throw std::invalid_argument("invalid edges: band shape expects " +
                                    std::to_string(expected) + " edge(s)");
    }
    for (double e : edges) {
        if (e <= 0.0) throw std::invalid_argument("invalid edges: must be positive rad/s");
    }

    AnalogFilter out;
    size_t deficit = proto.poles.size() - proto.zeros.size();

    switch (band) {
        case BandShape::lowpass: {
            double wc = edges[0];
            out.zeros = proto.zeros;
            out.poles = proto.poles;
            scale_roots(out.zeros, wc);
            scale_roots(out.poles, wc);
            out.gain = proto.gain * std::pow(wc, static_cast<double>(deficit));
            break;
        }
        case BandShape::highpass: {
            double wc = edges[0];
            for (const Complex& z : proto.zeros) out.zeros.push_back(wc / z);
            for (const Complex& p : proto.poles) out.poles.push_back(wc / p);
            out.zeros.insert(out.zeros.end(), deficit, Complex(0.0, 0.0));
            out.gain = proto.gain *
                       (product_of_negated(proto.zeros) / product_of_negated(proto.poles)).real();
            break;
        }
        case BandShape::bandpass: {
            if (edges[0] >= edges[1]) throw std::invalid_argument("invalid edges: lower >= upper");
            double w0sq = edges[0] * edges[1];
            double bw = edges[1] - edges[0];
            auto map_root = [&](const Complex& r, std::vector<Complex>& dst) {
                Complex half = r * (bw / 2.0);
                Complex disc = std::sqrt(half * half - w0sq);
                dst.push_back(half + disc);
                dst.push_back(half - disc);
            };
            for (const Complex& z : proto.zeros) map_root(z, out.zeros);
            for (const Complex& p : proto.poles) map_root(p, out.poles);
            out.zeros.insert(out.zeros.end(), deficit, Complex(0.0, 0.0));
            out.gain = proto.gain * std::pow(bw, static_cast<double>(deficit));
            break;
        }
        case BandShape::bandstop: {
            if (edges[0] >= edges[1]) throw std::invalid_argument("invalid edges: lower >= upper");
            double w0sq = edges[0] * edges[1];
            double w0 = std::sqrt(w0sq);
            double bw = edges[1] - edges[0];
            auto map_root = [&](const Complex& r, std::vector<Complex>& dst) {
                Complex half = (bw / 2.0) / r;
                Complex disc = std::sqrt(half * half - w0sq);
                dst.push_back(half + disc);
                dst.push_back(half - disc);
            };
            for (const Complex& z : proto.zeros) map_root(z, out.zeros);
            for (const Complex& p : proto.poles) map_root(p, out.poles);
            for (size_t i = 0; i < deficit; ++i) {
                out.zeros.emplace_back(0.0, w0);
                out.zeros.emplace_back(0.0, -w0);
            }
            out.gain = proto.gain *
                       (product_of_negated(proto.zeros) / product_of_negated(proto.poles)).real();
            break;
        }
    }

    enforce_conjugate_symmetry(out.zeros);
    enforce_conjugate_symmetry(out.poles);
    return out;
}

DigitalFilter bilinear(const AnalogFilter& analog, double sample_rate) {
    if (sample_rate <= 0.0) throw std::invalid_argument("sample rate must be positive");
    double fs2 = 2.0 * sample_rate;

    for (const Complex& p : analog.poles) {
        if (p.real() >= 0.0) throw std::invalid_argument("analog poles must lie in the left half plane");
        if (std::abs(p - Complex(fs2, 0.0)) < 1e-12 * fs2) {
            throw std::invalid_argument("mapping-singularity: analog pole at s = 2 fs");
        }
    }

    DigitalFilter out;
    out.sample_rate = sample_rate;
    Complex num(1.0, 0.0), den(1.0, 0.0);
    for (const Complex& z : analog.zeros) {
        out.zeros.push_back((fs2 + z) / (fs2 - z));
        num *= (fs2 - z);
    }
    for (const Complex& p : analog.poles) {
        out.poles.push_back((fs2 + p) / (fs2 - p));
        den *= (fs2 - p);
    }
    size_t deficit = analog.poles.size() - analog.zeros.size();
    out.zeros.insert(out.zeros.end(), deficit, Complex(-1.0, 0.0));
    out.gain = analog.gain * (num / den).real();

    enforce_conjugate_symmetry(out.zeros);
    enforce_conjugate_symmetry(out.poles);
    return out;
}

}  // namespace iirkit
