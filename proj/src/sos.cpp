#include "iirkit/sos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace iirkit {

namespace {

constexpr double kRealTol = 1e-9;

bool is_real_root(const Complex& r) {
    return std::fabs(r.imag()) <= kRealTol * (1.0 + std::abs(r));
}

struct RootUnit {
    std::vector<Complex> roots;  // 1 or 2 entries
    double max_modulus = 0.0;
};

// Groups conjugate pairs, then pairs leftover real roots two at a time.
std::vector<RootUnit> group_pole_units(std::vector<Complex> poles) {
    std::sort(poles.begin(), poles.end(), [](const Complex& a, const Complex& b) {
        return std::abs(a) > std::abs(b);
    });

    std::vector<RootUnit> units;
    std::vector<bool> used(poles.size(), false);
    for (size_t i = 0; i < poles.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        RootUnit u;
        u.roots.push_back(poles[i]);
        if (!is_real_root(poles[i])) {
            size_t mate = poles.size();
            double best = std::numeric_limits<double>::max();
            for (size_t j = i + 1; j < poles.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(std::conj(poles[i]) - poles[j]);
                if (d < best) {
                    best = d;
                    mate = j;
                }
            }
            if (mate == poles.size() || best > 1e-6 * (1.0 + std::abs(poles[i]))) {
                throw std::runtime_error("conjugate-symmetry error: unmatched complex pole");
            }
            used[mate] = true;
            u.roots.push_back(poles[mate]);
        } else {
            for (size_t j = i + 1; j < poles.size(); ++j) {
                if (!used[j] && is_real_root(poles[j])) {
                    used[j] = true;
                    u.roots.push_back(poles[j]);
                    break;
                }
            }
        }
        u.max_modulus = std::abs(u.roots[0]);
        for (const Complex& r : u.roots) u.max_modulus = std::max(u.max_modulus, std::abs(r));
        units.push_back(std::move(u));
    }
    return units;
}

size_t take_nearest(std::vector<Complex>& pool, const Complex& target, bool real_only) {
    size_t best = pool.size();
    double best_d = std::numeric_limits<double>::max();
    for (size_t i = 0; i < pool.size(); ++i) {
        if (real_only && !is_real_root(pool[i])) continue;
        double d = std::abs(pool[i] - target);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

Complex pop_at(std::vector<Complex>& pool, size_t i) {
    Complex r = pool[i];
    pool.erase(pool.begin() + static_cast<long>(i));
    return r;
}

void fill_quadratic(const std::vector<Complex>& roots, double& c1, double& c2) {
    if (roots.empty()) {
        c1 = c2 = 0.0;
    } else if (roots.size() == 1) {
        c1 = -roots[0].real();
        c2 = 0.0;
    } else {
        c1 = -(roots[0] + roots[1]).real();
        c2 = (roots[0] * roots[1]).real();
    }
}

}  // namespace

FilterState::FilterState(const SOSCascade& cascade, double sample_rate)
    : regs_(cascade.sections.size()), sample_rate_(sample_rate) {}

void FilterState::reset() {
    for (auto& r : regs_) r.v[0] = r.v[1] = 0.0;
}

SOSCascade zpk_to_sos(const DigitalFilter& filter) {
    if (filter.zeros.size() > filter.poles.size()) {
        throw std::invalid_argument("zpk_to_sos requires at most as many zeros as poles");
    }

    std::vector<RootUnit> pole_units = group_pole_units(filter.poles);
    std::vector<Complex> zero_pool = filter.zeros;

    struct Section {
        RootUnit poles;
        std::vector<Complex> zeros;
    };
    std::vector<Section> sections;

    // Descending pole modulus; each pole unit grabs its nearest zeros.
    std::sort(pole_units.begin(), pole_units.end(), [](const RootUnit& a, const RootUnit& b) {
        return a.max_modulus > b.max_modulus;
    });
    for (RootUnit& u : pole_units) {
        Section sec;
        size_t want = u.roots.size();
        if (want >= 1 && !zero_pool.empty()) {
            size_t i = take_nearest(zero_pool, u.roots[0], want == 1);
            if (i < zero_pool.size()) {
                Complex z = pop_at(zero_pool, i);
                sec.zeros.push_back(z);
                if (want == 2 && !zero_pool.empty()) {
                    if (!is_real_root(z)) {
                        size_t j = take_nearest(zero_pool, std::conj(z), false);
                        if (j == zero_pool.size() ||
                            std::abs(zero_pool[j] - std::conj(z)) > 1e-6 * (1.0 + std::abs(z))) {
                            throw std::runtime_error("conjugate-symmetry error: unmatched complex zero");
                        }
                        sec.zeros.push_back(pop_at(zero_pool, j));
                    } else {
                        size_t j = take_nearest(zero_pool, z, true);
                        if (j < zero_pool.size()) sec.zeros.push_back(pop_at(zero_pool, j));
                    }
                }
            }
        }
        sec.poles = std::move(u);
        sections.push_back(std::move(sec));
    }
    if (!zero_pool.empty()) {
        throw std::runtime_error("zpk_to_sos: zeros left unassigned");
    }

    std::sort(sections.begin(), sections.end(), [](const Section& a, const Section& b) {
        return a.poles.max_modulus < b.poles.max_modulus;
    });

    SOSCascade out;
    out.overall_gain = filter.gain;
    for (const Section& sec : sections) {
        Biquad q;
        q.b0 = 1.0;
        fill_quadratic(sec.zeros, q.b1, q.b2);
        fill_quadratic(sec.poles.roots, q.a1, q.a2);
        out.sections.push_back(q);
    }
    return out;
}

DigitalFilter sos_to_zpk(const SOSCascade& cascade, double sample_rate) {
    DigitalFilter out;
    out.sample_rate = sample_rate;
    out.gain = cascade.overall_gain;

    // roots of c0 z^2 + c1 z + c2 in z (a0=1 sections written in z^-1
    // become degree-2 in z with roots at the origin when trailing
    // coefficients vanish); returns the leading coefficient.
    auto quadratic_roots = [](double c0, double c1, double c2, std::vector<Complex>& dst) {
        if (c0 != 0.0) {
            Complex disc = std::sqrt(Complex(c1 * c1 - 4.0 * c0 * c2, 0.0));
            dst.push_back((-c1 + disc) / (2.0 * c0));
            dst.push_back((-c1 - disc) / (2.0 * c0));
            return c0;
        }
        if (c1 != 0.0) {
            dst.emplace_back(-c2 / c1, 0.0);
            return c1;
        }
        if (c2 != 0.0) return c2;
        throw std::invalid_argument("section numerator is identically zero");
    };

    for (const Biquad& q : cascade.sections) {
        quadratic_roots(1.0, q.a1, q.a2, out.poles);
        out.gain *= quadratic_roots(q.b0, q.b1, q.b2, out.zeros);
    }

    // drop exactly-coincident origin pairs introduced by the z^2 lift
    auto count_origin = [](std::vector<Complex>& v) {
        size_t n = 0;
        for (size_t i = 0; i < v.size();) {
            if (v[i] == Complex(0.0, 0.0)) {
                v.erase(v.begin() + static_cast<long>(i));
                ++n;
            } else {
                ++i;
            }
        }
        return n;
    };
    std::vector<Complex> zeros = out.zeros, poles = out.poles;
    size_t oz = count_origin(zeros), op = count_origin(poles);
    size_t cancel = std::min(oz, op);
    zeros.insert(zeros.end(), oz - cancel, Complex(0.0, 0.0));
    poles.insert(poles.end(), op - cancel, Complex(0.0, 0.0));
    out.zeros = std::move(zeros);
    out.poles = std::move(poles);

    enforce_conjugate_symmetry(out.zeros);
    enforce_conjugate_symmetry(out.poles);
    return out;
}

std::vector<double> filter_stream(FilterState& state, const SOSCascade& cascade,
                                  std::span<const double> input) {
    if (state.section_count() != cascade.sections.size()) {
        throw std::invalid_argument("state-shape error: state does not match cascade");
    }
    std::vector<double> out;
    out.reserve(input.size());
    for (double x : input) {
        double v = cascade.overall_gain * x;
        for (size_t s = 0; s < cascade.sections.size(); ++s) {
            const Biquad& q = cascade.sections[s];
            double(&r)[2] = state.registers(s);
            double y = q.b0 * v + r[0];
            r[0] = q.b1 * v - q.a1 * y + r[1];
            r[1] = q.b2 * v - q.a2 * y;
            v = y;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<double> impulse_response(const SOSCascade& cascade, size_t length,
                                     double sample_rate) {
    if (length < 1) throw std::invalid_argument("impulse length must be >= 1");
    std::vector<double> impulse(length, 0.0);
    impulse[0] = 1.0;
    FilterState state(cascade, sample_rate);
    return filter_stream(state, cascade, impulse);
}

StabilityReport is_stable(const DigitalFilter& filter) {
    double max_mod = 0.0;
    for (const Complex& p : filter.poles) max_mod = std::max(max_mod, std::abs(p));
    return {max_mod < 1.0, 1.0 - max_mod};
}

StabilityReport is_stable(const SOSCascade& cascade) {
    double max_mod = 0.0;
    for (const Biquad& q : cascade.sections) {
        Complex disc = std::sqrt(Complex(q.a1 * q.a1 - 4.0 * q.a2, 0.0));
        max_mod = std::max(max_mod, std::abs((-q.a1 + disc) / 2.0));
        max_mod = std::max(max_mod, std::abs((-q.a1 - disc) / 2.0));
    }
    return {max_mod < 1.0, 1.0 - max_mod};
}

}  // namespace iirkit
