#include "iirkit/prototype.hpp"

#include <cmath>
#include <stdexcept>

#include "iirkit/elliptic_functions.hpp"

namespace iirkit {

namespace {

void check_order(int order) {
    if (order < 1) throw std::invalid_argument("filter order must be a positive integer");
}

Complex product_of_negated(const std::vector<Complex>& roots) {
    Complex acc(1.0, 0.0);
    for (const Complex& r : roots) acc *= -r;
    return acc;
}

}  // namespace

double prototype_magnitude(const AnalogPrototype& proto, double omega) {
    Complex s(0.0, omega);
    Complex h(proto.gain, 0.0);
    for (const Complex& z : proto.zeros) h *= (s - z);
    for (const Complex& p : proto.poles) h /= (s - p);
    return std::abs(h);
}

AnalogPrototype butterworth_prototype(int order) {
    check_order(order);
    AnalogPrototype proto;
    proto.poles.reserve(order);
    for (int k = 1; k <= order; ++k) {
        double theta = M_PI * (2.0 * k + order - 1.0) / (2.0 * order);
        proto.poles.emplace_back(std::cos(theta), std::sin(theta));
    }
    proto.gain = product_of_negated(proto.poles).real();
    return proto;
}

ButterworthMetrics butterworth_metrics(double omega, double omega_c, int order) {
    check_order(order);
    if (omega < 0.0) throw std::invalid_argument("frequency must be non-negative");
    if (omega_c <= 0.0) throw std::invalid_argument("cutoff frequency must be positive");
    ButterworthMetrics m;
    double ratio = std::pow(omega / omega_c, 2.0 * order);
    m.magnitude_sq = 1.0 / (1.0 + ratio);
    m.attenuation_db = 10.0 * std::log10(1.0 + ratio);
    m.selectivity = order / (2.0 * std::sqrt(2.0) * omega_c);
    return m;
}

double ripple_to_epsilon(double ripple_db) {
    if (ripple_db <= 0.0) throw std::invalid_argument("ripple must be a positive dB value");
    return std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
}

double chebyshev_poly(int order, double x) {
    if (order < 0) throw std::invalid_argument("chebyshev_poly order must be >= 0");
    if (std::fabs(x) <= 1.0) {
        return std::cos(order * std::acos(x));
    }
    double mag = std::cosh(order * std::acosh(std::fabs(x)));
    return (x < 0.0 && order % 2 != 0) ? -mag : mag;
}

double chebyshev1_magnitude_sq(double omega, double omega_p, double epsilon, int order) {
    check_order(order);
    if (omega < 0.0) throw std::invalid_argument("frequency must be non-negative");
    if (omega_p <= 0.0) throw std::invalid_argument("passband edge must be positive");
    if (epsilon <= 0.0) throw std::invalid_argument("ripple factor must be positive");
    double c = chebyshev_poly(order, omega / omega_p);
    return 1.0 / (1.0 + epsilon * epsilon * c * c);
}

AnalogPrototype chebyshev1_prototype(int order, double ripple_db) {
    check_order(order);
    double eps = ripple_to_epsilon(ripple_db);
    double mu = std::asinh(1.0 / eps) / order;

    AnalogPrototype proto;
    proto.poles.reserve(order);
    for (int k = 1; k <= order; ++k) {
        double theta = M_PI * (2.0 * k - 1.0) / (2.0 * order);
        proto.poles.emplace_back(-std::sinh(mu) * std::sin(theta),
                                 std::cosh(mu) * std::cos(theta));
    }
    double gain = product_of_negated(proto.poles).real();
    if (order % 2 == 0) gain /= std::sqrt(1.0 + eps * eps);
    proto.gain = gain;
    return proto;
}

double elliptic_magnitude(double omega, double omega_p, double epsilon, double xi, int order) {
    check_order(order);
    if (omega < 0.0) throw std::invalid_argument("frequency must be non-negative");
    if (omega_p <= 0.0) throw std::invalid_argument("passband edge must be positive");
    if (epsilon <= 0.0) throw std::invalid_argument("ripple factor must be positive");
    double r = elliptic_rational(order, xi, omega / omega_p);
    return 1.0 / std::sqrt(1.0 + epsilon * epsilon * r * r);
}

EllipticParams elliptic_params(int order, double passband_ripple_db, double stopband_atten_db) {
    check_order(order);
    if (stopband_atten_db <= passband_ripple_db) {
        throw std::invalid_argument("infeasible spec: stopband attenuation must exceed passband ripple");
    }
    double eps_p = ripple_to_epsilon(passband_ripple_db);
    double eps_s = ripple_to_epsilon(stopband_atten_db);
    double k1 = eps_p / eps_s;

    EllipticParams params;
    params.epsilon = eps_p;
    params.xi = solve_degree_equation_xi(order, k1);
    params.modulus = 1.0 / params.xi;
    params.quarter_period = complete_elliptic_integral(params.modulus);
    params.discrimination = elliptic_rational(order, params.xi, params.xi);
    return params;
}

AnalogPrototype elliptic_prototype(int order, double passband_ripple_db, double stopband_atten_db) {
    if (order == 1) {
        // R_1(xi, x) = x: the first-order elliptic response degenerates to
        // first-order Chebyshev-I.
        return chebyshev1_prototype(1, passband_ripple_db);
    }
    EllipticParams params = elliptic_params(order, passband_ripple_db, stopband_atten_db);
    double eps_p = params.epsilon;
    double eps_s = ripple_to_epsilon(stopband_atten_db);
    double k = params.modulus;
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    double k1 = eps_p / eps_s;
    double quarter = params.quarter_period;
    double quarter1 = complete_elliptic_integral(k1);

    AnalogPrototype proto;

    // Zeros: purely imaginary, at j/(k*sn(j*K/N, k)) over the critical nodes.
    for (int j = 1 - order % 2; j < order; j += 2) {
        if (j == 0) continue;
        double sn = jacobi_elliptic(j * quarter / order, k).sn;
        double im = 1.0 / (k * sn);
        proto.zeros.emplace_back(0.0, im);
        proto.zeros.emplace_back(0.0, -im);
    }

    // Poles from the Jacobi parameterization of the left-half-plane roots
    // of 1 + eps^2 R_N^2(xi, s/j) = 0.
    // sn(j u, k1) = j sc(u, k1') turns the imaginary-argument inverse into a
    // real one taken at the complementary modulus.
    double k1p = std::sqrt((1.0 - k1) * (1.0 + k1));
    double u0 = inverse_jacobi_sc(1.0 / eps_p, k1p);
    double v0 = quarter * u0 / (order * quarter1);
    JacobiTriple jv = jacobi_elliptic(v0, kp);
    for (int j = 1 - order % 2; j < order; j += 2) {
        JacobiTriple ju = jacobi_elliptic(j * quarter / order, k);
        double denom = 1.0 - (ju.dn * jv.sn) * (ju.dn * jv.sn);
        Complex p(-(ju.cn * ju.dn * jv.sn * jv.cn) / denom,
                  -(ju.sn * jv.dn) / denom);
        if (std::fabs(p.imag()) < 1e-12 * std::fabs(p.real())) {
            proto.poles.emplace_back(p.real(), 0.0);
        } else {
            proto.poles.push_back(p);
            proto.poles.push_back(std::conj(p));
        }
    }

    double gain = (product_of_negated(proto.poles) / product_of_negated(proto.zeros)).real();
    if (order % 2 == 0) gain /= std::sqrt(1.0 + eps_p * eps_p);
    proto.gain = gain;
    return proto;
}

}  // namespace iirkit
