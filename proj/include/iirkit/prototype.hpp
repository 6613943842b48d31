#pragma once

#include <complex>
#include <vector>

namespace iirkit {

using Complex = std::complex<double>;

// Normalized analog low-pass approximation: unit passband edge, poles in
// the left half plane, conjugate-symmetric root sets.
struct AnalogPrototype {
    std::vector<Complex> zeros;
    std::vector<Complex> poles;
    double gain = 1.0;
};

struct ButterworthMetrics {
    double magnitude_sq;    // in (0, 1]
    double attenuation_db;  // >= 0
    double selectivity;     // 1/(rad/s)
};

// Parameters of an elliptic approximation once order, passband ripple and
// stopband attenuation have been made consistent by the degree equation.
struct EllipticParams {
    double epsilon;         // ripple factor
    double xi;              // selectivity factor, > 1
    double discrimination;  // L_N = R_N(xi, xi)
    double modulus;         // k = 1/xi
    double quarter_period;  // K(k)
};

// |H(js)| of a prototype evaluated on the imaginary axis at omega.
double prototype_magnitude(const AnalogPrototype& proto, double omega);

AnalogPrototype butterworth_prototype(int order);

ButterworthMetrics butterworth_metrics(double omega, double omega_c, int order);

// epsilon = sqrt(10^(r/10) - 1), the inverse of r = 20 log10 sqrt(1+eps^2).
double ripple_to_epsilon(double ripple_db);

// Chebyshev polynomial C_N(x), cos branch on [-1,1], cosh branch outside.
double chebyshev_poly(int order, double x);

double chebyshev1_magnitude_sq(double omega, double omega_p, double epsilon, int order);

AnalogPrototype chebyshev1_prototype(int order, double ripple_db);

double elliptic_magnitude(double omega, double omega_p, double epsilon, double xi, int order);

EllipticParams elliptic_params(int order, double passband_ripple_db, double stopband_atten_db);

AnalogPrototype elliptic_prototype(int order, double passband_ripple_db, double stopband_atten_db);

}  // namespace iirkit
