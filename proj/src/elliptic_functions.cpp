#include "iirkit/elliptic_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace iirkit {

namespace {

constexpr int kMaxAgmIter = 64;
constexpr double kAgmTol = 1e-14;

void check_modulus(double k) {
    if (k < 0.0) throw std::invalid_argument("elliptic modulus must be non-negative");
    if (k >= 1.0) throw std::domain_error("elliptic integral diverges for modulus >= 1");
}

double agm_quarter_period(double a, double b) {
    for (int i = 0; i < kMaxAgmIter && std::fabs(a - b) > kAgmTol * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

}  // namespace

double complete_elliptic_integral(double modulus) {
    check_modulus(modulus);
    return agm_quarter_period(1.0, std::sqrt((1.0 - modulus) * (1.0 + modulus)));
}

double complementary_elliptic_integral(double modulus) {
    check_modulus(modulus);
    // K(k') with k'^2 = 1 - k^2; start the AGM from (1, k) directly.
    if (modulus == 0.0) throw std::domain_error("elliptic integral diverges for modulus >= 1");
    return agm_quarter_period(1.0, modulus);
}

JacobiTriple jacobi_elliptic(double u, double modulus) {
    check_modulus(modulus);
    double k = modulus;
    if (k < 1e-15) {
        return {std::sin(u), std::cos(u), 1.0};
    }

    // AGM scale sequence, then the descending phase recurrence
    // sin(2*phi_{n-1} - phi_n) = (c_n/a_n) sin(phi_n).
    std::vector<double> a_seq, c_seq;
    double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k)), c = k;
    a_seq.push_back(a);
    c_seq.push_back(c);
    int n = 0;
    while (std::fabs(c) > kAgmTol * a && n < kMaxAgmIter) {
        double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        ++n;
        a_seq.push_back(a);
        c_seq.push_back(c);
    }

    double phi = std::ldexp(a, n) * u;
    for (int i = n; i > 0; --i) {
        double s = (c_seq[i] / a_seq[i]) * std::sin(phi);
        phi = 0.5 * (std::asin(s) + phi);
    }

    JacobiTriple out;
    out.sn = std::sin(phi);
    out.cn = std::cos(phi);
    out.dn = std::sqrt(1.0 - k * k * out.sn * out.sn);
    return out;
}

double jacobi_cd(double u, double modulus) {
    JacobiTriple j = jacobi_elliptic(u, modulus);
    return j.cn / j.dn;
}

double inverse_jacobi_sc(double x, double modulus) {
    check_modulus(modulus);
    if (x < 0.0) throw std::invalid_argument("inverse_jacobi_sc requires x >= 0");
    if (x == 0.0) return 0.0;

    // sc increases from 0 to +inf on [0, K); bracketed Newton so a step can
    // never escape past the quarter period. d(sc)/du = dn/cn^2.
    double lo = 0.0;
    double hi = (modulus < 1e-15) ? M_PI / 2.0 : complete_elliptic_integral(modulus);
    double u = std::min(std::atan(x), 0.5 * (lo + hi));
    for (int i = 0; i < 200; ++i) {
        JacobiTriple j = jacobi_elliptic(u, modulus);
        double sc = j.sn / j.cn;
        if (sc > x) hi = u;
        else lo = u;
        double next = u - (sc - x) * j.cn * j.cn / j.dn;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - u) < 1e-15 * (1.0 + std::fabs(next))) return next;
        u = next;
    }
    return u;
}

double elliptic_rational(int order, double xi, double x) {
    if (order < 1) throw std::invalid_argument("elliptic_rational order must be >= 1");
    if (xi <= 1.0) throw std::invalid_argument("selectivity factor must exceed 1");
    if (order == 1) return x;

    // Critical points x_i = cd((2i-1)K/N, k) give the zeros; the poles sit
    // at xi/x_i. Normalized so R_N(xi, 1) = 1.
    double k = 1.0 / xi;
    double quarter = complete_elliptic_integral(k);
    int npairs = order / 2;

    double value = (order % 2 != 0) ? x : 1.0;
    double norm = 1.0;
    for (int i = 1; i <= npairs; ++i) {
        double xz = jacobi_cd((2.0 * i - 1.0) * quarter / order, k);
        double xp = xi / xz;
        value *= (x * x - xz * xz) / (x * x - xp * xp);
        norm *= (1.0 - xp * xp) / (1.0 - xz * xz);
    }
    return value * norm;
}

double solve_degree_equation_xi(int order, double k1) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    if (k1 <= 0.0 || k1 >= 1.0) throw std::invalid_argument("modular ratio must lie in (0,1)");

    double target = order * complete_elliptic_integral(k1) /
                    complementary_elliptic_integral(k1);

    // K(k)/K'(k) with k = 1/xi is decreasing in xi; bracket then bisect.
    auto ratio = [](double xi) {
        double k = 1.0 / xi;
        return complete_elliptic_integral(k) / complementary_elliptic_integral(k);
    };

    double lo = 1.0 + 1e-12;
    double hi = 2.0;
    while (ratio(hi) > target && hi < 1e9) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (ratio(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-10 * lo) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace iirkit
