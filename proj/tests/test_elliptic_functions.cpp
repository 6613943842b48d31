#include <cmath>
#include <random>

#include <doctest.h>

#include "iirkit/elliptic_functions.hpp"

using namespace iirkit;

namespace {

// Independent oracle: adaptive Simpson quadrature of the defining integral
// of K(k), never touching the AGM path.
double simpson(double (*f)(double, double), double k, double a, double b) {
    double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a, k) + 4.0 * f(c, k) + f(b, k));
}

double k_integrand(double theta, double k) {
    double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - k * k * s * s);
}

double adaptive_simpson(double a, double b, double k, double whole, double tol, int depth) {
    double c = 0.5 * (a + b);
    double left = simpson(k_integrand, k, a, c);
    double right = simpson(k_integrand, k, c, b);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(a, c, k, left, tol / 2.0, depth - 1) +
           adaptive_simpson(c, b, k, right, tol / 2.0, depth - 1);
}

double quadrature_K(double k) {
    double whole = simpson(k_integrand, k, 0.0, M_PI_2);
    return adaptive_simpson(0.0, M_PI_2, k, whole, 1e-13, 40);
}

// Closed-form N=2 elliptic rational function.
double rational2(double xi, double x) {
    double t = std::sqrt(1.0 - 1.0 / (xi * xi));
    return ((t + 1.0) * x * x - 1.0) / ((t - 1.0) * x * x + 1.0);
}

// Closed-form N=3 elliptic rational function via its critical points.
double rational3(double xi, double x) {
    double xi2 = xi * xi;
    double g = std::sqrt(4.0 * xi2 + std::pow(4.0 * xi2 * (xi2 - 1.0), 2.0 / 3.0));
    double xp2 = 2.0 * xi2 * std::sqrt(g) /
                 (std::sqrt(8.0 * xi2 * (xi2 + 1.0) + 12.0 * g * xi2 - g * g * g) -
                  std::pow(g, 1.5));
    double xz2 = xi2 / xp2;
    return x * (1.0 - xp2) * (x * x - xz2) / ((1.0 - xz2) * (x * x - xp2));
}

}  // namespace

TEST_CASE("complete elliptic integral basics") {
    CHECK(complete_elliptic_integral(0.0) == doctest::Approx(M_PI_2).epsilon(1e-14));
    CHECK(complete_elliptic_integral(0.5) == doctest::Approx(1.685750).epsilon(1e-6));
    CHECK_THROWS(complete_elliptic_integral(1.0));
    CHECK_THROWS(complete_elliptic_integral(-0.1));
}

TEST_CASE("AGM matches quadrature oracle") {
    for (double k : {0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99}) {
        CHECK(complete_elliptic_integral(k) == doctest::Approx(quadrature_K(k)).epsilon(1e-10));
    }
}

TEST_CASE("K monotonically increases") {
    double prev = complete_elliptic_integral(0.0);
    for (double k = 0.01; k <= 0.991; k += 0.01) {
        double cur = complete_elliptic_integral(k);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("jacobi functions degenerate at k=0") {
    for (double u : {0.3, 1.0, 2.5}) {
        JacobiTriple j = jacobi_elliptic(u, 0.0);
        CHECK(j.sn == doctest::Approx(std::sin(u)).epsilon(1e-14));
        CHECK(j.cn == doctest::Approx(std::cos(u)).epsilon(1e-14));
        CHECK(j.dn == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("quarter-period identity") {
    for (double k : {0.3, 0.7}) {
        double quarter = complete_elliptic_integral(k);
        JacobiTriple j = jacobi_elliptic(quarter, k);
        CHECK(j.sn == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::fabs(j.cn) < 1e-10);
    }
}

TEST_CASE("pythagorean identities on random inputs") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> k_dist(0.0, 0.999);
    for (int i = 0; i < 1000; ++i) {
        double u = u_dist(rng), k = k_dist(rng);
        JacobiTriple j = jacobi_elliptic(u, k);
        CHECK(j.sn * j.sn + j.cn * j.cn == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(j.dn * j.dn + k * k * j.sn * j.sn == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("inverse sc round trip") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> x_dist(0.0, 10.0);
    std::uniform_real_distribution<double> k_dist(0.0, 0.95);
    for (int i = 0; i < 200; ++i) {
        double x = x_dist(rng), k = k_dist(rng);
        double u = inverse_jacobi_sc(x, k);
        JacobiTriple j = jacobi_elliptic(u, k);
        CHECK(j.sn / j.cn == doctest::Approx(x).epsilon(1e-9));
    }
}

TEST_CASE("elliptic rational first order is identity") {
    for (double xi : {1.2, 2.0, 5.0}) {
        for (double x : {-0.5, 0.0, 0.8, 1.0, 3.0}) {
            CHECK(elliptic_rational(1, xi, x) == doctest::Approx(x).epsilon(1e-14));
        }
    }
}

TEST_CASE("elliptic rational matches N=2 closed form") {
    CHECK(elliptic_rational(2, 1.5, 0.8) == doctest::Approx(rational2(1.5, 0.8)).epsilon(1e-10));
    for (double xi : {1.2, 2.0, 4.0}) {
        for (double x : {0.1, 0.5, 0.9, 1.0, 1.7, xi}) {
            CHECK(elliptic_rational(2, xi, x) == doctest::Approx(rational2(xi, x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("elliptic rational matches N=3 closed form") {
    for (double xi : {1.3, 2.0, 5.0}) {
        for (double x : {0.2, 0.6, 1.0, xi}) {
            CHECK(elliptic_rational(3, xi, x) == doctest::Approx(rational3(xi, x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("elliptic rational normalization R_N(xi,1)=1") {
    for (int n = 1; n <= 5; ++n) {
        for (double xi : {1.2, 2.0, 5.0}) {
            CHECK(elliptic_rational(n, xi, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("elliptic rational bounded on the passband") {
    for (int n = 2; n <= 6; ++n) {
        for (double xi : {1.5, 3.0}) {
            for (double x = 0.0; x <= 1.0; x += 1.0 / 64.0) {
                CHECK(std::fabs(elliptic_rational(n, xi, x)) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("degree equation consistency") {
    // xi from the degree equation reproduces N through the K ratios
    for (int n : {2, 3, 4, 5, 7}) {
        double k1 = 0.02;
        double xi = solve_degree_equation_xi(n, k1);
        double k = 1.0 / xi;
        double lhs = complete_elliptic_integral(k) * complementary_elliptic_integral(k1) /
                     (complementary_elliptic_integral(k) * complete_elliptic_integral(k1));
        CHECK(lhs == doctest::Approx(static_cast<double>(n)).epsilon(1e-8));
    }
    CHECK_THROWS(solve_degree_equation_xi(0, 0.5));
    CHECK_THROWS(elliptic_rational(2, 0.9, 0.5));
}
