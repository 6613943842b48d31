#pragma once

namespace iirkit {

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

// Complete elliptic integral of the first kind K(k), modulus convention
// (m = k^2 is never used in this API). AGM iteration, relative tol 1e-14.
double complete_elliptic_integral(double modulus);

// K(k') = K(sqrt(1 - k^2)), computed without cancellation for small k.
double complementary_elliptic_integral(double modulus);

// sn, cn, dn at real argument u for modulus k in [0, 1).
JacobiTriple jacobi_elliptic(double u, double modulus);

// cd(u, k) = cn/dn.
double jacobi_cd(double u, double modulus);

// Inverse of sc = sn/cn on the principal branch: returns u in [0, K)
// with sc(u, k) = x, for x >= 0.
double inverse_jacobi_sc(double x, double modulus);

// Elliptic rational function R_N(xi, x) for real x, xi > 1.
// Equiripple on [-1, 1], R_N(xi, 1) = 1, R_N(xi, xi) = L_N.
double elliptic_rational(int order, double xi, double x);

// Degree equation: finds the selectivity xi (> 1) such that
// N = K(k) K'(k1) / (K'(k) K(k1)) with k = 1/xi. Bisection to 1e-10.
double solve_degree_equation_xi(int order, double k1);

}  // namespace iirkit
