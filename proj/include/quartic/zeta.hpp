#pragma once

#include <functional>
#include <vector>

#include "quartic/arith.hpp"
#include "quartic/interval.hpp"

namespace quartic {

// ---- Hurwitz / Riemann zeta at real arguments --------------------------------------

// Euler-Maclaurin with N direct terms and M Bernoulli corrections; the
// remainder bound is added to the interval. a in (0, 1].
Interval hurwitz_zeta(double s, double a);
Interval hurwitz_zeta(double s, const Rat& a);
Interval riemann_zeta(double s);

// ---- periodic functions and signed multiple zeta values -------------------------------

struct PeriodicFunction {
    int n_vars = 1;
    i64 modulus = 1;
    std::vector<Rat> values;  // index sum_i r_i N^i, r_i in [0, N)

    static PeriodicFunction constant(int n, i64 N, const Rat& c);
    // indicator of a_i = r_i mod N for all i
    static PeriodicFunction indicator(i64 N, const std::vector<i64>& r);
    Rat operator()(const std::vector<i64>& a) const;
    Rat density() const;
    PeriodicFunction operator+(const PeriodicFunction& o) const;
    PeriodicFunction operator*(const Rat& c) const;
    // f_{S;T}: variables in S set to 0, variables in T kept (in increasing
    // order), the rest averaged
    PeriodicFunction slice(const std::vector<int>& S, const std::vector<int>& T) const;
    // tensor product: f(a) g(b) on n_f + n_g variables (moduli must agree)
    PeriodicFunction tensor(const PeriodicFunction& g) const;
};

struct MultiZetaValue {
    std::vector<int> signs;
    std::vector<double> s;
    Interval value;
};

// sum over t_i a_i > 0 of f(a) prod |a_i|^{-s_i}, continued through the
// Hurwitz decomposition. A function of zero variables evaluates to f().
MultiZetaValue signed_multi_zeta(const PeriodicFunction& f, const std::vector<int>& t,
                                 const std::vector<double>& s);

struct IdentityCheck {
    Interval lhs, rhs;
    double gap = 0;
    bool agree = false;
};

// zeta_{f,t0}(S=0;T)(s_T) against (-1)^|S| sum_{t -> t0} zeta_{f,t}(S u T)(0_S x s_T)
IdentityCheck zero_slice_identity_check(const PeriodicFunction& f, const std::vector<int>& S,
                                        const std::vector<int>& T, const std::vector<int>& t0,
                                        const std::vector<double>& sT, double tol = 1e-9);
// zeta_{f,t|T}(S=0;T)(s_T) against the residue at s_one = 1 of zeta_{f,t}(S=0;T u {one})
IdentityCheck residue_identity_check(const PeriodicFunction& f, const std::vector<int>& S,
                                     const std::vector<int>& T, int one, const std::vector<int>& t,
                                     const std::vector<double>& sT, double tol = 1e-9);

// ---- smooth weights and Mellin transforms -----------------------------------------------

// Mollified plateau: 0 outside [u, v], 1 on [u1, v1], smooth steps in between.
struct SmoothWeight {
    double u = 1, u1 = 1.25, v1 = 1.75, v = 2;

    static SmoothWeight plateau(double u, double v, double u1, double v1);
    double operator()(double x) const;
    double derivative(double x) const;
    // exact integral over the real line
    double integral() const;
    // psi(x / c)
    SmoothWeight scaled(double c) const;
};

// smooth step on [0,1]: exp(-1/y) / (exp(-1/y) + exp(-1/(1-y)))
double smooth_step(double y);
double smooth_step_derivative(double y);

// int_0^inf psi^{(k)}(x) x^{power} x^{s-1} dx, k in {0, 1}; requires u > 0.
// The error term is the quadrature error estimate plus rounding slack.
Interval mellin_transform(const SmoothWeight& w, double s, int derivative = 0, double power = 0);

struct DemoResult {
    double sum = 0, prediction = 0, gap = 0;
};
// sum_n psi(n / X) against X * int psi
DemoResult smoothed_count_demo(const SmoothWeight& w, double X, bool positive_only = false);

// Smooth projection of stretched coordinates. B(x) = exp(-1/(1-|x|^2)) on the unit
// ball, g = u d upper triangular (row-major n x n), coordinates 0..r-1 stretched,
// r..s-1 kept, s..n-1 compressed; f periodic in n variables.
struct ProjectionCase {
    int n = 1, r = 1, s = 1;
    std::vector<double> g;  // row-major
    PeriodicFunction f;
};
DemoResult poisson_projection_demo(const ProjectionCase& c);
ProjectionCase projection_case(int n, int r, int s, const std::vector<double>& d,
                               const std::vector<double>& unipotent_upper,
                               const PeriodicFunction& f);

}  // namespace quartic
