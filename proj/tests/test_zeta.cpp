#include <doctest.h>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>

#include "quartic/zeta.hpp"

using namespace quartic;

TEST_CASE("Riemann zeta against Boost") {
    for (double s : {-3.5, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0, 1.0 / 3, 2.0 / 3}) {
        const Interval z = riemann_zeta(s);
        const double ref = boost::math::zeta(s);
        CHECK(z.lower() - 1e-12 <= ref);
        CHECK(ref <= z.upper() + 1e-12);
        CHECK(rad(z) < 1e-9);
    }
    CHECK(mid(riemann_zeta(-1)) == doctest::Approx(-1.0 / 12).epsilon(1e-12));
}

TEST_CASE("Hurwitz zeta by direct summation at s = 3") {
    for (double a : {0.25, 0.5, 1.0 / 3, 0.9}) {
        double sum = 0;
        const int N = 200000;
        for (int n = N - 1; n >= 0; --n) sum += std::pow(n + a, -3.0);
        sum += 0.5 * std::pow(N + a, -2.0) + 0.5 * std::pow(N + a, -3.0);
        CHECK(mid(hurwitz_zeta(3.0, a)) == doctest::Approx(sum).epsilon(1e-12));
    }
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    for (double s : {-2.5, 0.3, 4.0})
        CHECK(mid(hurwitz_zeta(s, Rat(1, 2))) ==
              doctest::Approx((std::pow(2.0, s) - 1) * boost::math::zeta(s)).epsilon(1e-10));
}

TEST_CASE("periodic functions") {
    const PeriodicFunction f = PeriodicFunction::indicator(3, {1, 2});
    CHECK(f.density() == Rat(1, 9));
    CHECK(f({4, 5}) == 1);
    CHECK(f({4, 4}) == 0);
    // averaging variable 1 away leaves 1/3 on a_0 = 1 mod 3
    const PeriodicFunction g = f.slice({}, {0});
    CHECK(g.n_vars == 1);
    CHECK(g({1}) == Rat(1, 3));
    CHECK(g({0}) == 0);
    CHECK((f + f * Rat(2)).density() == Rat(1, 3));
    CHECK(f.tensor(g).n_vars == 3);
}

TEST_CASE("one-variable signed zeta is a Hurwitz sum") {
    // f = indicator of a = 1 mod 4, sign +1: sum_{n >= 0} (4n + 1)^{-s} = 4^{-s} zeta(s, 1/4)
    const PeriodicFunction f = PeriodicFunction::indicator(4, {1});
    const double s = 2.5;
    const MultiZetaValue v = signed_multi_zeta(f, {1}, {s});
    CHECK(mid(v.value) == doctest::Approx(std::pow(4.0, -s) * mid(hurwitz_zeta(s, 0.25))).epsilon(1e-12));
    // negative sign picks a = -3, -7, ...: |a| = 3 mod 4
    const MultiZetaValue w = signed_multi_zeta(f, {-1}, {s});
    CHECK(mid(w.value) == doctest::Approx(std::pow(4.0, -s) * mid(hurwitz_zeta(s, 0.75))).epsilon(1e-12));
}

TEST_CASE("smooth weight and Mellin transforms") {
    const SmoothWeight w = SmoothWeight::plateau(1, 2, 1.25, 1.75);
    CHECK(w(0.5) == 0);
    CHECK(w(1.5) == 1);
    CHECK(w(1.1) > 0);
    CHECK(w(1.1) < 1);
    // trapezoid integral
    double acc = 0;
    const int n = 200000;
    for (int i = 0; i <= n; ++i) acc += (i == 0 || i == n ? 0.5 : 1.0) * w(1 + double(i) / n);
    acc /= n;
    CHECK(w.integral() == doctest::Approx(acc).epsilon(1e-9));
    CHECK(mid(mellin_transform(w, 1.0)) == doctest::Approx(w.integral()).epsilon(1e-10));
    // integration by parts: M[psi'](s) = -(s - 1) M[psi](s - 1)
    for (double s : {0.5, 2.0, 1.0 / 6})
        CHECK(mid(mellin_transform(w, s, 1)) == doctest::Approx(-(s - 1) * mid(mellin_transform(w, s - 1))).epsilon(1e-9));
    // power shifts the argument
    CHECK(mid(mellin_transform(w, 0.5, 0, 1.0)) == doctest::Approx(mid(mellin_transform(w, 1.5))).epsilon(1e-12));
    CHECK(smooth_step(0.5) == doctest::Approx(0.5));
}

TEST_CASE("smoothed count demo") {
    const DemoResult d = smoothed_count_demo(SmoothWeight::plateau(-2, 2, -std::sqrt(2.0), std::sqrt(2.0)), 500);
    CHECK(d.gap < 1e-8);
    const DemoResult e = smoothed_count_demo(SmoothWeight::plateau(1, 2, 1.25, 1.75), 300, true);
    CHECK(e.gap < 1e-8);
}

TEST_CASE("Poisson projection in one variable") {
    PeriodicFunction f = PeriodicFunction::constant(1, 1, Rat(1));
    const ProjectionCase c = projection_case(1, 1, 1, {40.0}, {}, f);
    const DemoResult d = poisson_projection_demo(c);
    CHECK(d.gap < 1e-6);
}
