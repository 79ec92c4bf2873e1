#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sinc.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>

#include "quartic/constants.hpp"

namespace quartic {

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

Interval big_interval(const Big& x) { return widen(x.convert_to<double>(), 1); }

// one real linear factor: L(cos t, sin t) = kappa * sin(t - phi), phi in [0, pi)
struct Linear {
    double kappa, phi;
};

}  // namespace

ArchimedeanConstants archimedean_constants() {
    using boost::math::tgamma;
    const Big third = Big(1) / 3, sixth = Big(1) / 6;
    const Big pi = boost::math::constants::pi<Big>();
    const Big M = pow(Big(2), 5 * third) * tgamma(sixth) * tgamma(Big(1) / 2) /
                  (sqrt(Big(3)) * pi * tgamma(2 * third));
    ArchimedeanConstants out;
    out.M = big_interval(M);
    const Interval Ms3 = big_interval(M * sqrt(Big(3)));
    out.Mi = {out.M, Ms3, out.M};
    out.Mi_prime = {out.M, Ms3, big_interval(M / 3)};
    return out;
}

BinaryCubic<double> archimedean_representative(int sign, int representative) {
    if (sign == 0 || (representative != 0 && representative != 1))
        throw ComputationError("no such archimedean representative");
    if (sign > 0) return representative == 0 ? BinaryCubic<double>{1, 0, -1, 0} : BinaryCubic<double>{1, 1, -2, 0};
    return representative == 0 ? BinaryCubic<double>{1, 0, 0, -1} : BinaryCubic<double>{1, 0, 1, 1};
}

Interval archimedean_integral(const BinaryCubic<double>& f) {
    const double D = disc(f);
    if (D == 0) throw ComputationError("archimedean integral needs a nonzero discriminant");
    const int n_real = D > 0 ? 3 : 1;

    // split off real linear factors; `rest` keeps the highest power of x first
    std::vector<Linear> lin;
    std::vector<long double> rest{f.a, f.b, f.c, f.d};
    if (f.a == 0) {
        lin.push_back({1.0, 0.0});  // y
        rest = {f.b, f.c, f.d};
    }
    const int want = n_real - int(lin.size());
    if (want > 0) {
        // roots of rest(x, 1)
        const int deg = int(rest.size()) - 1;
        Eigen::VectorXd coeffs(deg + 1);
        for (int i = 0; i <= deg; ++i) coeffs[i] = double(rest[size_t(deg - i)]);
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
        std::vector<std::complex<double>> roots(solver.roots().data(), solver.roots().data() + deg);
        std::sort(roots.begin(), roots.end(),
                  [](auto x, auto y) { return std::abs(x.imag()) < std::abs(y.imag()); });
        for (int k = 0; k < want; ++k) {
            long double r = roots[size_t(k)].real();
            for (int it = 0; it < 8; ++it) {  // Newton polish
                long double v = 0, dv = 0;
                for (long double c : rest) {
                    dv = dv * r + v;
                    v = v * r + c;
                }
                if (dv == 0) break;
                r -= v / dv;
            }
            // synthetic division by (x - r y)
            std::vector<long double> q(rest.size() - 1);
            long double acc = 0;
            for (size_t i = 0; i + 1 < rest.size(); ++i) {
                acc = acc * r + rest[i];
                q[i] = acc;
            }
            rest = q;
            // x - r y = -sqrt(1 + r^2) sin(t - phi), phi = atan2(1, r)
            lin.push_back({-double(std::sqrt(1 + r * r)), double(std::atan2(1.0L, r))});
        }
    }
    std::sort(lin.begin(), lin.end(), [](const Linear& x, const Linear& y) { return x.phi < y.phi; });

    auto rest_at = [&](double t) {
        const double x = std::cos(t), y = std::sin(t);
        const int deg = int(rest.size()) - 1;
        long double v = 0;
        for (int i = 0; i <= deg; ++i)
            v += rest[size_t(i)] * std::pow((long double)x, deg - i) * std::pow((long double)y, i);
        return double(v);
    };
    // |g|^{-2/3} * 3u^2 at t = phi_j + sgn * u^3
    auto integrand = [&](size_t j, int sgn, double u) {
        const double delta = u * u * u;
        const double t = lin[j].phi + sgn * delta;
        double prod = std::abs(lin[j].kappa * boost::math::sinc_pi(delta));
        for (size_t i = 0; i < lin.size(); ++i)
            if (i != j) prod *= std::abs(lin[i].kappa * std::sin(t - lin[i].phi));
        prod *= std::abs(rest_at(t));
        return 3.0 * std::pow(prod, -2.0 / 3.0);
    };

    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    double total = 0, err = 0, absum = 0;
    const size_t k = lin.size();
    for (size_t j = 0; j < k; ++j) {
        const size_t nxt = (j + 1) % k;
        const double width = j + 1 < k ? lin[nxt].phi - lin[j].phi : lin[0].phi + M_PI - lin[j].phi;
        const double U = std::cbrt(width / 2);
        double e1 = 0, e2 = 0;
        const double v1 = GK::integrate([&](double u) { return integrand(j, +1, u); }, 0.0, U, 15, 1e-14, &e1);
        const double v2 = GK::integrate([&](double u) { return integrand(nxt, -1, u); }, 0.0, U, 15, 1e-14, &e2);
        total += v1 + v2;
        absum += std::abs(v1) + std::abs(v2);
        err += e1 + e2;
    }
    if (!(err <= 1e-9 * absum))
        throw ComputationError("archimedean quadrature failed: achieved tolerance " + std::to_string(err / absum));
    // |g| has period pi, so the full circle is twice the half circle
    const double slack = 2 * err + 1e-13 * absum;
    const Interval T = hull_with(Interval(total), slack);
    const Interval pref = rpow_i(4.0, 2.0 / 3.0) * rpow_i(std::abs(D), 1.0 / 6.0);
    return pref * T / Interval(ulp_down(M_PI), ulp_up(M_PI));
}

Interval archimedean_integral_check(int sign, int representative) {
    return archimedean_integral(archimedean_representative(sign, representative));
}

}  // namespace quartic
