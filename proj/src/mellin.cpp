#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "quartic/zeta.hpp"

namespace quartic {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

struct Quad {
    double value = 0, error = 0;
};

Quad integrate(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return {};
    double err = 0;
    const double v = GK::integrate(f, a, b, 15, 1e-15, &err);
    return {v, err};
}

// exp(-1/(1-r2)) for r2 < 1
double bump(double r2) { return r2 < 1 ? std::exp(-1.0 / (1.0 - r2)) : 0.0; }

}  // namespace

double smooth_step(double y) {
    if (y <= 0) return 0;
    if (y >= 1) return 1;
    const double a = std::exp(-1.0 / y), b = std::exp(-1.0 / (1.0 - y));
    return a / (a + b);
}

double smooth_step_derivative(double y) {
    if (y <= 0 || y >= 1) return 0;
    const double S = smooth_step(y);
    return S * (1 - S) * (1.0 / (y * y) + 1.0 / ((1 - y) * (1 - y)));
}

SmoothWeight SmoothWeight::plateau(double u, double v, double u1, double v1) {
    if (!(u < u1 && u1 <= v1 && v1 < v))
        throw ComputationError("smooth weight needs u < u' <= v' < v");
    return {u, u1, v1, v};
}

double SmoothWeight::operator()(double x) const {
    if (x <= u || x >= v) return 0;
    if (x < u1) return smooth_step((x - u) / (u1 - u));
    if (x > v1) return smooth_step((v - x) / (v - v1));
    return 1;
}

double SmoothWeight::derivative(double x) const {
    if (x <= u || x >= v) return 0;
    if (x < u1) return smooth_step_derivative((x - u) / (u1 - u)) / (u1 - u);
    if (x > v1) return -smooth_step_derivative((v - x) / (v - v1)) / (v - v1);
    return 0;
}

// each step integrates to half its width since S(y) + S(1-y) = 1
double SmoothWeight::integral() const { return (v1 - u1) + 0.5 * (u1 - u) + 0.5 * (v - v1); }

SmoothWeight SmoothWeight::scaled(double c) const {
    if (!(c > 0)) throw ComputationError("scale must be positive");
    return {u * c, u1 * c, v1 * c, v * c};
}

Interval mellin_transform(const SmoothWeight& w, double s, int derivative, double power) {
    if (!(w.u > 0)) throw ComputationError("Mellin transform needs support in (0, inf)");
    if (derivative != 0 && derivative != 1) throw ComputationError("derivative order must be 0 or 1");
    const double e = s + power;  // integrand psi^{(k)}(x) x^{e-1}
    auto f = [&](double x) {
        const double val = derivative == 0 ? w(x) : w.derivative(x);
        return val * std::pow(x, e - 1);
    };
    Quad left = integrate(f, w.u, w.u1), right = integrate(f, w.v1, w.v);
    double plateau = 0;
    if (derivative == 0 && w.v1 > w.u1)
        plateau = e == 0 ? std::log(w.v1 / w.u1) : (std::pow(w.v1, e) - std::pow(w.u1, e)) / e;
    const double value = left.value + right.value + plateau;
    const double slack = 2 * (left.error + right.error) + 64 * std::numeric_limits<double>::epsilon() *
                                                              (std::abs(left.value) + std::abs(right.value) +
                                                               std::abs(plateau));
    return hull_with(Interval(value), slack);
}

DemoResult smoothed_count_demo(const SmoothWeight& w, double X, bool positive_only) {
    if (!(X >= 1)) throw ComputationError("X must be at least 1");
    // Neumaier summation
    double sum = 0, comp = 0;
    const i64 lo = i64(std::floor(w.u * X)), hi = i64(std::ceil(w.v * X));
    for (i64 n = lo; n <= hi; ++n) {
        if (positive_only && n <= 0) continue;
        const double term = w(double(n) / X);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    DemoResult r;
    r.sum = sum + comp;
    r.prediction = X * w.integral();
    r.gap = std::abs(r.sum - r.prediction);
    return r;
}

ProjectionCase projection_case(int n, int r, int s, const std::vector<double>& d,
                               const std::vector<double>& unipotent_upper,
                               const PeriodicFunction& f) {
    if (n < 1 || n > 3) throw ComputationError("projection demo supports n <= 3");
    if (!(0 <= r && r <= s && s <= n)) throw ComputationError("need 0 <= r <= s <= n");
    if (int(d.size()) != n || int(unipotent_upper.size()) != n * (n - 1) / 2)
        throw ComputationError("projection demo: wrong parameter count");
    if (f.n_vars != n) throw ComputationError("projection demo: f has the wrong arity");
    for (int i = 0; i + 1 < n; ++i)
        if (d[i] < d[i + 1]) throw ComputationError("diagonal entries must be non-increasing");
    ProjectionCase c;
    c.n = n;
    c.r = r;
    c.s = s;
    c.f = f;
    c.g.assign(size_t(n * n), 0.0);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        c.g[size_t(i * n + i)] = d[i];
        for (int j = i + 1; j < n; ++j) c.g[size_t(i * n + j)] = unipotent_upper[size_t(k++)] * d[j];
    }
    return c;
}

DemoResult poisson_projection_demo(const ProjectionCase& c) {
    const int n = c.n;
    const auto& g = c.g;
    // solve g x = l (upper triangular)
    auto solve = [&](const std::vector<double>& l, int lo, int hi) {
        std::vector<double> x(size_t(hi - lo), 0.0);
        for (int i = hi - 1; i >= lo; --i) {
            double v = l[size_t(i - lo)];
            for (int j = i + 1; j < hi; ++j) v -= g[size_t(i * n + j)] * x[size_t(j - lo)];
            x[size_t(i - lo)] = v / g[size_t(i * n + i)];
        }
        return x;
    };
    auto fval = [&](const std::vector<i64>& l) { return c.f(l).convert_to<double>(); };

    // full sum over Z^n of B(g^{-1} l) f(l)
    std::vector<i64> span(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double b = 0;
        for (int j = 0; j < n; ++j) b += std::abs(g[size_t(i * n + j)]);
        span[size_t(i)] = i64(std::ceil(b));
    }
    DemoResult r;
    std::vector<i64> l(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<double> ld(l.begin(), l.end());
            auto x = solve(ld, 0, n);
            double r2 = 0;
            for (double v : x) r2 += v * v;
            if (r2 < 1) r.sum += bump(r2) * fval(l);
            return;
        }
        for (i64 v = -span[size_t(i)]; v <= span[size_t(i)]; ++v) {
            l[size_t(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);

    // projected: prod d_i (i < r) sum over l0 in Z^{s-r} of B_{r,s}(g_mid^{-1} l0) f_{r,s}(l0)
    const int rr = c.r, ss = c.s;
    double scale = 1;
    for (int i = 0; i < rr; ++i) scale *= g[size_t(i * n + i)];
    // B_{r,s}(y) = int over R^r of bump(|x|^2 + |y|^2)
    auto Brs = [&](double y2) {
        if (y2 >= 1) return 0.0;
        if (rr == 0) return bump(y2);
        const double rho = std::sqrt(1 - y2);
        const double omega = rr == 1 ? 2.0 : (rr == 2 ? 2 * M_PI : 4 * M_PI);
        auto h = [&](double t) { return std::pow(t, rr - 1) * bump(t * t + y2); };
        return omega * integrate(h, 0.0, rho).value;
    };
    // f_{r,s}(l0): average over the first r residues, compressed coordinates set to 0
    const i64 N = c.f.modulus;
    auto frs = [&](const std::vector<i64>& l0) {
        Rat acc = 0;
        const i64 cnt = ipow(N, rr);
        for (i64 k = 0; k < cnt; ++k) {
            std::vector<i64> a(size_t(n), 0);
            i64 rest = k;
            for (int i = 0; i < rr; ++i) {
                a[size_t(i)] = rest % N;
                rest /= N;
            }
            for (int i = rr; i < ss; ++i) a[size_t(i)] = l0[size_t(i - rr)];
            acc += c.f(a);
        }
        return (acc / Rat(cnt)).convert_to<double>();
    };
    std::vector<i64> l0(static_cast<size_t>(ss - rr));
    std::function<void(int)> rec2 = [&](int i) {
        if (i == ss - rr) {
            std::vector<double> ld(l0.begin(), l0.end());
            auto y = solve(ld, rr, ss);
            double y2 = 0;
            for (double v : y) y2 += v * v;
            if (y2 < 1) r.prediction += scale * Brs(y2) * frs(l0);
            return;
        }
        const i64 b = span[size_t(rr + i)];
        for (i64 v = -b; v <= b; ++v) {
            l0[size_t(i)] = v;
            rec2(i + 1);
        }
    };
    rec2(0);
    r.gap = std::abs(r.sum - r.prediction);
    return r;
}

}  // namespace quartic
