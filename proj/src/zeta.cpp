#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/cos_pi.hpp>

#include <cmath>
#include <map>

#include "quartic/zeta.hpp"

namespace quartic {

namespace {

constexpr int kDirect = 40;      // N
constexpr int kCorrections = 20; // M

// B_{2j}/(2j)! as a tight interval
Interval bernoulli_over_factorial(int j) {
    const double b = boost::math::bernoulli_b2n<double>(j);
    const double f = boost::math::factorial<double>(unsigned(2 * j));
    return widen(b, 4) / widen(f, 4);
}

i64 index_of(const std::vector<i64>& r, i64 N) {
    i64 idx = 0, w = 1;
    for (i64 v : r) {
        idx += mod(v, N) * w;
        w *= N;
    }
    return idx;
}

std::vector<i64> residues_of(i64 idx, int n, i64 N) {
    std::vector<i64> r(n);
    for (int i = 0; i < n; ++i) {
        r[i] = idx % N;
        idx /= N;
    }
    return r;
}

}  // namespace

namespace {

Interval hurwitz_core(double s, const Interval& A) {
    if (s == 1) throw ComputationError("pole of the zeta function at s = 1");
    const Interval S = Interval(s);
    Interval sum(0);
    for (int k = 0; k < kDirect; ++k) sum += rpow_i(A + double(k), -S);
    const Interval Na = A + double(kDirect);
    sum += rpow_i(Na, 1.0 - S) / (S - 1.0);
    sum += rpow_i(Na, -S) / 2.0;
    // rising factorial (s)_{2j-1}
    Interval rising = S;  // (s)_1
    for (int j = 1; j <= kCorrections; ++j) {
        if (j > 1) rising *= (S + double(2 * j - 3)) * (S + double(2 * j - 2));
        sum += bernoulli_over_factorial(j) * rising * rpow_i(Na, -S - double(2 * j - 1));
    }
    // remainder: 4 |(s)_{2M}| / (2 pi)^{2M} (N+a)^{1-s-2M} / (s + 2M - 1)
    const int M = kCorrections;
    if (s + 2 * M - 1 <= 0) throw ComputationError("hurwitz_zeta: argument too negative");
    Interval r2m = rising * (S + double(2 * M - 1));
    const double mag = std::max(std::abs(r2m.lower()), std::abs(r2m.upper()));
    Interval bound = Interval(4.0 * mag) / rpow_i(2 * M_PI, 2.0 * M) *
                     rpow_i(Na, 1.0 - S - double(2 * M)) / (S + double(2 * M - 1));
    return hull_with(sum, bound.upper());
}

}  // namespace

Interval hurwitz_zeta(double s, double a) {
    if (!(a > 0 && a <= 1)) throw ComputationError("hurwitz_zeta requires a in (0, 1]");
    if (a == 1 || s > 0) return a == 1 ? hurwitz_zeta(s, Rat(1)) : hurwitz_core(s, Interval(a));
    if (s == 0) return Interval(0.5) - Interval(a);
    throw ComputationError("hurwitz_zeta at s < 0 needs a rational a");
}

// s <= 0 goes through Hurwitz's formula: for a = h/k and sigma = 1 - s > 1,
// zeta(s, h/k) = 2 Gamma(sigma) / (2 pi k)^sigma sum_{r=1}^k cos(pi sigma/2 - 2 pi r h/k) zeta(sigma, r/k)
Interval hurwitz_zeta(double s, const Rat& a) {
    if (a <= 0 || a > 1) throw ComputationError("hurwitz_zeta requires a in (0, 1]");
    if (s > 0) return hurwitz_core(s, a == 1 ? Interval(1.0) : from_rat(a));
    if (s == 0) return from_rat(Rat(1, 2) - a);
    const Int h = numerator(a), kk = denominator(a);
    if (kk > 10000) throw ComputationError("hurwitz_zeta at s < 0: denominator of a too large");
    const i64 k = kk.convert_to<i64>();
    const double sigma = 1 - s;
    Interval sum(0);
    for (i64 r = 1; r <= k; ++r) {
        // pi * (sigma/2 - 2 r h / k), with the rational part reduced mod 2
        const Int m = Int(2 * r) * h % Int(2 * k);
        const double x = sigma / 2 - Rat(m, k).convert_to<double>();
        const double c = boost::math::cos_pi(x);
        sum += hull_with(Interval(c), 8e-16) * hurwitz_core(sigma, Rat(r, k) == 1 ? Interval(1.0) : from_rat(Rat(r, k)));
    }
    const double g = boost::math::tgamma(sigma);
    const Interval G = widen(g, 8);
    return 2.0 * G / rpow_i(Interval(2 * M_PI) * double(k), Interval(sigma)) * sum;
}

Interval riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

// ---- PeriodicFunction -----------------------------------------------------------------

PeriodicFunction PeriodicFunction::constant(int n, i64 N, const Rat& c) {
    PeriodicFunction f;
    f.n_vars = n;
    f.modulus = N;
    f.values.assign(size_t(ipow(N, n)), c);
    return f;
}

PeriodicFunction PeriodicFunction::indicator(i64 N, const std::vector<i64>& r) {
    PeriodicFunction f = constant(int(r.size()), N, Rat(0));
    f.values[size_t(index_of(r, N))] = 1;
    return f;
}

Rat PeriodicFunction::operator()(const std::vector<i64>& a) const {
    if (int(a.size()) != n_vars) throw ComputationError("periodic function: wrong arity");
    return values[size_t(index_of(a, modulus))];
}

Rat PeriodicFunction::density() const {
    Rat s = 0;
    for (const Rat& v : values) s += v;
    return s / Rat(values.size());
}

PeriodicFunction PeriodicFunction::operator+(const PeriodicFunction& o) const {
    if (o.n_vars != n_vars || o.modulus != modulus)
        throw ComputationError("periodic functions must share arity and modulus");
    PeriodicFunction r = *this;
    for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
    return r;
}

PeriodicFunction PeriodicFunction::operator*(const Rat& c) const {
    PeriodicFunction r = *this;
    for (auto& v : r.values) v *= c;
    return r;
}

PeriodicFunction PeriodicFunction::slice(const std::vector<int>& S, const std::vector<int>& T) const {
    std::vector<int> role(n_vars, 2);  // 0 = S, 1 = T, 2 = averaged
    for (int i : S) role.at(i) = 0;
    for (int i : T) {
        if (role.at(i) == 0) throw ComputationError("S and T must be disjoint");
        role.at(i) = 1;
    }
    PeriodicFunction out = constant(int(T.size()), modulus, Rat(0));
    std::vector<i64> counts(out.values.size(), 0);
    for (i64 idx = 0; idx < i64(values.size()); ++idx) {
        auto r = residues_of(idx, n_vars, modulus);
        bool zero = true;
        for (int i : S) zero = zero && r[i] == 0;
        if (!zero) continue;
        std::vector<i64> rt;
        for (int i : T) rt.push_back(r[i]);
        const i64 j = index_of(rt, modulus);
        out.values[size_t(j)] += values[size_t(idx)];
        ++counts[size_t(j)];
    }
    for (size_t j = 0; j < out.values.size(); ++j) out.values[j] /= counts[j];
    return out;
}

PeriodicFunction PeriodicFunction::tensor(const PeriodicFunction& g) const {
    if (g.modulus != modulus) throw ComputationError("tensor requires equal moduli");
    PeriodicFunction out = constant(n_vars + g.n_vars, modulus, Rat(0));
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = 0; j < g.values.size(); ++j)
            out.values[i + j * values.size()] = values[i] * g.values[j];
    return out;
}

// ---- signed multiple zeta -----------------------------------------------------------------

MultiZetaValue signed_multi_zeta(const PeriodicFunction& f, const std::vector<int>& t,
                                 const std::vector<double>& s) {
    const int n = f.n_vars;
    if (int(t.size()) != n || int(s.size()) != n) throw ComputationError("signed_multi_zeta: arity");
    for (int i = 0; i < n; ++i) {
        if (t[i] != 1 && t[i] != -1) throw ComputationError("signs must be +1 or -1");
        if (s[i] == 1) throw ComputationError("pole at s_" + std::to_string(i + 1) + " = 1");
    }
    const i64 N = f.modulus;
    // factor for variable i and residue r: N^{-s} zeta(s, rho/N), rho in [1, N], rho = t r mod N
    std::vector<std::vector<Interval>> factor(n);
    for (int i = 0; i < n; ++i) {
        const Interval scale = rpow_i(double(N), -s[i]);
        for (i64 r = 0; r < N; ++r) {
            i64 rho = mod(t[i] * r, N);
            if (rho == 0) rho = N;
            factor[i].push_back(scale * hurwitz_zeta(s[i], Rat(rho, N)));
        }
    }
    Interval total(0);
    for (i64 idx = 0; idx < i64(f.values.size()); ++idx) {
        const Rat& c = f.values[size_t(idx)];
        if (c == 0) continue;
        Interval term = from_rat(c);
        i64 rest = idx;
        for (int i = 0; i < n; ++i) {
            term *= factor[i][size_t(rest % N)];
            rest /= N;
        }
        total += term;
    }
    return {t, s, total};
}

namespace {

IdentityCheck finish(const Interval& lhs, const Interval& rhs, double tol) {
    IdentityCheck c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.gap = std::abs(mid(lhs) - mid(rhs));
    c.agree = c.gap <= tol;
    return c;
}

}  // namespace

IdentityCheck zero_slice_identity_check(const PeriodicFunction& f, const std::vector<int>& S,
                                        const std::vector<int>& T, const std::vector<int>& t0,
                                        const std::vector<double>& sT, double tol) {
    if (t0.size() != T.size() || sT.size() != T.size()) throw ComputationError("T arity mismatch");
    for (double v : sT)
        if (v == 1) throw ComputationError("polar configuration");
    const Interval lhs = signed_multi_zeta(f.slice(S, T), t0, sT).value;
    // variables of S u T in the order S then T
    std::vector<int> ST = S;
    ST.insert(ST.end(), T.begin(), T.end());
    const PeriodicFunction g = f.slice({}, ST);
    std::vector<double> s(S.size(), 0.0);
    s.insert(s.end(), sT.begin(), sT.end());
    Interval rhs(0);
    for (i64 mask = 0; mask < (i64(1) << S.size()); ++mask) {
        std::vector<int> t;
        for (size_t i = 0; i < S.size(); ++i) t.push_back((mask >> i) & 1 ? -1 : 1);
        t.insert(t.end(), t0.begin(), t0.end());
        rhs += signed_multi_zeta(g, t, s).value;
    }
    if (S.size() % 2 == 1) rhs = -rhs;
    return finish(lhs, rhs, tol);
}

IdentityCheck residue_identity_check(const PeriodicFunction& f, const std::vector<int>& S,
                                     const std::vector<int>& T, int one, const std::vector<int>& t,
                                     const std::vector<double>& sT, double tol) {
    for (int i : S)
        if (i == one) throw ComputationError("the residue variable must lie outside S and T");
    for (int i : T)
        if (i == one) throw ComputationError("the residue variable must lie outside S and T");
    if (t.size() != T.size() + 1 || sT.size() != T.size()) throw ComputationError("arity mismatch");
    const std::vector<int> tT(t.begin(), t.end() - 1);
    const Interval lhs = signed_multi_zeta(f.slice(S, T), tT, sT).value;
    std::vector<int> T1 = T;
    T1.push_back(one);
    const PeriodicFunction g = f.slice(S, T1);
    auto at = [&](double s1) {
        std::vector<double> s = sT;
        s.push_back(s1);
        return signed_multi_zeta(g, t, s).value;
    };
    // symmetric difference quotient h (F(1+h) - F(1-h)) / 2 = Res + O(h^2), then Richardson
    auto est = [&](double h) { return Interval(h) * (at(1 + h) - at(1 - h)) / 2.0; };
    const double h = 1e-3;
    const Interval e1 = est(h), e2 = est(h / 2), e4 = est(h / 4);
    const Interval r1 = (4.0 * e2 - e1) / 3.0, r2 = (4.0 * e4 - e2) / 3.0;
    Interval rhs = (16.0 * r2 - r1) / 15.0;
    // truncation estimate from the last Richardson step
    const double trunc = std::abs(mid(r2) - mid(r1)) / 15.0;
    rhs = hull_with(rhs, trunc);
    return finish(lhs, rhs, tol);
}

}  // namespace quartic
