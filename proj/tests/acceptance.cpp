// One line per acceptance criterion. With --expect-red the exit status is 0 exactly
// when the failing set equals the listed set.

#include <boost/math/special_functions/zeta.hpp>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "quartic/constants.hpp"
#include "quartic/empirical.hpp"
#include "quartic/enumeration.hpp"
#include "quartic/padic.hpp"
#include "quartic/zeta.hpp"

using namespace quartic;

namespace {

// pinned tolerances
constexpr double kTolArchimedean = 1e-6;
constexpr double kTolIdentity = 1e-9;
constexpr double kTolDemo = 1e-8;
constexpr double kTolExponent = 1e-6;
constexpr double kMaxUnresolvedRate = 0.01;
constexpr double kCriterion8X = 500;
constexpr int kCriterion8Bound = 2;
constexpr int kOracleHeight = 12;

struct Line {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        pass = false;
        detail << " " << why << ";";
    }
    void note(const std::string& what) { detail << " " << what << ";"; }
};

std::string rs(const Rat& r) { return r.str(); }

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(12);
    o << x;
    return o.str();
}

const std::vector<ResolventRow> kRows = {ResolventRow::r111, ResolventRow::r12, ResolventRow::r3,
                                         ResolventRow::r1sq1, ResolventRow::r1cu, ResolventRow::rC2sq,
                                         ResolventRow::rC4, ResolventRow::r1q4};

// primitive (a, b) mod p^{m+1} with v_p(f(a, b)) = m, over p^{2(m+1)}
Rat d_count(ResolventRow r, int m, i64 p) {
    const Cubic f = row_form(r, p);
    const i64 q = ipow(p, m + 1), pm = ipow(p, m);
    const i64 A = mod(f.a, q), B = mod(f.b, q), C = mod(f.c, q), D = mod(f.d, q);
    i64 hits = 0;
    for (i64 a = 0; a < q; ++a)
        for (i64 b = 0; b < q; ++b) {
            if (a % p == 0 && b % p == 0) continue;
            const i64 a2 = a * a % q, b2 = b * b % q;
            const i64 v = (A * (a2 * a % q) + B * (a2 * b % q) + C * (a * b2 % q) + D * (b2 * b % q)) % q;
            if (v % pm == 0 && v != 0) ++hits;
        }
    return Rat(hits) / Rat(q * q);
}

// ---- 1 ----------------------------------------------------------------------------

Line criterion1() {
    Line L;
    int checked = 0;
    for (i64 p : {5, 7}) {
        std::vector<std::string> bad;
        for (ResolventRow r : kRows)
            for (int m = 0; m <= 3; ++m) {
                ++checked;
                const Rat oracle = d_count(r, m, p);
                const Rat printed = d_printed(r, m, p);
                if (oracle != printed) {
                    std::ostringstream o;
                    o << row_label(r) << " m=" << m << " printed " << rs(printed) << " counted " << rs(oracle)
                      << (oracle == d_closed_form(r, m, p) ? " (library closed form agrees with count)" : "");
                    bad.push_back(o.str());
                }
            }
        for (const auto& b : bad) L.fail("p=" + std::to_string(p) + " " + b);
    }
    L.note(std::to_string(checked) + " cells compared by exact rational equality");
    return L;
}

// ---- 2 ----------------------------------------------------------------------------

Line criterion2() {
    Line L;
    const std::vector<std::vector<SplittingType>> groups = {
        {SplittingType::t1111}, {SplittingType::t112}, {SplittingType::t22}, {SplittingType::t4},
        {SplittingType::t13}, {SplittingType::t1sq11}, {SplittingType::t1sq2}, {SplittingType::t1cu1},
        {SplittingType::t2sq_C2sq, SplittingType::t2sq_C4}, {SplittingType::t1sq1sq_eq, SplittingType::t1sq1sq_neq},
        {SplittingType::t1q4}};
    int cells = 0, lib_ok = 0;
    for (i64 p : {5, 7})
        for (const auto& g : groups)
            for (bool tw : {false, true}) {
                std::vector<Rat> brute(4, Rat(0)), printed(4, Rat(0)), lib(4, Rat(0));
                for (SplittingType t : g) {
                    const BruteIntegral b = brute_coefficients(t, tw, p, 3);
                    const auto pc = printed_table_cell(t, tw, p).series(4);
                    const auto lc = local_integral(t, tw, PAdicContext(p, 4)).series(4);
                    for (int m = 0; m < 4; ++m) {
                        brute[size_t(m)] += b.coeff[size_t(m)];
                        printed[size_t(m)] += pc[size_t(m)];
                        lib[size_t(m)] += lc[size_t(m)];
                    }
                }
                ++cells;
                if (brute == lib) ++lib_ok;
                for (int m = 0; m < 4; ++m)
                    if (brute[size_t(m)] != printed[size_t(m)]) {
                        std::string name = g.size() == 2 ? label(g[0]).substr(0, label(g[0]).find('_')) : label(g[0]);
                        L.fail("p=" + std::to_string(p) + " " + name + (tw ? " twisted" : " untwisted") + " t^" +
                               std::to_string(m) + " printed " + rs(printed[size_t(m)]) + " brute " +
                               rs(brute[size_t(m)]));
                    }
            }
    // isotropy ratios at p = 5
    const IsotropyCount forms = isotropy_forms_only(5);
    if (forms.isotropic / forms.anisotropic != Rat(6, 4))
        L.fail("(2^2) forms-only ratio " + rs(forms.isotropic / forms.anisotropic) + " expected 6:4");
    Rat i22 = 0, a22 = 0, i11 = 0, a11 = 0;
    for (SplittingType t : {SplittingType::t2sq_C2sq, SplittingType::t2sq_C4}) {
        const IsotropyCount c = isotropy_pair_weighted(t, 5, 2);
        i22 += c.isotropic;
        a22 += c.anisotropic;
    }
    for (SplittingType t : {SplittingType::t1sq1sq_eq, SplittingType::t1sq1sq_neq}) {
        const IsotropyCount c = isotropy_pair_weighted(t, 5, 2);
        i11 += c.isotropic;
        a11 += c.anisotropic;
    }
    if (i11 / a11 != Rat(3, 5)) L.fail("(1^21^2) pair-weighted ratio " + rs(i11 / a11) + " expected 3:5");
    if (i22 / a22 != Rat(6, 4))
        L.fail("(2^2) pair-weighted ratio " + rs(i22 / a22) + " (5:3) expected 6:4");
    L.note(std::to_string(lib_ok) + "/" + std::to_string(cells) + " aggregated cells: library closed forms equal brute force");
    return L;
}

// ---- 3 ----------------------------------------------------------------------------

Line criterion3() {
    Line L;
    const int k = 3;
    for (i64 p : {3, 5})
        for (bool tw : {false, true}) {
            const SymmetricBrute b = symmetric_zeta_brute(tw, p, k);
            const LocalFactor closed = symmetric_local_zeta(tw, PAdicContext(p));
            const auto series = closed.series(k);
            for (int m = 0; m < k; ++m)
                if (series[size_t(m)] != b.coeff[size_t(m)])
                    L.fail("p=" + std::to_string(p) + (tw ? " twisted" : "") + " t^" + std::to_string(m) + " closed " +
                           rs(series[size_t(m)]) + " brute " + rs(b.coeff[size_t(m)]));
            for (int s : {0, 1, 2}) {
                const Rat t = Rat(1) / Rat(ipow(p, s));
                Rat partial = 0, tk = 1;
                for (int m = 0; m < k; ++m) {
                    partial += b.coeff[size_t(m)] * tk;
                    tk *= t;
                }
                // the remaining levels have total measure tail_measure and weight at most t^k
                const Rat slack = b.tail_measure * tk;
                const Rat lo = tw ? partial - slack : partial, hi = partial + slack;
                const Rat value = closed.eval(t);
                if (value < lo || value > hi)
                    L.fail("p=" + std::to_string(p) + (tw ? " twisted" : "") + " s=" + std::to_string(s) + " closed " +
                           rs(value) + " outside [" + rs(lo) + ", " + rs(hi) + "]");
            }
        }
    L.note("mod p^3 brute force, p in {3,5}, s in {0,1,2}, both twists");
    return L;
}

// ---- 4 ----------------------------------------------------------------------------

Line criterion4() {
    Line L;
    // closed form from std::tgamma, independent of the library's multiprecision value
    const double M = std::pow(2.0, 5.0 / 3) * std::tgamma(1.0 / 6) * std::tgamma(0.5) /
                     (std::sqrt(3.0) * M_PI * std::tgamma(2.0 / 3));
    for (int rep : {0, 1}) {
        const double pos = mid(archimedean_integral_check(+1, rep));
        const double neg = mid(archimedean_integral_check(-1, rep));
        if (std::abs(pos - M) > kTolArchimedean)
            L.fail("Delta>0 rep " + std::to_string(rep) + " quadrature " + fmt(pos) + " vs M " + fmt(M) + " (ratio " +
                   fmt(pos / M) + ")");
        if (std::abs(neg - std::sqrt(3.0) * M) > kTolArchimedean)
            L.fail("Delta<0 rep " + std::to_string(rep) + " quadrature " + fmt(neg) + " vs sqrt3 M " + fmt(std::sqrt(3.0) * M));
        else
            L.note("Delta<0 rep " + std::to_string(rep) + " matches sqrt3 M to " + fmt(std::abs(neg - std::sqrt(3.0) * M)));
    }
    return L;
}

// ---- 5 ----------------------------------------------------------------------------

PeriodicFunction random_periodic(std::mt19937_64& rng, int n, i64 N) {
    PeriodicFunction f;
    f.n_vars = n;
    f.modulus = N;
    std::uniform_int_distribution<int> val(-3, 3);
    f.values.resize(size_t(ipow(N, n)));
    for (Rat& v : f.values) v = Rat(val(rng));
    return f;
}

Line criterion5() {
    Line L;
    const Interval z0 = riemann_zeta(0);
    if (std::abs(mid(z0) + 0.5) > kTolIdentity) L.fail("zeta(0) = " + fmt(mid(z0)));
    if (std::abs(mid(riemann_zeta(2)) - boost::math::zeta(2.0)) > kTolIdentity) L.fail("zeta(2) against Boost");

    std::mt19937_64 rng(20240611);
    int hz_bad = 0;
    for (int i = 0; i < 50; ++i) {
        const i64 k = std::uniform_int_distribution<i64>(2, 40)(rng);
        const i64 h = std::uniform_int_distribution<i64>(1, k)(rng);
        const Rat a(h, k);
        const Interval v = hurwitz_zeta(0.0, a);
        if (std::abs(mid(v) - (0.5 - a.convert_to<double>())) > kTolIdentity) ++hz_bad;
    }
    if (hz_bad) L.fail(std::to_string(hz_bad) + "/50 Hurwitz zeta(0, a) != 1/2 - a");

    const std::vector<double> svals = {-1.5, -0.5, 0.25, 0.5, 1.5, 2.0, 2.5, 3.0};
    auto pick_s = [&] { return svals[std::uniform_int_distribution<size_t>(0, svals.size() - 1)(rng)]; };
    auto sign = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1; };
    double worst0 = 0, worst1 = 0;
    int bad0 = 0, bad1 = 0;
    for (int i = 0; i < 20; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const i64 N = std::uniform_int_distribution<i64>(1, 6)(rng);
        const PeriodicFunction f = random_periodic(rng, n, N);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) perm[size_t(j)] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        const int ns = std::uniform_int_distribution<int>(1, n)(rng);
        std::vector<int> S(perm.begin(), perm.begin() + ns), T;
        for (int j = ns; j < n; ++j)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) T.push_back(perm[size_t(j)]);
        std::sort(S.begin(), S.end());
        std::sort(T.begin(), T.end());
        std::vector<int> t0;
        std::vector<double> sT;
        for (size_t j = 0; j < T.size(); ++j) {
            t0.push_back(sign());
            sT.push_back(pick_s());
        }
        const IdentityCheck c = zero_slice_identity_check(f, S, T, t0, sT, kTolIdentity);
        worst0 = std::max(worst0, c.gap);
        bad0 += !c.agree;
    }
    for (int i = 0; i < 20; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const i64 N = std::uniform_int_distribution<i64>(1, 6)(rng);
        const PeriodicFunction f = random_periodic(rng, n, N);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) perm[size_t(j)] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        const int one = perm[0];
        std::vector<int> S, T;
        for (int j = 1; j < n; ++j) {
            const int r = std::uniform_int_distribution<int>(0, 2)(rng);
            if (r == 0) S.push_back(perm[size_t(j)]);
            if (r == 1) T.push_back(perm[size_t(j)]);
        }
        std::sort(S.begin(), S.end());
        std::sort(T.begin(), T.end());
        std::vector<int> t;
        std::vector<double> sT;
        for (size_t j = 0; j < T.size(); ++j) {
            t.push_back(sign());
            sT.push_back(pick_s());
        }
        t.push_back(sign());
        const IdentityCheck c = residue_identity_check(f, S, T, one, t, sT, kTolIdentity);
        worst1 = std::max(worst1, c.gap);
        bad1 += !c.agree;
    }
    if (bad0) L.fail(std::to_string(bad0) + "/20 zero-slice identities off");
    if (bad1) L.fail(std::to_string(bad1) + "/20 residue identities off");
    L.note("zero-slice worst gap " + fmt(worst0) + ", residue worst gap " + fmt(worst1));

    const SmoothWeight w = SmoothWeight::plateau(-2, 2, -std::sqrt(2.0), std::sqrt(2.0));
    const DemoResult d = smoothed_count_demo(w, 1000);
    if (d.gap > kTolDemo) L.fail("smoothed count gap " + fmt(d.gap));
    else L.note("smoothed count gap " + fmt(d.gap) + " at X=1000");
    return L;
}

// ---- 6 and 7 --------------------------------------------------------------------------

Line criterion6(const Census& census) {
    Line L;
    const i64 p = 5;
    BoxMaximality total;
    for (int shard = 0; shard < 5; ++shard) {
        const BoxMaximality b = box_maximality(2, p, shard, 5);
        total.pairs += b.pairs;
        total.degenerate += b.degenerate;
        total.m1_positive += b.m1_positive;
        total.m1_positive_but_maximal += b.m1_positive_but_maximal;
        total.m1_multiple += b.m1_multiple;
        total.m1_multiple_without_p4 += b.m1_multiple_without_p4;
        total.nonmaximal += b.nonmaximal;
    }
    if (total.pairs != ipow(5, 12)) L.fail("box covered " + std::to_string(total.pairs) + " pairs, expected 5^12");
    if (total.m1_positive_but_maximal) L.fail(std::to_string(total.m1_positive_but_maximal) + " pairs with M1 >= 1 are maximal");
    if (total.m1_multiple_without_p4) L.fail(std::to_string(total.m1_multiple_without_p4) + " pairs with M1 > 1 lack p^4 | Delta");
    L.note("box [-2,2]^12: " + std::to_string(total.m1_positive) + " with M1 >= 1, " + std::to_string(total.m1_multiple) +
           " with M1 > 1, all consistent");
    const Rat literal = 1 - (1 - Rat(1, p)) * total_maximal_mass(p);
    const Rat corrected = 1 - (1 - Rat(1, p)) * vol_sl(2, p) * vol_sl(3, p) * total_maximal_mass(p);
    if (census.nonmaximal != literal)
        L.fail("nonmaximal density over V(Z/25) is " + rs(census.nonmaximal) + ", stated formula gives " + rs(literal) +
               (census.nonmaximal == corrected ? "; equals 1-(1-1/p)Vol(SL2)Vol(SL3)(total mass)" : ""));
    return L;
}

Line criterion7(const Census& census) {
    Line L;
    const i64 p = 5;
    const std::map<SplittingType, Rat> expected = {{SplittingType::t1111, Rat(1, 24)},
                                                   {SplittingType::t112, Rat(1, 4)},
                                                   {SplittingType::t22, Rat(1, 8)},
                                                   {SplittingType::t4, Rat(1, 4)},
                                                   {SplittingType::t13, Rat(1, 3)}};
    Rat sum = 0;
    for (const auto& [t, m] : expected) {
        if (mass(t, p) != m) L.fail("mass(" + label(t) + ") = " + rs(mass(t, p)) + " expected " + rs(m));
        sum += mass(t, p);
    }
    if (sum != 1) L.fail("unramified masses sum to " + rs(sum));
    // enumeration masses: exhaustive V(Z/25) densities divided by the group volume
    const Rat norm = (1 - Rat(1, p)) * vol_sl(2, p) * vol_sl(3, p);
    int matched = 0;
    for (SplittingType t : kAllTypes) {
        auto it = census.by_type.find(t);
        const Rat got = it == census.by_type.end() ? Rat(0) : it->second / norm;
        if (got != mass(t, p))
            L.fail("type " + label(t) + " enumeration mass " + rs(got) + " table " + rs(mass(t, p)));
        else
            ++matched;
    }
    if (census.type_unstable != 0) L.fail("type changed under p^2 perturbation for density " + rs(census.type_unstable));
    L.note("unramified sum = 1; " + std::to_string(matched) + "/13 per-type masses match at p=5");
    return L;
}

// ---- 8 ----------------------------------------------------------------------------

int real_roots(const std::array<i64, 4>& g) {
    Eigen::VectorXd c(5);
    c << double(g[3]), double(g[2]), double(g[1]), double(g[0]), 1.0;
    Eigen::PolynomialSolver<double, 4> solver(c);
    int n = 0;
    for (Eigen::Index i = 0; i < 4; ++i)
        if (std::abs(solver.roots()[i].imag()) < 1e-7) ++n;
    return n;
}

Line criterion8() {
    Line L;
    LocalSpecification all;
    all.infinity = {0, 1, 2};
    const SmoothWeight w = SmoothWeight::plateau(0.002, 1.0, 0.004, 0.98);
    const double X = kCriterion8X;
    if (w.v * X > double(box_coverage(kCriterion8Bound))) L.fail("configuration exceeds box coverage");
    const EmpiricalCandidates cand = empirical_candidates(all, i64(w.v * X), kCriterion8Bound);
    EmpiricalOptions o6, o8;
    o6.bound = o8.bound = kCriterion8Bound;
    o6.radius = 6;
    o8.radius = 8;
    const EmpiricalResult r6 = empirical_from_candidates(all, w, X, cand, o6);
    const EmpiricalResult r8 = empirical_from_candidates(all, w, X, cand, o8);

    // oracle side
    const auto oracle = polynomial_oracle(i64(w.v * X), kOracleHeight);
    double oracle_count = 0;
    std::multiset<std::pair<i64, std::string>> A, B;
    std::map<int, int> sigA, sigB;
    for (const OracleAlgebra& a : oracle) {
        if (!a.field) continue;
        oracle_count += w(double(std::abs(a.disc)) / X);
        B.insert({a.disc, a.fingerprint});
        const int rr = real_roots(a.g);
        ++sigB[rr == 4 ? 0 : (rr == 2 ? 1 : 2)];
    }
    for (const EmpiricalOrbit& e : r6.orbits) {
        A.insert({e.record.disc, e.record.fingerprint});
        ++sigA[e.signature];
    }
    if (A != B) L.fail("field multisets differ (pairs " + std::to_string(A.size()) + ", oracle " + std::to_string(B.size()) + ")");
    if (sigA != sigB) L.fail("signature split differs");
    if (std::abs(r6.count - oracle_count) > 1e-9)
        L.fail("count " + fmt(r6.count) + " vs oracle " + fmt(oracle_count));
    const double rate = r6.stats.orbits ? double(r6.stats.unresolved_groups) / double(r6.stats.orbits) : 0.0;
    if (rate >= kMaxUnresolvedRate) L.fail("unresolved rate " + fmt(rate));
    if (r8.stats.orbits != r6.stats.orbits)
        L.fail("orbit count changes from " + std::to_string(r6.stats.orbits) + " (radius 6) to " +
               std::to_string(r8.stats.orbits) + " (radius 8)");
    L.note("X=" + fmt(X) + " bound " + std::to_string(kCriterion8Bound) + ": " + std::to_string(A.size()) +
           " fields on both sides, smoothed count " + fmt(r6.count) + " vs " + fmt(oracle_count) + ", signatures " +
           std::to_string(sigA[0]) + "/" + std::to_string(sigA[1]) + "/" + std::to_string(sigA[2]) +
           ", unresolved rate " + fmt(rate) + ", orbits stable at radius 8");
    return L;
}

// ---- 9 ----------------------------------------------------------------------------

Line criterion9() {
    Line L;
    LocalSpecification spec;
    spec.infinity = {0};
    spec.s4_family = true;
    PrimeSpec a, b;
    a.p = 5;
    a.types = {SplittingType::t13};
    b.p = 7;
    b.types = {SplittingType::t4};
    spec.local = {a, b};
    const ConstantReport r2 = constant_report(spec, 200), r4 = constant_report(spec, 400);
    auto check = [&](const std::string& name, const Interval& at400, const Interval& at200) {
        if (!contains(at200, at400))
            L.fail(name + " at 400 [" + fmt(at400.lower()) + ", " + fmt(at400.upper()) + "] not inside [" +
                   fmt(at200.lower()) + ", " + fmt(at200.upper()) + "]");
    };
    check("c1", r4.c1, r2.c1);
    check("c56", r4.c56, r2.c56);
    check("c56 untwisted", r4.c56_untwisted, r2.c56_untwisted);
    check("c56 twisted", r4.c56_twisted, r2.c56_twisted);
    check("M_sigma", r4.M_sigma, r2.M_sigma);
    check("M_sigma'", r4.M_sigma_prime, r2.M_sigma_prime);
    check("zeta(1/3)", r4.zeta_third, r2.zeta_third);
    check("zeta(2/3)", r4.zeta_two_thirds, r2.zeta_two_thirds);
    check("leading product", r4.rest_leading * r4.tail_leading, r2.rest_leading * r2.tail_leading);
    check("untwisted product", r4.rest_untwisted * r4.tail_untwisted, r2.rest_untwisted * r2.tail_untwisted);
    check("twisted product", r4.rest_twisted * r4.tail_twisted, r2.rest_twisted * r2.tail_twisted);
    for (size_t i = 0; i < r2.factors.size(); ++i) {
        const std::string p = std::to_string(r2.factors[i].p);
        check("factor " + p + " leading", r4.factors[i].leading, r2.factors[i].leading);
        check("factor " + p + " untwisted", r4.factors[i].untwisted, r2.factors[i].untwisted);
        check("factor " + p + " twisted", r4.factors[i].twisted, r2.factors[i].twisted);
    }
    const SmoothWeight w = SmoothWeight::plateau(1, 2, 1.25, 1.75);
    const Prediction p3 = predict_count(r2, w, 1e3), p6 = predict_count(r2, w, 1e6);
    const double e1 = std::log(mid(p6.leading) / mid(p3.leading)) / std::log(1e3);
    const double e56 = std::log(mid(p6.secondary) / mid(p3.secondary)) / std::log(1e3);
    if (std::abs(e1 - 1) > kTolExponent) L.fail("leading exponent " + fmt(e1));
    if (std::abs(e56 - 5.0 / 6) > kTolExponent) L.fail("secondary exponent " + fmt(e56));
    L.note("fitted exponents " + fmt(e1) + " and " + fmt(e56) + "; c56 moved by " +
           fmt(std::abs(mid(r4.c56) - mid(r2.c56))) + " with tail bound " + fmt(r2.tail_bound));
    return L;
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expect_red, only;
    bool have_expectation = false;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--expect-red" && i + 1 < argc) {
            expect_red = parse_list(argv[++i]);
            have_expectation = true;
        } else if (a == "--only" && i + 1 < argc) {
            only = parse_list(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--expect-red 1,2,...] [--only 3,5,...]\n";
            return 1;
        }
    }
    auto wanted = [&](int c) { return only.empty() || only.count(c); };

    std::set<int> red;
    bool crashed = false;
    std::optional<Census> census;
    auto run = [&](int id, auto&& fn) {
        if (!wanted(id)) return;
        const auto t0 = std::chrono::steady_clock::now();
        Line L;
        try {
            L = fn();
        } catch (const std::exception& e) {
            L.fail(std::string("exception: ") + e.what());
            crashed = true;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!L.pass) red.insert(id);
        std::cout << "criterion " << id << ": " << (L.pass ? "PASS" : "FAIL") << " |" << L.detail.str() << " ("
                  << fmt(secs) << " s)" << std::endl;
    };
    auto need_census = [&]() -> const Census& {
        if (!census) census = census_mod_p2(5);
        return *census;
    };

    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, [&] { return criterion6(need_census()); });
    run(7, [&] { return criterion7(need_census()); });
    run(8, criterion8);
    run(9, criterion9);

    if (!have_expectation) return red.empty() ? 0 : 1;
    std::set<int> expected;
    for (int c : expect_red)
        if (wanted(c)) expected.insert(c);
    bool ok = !crashed;
    for (int c : red)
        if (!expected.count(c)) {
            std::cout << "unexpected failure: criterion " << c << std::endl;
            ok = false;
        }
    for (int c : expected)
        if (!red.count(c)) {
            std::cout << "criterion " << c << " was expected to fail but passed; update the expectation" << std::endl;
            ok = false;
        }
    return ok ? 0 : 1;
}
