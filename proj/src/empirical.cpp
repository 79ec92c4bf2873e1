#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "quartic/empirical.hpp"

namespace quartic {

namespace {

Pair coords_pair(const Coords& c) {
    std::array<Int, 12> v;
    for (int i = 0; i < 12; ++i) v[size_t(i)] = c[size_t(i)];
    return Pair::from_coords(v);
}

}  // namespace

int real_signature(const Coords& x) {
    const BinaryCubic<i64> f = resolvent_fast(x);
    const i128 D = disc_fast(f);
    if (D == 0) throw ComputationError("degenerate pair (zero discriminant)");
    if (D < 0) return 1;
    // Delta > 0: three real degenerate conics in the pencil. With four real base points all
    // three are real line pairs; with two conjugate pairs, two of them are conjugate line
    // pairs, i.e. semidefinite of rank 2.
    const Pair64 P = Pair64::from_coords(x);
    Eigen::Matrix3d A, B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            A(i, j) = double(P.A(i, j));
            B(i, j) = double(P.B(i, j));
        }
    std::vector<std::pair<double, double>> roots;  // (x, y) with f(x, y) = 0
    if (f.a == 0) roots.push_back({1.0, 0.0});
    {
        std::vector<double> c;
        for (i64 v : {f.d, f.c, f.b, f.a}) c.push_back(double(v));
        while (!c.empty() && c.back() == 0) c.pop_back();
        Eigen::VectorXd coeffs(c.size());
        for (size_t i = 0; i < c.size(); ++i) coeffs[Eigen::Index(i)] = c[i];
        if (c.size() >= 2) {
            Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
            for (Eigen::Index i = 0; i < solver.roots().size(); ++i) roots.push_back({solver.roots()[i].real(), 1.0});
        }
    }
    if (roots.size() != 3) throw ComputationError("signature: resolvent root count mismatch");
    int definite = 0;
    for (auto [rx, ry] : roots) {
        const Eigen::Matrix3d C = rx * A - ry * B;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(C);
        Eigen::Vector3d ev = es.eigenvalues();
        // drop the eigenvalue closest to zero
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(ev[i]) < std::abs(ev[k])) k = i;
        double s[2];
        int n = 0;
        for (int i = 0; i < 3; ++i)
            if (i != k) s[n++] = ev[i];
        const double scale = std::max(std::abs(s[0]), std::abs(s[1]));
        if (std::abs(ev[k]) > 1e-6 * scale) throw ComputationError("signature: degenerate conic not singular");
        if (s[0] * s[1] > 0) ++definite;
    }
    if (definite == 0) return 0;
    if (definite == 2) return 2;
    throw ComputationError("signature: inconsistent pencil");
}

i64 box_coverage(int bound) {
    if (bound <= 0) return 0;
    if (bound == 1) return 900;
    return 1000;
}

bool passes_specification(const LocalSpecification& spec, const Coords& x, int signature) {
    if (!std::binary_search(spec.infinity.begin(), spec.infinity.end(), signature)) return false;
    for (const PrimeSpec& ps : spec.local) {
        if (ps.explicit_data)
            throw SpecError("empirical counts need splitting-type conditions, not explicit data, at p = " +
                            std::to_string(ps.p));
        const Pair P = coords_pair(x);
        const PAdicContext ctx(ps.p, 4);
        if (!is_maximal_at_p(P, ctx)) return false;
        const SplittingType t = classify_splitting(P, ctx);
        if (std::find(ps.types.begin(), ps.types.end(), t) == ps.types.end()) return false;
    }
    return true;
}

EmpiricalCandidates empirical_candidates(const LocalSpecification& spec, i64 max_disc, int bound) {
    for (const PrimeSpec& ps : spec.local)
        if (ps.explicit_data)
            throw SpecError("empirical counts need splitting-type conditions, not explicit data, at p = " +
                            std::to_string(ps.p));
    EmpiricalCandidates out;
    out.bound = bound;
    out.max_disc = max_disc;
    const auto pairs = collect_box(bound, max_disc);
    out.box_pairs = i64(pairs.size());
    for (const auto& pm : pairs) {
        const Fingerprint fp = pair_fingerprint(pm.first);
        if (!fp.certified_field) continue;
        // unramified constrained primes are decided by the cheap pattern
        bool local_ok = true;
        for (const PrimeSpec& ps : spec.local) {
            if (fp.disc % ps.p == 0) continue;
            const std::string pat = unramified_pattern(pm.first, ps.p);
            local_ok = std::any_of(ps.types.begin(), ps.types.end(), [&](SplittingType t) { return label(t) == pat; });
            if (!local_ok) break;
        }
        if (!local_ok || !maximal_everywhere(pm.first)) continue;
        out.pairs.push_back(pm);
    }
    return out;
}

EmpiricalResult empirical_from_candidates(const LocalSpecification& spec, const SmoothWeight& w, double X,
                                          const EmpiricalCandidates& cand, const EmpiricalOptions& opt) {
    if (!(X > 0)) throw ComputationError("X must be positive");
    if (opt.radius < 1) throw ComputationError("radius must be positive");
    if (w.v * X > double(cand.max_disc)) throw ComputationError("candidates were collected for a smaller X");
    EmpiricalResult out;
    out.box_pairs = cand.box_pairs;
    out.candidates = i64(cand.pairs.size());
    const auto records = orbit_reduce(cand.pairs, opt.radius, cand.bound, &out.stats);
    for (const OrbitRecord& r : records) {
        if (!r.field || !r.maximal) continue;
        const int sig = real_signature(r.rep);
        if (!passes_specification(spec, r.rep, sig)) continue;
        EmpiricalOrbit e;
        e.record = r;
        e.signature = sig;
        const double d = double(r.disc < 0 ? -r.disc : r.disc);
        e.weight = w(d / X);
        if (opt.zeta_weighted) e.weight /= double(r.stabilizer);
        out.count += e.weight;
        if (r.unresolved) ++out.unresolved;
        out.orbits.push_back(std::move(e));
    }
    return out;
}

EmpiricalResult empirical_count(const LocalSpecification& spec, const SmoothWeight& w, double X,
                                const EmpiricalOptions& opt) {
    if (!(X > 0)) throw ComputationError("X must be positive");
    const double reach = w.v * X;
    const i64 cover = box_coverage(opt.bound);
    if (reach > double(cover)) {
        std::ostringstream msg;
        msg << "box too small for X: bound " << opt.bound << " covers |Delta| <= " << cover
            << " but the weight reaches " << reach;
        throw ComputationError(msg.str());
    }
    const EmpiricalCandidates cand = empirical_candidates(spec, i64(std::floor(reach)), opt.bound);
    return empirical_from_candidates(spec, w, X, cand, opt);
}

}  // namespace quartic
