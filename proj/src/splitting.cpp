#include <algorithm>

#include "quartic/padic.hpp"

namespace quartic {

namespace {

using PolyZ = std::vector<Int>;  // lowest degree first

Int eval_mod(const PolyZ& f, const Int& x) {
    Int r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

// f(r + p t)
PolyZ shift_scale(const PolyZ& f, const Int& r, i64 p) {
    size_t n = f.size();
    PolyZ g(n, Int(0));
    // Horner with the linear polynomial r + p t
    for (size_t i = n; i-- > 0;) {
        PolyZ h(n, Int(0));
        for (size_t j = 0; j < n; ++j) {
            if (g[j] == 0) continue;
            h[j] += g[j] * r;
            if (j + 1 < n) h[j + 1] += g[j] * p;
        }
        h[0] += f[i];
        g = std::move(h);
    }
    return g;
}

bool all_divisible(const PolyZ& f, i64 p) {
    for (const Int& c : f)
        if (c % p != 0) return false;
    return true;
}

// number of roots in Z_p of a squarefree nonzero polynomial
int zp_roots(PolyZ f, i64 p, int depth) {
    if (depth > 400) throw ComputationError("root count did not terminate");
    bool nz = false;
    for (const Int& c : f) nz = nz || c != 0;
    if (!nz) throw ComputationError("zero polynomial");
    while (all_divisible(f, p))
        for (Int& c : f) c /= p;
    PolyZ df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Int(i));
    int n = 0;
    for (i64 r = 0; r < p; ++r) {
        if (mod(eval_mod(f, Int(r)), p) != 0) continue;
        if (!df.empty() && mod(eval_mod(df, Int(r)), p) != 0) {
            ++n;
            continue;
        }
        n += zp_roots(shift_scale(f, Int(r), p), p, depth + 1);
    }
    return n;
}

Cubic reduce(const Cubic& f, i64 p) {
    return {Int(mod(f.a, p)), Int(mod(f.b, p)), Int(mod(f.c, p)), Int(mod(f.d, p))};
}

bool zero_mod(const Cubic& f, i64 p) { return reduce(f, p).is_zero(); }

// one step of the index-p desingularization; returns false if f is maximal at p
bool enlarge(Cubic& f, int& index, i64 p) {
    if (zero_mod(f, p)) {
        f = {f.a / p, f.b / p, f.c / p, f.d / p};
        index += 2;
        return true;
    }
    auto pattern = residual_root_pattern(f, p);
    if (pattern.empty() || pattern.front() < 2) return false;
    // locate the multiple root and move it to (1:0)
    std::vector<i64> xs;
    Cubic g = f;
    bool found = false;
    for (i64 r = 0; r <= p && !found; ++r) {
        Mat2<Int> m;
        if (r < p)
            m << Int(r), Int(1), Int(1), Int(0);
        else
            m = Mat2<Int>::Identity();
        Cubic h = substitute(f, m);
        // multiple root at (1:0): a = b = 0 mod p
        if (mod(h.a, p) == 0 && mod(h.b, p) == 0) {
            g = h;
            found = true;
        }
    }
    if (!found) throw ComputationError("multiple root not located");
    if (mod(g.a, p * p) != 0) return false;
    f = {g.a / (p * p), g.b / p, g.c, g.d * p};
    index += 1;
    return true;
}

}  // namespace

std::vector<int> residual_root_pattern(const Cubic& f, i64 p) {
    Cubic r = reduce(f, p);
    if (r.is_zero()) throw ComputationError("form vanishes mod p");
    // coefficients of f(t,1), lowest first
    std::vector<i64> g = {mod(r.d, p), mod(r.c, p), mod(r.b, p), mod(r.a, p)};
    std::vector<int> out;
    int deg = 3;
    while (deg >= 0 && g[deg] == 0) --deg;
    if (deg < 3) out.push_back(3 - deg);  // root at (1:0)
    for (i64 x = 0; x < p; ++x) {
        std::vector<i64> h(g.begin(), g.begin() + deg + 1);
        int mult = 0;
        while (h.size() > 1) {
            // synthetic division by (t - x)
            i64 rem = 0;
            std::vector<i64> q(h.size() - 1);
            for (size_t i = h.size(); i-- > 0;) {
                i64 c = mod(h[i] + rem, p);
                if (i == 0) {
                    rem = c;
                } else {
                    q[i - 1] = c;
                    rem = mod(c * x, p);
                }
            }
            if (rem != 0) break;
            ++mult;
            h = q;
        }
        if (mult > 0) out.push_back(mult);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int count_padic_roots(const Cubic& f, i64 p) {
    if (disc(f) == 0) throw ComputationError("cubic with zero discriminant");
    // roots (t:1), t in Z_p, and (1:u), u in pZ_p
    PolyZ affine = {f.d, f.c, f.b, f.a};
    PolyZ at_inf = {f.a, f.b * p, f.c * p * p, f.d * p * p * p};
    while (affine.size() > 1 && affine.back() == 0) affine.pop_back();
    while (at_inf.size() > 1 && at_inf.back() == 0) at_inf.pop_back();
    return zp_roots(affine, p, 0) + zp_roots(at_inf, p, 0);
}

int cubic_index_valuation(const Cubic& f, const PAdicContext& ctx) {
    if (disc(f) == 0) throw ComputationError("cubic with zero discriminant");
    Cubic g = f;
    int index = 0;
    while (val(disc(g), ctx.p, 4) >= 2 && enlarge(g, index, ctx.p)) {
    }
    return index;
}

Cubic maximalize(const Cubic& f, const PAdicContext& ctx) {
    if (disc(f) == 0) throw ComputationError("cubic with zero discriminant");
    Cubic g = f;
    int index = 0;
    while (val(disc(g), ctx.p, 4) >= 2 && enlarge(g, index, ctx.p)) {
    }
    return g;
}

// ---- splitting types ------------------------------------------------------------

std::string label(SplittingType t) {
    switch (t) {
        case SplittingType::t1111: return "1111";
        case SplittingType::t112: return "112";
        case SplittingType::t22: return "22";
        case SplittingType::t4: return "4";
        case SplittingType::t13: return "13";
        case SplittingType::t1sq11: return "1²11";
        case SplittingType::t1sq2: return "1²2";
        case SplittingType::t1cu1: return "1³1";
        case SplittingType::t2sq_C2sq: return "2²_C2²";
        case SplittingType::t2sq_C4: return "2²_C4";
        case SplittingType::t1sq1sq_eq: return "1²1²_eq";
        case SplittingType::t1sq1sq_neq: return "1²1²_neq";
        case SplittingType::t1q4: return "1⁴";
    }
    return "?";
}

std::optional<SplittingType> parse_type(const std::string& s) {
    // accepts the display labels and ASCII spellings with ^ for exponents
    static const std::map<std::string, SplittingType> ascii = {
        {"1^211", SplittingType::t1sq11},       {"1^22", SplittingType::t1sq2},
        {"1^31", SplittingType::t1cu1},         {"2^2_C2^2", SplittingType::t2sq_C2sq},
        {"2^2_C4", SplittingType::t2sq_C4},     {"1^21^2_eq", SplittingType::t1sq1sq_eq},
        {"1^21^2_neq", SplittingType::t1sq1sq_neq}, {"1^4", SplittingType::t1q4}};
    for (SplittingType t : kAllTypes)
        if (label(t) == s) return t;
    auto it = ascii.find(s);
    if (it != ascii.end()) return it->second;
    return std::nullopt;
}

Rat mass(SplittingType t, i64 p) {
    const Rat P(p);
    switch (t) {
        case SplittingType::t1111: return Rat(1, 24);
        case SplittingType::t112: return Rat(1, 4);
        case SplittingType::t22: return Rat(1, 8);
        case SplittingType::t4: return Rat(1, 4);
        case SplittingType::t13: return Rat(1, 3);
        case SplittingType::t1sq11:
        case SplittingType::t1sq2: return 1 / (2 * P);
        case SplittingType::t1cu1: return 1 / (P * P);
        case SplittingType::t2sq_C2sq:
        case SplittingType::t2sq_C4:
        case SplittingType::t1sq1sq_eq:
        case SplittingType::t1sq1sq_neq: return 1 / (4 * P * P);
        case SplittingType::t1q4: return 1 / (P * P * P);
    }
    return 0;
}

int disc_valuation(SplittingType t) {
    switch (t) {
        case SplittingType::t1111:
        case SplittingType::t112:
        case SplittingType::t22:
        case SplittingType::t4:
        case SplittingType::t13: return 0;
        case SplittingType::t1sq11:
        case SplittingType::t1sq2: return 1;
        case SplittingType::t1q4: return 3;
        default: return 2;
    }
}

Rat total_maximal_mass(i64 p) {
    Rat s = 0;
    for (SplittingType t : kAllTypes) s += mass(t, p);
    return s;
}

ResolventRow resolvent_row(SplittingType t) {
    switch (t) {
        case SplittingType::t1111:
        case SplittingType::t22: return ResolventRow::r111;
        case SplittingType::t112:
        case SplittingType::t4: return ResolventRow::r12;
        case SplittingType::t13: return ResolventRow::r3;
        case SplittingType::t1sq11:
        case SplittingType::t1sq2: return ResolventRow::r1sq1;
        case SplittingType::t1cu1: return ResolventRow::r1cu;
        case SplittingType::t2sq_C2sq:
        case SplittingType::t1sq1sq_eq: return ResolventRow::rC2sq;
        case SplittingType::t2sq_C4:
        case SplittingType::t1sq1sq_neq: return ResolventRow::rC4;
        case SplittingType::t1q4: return ResolventRow::r1q4;
    }
    return ResolventRow::r111;
}

std::string row_label(ResolventRow r) {
    switch (r) {
        case ResolventRow::r111: return "111";
        case ResolventRow::r12: return "12";
        case ResolventRow::r3: return "3";
        case ResolventRow::r1sq1: return "1²1";
        case ResolventRow::r1cu: return "1³";
        case ResolventRow::rC2sq: return "C2²";
        case ResolventRow::rC4: return "C4";
        case ResolventRow::r1q4: return "1⁴";
    }
    return "?";
}

Cubic row_form(ResolventRow r, i64 p) {
    const Int P(p), E(nonresidue(p));
    switch (r) {
        case ResolventRow::r111: return {0, 1, 1, 0};              // ab(a+b)
        case ResolventRow::r12: return {1, 0, -E, 0};              // a(a^2 - e b^2)
        case ResolventRow::r3: {
            // monic cubic without roots mod p
            for (i64 c2 = 0; c2 < p; ++c2)
                for (i64 c1 = 0; c1 < p; ++c1)
                    for (i64 c0 = 1; c0 < p; ++c0) {
                        Cubic f{1, c2, c1, c0};
                        if (residual_root_pattern(f, p).empty()) return f;
                    }
            throw ComputationError("no irreducible cubic");
        }
        case ResolventRow::r1sq1: return {-P, 0, 1, 0};            // a(b^2 - p a^2)
        case ResolventRow::r1cu: return {1, 0, 0, -P};             // a^3 - p b^3
        case ResolventRow::rC2sq: return {0, 1, P, 0};             // ab(a + p b)
        case ResolventRow::rC4: return {P * P, 0, -E, 0};          // a(p^2 a^2 - e b^2)
        case ResolventRow::r1q4: return {1, 0, -P, 0};             // a(a^2 - p b^2)
    }
    return {};
}

namespace {

int base_points_mod_p(const Pair& x, i64 p) {
    Mat3<i64> A, B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            A(i, j) = mod(x.A(i, j), p);
            B(i, j) = mod(x.B(i, j), p);
        }
    auto q = [&](const Mat3<i64>& M, i64 a, i64 b, i64 c) {
        i64 v[3] = {a, b, c}, s = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += v[i] * M(i, j) * v[j];
        return mod(s, p) == 0;
    };
    int n = 0;
    auto test = [&](i64 a, i64 b, i64 c) {
        if (q(A, a, b, c) && q(B, a, b, c)) ++n;
    };
    for (i64 b = 0; b < p; ++b)
        for (i64 c = 0; c < p; ++c) test(1, b, c);
    for (i64 c = 0; c < p; ++c) test(0, 1, c);
    test(0, 0, 1);
    return n;
}

}  // namespace

SplittingType classify_splitting(const Pair& x, const PAdicContext& ctx) {
    const i64 p = ctx.p;
    if (p <= 3) throw ComputationError("table operations require p > 3");
    Int D = disc_pair(x);
    if (D == 0) throw ComputationError("degenerate pair");
    if (!is_maximal_at_p(x, ctx)) throw ComputationError("classify requires maximal pair");
    int v = val(D, p, 8);
    int pts = base_points_mod_p(x, p);
    Cubic res = resolvent(x);
    auto bad = [&]() -> SplittingType {
        throw ComputationError("unexpected residual configuration");
    };
    switch (v) {
        case 0:
            if (pts == 4) return SplittingType::t1111;
            if (pts == 2) return SplittingType::t112;
            if (pts == 1) return SplittingType::t13;
            if (pts == 0) {
                auto pat = residual_root_pattern(res, p);
                if (pat.size() == 3) return SplittingType::t22;
                if (pat.size() == 1) return SplittingType::t4;
            }
            return bad();
        case 1:
            if (pts == 3) return SplittingType::t1sq11;
            if (pts == 1) return SplittingType::t1sq2;
            return bad();
        case 2: {
            auto pat = residual_root_pattern(res, p);
            if (pat.size() == 1 && pat[0] == 3) return SplittingType::t1cu1;
            int roots = count_padic_roots(res, p);
            if (pts == 0) return roots == 3 ? SplittingType::t2sq_C2sq : SplittingType::t2sq_C4;
            if (pts == 2) return roots == 3 ? SplittingType::t1sq1sq_eq : SplittingType::t1sq1sq_neq;
            return bad();
        }
        case 3: return SplittingType::t1q4;
        default: return bad();
    }
}

Rat vol_sl(int n, i64 p) {
    Rat v = 1;
    for (int k = 2; k <= n; ++k) v *= 1 - rpow(Rat(p), -k);
    return v;
}

Rat orbit_density(SplittingType t, i64 p) {
    return (1 - Rat(1, p)) * vol_sl(2, p) * vol_sl(3, p) * mass(t, p);
}

}  // namespace quartic
