#include <array>

#include "quartic/padic.hpp"

namespace quartic {

namespace {

using M3 = std::array<std::array<i64, 3>, 3>;
using V3 = std::array<i64, 3>;

M3 doubled(const std::array<i64, 6>& c, i64 m) {
    M3 r;
    r[0][0] = mod(2 * c[0], m);
    r[0][1] = r[1][0] = mod(c[1], m);
    r[0][2] = r[2][0] = mod(c[2], m);
    r[1][1] = mod(2 * c[3], m);
    r[1][2] = r[2][1] = mod(c[4], m);
    r[2][2] = mod(2 * c[5], m);
    return r;
}

// q(w) = sum_{i<=j} c_ij w_i w_j from coordinates (valid at p = 2 as well)
i64 qform(const std::array<i64, 6>& c, const V3& w) {
    return c[0] * w[0] * w[0] + c[1] * w[0] * w[1] + c[2] * w[0] * w[2] + c[3] * w[1] * w[1] +
           c[4] * w[1] * w[2] + c[5] * w[2] * w[2];
}

// u^t M w (no reduction)
i64 bil(const M3& M, const V3& u, const V3& w) {
    i64 s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += u[i] * M[i][j] * w[j];
    return s;
}

M3 combo(i64 s, const M3& A, i64 t, const M3& B, i64 m) {
    M3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = mod(s * A[i][j] + t * B[i][j], m);
    return r;
}

struct Geometry {
    std::vector<V3> points;                    // P^2(F_p)
    std::vector<std::array<V3, 2>> planes;     // bases of the lines of P^2(F_p)
};

const Geometry& geometry(i64 p) {
    static std::map<i64, Geometry> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    Geometry g;
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y) g.points.push_back({1, x, y});
    for (i64 y = 0; y < p; ++y) g.points.push_back({0, 1, y});
    g.points.push_back({0, 0, 1});
    // the plane orthogonal to (l0,l1,l2)
    for (const V3& l : g.points) {
        std::array<V3, 2> b;
        if (l[0] != 0) {
            b = {V3{mod(-l[1], p), 1, 0}, V3{mod(-l[2], p), 0, 1}};
        } else if (l[1] != 0) {
            b = {V3{1, 0, 0}, V3{0, mod(-l[2], p), 1}};
        } else {
            b = {V3{1, 0, 0}, V3{0, 1, 0}};
        }
        g.planes.push_back(b);
    }
    return cache.emplace(p, std::move(g)).first->second;
}

int rank_mod_p(M3 m, i64 p) {
    int r = 0;
    for (int c = 0; c < 3 && r < 3; ++c) {
        int piv = -1;
        for (int i = r; i < 3; ++i)
            if (mod(m[i][c], p) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        i64 inv = inverse_mod(mod(m[r][c], p), p);
        for (int i = 0; i < 3; ++i) {
            if (i == r) continue;
            i64 f = mod(m[i][c] * inv, p);
            for (int j = 0; j < 3; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
        }
        ++r;
    }
    return r;
}

bool radical_contains(const M3& M, const V3& w, i64 p) {
    for (int i = 0; i < 3; ++i) {
        i64 s = 0;
        for (int j = 0; j < 3; ++j) s += M[i][j] * w[j];
        if (mod(s, p) != 0) return false;
    }
    return true;
}

struct Scan {
    bool span = false, sw2 = false, sw2p = false;
    int t1 = 0;
};

// stop_early: return as soon as nonmaximality is certain
Scan scan(const ModP2Pair& x, i64 p, bool stop_early, bool t1_only = false) {
    const i64 p2 = p * p;
    const M3 A = doubled(x.a, p2), B = doubled(x.b, p2);
    const Geometry& geo = geometry(p);
    Scan s;

    // span of (A, B) mod p of dimension <= 1
    {
        bool az = true, bz = true;
        for (int i = 0; i < 6; ++i) {
            az = az && mod(x.a[i], p) == 0;
            bz = bz && mod(x.b[i], p) == 0;
        }
        bool dep = false;
        if (az || bz) {
            dep = true;
        } else {
            // B = lambda A mod p for some lambda
            int k = 0;
            while (mod(x.a[k], p) == 0) ++k;
            i64 lam = mod(x.b[k] * inverse_mod(mod(x.a[k], p), p), p);
            dep = true;
            for (int i = 0; i < 6; ++i)
                if (mod(x.b[i] - lam * x.a[i], p) != 0) dep = false;
        }
        if (dep) {
            s.span = true;
            if (stop_early) return s;
        }
    }

    // points of the base locus mod p
    std::vector<V3> base;
    for (const V3& w : geo.points)
        if (mod(qform(x.a, w), p) == 0 && mod(qform(x.b, w), p) == 0) base.push_back(w);

    // T1: w in the base locus, v in P^1(F_p) with M_v w = 0 mod p and q_v(w) = 0 mod p^2
    for (i64 k = 0; k <= p; ++k) {
        i64 v1 = k < p ? 1 : 0, v2 = k < p ? k : 1;
        M3 Mv = combo(v1, A, v2, B, p2);
        for (const V3& w : base) {
            if (!radical_contains(Mv, w, p)) continue;
            if (mod(v1 * qform(x.a, w) + v2 * qform(x.b, w), p2) != 0) continue;
            ++s.t1;
            if (stop_early) return s;
        }
    }

    if (t1_only) return s;

    // SW2: a plane on which both forms vanish mod p
    if (base.size() >= size_t(p + 1)) {
        for (const auto& L : geo.planes) {
            bool ok = true;
            for (int k = 0; k < 2; ++k) {
                const M3& M = k ? B : A;
                const auto& c = k ? x.b : x.a;
                if (mod(qform(c, L[0]), p) || mod(qform(c, L[1]), p) || mod(bil(M, L[0], L[1]), p))
                    ok = false;
            }
            if (ok) {
                s.sw2 = true;
                if (stop_early) return s;
                break;
            }
        }
    }

    // SW2': v mod p^2 and a plane L in rad(M_v mod p) with M_v|L = 0 mod p^2
    for (i64 k = 0; k <= p && !(s.sw2p && stop_early); ++k) {
        i64 v1 = k < p ? 1 : 0, v2 = k < p ? k : 1;
        if (rank_mod_p(combo(v1, A, v2, B, p), p) > 1) continue;
        for (i64 j = 0; j < p; ++j) {
            // lifts of (v1 : v2) to P^1(Z/p^2)
            i64 w1 = v1, w2 = v2;
            if (k < p) w2 = v2 + j * p; else w1 = j * p;
            M3 Mv = combo(w1, A, w2, B, p2);
            for (const auto& L : geo.planes) {
                if (!radical_contains(Mv, L[0], p) || !radical_contains(Mv, L[1], p)) continue;
                auto qv = [&](const V3& w) { return mod(w1 * qform(x.a, w) + w2 * qform(x.b, w), p2); };
                if (qv(L[0]) || qv(L[1]) || mod(bil(Mv, L[0], L[1]), p2)) continue;
                s.sw2p = true;
                break;
            }
            if (s.sw2p) break;
        }
    }
    return s;
}

ModP2Pair from_pair(const Pair& x, i64 p) {
    auto c = x.coords();
    ModP2Pair r;
    const i64 p2 = p * p;
    for (int i = 0; i < 6; ++i) {
        r.a[i] = mod(c[i], p2);
        r.b[i] = mod(c[6 + i], p2);
    }
    return r;
}

}  // namespace

ModP2Pair reduce_mod_p2(const Coords& c, i64 p) {
    ModP2Pair r;
    const i64 p2 = p * p;
    for (int i = 0; i < 6; ++i) {
        r.a[i] = mod(c[i], p2);
        r.b[i] = mod(c[6 + i], p2);
    }
    return r;
}

MaximalityWitness maximality_mod_p2(const ModP2Pair& x, i64 p) {
    Scan s = scan(x, p, true);
    if (s.span) return {false, "span"};
    if (s.t1 > 0) return {false, "T1"};
    if (s.sw2) return {false, "SW2"};
    if (s.sw2p) return {false, "SW2'"};
    return {true, ""};
}

int m1_count_mod_p2(const ModP2Pair& x, i64 p) { return scan(x, p, false, true).t1; }

MaximalityWitness maximality_witness(const Pair& x, const PAdicContext& ctx) {
    Int d = disc_pair(x);
    if (d == 0) throw ComputationError("degenerate pair (zero discriminant)");
    if (val(d, ctx.p, 2) < 2) return {true, ""};
    return maximality_mod_p2(from_pair(x, ctx.p), ctx.p);
}

bool is_maximal_at_p(const Pair& x, const PAdicContext& ctx) {
    return maximality_witness(x, ctx).maximal;
}

int m1_count(const Pair& x, const PAdicContext& ctx) {
    return m1_count_mod_p2(from_pair(x, ctx.p), ctx.p);
}

}  // namespace quartic
