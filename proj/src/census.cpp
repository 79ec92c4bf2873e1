#include <algorithm>

#include "quartic/enumeration.hpp"

namespace quartic {

namespace {

Coords swapped(const Coords& x) {
    Coords y;
    for (int i = 0; i < 6; ++i) {
        y[i] = x[6 + i];
        y[6 + i] = x[i];
    }
    return y;
}

Coords negated(Coords x) {
    for (auto& c : x) c = -c;
    return x;
}

Pair to_pair(const Coords& c) {
    std::array<Int, 12> v;
    for (int i = 0; i < 12; ++i) v[i] = c[i];
    return Pair::from_coords(v);
}

// symmetric 3x3 mod p as coordinates (a11,a12,a13,a22,a23,a33) of q
using Sym = std::array<i64, 6>;

// rank and square class (+1 / -1) of the product of the diagonal after
// diagonalizing the quadratic form q over F_p, p odd
std::pair<int, int> sym_class(const Sym& q, i64 p) {
    // Gram matrix of q mod p
    i64 m[3][3];
    const i64 h = inverse_mod(2, p);
    m[0][0] = mod(q[0], p);
    m[1][1] = mod(q[3], p);
    m[2][2] = mod(q[5], p);
    m[0][1] = m[1][0] = mod(q[1] * h, p);
    m[0][2] = m[2][0] = mod(q[2] * h, p);
    m[1][2] = m[2][1] = mod(q[4] * h, p);
    int n = 3, rank = 0;
    i64 prod = 1;
    // symmetric elimination
    std::vector<int> idx = {0, 1, 2};
    while (!idx.empty()) {
        int piv = -1;
        for (int i : idx)
            if (m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // all diagonal zero: find off-diagonal, replace e_i by e_i + e_j
            int a = -1, b = -1;
            for (int i : idx)
                for (int j : idx)
                    if (i != j && m[i][j] != 0 && a < 0) {
                        a = i;
                        b = j;
                    }
            if (a < 0) break;
            for (int k = 0; k < n; ++k) m[a][k] = mod(m[a][k] + m[b][k], p);
            for (int k = 0; k < n; ++k) m[k][a] = mod(m[k][a] + m[k][b], p);
            piv = a;
        }
        const i64 d = m[piv][piv];
        prod = mod(prod * d, p);
        ++rank;
        const i64 inv = inverse_mod(d, p);
        idx.erase(std::find(idx.begin(), idx.end(), piv));
        for (int i : idx) {
            const i64 f = mod(m[i][piv] * inv, p);
            for (int j : idx) m[i][j] = mod(m[i][j] - f * m[piv][j], p);
        }
        for (int i : idx) m[i][piv] = m[piv][i] = 0;
    }
    return {rank, rank == 0 ? 1 : legendre(prod, p)};
}

void add_lie_images(const Coords& x0, i64 p, std::vector<std::vector<i64>>& rows) {
    // gl2: (A,B) -> (A,0), (B,0), (0,A), (0,B)
    for (int k = 0; k < 4; ++k) {
        std::vector<i64> r(12, 0);
        const int src = (k == 0 || k == 2) ? 0 : 6;
        const int dst = k < 2 ? 0 : 6;
        for (int i = 0; i < 6; ++i) r[dst + i] = mod(x0[src + i], p);
        rows.push_back(r);
    }
    // gl3: M -> E M + M E^t in doubled Gram form, read back as coordinates
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::vector<i64> r(12, 0);
            for (int half = 0; half < 2; ++half) {
                const i64* c = x0.data() + 6 * half;
                i64 M[3][3] = {{2 * c[0], c[1], c[2]}, {c[1], 2 * c[3], c[4]}, {c[2], c[4], 2 * c[5]}};
                i64 D[3][3] = {};
                for (int j = 0; j < 3; ++j) {
                    D[a][j] += M[b][j];  // (E_ab M)_{aj}
                    D[j][a] += M[j][b];  // (M E_ba)_{ja}
                }
                const int o = 6 * half;
                r[o + 0] = mod(D[0][0] / 2, p);
                r[o + 1] = mod(D[0][1], p);
                r[o + 2] = mod(D[0][2], p);
                r[o + 3] = mod(D[1][1] / 2, p);
                r[o + 4] = mod(D[1][2], p);
                r[o + 5] = mod(D[2][2] / 2, p);
            }
            rows.push_back(r);
        }
}

}  // namespace

Coords symmetry_canonical(const Coords& x) {
    Coords best = x;
    for (const Coords& y : {negated(x), swapped(x), negated(swapped(x))})
        if (y < best) best = y;
    return best;
}

i128 discriminant(const Coords& x) { return disc_fast(resolvent_fast(x)); }

void enumerate_box(int bound, const std::function<void(const Coords&, int)>& f, int shard,
                   int shards) {
    if (bound < 0 || bound > 4) throw ComputationError("bound too large (at most 4)");
    if (shards < 1 || shard < 0 || shard >= shards) throw ComputationError("bad shard");
    const int w = 2 * bound + 1;
    Coords x;
    // odometer over 12 digits; first digit restricted to the shard
    std::array<int, 12> d{};
    for (int first = 0; first < w; ++first) {
        if (first % shards != shard) continue;
        d.fill(0);
        d[0] = first;
        while (true) {
            for (int i = 0; i < 12; ++i) x[i] = d[i] - bound;
            const Coords n = negated(x), s = swapped(x), ns = negated(s);
            if (!(n < x) && !(s < x) && !(ns < x)) {
                int mult = 1;
                if (n != x) ++mult;
                if (s != x && s != n) ++mult;
                if (ns != x && ns != n && ns != s) ++mult;
                f(x, mult);
            }
            int i = 11;
            while (i >= 1 && ++d[i] == w) d[i--] = 0;
            if (i == 0) break;
        }
    }
}

BoxMaximality box_maximality(int bound, i64 p, int shard, int shards) {
    BoxMaximality r;
    const i64 p4 = p * p * p * p;
    enumerate_box(
        bound,
        [&](const Coords& x, int mult) {
            r.pairs += mult;
            const i128 d = discriminant(x);
            const int m1 = m1_count_mod_p2(reduce_mod_p2(x, p), p);
            if (d == 0) {
                r.degenerate += mult;
                return;
            }
            bool maximal = true;
            if (d % (p * p) == 0) maximal = maximality_mod_p2(reduce_mod_p2(x, p), p).maximal;
            if (!maximal) r.nonmaximal += mult;
            if (m1 >= 1) {
                r.m1_positive += mult;
                if (maximal) r.m1_positive_but_maximal += mult;
            }
            if (m1 > 1) {
                r.m1_multiple += mult;
                if (d % p4 != 0) r.m1_multiple_without_p4 += mult;
            }
        },
        shard, shards);
    return r;
}

Census census_mod_p2(i64 p) {
    if (p < 5 || !is_prime(p)) throw ComputationError("census requires a prime p >= 5");
    Census out;
    out.p = p;
    const i64 n6 = ipow(p, 6);
    const Rat total = rpow(Rat(p), 24);  // |V(Z/p^2)|

    // GL3(F_p)-classes of A mod p: representative and class size
    std::map<std::pair<int, int>, std::pair<Sym, i64>> classes;
    const i64 eps = nonresidue(p);
    for (i64 n = 0; n < n6; ++n) {
        Sym q;
        i64 r = n;
        for (auto& c : q) {
            c = r % p;
            r /= p;
        }
        auto key = sym_class(q, p);
        auto it = classes.find(key);
        if (it == classes.end()) {
            Sym rep{};
            const int rk = key.first;
            // diag(1,..,1,e) with e fixing the square class
            const i64 diag[3] = {1, 1, 1};
            if (rk >= 1) rep[0] = diag[0];
            if (rk >= 2) rep[3] = diag[1];
            if (rk >= 3) rep[5] = diag[2];
            if (key.second == -1) {
                if (rk == 1) rep[0] = eps;
                if (rk == 2) rep[3] = eps;
                if (rk == 3) rep[5] = eps;
            }
            it = classes.emplace(key, std::make_pair(rep, i64(0))).first;
        }
        ++it->second.second;
    }

    const PAdicContext ctx(p, 4);
    for (const auto& [key, val] : classes) {
        const Sym& A0 = val.first;
        if (sym_class(A0, p) != key) throw ComputationError("census: bad class representative");
        const Rat csize = Rat(val.second);
        for (i64 nb = 0; nb < n6; ++nb) {
            Coords x0{};
            for (int i = 0; i < 6; ++i) x0[i] = A0[i];
            i64 r = nb;
            for (int i = 0; i < 6; ++i) {
                x0[6 + i] = r % p;
                r /= p;
            }
            ++out.reductions;
            const i128 d0 = discriminant(x0);
            if (d0 % p != 0) {
                // maximal, type read off mod p
                SplittingType t = classify_splitting(to_pair(x0), ctx);
                out.by_type[t] += csize * rpow(Rat(p), 12) / total;
                continue;
            }
            MaximalityWitness w0 = maximality_mod_p2(reduce_mod_p2(x0, p), p);
            if (!w0.maximal && (w0.shape == "span" || w0.shape == "SW2")) {
                out.nonmaximal += csize * rpow(Rat(p), 12) / total;
                continue;
            }
            std::vector<std::vector<i64>> rows;
            add_lie_images(x0, p, rows);
            Complement comp = complement_mod_p(rows, 12, p);
            const int c = int(comp.basis.size());
            const Rat wt = csize * rpow(Rat(p), comp.rank) / total;
            const i64 cosets = ipow(p, c);
            for (i64 k = 0; k < cosets; ++k) {
                Coords x = x0;
                i64 rr = k;
                for (int j = 0; j < c; ++j) {
                    const i64 digit = rr % p;
                    rr /= p;
                    for (int i = 0; i < 12; ++i) x[i] += p * digit * comp.basis[j][i];
                }
                ++out.lifts;
                if (!maximality_mod_p2(reduce_mod_p2(x, p), p).maximal) {
                    out.nonmaximal += wt;
                    continue;
                }
                if (discriminant(x) == 0) {
                    // a degenerate lift; move it off the discriminant locus by p^2 e_1
                    x[0] += p * p;
                }
                SplittingType t = classify_splitting(to_pair(x), ctx);
                // the type of a maximal pair should only depend on x mod p^2
                Coords y = x;
                y[11] += p * p;
                y[5] -= 2 * p * p;
                bool stable = discriminant(y) == 0 || classify_splitting(to_pair(y), ctx) == t;
                if (stable)
                    out.by_type[t] += wt;
                else
                    out.type_unstable += wt;
            }
        }
    }
    return out;
}

}  // namespace quartic
