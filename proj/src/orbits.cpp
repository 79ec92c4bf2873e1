#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>
#include <set>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "quartic/enumeration.hpp"

namespace quartic {

const std::vector<i64> kFingerprintPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

namespace {

struct CoordsHash {
    size_t operator()(const Coords& c) const {
        size_t h = 1469598103934665603ull;
        for (i64 v : c) h = (h ^ size_t(v + 64)) * 1099511628211ull;
        return h;
    }
};

using FpPoly = std::vector<i64>;  // lowest degree first, trimmed

FpPoly trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// remainder of a modulo monic b over F_p
FpPoly rem(FpPoly a, const FpPoly& b, i64 p) {
    a = trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        const i64 c = a.back();
        const size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        a = trim(a);
    }
    return a;
}

// exact quotient of a by monic b over F_p (assumes divisibility)
FpPoly quot(FpPoly a, const FpPoly& b, i64 p) {
    a = trim(a);
    const size_t db = b.size() - 1;
    if (a.size() <= db) return {};
    FpPoly q(a.size() - db, 0);
    while (a.size() > db) {
        const i64 c = a.back();
        const size_t shift = a.size() - 1 - db;
        q[shift] = c;
        for (size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        a = trim(a);
    }
    return q;
}

const std::vector<FpPoly>& small_irreducibles(i64 p) {
    static std::map<i64, std::vector<FpPoly>> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<FpPoly> out;
    for (i64 r = 0; r < p; ++r) out.push_back({mod(-r, p), 1});
    for (i64 b = 0; b < p; ++b)
        for (i64 c = 0; c < p; ++c) {
            bool root = false;
            for (i64 x = 0; x < p && !root; ++x) root = mod(x * x + b * x + c, p) == 0;
            if (!root) out.push_back({c, b, 1});
        }
    return cache.emplace(p, std::move(out)).first->second;
}

struct Factor {
    FpPoly f;
    int e;
};

std::vector<Factor> factor_quartic(const std::array<i64, 4>& g, i64 p) {
    FpPoly a = {mod(g[3], p), mod(g[2], p), mod(g[1], p), mod(g[0], p), 1};
    std::vector<Factor> out;
    for (const FpPoly& f : small_irreducibles(p)) {
        if (a.size() < f.size()) break;
        int e = 0;
        while (a.size() >= f.size() && rem(a, f, p).empty()) {
            a = quot(a, f, p);
            ++e;
        }
        if (e > 0) out.push_back({f, e});
    }
    if (a.size() > 1) out.push_back({a, 1});  // degree 3 or 4 without small factors
    return out;
}

std::vector<i64> zmul(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::string pattern_string(std::vector<std::pair<int, int>> de, bool exponents) {
    std::sort(de.begin(), de.end());
    std::string s;
    for (auto [d, e] : de) {
        for (int k = 0; k < (exponents ? 1 : e); ++k) {
            if (exponents && !s.empty()) s += ' ';
            s += std::to_string(d);
            if (exponents && e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

i64 qform(const i64* c, i64 x, i64 y, i64 z) {
    return c[0] * x * x + c[1] * x * y + c[2] * x * z + c[3] * y * y + c[4] * y * z + c[5] * z * z;
}

Pair to_pair(const Coords& c) {
    std::array<Int, 12> v;
    for (int i = 0; i < 12; ++i) v[i] = c[i];
    return Pair::from_coords(v);
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    n = n < 0 ? -n : n;
    for (i64 q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<GroupElement<i64>> generators() {
    std::vector<GroupElement<i64>> gens;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int s : {1, -1}) {
                GroupElement<i64> g;
                g.g3(i, j) = s;
                gens.push_back(g);
            }
        }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            GroupElement<i64> g;
            g.g3.setZero();
            for (int k = 0; k < 3; ++k) g.g3(k, k == i ? j : (k == j ? i : k)) = 1;
            gens.push_back(g);
        }
    for (int i = 0; i < 3; ++i) {
        GroupElement<i64> g;
        g.g3(i, i) = -1;
        gens.push_back(g);
    }
    for (int s : {1, -1}) {
        GroupElement<i64> g;
        g.g2(0, 1) = s;
        gens.push_back(g);
        GroupElement<i64> h;
        h.g2(1, 0) = s;
        gens.push_back(h);
    }
    GroupElement<i64> sw;
    sw.g2 << 0, 1, 1, 0;
    gens.push_back(sw);
    GroupElement<i64> neg;
    neg.g2(0, 0) = -1;
    gens.push_back(neg);
    return gens;
}

Coords act_on(const GroupElement<i64>& g, const Coords& x) {
    return transform(g, Pair64::from_coords(x)).coords();
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::string poly_pattern(const std::array<i64, 4>& g, i64 p) {
    std::vector<std::pair<int, int>> de;
    for (const auto& f : factor_quartic(g, p)) de.push_back({int(f.f.size()) - 1, f.e});
    return pattern_string(de, true);
}

bool dedekind_maximal(const std::array<i64, 4>& g, i64 p) {
    auto fac = factor_quartic(g, p);
    bool repeated = false;
    for (const auto& f : fac) repeated = repeated || f.e > 1;
    if (!repeated) return true;
    std::vector<i64> h = {1};
    for (const auto& f : fac)
        for (int k = 0; k < f.e; ++k) h = zmul(h, f.f);
    // F = (g - h)/p mod p
    std::vector<i64> G = {g[3], g[2], g[1], g[0], 1};
    FpPoly F(5, 0);
    for (int i = 0; i < 5; ++i) {
        const i64 diff = G[i] - (i < int(h.size()) ? h[i] : 0);
        if (mod(diff, p) != 0) throw ComputationError("dedekind: lift mismatch");
        F[i] = mod(diff / p, p);
    }
    for (const auto& f : fac)
        if (f.e > 1 && rem(F, f.f, p).empty()) return false;
    return true;
}

i128 poly_disc(const std::array<i64, 4>& g) {
    const i128 a = g[0], b = g[1], c = g[2], d = g[3];
    return 256 * d * d * d - 192 * a * c * d * d - 128 * b * b * d * d + 144 * b * c * c * d -
           27 * c * c * c * c + 144 * a * a * b * d * d - 6 * a * a * c * c * d -
           80 * a * b * b * c * d + 18 * a * b * c * c * c + 16 * b * b * b * b * d -
           4 * b * b * b * c * c - 27 * a * a * a * a * d * d + 18 * a * a * a * b * c * d -
           4 * a * a * a * c * c * c - 4 * a * a * b * b * b * d + a * a * b * b * c * c;
}

std::string unramified_pattern(const Coords& x, i64 p) {
    int n1 = 0;
    auto on = [&](i64 u, i64 v, i64 w) {
        return mod(qform(x.data(), u, v, w), p) == 0 && mod(qform(x.data() + 6, u, v, w), p) == 0;
    };
    for (i64 v = 0; v < p; ++v)
        for (i64 w = 0; w < p; ++w) n1 += on(1, v, w);
    for (i64 w = 0; w < p; ++w) n1 += on(0, 1, w);
    n1 += on(0, 0, 1);
    switch (n1) {
        case 4: return "1111";
        case 2: return "112";
        case 1: return "13";
        case 0: break;
        default: throw ComputationError("unexpected base locus at an unramified prime");
    }
    const auto f = resolvent_fast(x);
    int roots = mod(f.a, p) == 0 ? 1 : 0;
    for (i64 t = 0; t < p; ++t) {
        i64 v = mod(f.a, p);
        for (i64 c : {f.b, f.c, f.d}) v = mod(v * t + c, p);
        roots += v == 0;
    }
    if (roots == 3) return "22";
    if (roots == 1) return "4";
    throw ComputationError("unexpected resolvent at an unramified prime");
}

bool certify_field(const std::vector<std::string>& patterns) {
    bool inert = false, no_linear = false, has13 = false;
    for (const auto& s : patterns) {
        if (s == "4") inert = true;
        if (s == "22" || s == "4") no_linear = true;
        if (s == "13") has13 = true;
    }
    return inert || (no_linear && has13);
}

std::string Fingerprint::key() const {
    std::string s = std::to_string(disc);
    for (const auto& p : patterns) s += "|" + p;
    return s;
}

Fingerprint pair_fingerprint(const Coords& x) {
    Fingerprint fp;
    const i128 d = discriminant(x);
    if (d == 0) throw ComputationError("degenerate pair (zero discriminant)");
    fp.disc = i64(d);
    for (i64 p : kFingerprintPrimes)
        fp.patterns.push_back(d % p == 0 ? std::string() : unramified_pattern(x, p));
    fp.certified_field = certify_field(fp.patterns);
    return fp;
}

Fingerprint poly_fingerprint(const std::array<i64, 4>& g) {
    Fingerprint fp;
    const i128 d = poly_disc(g);
    if (d == 0) throw ComputationError("repeated root");
    fp.disc = i64(d);
    for (i64 p : kFingerprintPrimes) {
        std::string s;
        if (d % p != 0) {
            s = poly_pattern(g, p);
            s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        }
        fp.patterns.push_back(s);
    }
    fp.certified_field = certify_field(fp.patterns);
    return fp;
}

bool maximal_everywhere(const Coords& x) {
    const i128 d = discriminant(x);
    if (d == 0) throw ComputationError("degenerate pair (zero discriminant)");
    if (d > i128(1) << 62 || d < -(i128(1) << 62)) throw ComputationError("discriminant too large");
    for (i64 p : prime_factors(i64(d)))
        if (d % (p * p) == 0 && !maximality_mod_p2(reduce_mod_p2(x, p), p).maximal) return false;
    return true;
}

int stabilizer_size(const Coords& x) {
    static std::vector<Mat3<i64>> g3s;
    static std::vector<Mat2<i64>> g2s;
    if (g3s.empty()) {
        for (int n = 0; n < 19683; ++n) {
            Mat3<i64> m;
            int r = n;
            for (int i = 0; i < 9; ++i) {
                m(i / 3, i % 3) = r % 3 - 1;
                r /= 3;
            }
            const i64 d = det3(m);
            if (d == 1 || d == -1) g3s.push_back(m);
        }
        for (int n = 0; n < 81; ++n) {
            Mat2<i64> m;
            int r = n;
            for (int i = 0; i < 4; ++i) {
                m(i / 2, i % 2) = r % 3 - 1;
                r /= 3;
            }
            const i64 d = det2(m);
            if (d == 1 || d == -1) g2s.push_back(m);
        }
    }
    const Pair64 P = Pair64::from_coords(x);
    int count = 0;
    for (const auto& g3 : g3s) {
        const Mat3<i64> gt = g3.transpose();
        const Mat3<i64> A1 = mul(mul(g3, P.A), gt), B1 = mul(mul(g3, P.B), gt);
        for (const auto& g2 : g2s) {
            if (lincomb(g2(0, 0), A1, g2(0, 1), B1) == P.A &&
                lincomb(g2(1, 0), A1, g2(1, 1), B1) == P.B)
                ++count;
        }
    }
    return count / 2;
}

std::vector<std::pair<Coords, int>> collect_box(int bound, i64 max_disc) {
    std::vector<std::pair<Coords, int>> out;
    enumerate_box(bound, [&](const Coords& x, int mult) {
        const i128 d = discriminant(x);
        if (d != 0 && d <= max_disc && d >= -max_disc) out.push_back({x, mult});
    });
    return out;
}

// splitting fingerprint plus contents of the pair and of its resolvent, and the
// maximality witness counts at every p with p^2 | Delta; all are G(Z)-invariant
std::string orbit_key(const Coords& x) {
    const Fingerprint fp = pair_fingerprint(x);
    std::string key = fp.key();
    i64 c = 0;
    for (i64 v : x) c = std::gcd(c, v);
    const BinaryCubic<i64> f = resolvent_fast(x);
    const i64 cr = std::gcd(std::gcd(f.a, f.b), std::gcd(f.c, f.d));
    key += "#" + std::to_string(c) + "#" + std::to_string(cr);
    for (i64 p : prime_factors(fp.disc)) {
        if (p < 50) {
            // common zeros of A and B in P^2(F_p), and the residual root pattern of the resolvent
            int base = 0;
            for (i64 a = 0; a < p; ++a)
                for (i64 b = 0; b < p; ++b)
                    for (i64 c = 0; c < p; ++c) {
                        const i64 first = a != 0 ? a : (b != 0 ? b : c);
                        if (first != 1) continue;
                        if (mod(qform(x.data(), a, b, c), p) == 0 && mod(qform(x.data() + 6, a, b, c), p) == 0) ++base;
                    }
            key += "#" + std::to_string(p) + "b" + std::to_string(base) + "r";
            if (mod(f.a, p) == 0 && mod(f.b, p) == 0 && mod(f.c, p) == 0 && mod(f.d, p) == 0)
                key += "z";
            else
                for (int e : residual_root_pattern(Cubic{f.a, f.b, f.c, f.d}, p)) key += std::to_string(e);
        }
        if (fp.disc % (p * p) != 0) continue;
        if (p < 12) {
            // primitive common zeros mod p^2 and p^3
            for (i64 q : {p * p, p * p * p}) {
                i64 zeros = 0;
                for (i64 a = 0; a < q; ++a)
                    for (i64 b = 0; b < q; ++b)
                        for (i64 c = 0; c < q; ++c)
                            if ((a % p || b % p || c % p) && mod(qform(x.data(), a, b, c), q) == 0 &&
                                mod(qform(x.data() + 6, a, b, c), q) == 0)
                                ++zeros;
                key += "z" + std::to_string(zeros);
                if (p > 3) break;
            }
        }
        const ModP2Pair y = reduce_mod_p2(x, p);
        key += "#" + std::to_string(p) + ":" + (maximality_mod_p2(y, p).maximal ? "m" : "n") +
               std::to_string(m1_count_mod_p2(y, p));
    }
    return key;
}

std::vector<OrbitRecord> orbit_reduce(const std::vector<std::pair<Coords, int>>& pairs, int radius,
                                      int bound, OrbitStats* stats) {
    const auto gens = generators();
    std::unordered_map<Coords, int, CoordsHash> index;
    std::vector<Coords> pts;
    std::vector<i64> disc;
    for (const auto& [x, m] : pairs) {
        const Coords c = symmetry_canonical(x);
        if (index.count(c)) continue;
        const i128 d = discriminant(c);
        if (d == 0) throw ComputationError("orbit_reduce requires nonzero discriminants");
        index.emplace(c, int(pts.size()));
        pts.push_back(c);
        disc.push_back(i64(d));
    }
    std::vector<i64> mult(pts.size(), 0);
    for (const auto& [x, m] : pairs) mult[index.at(symmetry_canonical(x))] += m;

    auto in_box = [](const Coords& y, int b) {
        for (i64 v : y)
            if (v > b || v < -b) return false;
        return true;
    };

    UnionFind uf(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (const auto& g : gens) {
            const Coords y = act_on(g, pts[i]);
            if (!in_box(y, bound)) continue;
            auto it = index.find(symmetry_canonical(y));
            if (it != index.end()) uf.unite(int(i), it->second);
        }

    // greedy descent on the sum of squares; points of one orbit often share the local minimum
    auto height = [](const Coords& y) {
        i64 h = 0;
        for (i64 v : y) h += v * v;
        return h;
    };
    auto descend = [&](Coords y) {
        for (;;) {
            Coords best = y;
            i64 hb = height(y);
            for (const auto& g : gens) {
                const Coords z = symmetry_canonical(act_on(g, y));
                const i64 hz = height(z);
                if (hz < hb || (hz == hb && z < best)) {
                    best = z;
                    hb = hz;
                }
            }
            if (best == y) return y;
            y = best;
        }
    };
    std::map<Coords, int> minimum_owner;
    std::vector<Coords> point_min(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        point_min[i] = descend(pts[i]);
        auto [it, fresh] = minimum_owner.emplace(point_min[i], int(i));
        if (!fresh) uf.unite(int(i), it->second);
    }

    // components grouped by (Delta, fingerprint)
    std::map<int, std::vector<int>> comp_members;
    for (size_t i = 0; i < pts.size(); ++i) comp_members[uf.find(int(i))].push_back(int(i));
    std::map<std::string, std::vector<int>> groups;  // key -> component roots
    for (const auto& [root, mem] : comp_members) groups[orbit_key(pts[root])].push_back(root);

    // one multi-source search per split group, lowest height first; components
    // whose searches meet are joined
    const int padded = 3 * bound;
    const size_t node_cap = 3000000;
    std::set<std::string> unresolved_keys;
    using Node = std::tuple<i64, int, Coords>;  // height, depth, point
    for (auto& [key, roots] : groups) {
        if (roots.size() < 2) continue;
        std::unordered_map<Coords, int, CoordsHash> owner;
        std::priority_queue<Node, std::vector<Node>, std::greater<Node>> q;
        for (int r : roots)
            for (int i : comp_members[r]) {
                const Coords& m = point_min[size_t(i)];
                if (owner.emplace(m, r).second) q.push({height(m), 0, m});
            }
        auto joined = [&] {
            const int first = uf.find(roots[0]);
            for (int r : roots)
                if (uf.find(r) != first) return false;
            return true;
        };
        while (!q.empty() && owner.size() < node_cap) {
            auto [h, depth, y] = q.top();
            q.pop();
            if (depth >= radius) continue;
            const int from = owner.at(y);
            bool merged = false;
            for (const auto& g : gens) {
                const Coords z = symmetry_canonical(act_on(g, y));
                if (!in_box(z, padded)) continue;
                auto [it, fresh] = owner.emplace(z, from);
                if (fresh) {
                    q.push({height(z), depth + 1, z});
                } else if (uf.find(it->second) != uf.find(from)) {
                    uf.unite(it->second, from);
                    merged = true;
                }
            }
            if (merged && joined()) break;
        }
        if (!joined()) unresolved_keys.insert(key);
    }

    // final components
    std::map<int, std::vector<int>> final_members;
    for (size_t i = 0; i < pts.size(); ++i) final_members[uf.find(int(i))].push_back(int(i));
    std::vector<OrbitRecord> out;
    std::set<std::string> keys;
    for (const auto& [root, mem] : final_members) {
        OrbitRecord r;
        r.rep = pts[mem[0]];
        for (int i : mem) {
            r.rep = std::min(r.rep, pts[i]);
            r.box_points += mult[i];
        }
        r.disc = disc[root];
        const Fingerprint fp = pair_fingerprint(r.rep);
        r.fingerprint = fp.key();
        const std::string key = orbit_key(r.rep);
        keys.insert(key);
        r.field = fp.certified_field;
        r.unresolved = unresolved_keys.count(key) > 0;
        r.maximal = maximal_everywhere(r.rep);
        // ball counts only see small stabilizer elements, so take the best of the
        // representative and the lowest descent minima
        std::vector<Coords> probes;
        for (int i : mem) probes.push_back(point_min[size_t(i)]);
        std::sort(probes.begin(), probes.end(), [&](const Coords& a, const Coords& b) {
            return std::make_pair(height(a), a) < std::make_pair(height(b), b);
        });
        probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
        if (probes.size() > 4) probes.resize(4);
        r.stabilizer = stabilizer_size(r.rep);
        for (const Coords& y : probes) r.stabilizer = std::max(r.stabilizer, stabilizer_size(y));
        const Pair P = to_pair(r.rep);
        for (i64 p : {5, 7, 11}) {
            const PAdicContext ctx(p, 4);
            if (!is_maximal_at_p(P, ctx))
                r.splitting[p] = "nonmaximal";
            else
                r.splitting[p] = label(classify_splitting(P, ctx));
        }
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        const i64 da = a.disc < 0 ? -a.disc : a.disc, db = b.disc < 0 ? -b.disc : b.disc;
        if (da != db) return da < db;
        if (a.disc != b.disc) return a.disc < b.disc;
        return a.rep < b.rep;
    });
    if (stats) {
        stats->groups = i64(keys.size());
        stats->orbits = i64(out.size());
        stats->unresolved_groups = i64(unresolved_keys.size());
    }
    return out;
}

std::vector<OracleAlgebra> polynomial_oracle(i64 max_disc, int height) {
    std::map<std::string, OracleAlgebra> found;
    std::array<i64, 4> g;
    for (g[0] = -2; g[0] <= 2; ++g[0])
        for (g[1] = -height; g[1] <= height; ++g[1])
            for (g[2] = -height; g[2] <= height; ++g[2])
                for (g[3] = -height; g[3] <= height; ++g[3]) {
                    const i128 d = poly_disc(g);
                    if (d == 0 || d > max_disc || d < -max_disc) continue;
                    bool maximal = true;
                    for (i64 p : prime_factors(i64(d)))
                        if (d % (p * p) == 0 && !dedekind_maximal(g, p)) maximal = false;
                    if (!maximal) continue;
                    const Fingerprint fp = poly_fingerprint(g);
                    const std::string key = fp.key();
                    if (found.count(key)) continue;
                    found[key] = {fp.disc, g, key, fp.certified_field};
                }
    std::vector<OracleAlgebra> out;
    for (auto& [k, v] : found) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const OracleAlgebra& a, const OracleAlgebra& b) {
        const i64 da = a.disc < 0 ? -a.disc : a.disc, db = b.disc < 0 ? -b.disc : b.disc;
        if (da != db) return da < db;
        return a.fingerprint < b.fingerprint;
    });
    return out;
}

}  // namespace quartic
