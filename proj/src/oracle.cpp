#include <numeric>

#include "quartic/padic.hpp"

namespace quartic {

namespace {

using PolyI = std::vector<i64>;  // lowest degree first

PolyI pmul(const PolyI& a, const PolyI& b) {
    PolyI r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::array<i64, 4> monic_quartic(const PolyI& f) {
    if (f.size() != 5 || f[4] != 1) throw ComputationError("expected a monic quartic");
    return {f[3], f[2], f[1], f[0]};
}

bool has_root_mod_p(const PolyI& f, i64 p) {
    for (i64 x = 0; x < p; ++x) {
        i64 v = 0;
        for (size_t i = f.size(); i-- > 0;) v = mod(v * x + f[i], p);
        if (v == 0) return true;
    }
    return false;
}

// remainder of monic f modulo monic t^2 + u t + w over F_p is zero
bool divisible_by_quadratic(const PolyI& f, i64 u, i64 w, i64 p) {
    PolyI r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = mod(f[i], p);
    for (size_t d = r.size() - 1; d >= 2; --d) {
        i64 c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        r[d - 1] = mod(r[d - 1] - c * u, p);
        r[d - 2] = mod(r[d - 2] - c * w, p);
    }
    return r[0] == 0 && r[1] == 0;
}

PolyI irreducible_cubic(i64 p) {
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 1; c < p; ++c) {
                PolyI f = {c, b, a, 1};
                if (!has_root_mod_p(f, p)) return f;
            }
    throw ComputationError("no irreducible cubic");
}

PolyI irreducible_quartic(i64 p) {
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 0; c < p; ++c)
                for (i64 d = 1; d < p; ++d) {
                    PolyI f = {d, c, b, a, 1};
                    if (has_root_mod_p(f, p)) continue;
                    bool split = false;
                    for (i64 u = 0; u < p && !split; ++u)
                        for (i64 w = 0; w < p && !split; ++w)
                            split = divisible_by_quadratic(f, u, w, p);
                    if (!split) return f;
                }
    throw ComputationError("no irreducible quartic");
}

i64 primitive_root(i64 p) {
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 q = 2; q < p && ok; ++q)
            if ((p - 1) % q == 0 && is_prime(q) && powmod(g, (p - 1) / q, p) == 1) ok = false;
        if (ok) return g;
    }
    throw ComputationError("no primitive root");
}

}  // namespace

Pair pair_from_quartic(const std::array<i64, 4>& g) {
    // A = xz - y^2, B = x^2 + g0 xy + g1 y^2 + g2 yz + g3 z^2; the points (t^2 : t : 1)
    // on the conic A = 0 cut out t^4 + g0 t^3 + g1 t^2 + g2 t + g3
    std::array<Int, 12> c = {0, 0, 1, -1, 0, 0, 1, g[0], 0, g[1], g[2], g[3]};
    return Pair::from_coords(c);
}

std::vector<LocalAlgebra> local_algebras(SplittingType t, i64 p) {
    if (p <= 3 || !is_prime(p)) throw ComputationError("table operations require a prime p > 3");
    const i64 e = nonresidue(p);
    const PolyI T = {0, 1};
    auto lin = [](i64 r) { return PolyI{-r, 1}; };
    auto quad = [](i64 r, i64 c) { return PolyI{r * r - c, -2 * r, 1}; };  // (t - r)^2 - c
    const Rat P(p);
    std::vector<LocalAlgebra> out;
    auto add = [&](const PolyI& f, const Rat& w) { out.push_back({t, monic_quartic(f), w}); };
    switch (t) {
        case SplittingType::t1111:
            add(pmul(pmul(T, lin(1)), pmul(lin(2), lin(3))), Rat(1, 24));
            break;
        case SplittingType::t112:
            add(pmul(pmul(T, lin(1)), quad(0, e)), Rat(1, 4));
            break;
        case SplittingType::t22:
            add(pmul(quad(0, e), quad(1, e)), Rat(1, 8));
            break;
        case SplittingType::t4:
            add(irreducible_quartic(p), Rat(1, 4));
            break;
        case SplittingType::t13:
            add(pmul(T, irreducible_cubic(p)), Rat(1, 3));
            break;
        case SplittingType::t1sq11:
            for (i64 u : {i64(1), e}) add(pmul(quad(0, u * p), pmul(lin(1), lin(2))), 1 / (4 * P));
            break;
        case SplittingType::t1sq2:
            for (i64 u : {i64(1), e}) add(pmul(quad(0, u * p), quad(1, e)), 1 / (4 * P));
            break;
        case SplittingType::t1cu1: {
            i64 n = std::gcd(i64(3), p - 1), g = primitive_root(p);
            for (i64 i = 0; i < n; ++i)
                add(pmul(PolyI{-p * powmod(g, i, p), 0, 0, 1}, lin(1)), 1 / (P * P * n));
            break;
        }
        case SplittingType::t2sq_C2sq:
            // t^4 - 2(e+p) t^2 + (e-p)^2: roots +-sqrt(e) +- sqrt(p)
            add({(e - p) * (e - p), 0, -2 * (e + p), 0, 1}, 1 / (4 * P * P));
            break;
        case SplittingType::t2sq_C4: {
            i64 u = -1;
            for (i64 c = 0; c < p && u < 0; ++c)
                if (legendre(c * c - e, p) == -1) u = c;
            if (u < 0) throw ComputationError("no admissible unit for C4");
            // (t^2 + e - u p)^2 - e (2t + p)^2
            i64 a = e - u * p;
            add({a * a - e * p * p, -4 * e * p, 2 * a - 4 * e, 0, 1}, 1 / (4 * P * P));
            break;
        }
        case SplittingType::t1sq1sq_eq:
            for (i64 u : {i64(1), e}) add(pmul(quad(0, u * p), quad(1, u * p)), 1 / (8 * P * P));
            break;
        case SplittingType::t1sq1sq_neq:
            add(pmul(quad(0, p), quad(1, e * p)), 1 / (4 * P * P));
            break;
        case SplittingType::t1q4: {
            i64 n = std::gcd(i64(4), p - 1), g = primitive_root(p);
            for (i64 i = 0; i < n; ++i) add({-p * powmod(g, i, p), 0, 0, 0, 1}, 1 / (P * P * P * n));
            break;
        }
    }
    PAdicContext ctx(p);
    for (const auto& a : out) {
        Pair x = pair_from_quartic(a.g);
        if (val(disc_pair(x), p, 8) != disc_valuation(t))
            throw ComputationError("local algebra has the wrong discriminant valuation");
        if (classify_splitting(x, ctx) != t)
            throw ComputationError("local algebra classified as " + label(classify_splitting(x, ctx)));
    }
    return out;
}

namespace {

struct Accum {
    std::vector<Rat> plain, signed_;
    Rat tail = 0;
    Rat iso = 0, aniso = 0;
};

// integrate over primitive v in Z_p^2 using the classes of P^1(Z/p^{M+1});
// every class carries measure phi(N)/N^2
Accum integrate(SplittingType t, i64 p, int M, int iso_val) {
    const i64 N = ipow(p, M + 1);
    Accum acc;
    acc.plain.assign(M + 1, Rat(0));
    acc.signed_.assign(M + 1, Rat(0));
    const Rat cls = Rat(N - N / p) / Rat(N) / Rat(N);
    for (const LocalAlgebra& alg : local_algebras(t, p)) {
        Pair x = pair_from_quartic(alg.g);
        Mat3<i64> MA, MB;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                MA(i, j) = mod(x.A(i, j), N);
                MB(i, j) = mod(x.B(i, j), N);
            }
        // det(v1 MA + v2 MB)/2 as a binary cubic, for locating the multiple root mod p
        Pair neg{x.A, lincomb(Int(-1), x.B, Int(0), x.B)};
        Cubic R = resolvent(neg);
        auto multiple_root = [&](i64 v1, i64 v2) {
            Int a = R.a, b = R.b, c = R.c, d = R.d, X(v1), Y(v2);
            Int f = R(X, Y);
            Int fx = 3 * a * X * X + 2 * b * X * Y + c * Y * Y;
            Int fy = b * X * X + 2 * c * X * Y + 3 * d * Y * Y;
            return mod(f, p) == 0 && mod(fx, p) == 0 && mod(fy, p) == 0;
        };
        std::vector<std::pair<i64, i64>> reps;
        for (i64 s = 0; s < N; ++s) reps.push_back({1, s});
        for (i64 s = 0; s < N / p; ++s) reps.push_back({p * s, 1});
        const Rat w = alg.weight * cls;
        for (auto [v1, v2] : reps) {
            Mat3<i64> S;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) S(i, j) = mod(v1 * MA(i, j) + v2 * MB(i, j), N);
            i64 d = S(0, 0) * (S(1, 1) * S(2, 2) - S(1, 2) * S(2, 1)) -
                    S(0, 1) * (S(1, 0) * S(2, 2) - S(1, 2) * S(2, 0)) +
                    S(0, 2) * (S(1, 0) * S(2, 1) - S(1, 1) * S(2, 0));
            int v = val(d, p, M + 1);
            if (v > M) {
                acc.tail += w;
                continue;
            }
            int e = hasse_fast(S, p);
            acc.plain[v] += w;
            acc.signed_[v] += e * w;
            if (v == iso_val && multiple_root(v1, v2)) (e == 1 ? acc.iso : acc.aniso) += w;
        }
    }
    return acc;
}

}  // namespace

BruteIntegral brute_coefficients(SplittingType t, bool twisted, i64 p, int M) {
    if (M < 0 || ipow(p, M + 1) > 200000) throw ComputationError("truncation order out of range");
    Accum a = integrate(t, p, M, -1);
    return {twisted ? a.signed_ : a.plain, a.tail};
}

Interval brute_interval_at(const BruteIntegral& b, const Interval& t) {
    if (t.upper() > 1) throw ComputationError("divergent tail: s must be nonnegative");
    Interval sum(0.0), tk(1.0);
    for (const Rat& c : b.coeff) {
        sum += from_rat(c) * tk;
        tk *= t;
    }
    Interval bound = from_rat(b.tail_measure) * tk;
    return sum + Interval(-bound.upper(), bound.upper());
}

Interval brute_interval_decay(const BruteIntegral& b, const Interval& t, i64 p) {
    if (t.upper() >= double(p)) throw ComputationError("geometric tail needs t < p");
    Interval sum(0.0), tk(1.0);
    for (const Rat& c : b.coeff) {
        sum += from_rat(c) * tk;
        tk *= t;
    }
    // levels beyond the truncation shrink by 1/p each
    Interval bound = from_rat(b.tail_measure * (1 - Rat(1, p))) * tk / (1.0 - t / double(p));
    return sum + Interval(-bound.upper(), bound.upper());
}

Interval brute_local_integral(SplittingType t, bool twisted, double s, i64 p, int M) {
    if (s < 0) throw ComputationError("divergent tail: s must be nonnegative");
    return brute_interval_at(brute_coefficients(t, twisted, p, M), rpow_i(double(p), -s));
}

IsotropyCount isotropy_pair_weighted(SplittingType t, i64 p, int det_val) {
    Accum a = integrate(t, p, det_val, det_val);
    return {a.iso, a.aniso};
}

Complement complement_mod_p(std::vector<std::vector<i64>> rows, int n, i64 p) {
    Complement out;
    std::vector<bool> pivot(n, false);
    int r = 0;
    for (int c = 0; c < n && r < int(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (mod(rows[i][c], p) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        i64 inv = inverse_mod(mod(rows[r][c], p), p);
        for (auto& x : rows[r]) x = mod(x * inv, p);
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r || mod(rows[i][c], p) == 0) continue;
            i64 f = mod(rows[i][c], p);
            for (int j = 0; j < n; ++j) rows[i][j] = mod(rows[i][j] - f * rows[r][j], p);
        }
        pivot[c] = true;
        ++r;
    }
    out.rank = r;
    for (int c = 0; c < n; ++c)
        if (!pivot[c]) {
            std::vector<i64> e(n, 0);
            e[c] = 1;
            out.basis.push_back(e);
        }
    return out;
}

// ---- symmetric matrices ------------------------------------------------------------

namespace {

using Sym = std::array<i64, 6>;  // 00 01 02 11 12 22

Mat3<i64> sym_mat(const Sym& s) {
    Mat3<i64> m;
    m << s[0], s[1], s[2], s[1], s[3], s[4], s[2], s[4], s[5];
    return m;
}

Sym mat_sym(const Mat3<i64>& m) { return {m(0, 0), m(0, 1), m(0, 2), m(1, 1), m(1, 2), m(2, 2)}; }

i64 det_i64(const Mat3<i64>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// (rank, square class of a nonzero principal minor of maximal size) mod p
std::pair<int, int> sym_class(const Mat3<i64>& m, i64 p) {
    i64 d = mod(det_i64(m), p);
    if (d) return {3, legendre(d, p)};
    const int idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto& ij : idx) {
        i64 a = m(ij[0], ij[0]), b = m(ij[0], ij[1]), c = m(ij[1], ij[1]);
        i64 d2 = mod(a * c - b * b, p);
        if (d2) return {2, legendre(d2, p)};
    }
    // rank <= 1: a 2x2 minor vanishing everywhere means rank 1 or 0
    for (int i = 0; i < 3; ++i)
        if (mod(m(i, i), p)) return {1, legendre(m(i, i), p)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (mod(m(i, j), p)) throw ComputationError("inconsistent rank");
    return {0, 1};
}

Mat3<i64> class_rep(int rank, int chi, i64 p) {
    const i64 d = chi == 1 ? 1 : nonresidue(p);
    Mat3<i64> m = Mat3<i64>::Zero();
    for (int i = 0; i < rank; ++i) m(i, i) = 1;
    if (rank > 0) m(rank - 1, rank - 1) = d;
    return m;
}

}  // namespace

LocalFactor symmetric_local_zeta(bool twisted, const PAdicContext& ctx) {
    const i64 p = ctx.p;
    if (p == 2) throw ComputationError("unsupported prime");
    const Rat P(p);
    LocalFactor num = LocalFactor::constant((1 - 1 / P) * (1 - 1 / (P * P * P)));
    Poly d1, d2;
    if (!twisted) {
        d1 = {Rat(1), -1 / P};
        d2 = {Rat(1), Rat(0), -1 / (P * P * P)};
    } else {
        d1 = {Rat(1), -1 / (P * P)};
        d2 = {Rat(1), Rat(0), -1 / (P * P)};
    }
    return {num.num, poly_mul(d1, d2)};
}

SymmetricBrute symmetric_zeta_brute(bool twisted, i64 p, int k) {
    if (p == 2) throw ComputationError("unsupported prime");
    if (k < 1 || ipow(p, k) > 100000) throw ComputationError("precision out of range");
    SymmetricBrute out;
    out.coeff.assign(k, Rat(0));
    out.tail_measure = 0;

    // class sizes of symmetric matrices over F_p
    std::map<std::pair<int, int>, i64> sizes;
    Sym s{};
    for (s[0] = 0; s[0] < p; ++s[0])
        for (s[1] = 0; s[1] < p; ++s[1])
            for (s[2] = 0; s[2] < p; ++s[2])
                for (s[3] = 0; s[3] < p; ++s[3])
                    for (s[4] = 0; s[4] < p; ++s[4])
                        for (s[5] = 0; s[5] < p; ++s[5]) ++sizes[sym_class(sym_mat(s), p)];

    const Rat total = rpow(Rat(p), 6 * k);
    for (auto [cls, size] : sizes) {
        if (cls.first == 0) {
            // x = p y: v(det x) = 3 + v(det y), eps(x) = eps(y)
            Rat w = Rat(size) / rpow(Rat(p), 6);
            if (k > 3) {
                SymmetricBrute inner = symmetric_zeta_brute(twisted, p, k - 3);
                for (int m = 0; m < k - 3; ++m) out.coeff[m + 3] += w * inner.coeff[m];
                out.tail_measure += w * inner.tail_measure;
            } else {
                out.tail_measure += w;
            }
            continue;
        }
        Mat3<i64> A0 = class_rep(cls.first, cls.second, p);
        std::vector<std::vector<i64>> img;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Mat3<i64> Y = Mat3<i64>::Zero();
                Y(a, b) = 1;
                Mat3<i64> T = Y * A0 + A0 * Y.transpose();
                Sym t = mat_sym(T);
                img.push_back(std::vector<i64>(t.begin(), t.end()));
            }
        Complement comp = complement_mod_p(img, 6, p);
        const int c = int(comp.basis.size());
        const int levels = k - 1;
        // enumerate x_1..x_{k-1} in the complement
        const i64 per = ipow(p, c * levels);
        const Rat w = Rat(size) * rpow(Rat(p), comp.rank * levels) / total;
        std::vector<i64> digits(c * levels, 0);
        for (i64 n = 0; n < per; ++n) {
            i64 r = n;
            for (auto& d : digits) {
                d = r % p;
                r /= p;
            }
            Mat3<i64> x = A0;
            i64 pj = 1;
            for (int j = 0; j < levels; ++j) {
                pj *= p;
                for (int b = 0; b < c; ++b) {
                    Sym e{};
                    for (int q = 0; q < 6; ++q) e[q] = comp.basis[b][q];
                    x += pj * digits[j * c + b] * sym_mat(e);
                }
            }
            int v = val(det_i64(x), p, k);
            if (v >= k) {
                out.tail_measure += w;
                continue;
            }
            out.coeff[v] += twisted ? Rat(hasse_fast(x, p)) * w : w;
        }
    }
    return out;
}

IsotropyCount isotropy_forms_only(i64 p) {
    if (p == 2) throw ComputationError("unsupported prime");
    // A = A0 + p X1 + p^2 X2 mod p^3 with A0 = diag(u,0,0); X1 runs over all symmetric
    // matrices mod p, X2 over a complement of the tangent image at A0
    IsotropyCount out{0, 0};
    const i64 p3 = p * p * p;
    for (i64 u : {i64(1), nonresidue(p)}) {
        Mat3<i64> A0 = Mat3<i64>::Zero();
        A0(0, 0) = u;
        std::vector<std::vector<i64>> img;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Mat3<i64> Y = Mat3<i64>::Zero();
                Y(a, b) = 1;
                Sym t = mat_sym(Y * A0 + A0 * Y.transpose());
                img.push_back(std::vector<i64>(t.begin(), t.end()));
            }
        Complement comp = complement_mod_p(img, 6, p);
        const int c = int(comp.basis.size());
        const i64 mult = ipow(p, comp.rank) * ((p * p + p + 1) * (p - 1) / 2);
        Sym x1{};
        for (i64 n1 = 0; n1 < ipow(p, 6); ++n1) {
            i64 r = n1;
            for (auto& d : x1) {
                d = r % p;
                r /= p;
            }
            for (i64 n2 = 0; n2 < ipow(p, c); ++n2) {
                Mat3<i64> x = A0 + p * sym_mat(x1);
                i64 r2 = n2;
                for (int b = 0; b < c; ++b) {
                    Sym e{};
                    for (int q = 0; q < 6; ++q) e[q] = comp.basis[b][q] * (r2 % p);
                    r2 /= p;
                    x += p * p * sym_mat(e);
                }
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) x(i, j) = mod(x(i, j), p3);
                if (val(det_i64(x), p, 3) != 2) continue;
                (hasse_fast(x, p) == 1 ? out.isotropic : out.anisotropic) += Rat(mult);
            }
        }
    }
    return out;
}

}  // namespace quartic
