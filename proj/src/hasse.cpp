#include <array>

#include "quartic/padic.hpp"

namespace quartic {

PAdicContext::PAdicContext(i64 prime, int k) : p(prime), precision_k(k) {
    if (!is_prime(prime)) throw std::invalid_argument("p must be prime");
    if (k < 1) throw std::invalid_argument("precision must be positive");
}

namespace {

struct Split {
    int v;
    int leg;  // Legendre symbol of the unit part
};

Split split_rat(const Rat& x, i64 p) {
    Int n = numerator(x), d = denominator(x);
    int v = 0;
    while (n % p == 0) n /= p, ++v;
    while (d % p == 0) d /= p, --v;
    return {v, legendre(mod(n, p), p) * legendre(mod(d, p), p)};
}

Split split_i128(i128 x, i64 p) {
    int v = 0;
    while (x % p == 0) x /= p, ++v;
    i64 r = i64(x % p);
    return {v, legendre(r, p)};
}

int hilbert_from(Split a, Split b, i64 p) {
    int s = 1;
    if ((a.v & 1) && (b.v & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (b.v & 1) s *= a.leg;
    if (a.v & 1) s *= b.leg;
    return s;
}

void require_odd(i64 p) {
    if (p == 2) throw ComputationError("unsupported prime");
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, i64 p) {
    require_odd(p);
    if (a == 0 || b == 0) throw ComputationError("Hilbert symbol of zero");
    return hilbert_from(split_rat(a, p), split_rat(b, p), p);
}

int hilbert_symbol(i128 a, i128 b, i64 p) {
    require_odd(p);
    if (a == 0 || b == 0) throw ComputationError("Hilbert symbol of zero");
    return hilbert_from(split_i128(a, p), split_i128(b, p), p);
}

int hasse_invariant(const Mat3<Rat>& gram, const PAdicContext& ctx) {
    require_odd(ctx.p);
    if (det3(gram) == 0) throw ComputationError("degenerate form");
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = gram(i, j);
    std::vector<Rat> d;
    while (!m.empty()) {
        int n = int(m.size());
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (m[i][i] != 0) piv = i;
        if (piv < 0) {
            // all diagonal entries vanish: e_i -> e_i + e_j makes q(e_i) = 2 m_ij
            for (int i = 0; i < n && piv < 0; ++i)
                for (int j = 0; j < n && piv < 0; ++j)
                    if (i != j && m[i][j] != 0) {
                        for (int c = 0; c < n; ++c) m[i][c] += m[j][c];
                        for (int r = 0; r < n; ++r) m[r][i] += m[r][j];
                        piv = i;
                    }
            if (piv < 0) throw ComputationError("degenerate form");
        }
        std::swap(m[0], m[piv]);
        for (auto& row : m) std::swap(row[0], row[piv]);
        Rat a = m[0][0];
        d.push_back(a);
        std::vector<std::vector<Rat>> s(n - 1, std::vector<Rat>(n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) s[i - 1][j - 1] = m[i][j] - m[i][0] * m[0][j] / a;
        m = std::move(s);
    }
    int e = 1;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i; j < d.size(); ++j) e *= hilbert_symbol(d[i], d[j], ctx.p);
    return e;
}

int hasse_invariant(const Mat3<Int>& gram, const PAdicContext& ctx) {
    Mat3<Rat> g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = Rat(gram(i, j));
    return hasse_invariant(g, ctx);
}

bool is_isotropic(const Mat3<Rat>& gram, const PAdicContext& ctx) {
    return hasse_invariant(gram, ctx) == 1;
}

namespace {

// unimodular changes of basis tried until the leading minors are nonzero
std::vector<std::array<i64, 3>> basis_shifts() {
    std::vector<std::array<i64, 3>> out;
    for (i64 a = 0; a < 4; ++a)
        for (i64 b = 0; b < 4; ++b)
            for (i64 c = 0; c < 4; ++c) out.push_back({a, b, c});
    return out;
}

const std::vector<std::array<i64, 3>>& shifts() {
    static const auto s = basis_shifts();
    return s;
}

}  // namespace

int hasse_fast(const Mat3<i64>& m, i64 p) {
    i128 a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = m(i, j);
    i128 D3 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
              a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (D3 == 0) return 0;
    for (const auto& s : shifts()) {
        // rows of U: (1, s0, s1), (0, 1, s2), (0, 0, 1)
        const i128 u[3][3] = {{1, s[0], s[1]}, {0, 1, s[2]}, {0, 0, 1}};
        i128 t[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                i128 acc = 0;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) acc += u[i][k] * a[k][l] * u[j][l];
                t[i][j] = acc;
            }
        i128 D1 = t[0][0];
        i128 D2 = t[0][0] * t[1][1] - t[0][1] * t[1][0];
        if (D1 == 0 || D2 == 0) continue;
        // diagonal entries D1, D2/D1, D3/D2 up to squares
        const i128 d[3] = {D1, D1 * D2, D2 * D3};
        int e = 1;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) e *= hilbert_symbol(d[i], d[j], p);
        return e;
    }
    throw ComputationError("hasse_fast: no admissible basis");
}

}  // namespace quartic
