#include "quartic/padic.hpp"

namespace quartic {

namespace {

void require_table_prime(i64 p) {
    if (p <= 3 || !is_prime(p)) throw ComputationError("table operations require a prime p > 3");
}

using LF = LocalFactor;

LF c(const Rat& x) { return LF::constant(x); }

// x * t^k
LF mono(const Rat& x, int k) {
    Poly a(k + 1, Rat(0));
    a[k] = x;
    return LF::poly(a);
}

}  // namespace

Rat d_closed_form(ResolventRow r, int m, i64 p) {
    require_table_prime(p);
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    const Rat P(p), q1 = P - 1;
    const Rat base = q1 * q1 * rpow(P, -m - 2);  // (p-1)^2 p^{-m-2}
    switch (r) {
        case ResolventRow::r111: return m == 0 ? (P - 2) * q1 / (P * P) : 3 * base;
        case ResolventRow::r12: return m == 0 ? q1 / P : base;
        case ResolventRow::r3: return m == 0 ? (P * P - 1) / (P * P) : Rat(0);
        case ResolventRow::r1sq1:
            if (m == 0) return q1 * q1 / (P * P);
            return base + (m == 1 ? q1 / (P * P) : Rat(0));
        case ResolventRow::r1cu:
            if (m == 0) return q1 / P;
            return m == 1 ? q1 / (P * P) : Rat(0);
        case ResolventRow::rC2sq:
            if (m == 0) return q1 * q1 / (P * P);
            return base + (m == 2 ? q1 * (P - 2) / (P * P * P) : Rat(0)) +
                   (m >= 3 ? 2 * q1 * q1 * rpow(P, -m - 1) : Rat(0));
        case ResolventRow::rC4:
            if (m == 0) return q1 * q1 / (P * P);
            return base + (m == 2 ? q1 / (P * P) : Rat(0));
        case ResolventRow::r1q4:
            if (m == 0) return q1 / P;
            return m >= 2 ? q1 * q1 * rpow(P, -m - 1) : Rat(0);
    }
    return 0;
}

Rat d_printed(ResolventRow r, int m, i64 p) {
    if (r == ResolventRow::r1q4 && m >= 2) {
        const Rat P(p);
        return (P - 1) * (P - 1) * rpow(P, -m - 2);
    }
    return d_closed_form(r, m, p);
}

Rat d_table(ResolventRow r, int m, const PAdicContext& ctx) {
    const i64 p = ctx.p;
    require_table_prime(p);
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (ctx.precision_k < m + 1)
        throw ComputationError("d_table needs precision_k >= " + std::to_string(m + 1));
    const i64 N = ipow(p, m + 1);
    if (N > 100000) throw ComputationError("d_table: modulus too large for exhaustive counting");
    Cubic f = row_form(r, p);
    const i64 fa = mod(f.a, N), fb = mod(f.b, N), fc = mod(f.c, N), fd = mod(f.d, N);
    const i64 pm = ipow(p, m);
    i64 count = 0;
    for (i64 a = 0; a < N; ++a) {
        const i64 a2 = a * a % N, a3 = a2 * a % N;
        for (i64 b = 0; b < N; ++b) {
            if (a % p == 0 && b % p == 0) continue;
            const i64 b2 = b * b % N;
            i64 v = (fa * a3 + fb * (a2 * b % N) + fc * (a * b2 % N) + fd * (b2 * b % N)) % N;
            // exactly p^m divides f(a,b)
            if (v % pm == 0 && (v / pm) % p != 0) ++count;
        }
    }
    return Rat(count) / Rat(N * N);
}

LocalFactor bare_integral(SplittingType t, bool twisted, i64 p) {
    require_table_prime(p);
    return bare_integral_formal(t, twisted, p);
}

LocalFactor bare_integral_formal(SplittingType t, bool twisted, i64 p) {
    const Rat P(p), q1 = P - 1, q1sq = q1 * q1;
    const LF geo_plus = LF::geometric(q1sq / (P * P * P), 1, p, +1);   // (p-1)^2/p^2 X/(1-X)
    const LF geo_minus = LF::geometric(q1sq / (P * P * P), 1, p, -1);  // (p-1)^2/p^2 X/(1+X)
    switch (t) {
        case SplittingType::t1111:
            return c((P - 2) * q1 / (P * P)) + geo_plus * Rat(3);
        case SplittingType::t22:
            if (!twisted) return c((P - 2) * q1 / (P * P)) + geo_plus * Rat(3);
            return c((P - 2) * q1 / (P * P)) + geo_plus - geo_minus * Rat(2);
        case SplittingType::t112:
            return c(q1 / P) + geo_plus;
        case SplittingType::t4:
            if (!twisted) return c(q1 / P) + geo_plus;
            return c(q1 / P) - geo_minus;
        case SplittingType::t13:
            return c((P * P - 1) / (P * P));
        case SplittingType::t1sq11:
            return c(q1sq / (P * P)) + geo_plus + mono(q1 / (P * P), 1);
        case SplittingType::t1sq2:
            return c(q1sq / (P * P)) + geo_plus + mono((twisted ? -1 : 1) * q1 / (P * P), 1);
        case SplittingType::t1cu1:
            return c(q1 / P) + mono(q1 / (P * P), 1);
        case SplittingType::t2sq_C2sq:
        case SplittingType::t2sq_C4:
            if (twisted)
                return c(q1sq / (P * P)) - geo_minus + mono(q1 / (P * P * P), 2);
            [[fallthrough]];
        case SplittingType::t1sq1sq_eq:
        case SplittingType::t1sq1sq_neq:
            if (twisted) return c(q1sq / (P * P)) + geo_plus - mono(q1 / (P * P * P), 2);
            if (resolvent_row(t) == ResolventRow::rC2sq)
                return c(q1sq / (P * P)) + geo_plus + mono(q1 * (P - 2) / (P * P * P), 2) +
                       LF::geometric(2 * q1sq / (P * P * P * P), 3, p, +1);
            return c(q1sq / (P * P)) + geo_plus + mono(q1 / (P * P), 2);
        case SplittingType::t1q4:
            if (twisted) return c(q1 / P);
            return c(q1 / P) + LF::geometric(q1sq / (P * P * P), 2, p, +1);
    }
    return c(0);
}

LocalFactor local_integral(SplittingType t, bool twisted, const PAdicContext& ctx) {
    return bare_integral(t, twisted, ctx.p) * mass(t, ctx.p);
}

LocalFactor printed_table_cell(SplittingType t, bool twisted, i64 p) {
    require_table_prime(p);
    const Rat P(p), q1 = P - 1, q1sq = q1 * q1;
    const LF geo_plus = LF::geometric(q1sq / (P * P * P), 1, p, +1);
    switch (t) {
        case SplittingType::t2sq_C2sq:
        case SplittingType::t2sq_C4:
        case SplittingType::t1sq1sq_eq:
        case SplittingType::t1sq1sq_neq: {
            const bool two_sq = t == SplittingType::t2sq_C2sq || t == SplittingType::t2sq_C4;
            LF head = c(q1sq / (P * P)) + geo_plus;
            LF cell;
            if (!twisted)
                cell = head + mono(q1sq / (P * P * P), 2) +
                       LF::geometric(q1sq / (P * P * P * P), 3, p, +1);
            else if (two_sq)
                cell = head + mono(q1sq / (P * P * P * P), 2);
            else
                cell = head - mono(q1 / (P * P * P), 2);
            return cell * (1 / (4 * P * P));
        }
        case SplittingType::t1q4:
            if (twisted) return c(q1 / (P * P * P * P));
            // (p-1)^2/p^2 * p^{-2-2s}/(1-p^{-1-s})
            return (c(q1 / P) + LF::geometric(q1sq / (P * P * P * P), 2, p, +1)) * (1 / (P * P * P));
        default:
            return local_integral(t, twisted, PAdicContext(p));
    }
}

}  // namespace quartic
