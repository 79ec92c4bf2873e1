#include <doctest.h>

#include <random>

#include "quartic/enumeration.hpp"
#include "quartic/padic.hpp"

using namespace quartic;

TEST_CASE("Hilbert symbol identities") {
    for (i64 p : {3, 5, 7, 11}) {
        for (i128 a : {1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 35}) {
            CHECK(hilbert_symbol(a, -a, p) == 1);
            if (a != 1) CHECK(hilbert_symbol(a, 1 - a, p) == 1);
            CHECK(hilbert_symbol(a, i128(1), p) == 1);
            for (i128 b : {2, 3, 5, 7, 11, 13})
                CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
        }
        for (i64 u = 1; u < p; ++u) CHECK(hilbert_symbol(i128(p), i128(u), p) == legendre(u, p));
    }
}

TEST_CASE("x^2 + y^2 - p z^2 is isotropic exactly when -1 is a square") {
    for (i64 p : {3, 5, 7, 13}) {
        Mat3<Rat> q = Mat3<Rat>::Zero();
        q(0, 0) = 1;
        q(1, 1) = 1;
        q(2, 2) = Rat(-p);
        CHECK(is_isotropic(q, PAdicContext(p)) == (legendre(-1, p) == 1));
    }
}

TEST_CASE("D table counts match the closed forms") {
    for (i64 p : {5, 7})
        for (ResolventRow r : {ResolventRow::r111, ResolventRow::r12, ResolventRow::r3, ResolventRow::r1sq1,
                               ResolventRow::r1cu, ResolventRow::rC2sq, ResolventRow::rC4, ResolventRow::r1q4})
            for (int m = 0; m <= 3; ++m) CHECK(d_table(r, m, PAdicContext(p, 5)) == d_closed_form(r, m, p));
}

TEST_CASE("masses") {
    for (i64 p : {5, 7, 11}) {
        Rat all = 0, unram = 0;
        for (SplittingType t : kAllTypes) {
            all += mass(t, p);
            if (disc_valuation(t) == 0) unram += mass(t, p);
        }
        CHECK(unram == 1);
        const Rat q = Rat(1, p);
        CHECK(all == 1 + q + 2 * q * q + q * q * q);
        CHECK(total_maximal_mass(p) == all);
    }
}

TEST_CASE("local algebras classify to their own type and are maximal") {
    for (i64 p : {5, 7})
        for (SplittingType t : kAllTypes)
            for (const LocalAlgebra& a : local_algebras(t, p)) {
                const Pair x = pair_from_quartic(a.g);
                const PAdicContext ctx(p, 6);
                CHECK(is_maximal_at_p(x, ctx));
                CHECK(classify_splitting(x, ctx) == t);
            }
}

TEST_CASE("pair maximality agrees with Dedekind's criterion") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> c(-30, 30);
    int nonmax = 0;
    for (int i = 0; i < 400; ++i) {
        std::array<i64, 4> g{c(rng), c(rng), c(rng), c(rng)};
        if (poly_disc(g) == 0) continue;
        for (i64 p : {5, 7}) {
            const bool ded = dedekind_maximal(g, p);
            nonmax += !ded;
            CHECK(is_maximal_at_p(pair_from_quartic(g), PAdicContext(p, 6)) == ded);
        }
    }
    CHECK(nonmax > 0);
}

TEST_CASE("unramified local integrals equal brute force") {
    for (SplittingType t : {SplittingType::t1111, SplittingType::t112, SplittingType::t22, SplittingType::t4,
                            SplittingType::t13})
        for (bool tw : {false, true}) {
            const BruteIntegral b = brute_coefficients(t, tw, 5, 3);
            const auto s = local_integral(t, tw, PAdicContext(5, 4)).series(4);
            for (int m = 0; m < 4; ++m) CHECK(s[size_t(m)] == b.coeff[size_t(m)]);
        }
}

TEST_CASE("LocalFactor algebra") {
    // 1/(1 - t/5) = sum (t/5)^m
    const LocalFactor g = LocalFactor::geometric(Rat(1), 0, 5, 1);
    const auto s = g.series(4);
    CHECK(s[3] == Rat(1, 125));
    CHECK(g.eval(Rat(1)) == Rat(5, 4));
    const LocalFactor h = g * g - g;
    CHECK(h.eval(Rat(1)) == Rat(25, 16) - Rat(5, 4));
    CHECK((g + g) == g * Rat(2));
}

TEST_CASE("symmetric matrix zeta against brute force at p = 3") {
    for (bool tw : {false, true}) {
        const SymmetricBrute b = symmetric_zeta_brute(tw, 3, 3);
        const auto s = symmetric_local_zeta(tw, PAdicContext(3)).series(3);
        for (int m = 0; m < 3; ++m) CHECK(s[size_t(m)] == b.coeff[size_t(m)]);
    }
}

TEST_CASE("residual root patterns") {
    // x(x - y)(x + y) mod 5
    CHECK(residual_root_pattern(Cubic{1, 0, -1, 0}, 5) == std::vector<int>{1, 1, 1});
    // x^3 - 2 y^3 mod 7: 2 is not a cube mod 7
    CHECK(residual_root_pattern(Cubic{1, 0, 0, -2}, 7).empty());
    // x^2 y mod 5
    auto r = residual_root_pattern(Cubic{0, 1, 0, 0}, 5);
    std::sort(r.begin(), r.end());
    CHECK(r == std::vector<int>{1, 2});
}
