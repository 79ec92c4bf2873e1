#include <doctest.h>
#include <unsupported/Eigen/Polynomials>

#include <complex>
#include <random>

#include "quartic/forms.hpp"
#include "quartic/padic.hpp"

using namespace quartic;

namespace {

// random element of SL2(Z) x GL3(Z) built from elementary moves
GroupElement<Int> random_group_element(std::mt19937_64& rng) {
    GroupElement<Int> g;
    std::uniform_int_distribution<int> pick(0, 2), k(-2, 2);
    for (int step = 0; step < 6; ++step) {
        Mat2<Int> e2 = Mat2<Int>::Identity();
        e2(step % 2, 1 - step % 2) = k(rng);
        Mat3<Int> e3 = Mat3<Int>::Identity();
        int i = pick(rng), j = pick(rng);
        if (i == j) j = (i + 1) % 3;
        e3(i, j) = k(rng);
        if (step == 3) e3(0, 0) = -1;
        g = compose(g, GroupElement<Int>{e2, e3});
    }
    return g;
}

Pair random_pair(std::mt19937_64& rng, int b) {
    std::uniform_int_distribution<int> d(-b, b);
    std::array<Int, 12> c;
    for (auto& v : c) v = d(rng);
    return Pair::from_coords(c);
}

}  // namespace

TEST_CASE("resolvent of a diagonal pair") {
    // A = x^2 - z^2, B = y^2 - z^2: 4 det(Ax - By) = 4 x (-y) (-(x - y)) = 4xy(x - y)
    std::array<Int, 12> c{1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, -1};
    const Cubic f = resolvent(Pair::from_coords(c));
    const bool expected = f == Cubic{0, 4, -4, 0};
    CHECK(expected);
}

TEST_CASE("fast resolvent agrees with the exact one") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Pair x = random_pair(rng, 3);
        Coords c;
        auto cc = x.coords();
        for (int j = 0; j < 12; ++j) c[size_t(j)] = cc[size_t(j)].convert_to<i64>();
        const auto f = resolvent_fast(c);
        const Cubic g = resolvent(x);
        CHECK(Int(f.a) == g.a);
        CHECK(Int(f.d) == g.d);
        CHECK(to_int(disc_fast(f)) == disc(g));
    }
}

TEST_CASE("discriminant is invariant and the resolvent is equivariant") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Pair x = random_pair(rng, 2);
        const GroupElement<Int> g = random_group_element(rng);
        const Pair y = act(g, x);
        CHECK(disc_pair(y) == disc_pair(x));
        // 4 det(A'x - B'y) = 4 det(Ax' - By') with x' = g00 x - g10 y, y' = -g01 x + g11 y
        const Cubic lhs = resolvent(y);
        Mat2<Int> m;
        m << g.g2(0, 0), -g.g2(0, 1), -g.g2(1, 0), g.g2(1, 1);
        const bool same = lhs == substitute(resolvent(x), m);
        CHECK(same);
    }
}

TEST_CASE("dual pairing is preserved by the contragredient action") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        const Pair x = random_pair(rng, 3), y = random_pair(rng, 3);
        const GroupElement<Int> g = random_group_element(rng);
        // inverse transpose via the adjugate (determinants are +-1)
        GroupElement<Int> ginvT;
        const Int d2 = det2(g.g2), d3 = det3(g.g3);
        ginvT.g2 << g.g2(1, 1) * d2, -g.g2(1, 0) * d2, -g.g2(0, 1) * d2, g.g2(0, 0) * d2;
        const Mat3<Int> adj = adjugate(g.g3);
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) ginvT.g3(r, s) = adj(s, r) * d3;
        CHECK(dual_pairing(act(g, x), act_dual(ginvT, y)) == dual_pairing(x, y));
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(3);
    const Pair x = random_pair(rng, 9);
    const bool round_trip = serialize(parse_pair(serialize(x))) == serialize(x);
    CHECK(round_trip);
    CHECK_THROWS(parse_pair("1,2,3"));
}

TEST_CASE("pair of a monic quartic has the polynomial discriminant") {
    // independent check: product of squared root differences
    const std::vector<std::array<i64, 4>> polys = {{-1, -1, 1, 1}, {0, 0, 0, -2}, {0, -1, 0, 1}, {1, 0, 3, 1}, {0, 0, 1, 1}};
    for (const auto& g : polys) {
        Eigen::Matrix<double, 5, 1> c;
        c << double(g[3]), double(g[2]), double(g[1]), double(g[0]), 1.0;
        Eigen::PolynomialSolver<double, 4> solver(c);
        std::complex<double> d = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) d *= std::pow(solver.roots()[i] - solver.roots()[j], 2);
        CHECK(disc_pair(pair_from_quartic(g)) == Int(std::llround(d.real())));
    }
}
