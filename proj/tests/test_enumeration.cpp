#include <doctest.h>
#include <unsupported/Eigen/Polynomials>

#include <set>

#include "quartic/empirical.hpp"
#include "quartic/enumeration.hpp"

using namespace quartic;

namespace {

Coords coords_of_quartic(const std::array<i64, 4>& g) {
    const auto c = pair_from_quartic(g).coords();
    Coords x;
    for (int i = 0; i < 12; ++i) x[size_t(i)] = c[size_t(i)].convert_to<i64>();
    return x;
}

int complex_pairs(const std::array<i64, 4>& g) {
    Eigen::Matrix<double, 5, 1> c;
    c << double(g[3]), double(g[2]), double(g[1]), double(g[0]), 1.0;
    Eigen::PolynomialSolver<double, 4> solver(c);
    int nonreal = 0;
    for (int i = 0; i < 4; ++i) nonreal += std::abs(solver.roots()[i].imag()) > 1e-7;
    return nonreal / 2;
}

}  // namespace

TEST_CASE("box enumeration covers the box once up to symmetry") {
    i64 total = 0, calls = 0;
    enumerate_box(1, [&](const Coords& x, int mult) {
        ++calls;
        total += mult;
        CHECK(symmetry_canonical(x) == x);
    });
    CHECK(total == 531441);  // 3^12
    i64 sharded = 0;
    for (int s = 0; s < 3; ++s) enumerate_box(1, [&](const Coords&, int mult) { sharded += mult; }, s, 3);
    CHECK(sharded == total);
}

TEST_CASE("splitting patterns of small polynomials") {
    CHECK(poly_pattern({0, 0, 0, -1}, 5) == "1 1 1 1");  // t^4 - 1 splits mod 5
    CHECK(poly_pattern({0, 0, 0, -2}, 5) == "4");
    CHECK(poly_pattern({0, -2, 0, 1}, 5) == "1^2 1^2");  // (t^2 - 1)^2
    // the pair pattern matches the polynomial one away from the discriminant
    const std::array<i64, 4> g{-1, -1, 1, 1};  // disc 117
    CHECK(unramified_pattern(coords_of_quartic(g), 5) == "4");
    CHECK(poly_fingerprint(g).disc == 117);
    CHECK(pair_fingerprint(coords_of_quartic(g)).key() == poly_fingerprint(g).key());
}

TEST_CASE("real signature matches the root count") {
    const std::vector<std::array<i64, 4>> polys = {
        {-1, -1, 1, 1}, {-1, 0, 0, 1}, {-1, -3, 1, 1}, {0, -4, -1, 1}, {0, 0, 0, -2}, {1, 2, 3, 5}, {0, -5, 0, 5}};
    for (const auto& g : polys) {
        if (poly_disc(g) == 0) continue;
        CHECK(real_signature(coords_of_quartic(g)) == complex_pairs(g));
    }
}

TEST_CASE("smallest quartic fields appear in the oracle and in the box") {
    const auto oracle = polynomial_oracle(800, 8);
    std::set<i64> discs;
    for (const auto& a : oracle)
        if (a.field) discs.insert(a.disc);
    CHECK(discs.count(117));
    CHECK(discs.count(-275));
    CHECK(discs.count(725));
    CHECK(!discs.count(100));

    LocalSpecification all;
    all.infinity = {0, 1, 2};
    EmpiricalOptions o;
    o.bound = 1;
    const SmoothWeight w = SmoothWeight::plateau(0.05, 1.0, 0.1, 0.95);
    const EmpiricalResult r = empirical_count(all, w, 300, o);
    std::set<i64> found;
    for (const auto& e : r.orbits) found.insert(e.record.disc);
    CHECK(found.count(117));
    CHECK(found.count(-275));
    CHECK(r.unresolved == 0);
    // bound 1 does not reach |Delta| = 1000
    CHECK_THROWS_AS(empirical_count(all, w, 1000, o), ComputationError);
}

TEST_CASE("box maximality statistics at bound 1") {
    const BoxMaximality b = box_maximality(1, 5);
    CHECK(b.pairs == 531441);
    CHECK(b.m1_positive_but_maximal == 0);
    CHECK(b.m1_multiple_without_p4 == 0);
    CHECK(b.nonmaximal >= b.m1_positive);
}

TEST_CASE("stabilizer of the cyclotomic quintic field") {
    // t^4 + t^3 + t^2 + t + 1 has Galois group C4: Aut has order 4
    CHECK(stabilizer_size(coords_of_quartic({1, 1, 1, 1})) == 4);
}
