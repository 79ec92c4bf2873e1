#include <doctest.h>

#include <cmath>

#include "quartic/constants.hpp"

using namespace quartic;
using nlohmann::json;

namespace {

std::string spec_error(const json& j) {
    try {
        LocalSpecification::from_json(j).validate();
    } catch (const SpecError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("specification parsing names the offending field") {
    CHECK(spec_error(json::parse(R"({"infinity":{"signature":0},"pmax":200})")).empty());
    CHECK(spec_error(json::parse(R"({"infinity":{"signature":3}})")).find("infinity") == 0);
    CHECK(spec_error(json::parse(R"({"bogus":1})")).find("bogus") == 0);
    CHECK(spec_error(json::parse(R"({"local":[{"p":9,"types":["4"]}]})")).find("local.p") == 0);
    CHECK(spec_error(json::parse(R"({"local":[{"p":5,"types":["xyz"]}]})")).find("local") == 0);
    CHECK(spec_error(json::parse(R"({"local":[{"p":3,"types":["4"]}]})")).find("explicit") == 0);
    CHECK(spec_error(json::parse(R"({"s4_family":true})")).find("s4_family") == 0);
    CHECK(spec_error(json::parse(R"({"pmax":5})")).find("pmax") == 0);
    const auto ok = LocalSpecification::from_json(
        json::parse(R"({"infinity":{"signature":0},"s4_family":true,"local":[{"p":5,"types":["13"]},{"p":7,"types":["4"]}]})"));
    CHECK(ok.forces_s4());
    CHECK(LocalSpecification::from_json(ok.to_json()).to_json() == ok.to_json());
}

TEST_CASE("archimedean constant against the Gamma closed form") {
    const double M = std::pow(2.0, 5.0 / 3) * std::tgamma(1.0 / 6) * std::tgamma(0.5) /
                     (std::sqrt(3.0) * M_PI * std::tgamma(2.0 / 3));
    const ArchimedeanConstants a = archimedean_constants();
    CHECK(a.M.lower() <= M + 1e-12);
    CHECK(M - 1e-12 <= a.M.upper());
    // the complex-cubic quadrature is sqrt(3) M for either representative
    CHECK(mid(archimedean_integral_check(-1, 0)) == doctest::Approx(std::sqrt(3.0) * M).epsilon(1e-9));
    CHECK(mid(archimedean_integral_check(-1, 1)) == doctest::Approx(std::sqrt(3.0) * M).epsilon(1e-9));
    // the quadrature is GL2(Z) invariant on the real side too
    CHECK(mid(archimedean_integral_check(1, 0)) == doctest::Approx(mid(archimedean_integral_check(1, 1))).epsilon(1e-9));
}

TEST_CASE("prime tail bound dominates a direct partial sum") {
    for (double alpha : {4.0 / 3, 5.0 / 3, 2.0}) {
        double direct = 0;
        for (i64 p : primes_up_to(200000))
            if (p > 200) direct += std::pow(double(p), -alpha);
        CHECK(direct <= prime_tail_sum(alpha, 200));
    }
}

TEST_CASE("Euler products shrink as pmax grows") {
    LocalSpecification spec;
    spec.infinity = {0, 1, 2};
    const ConstantReport a = constant_report(spec, 100), b = constant_report(spec, 300);
    CHECK(contains(a.c1, b.c1));
    CHECK(rad(b.c1) <= rad(a.c1));
    CHECK(a.c1.lower() > 0);
    // table and brute-force local data give overlapping factors
    const FactorRow t = prime_factor(spec, 5, LocalSource::table), u = prime_factor(spec, 5, LocalSource::brute);
    CHECK(boost::numeric::overlap(t.leading, u.leading));
    CHECK(boost::numeric::overlap(t.untwisted, u.untwisted));
}

TEST_CASE("predicted counts scale with X") {
    const SmoothWeight w = SmoothWeight::plateau(1, 2, 1.25, 1.75);
    CHECK_THROWS_AS(predict_count(LocalSpecification{}, w, 1e4, 100), ComputationError);
    const auto spec = LocalSpecification::from_json(
        json::parse(R"({"s4_family":true,"local":[{"p":5,"types":["13"]},{"p":7,"types":["4"]}]})"));
    const Prediction p1 = predict_count(spec, w, 1e4, 100), p2 = predict_count(spec, w, 8e4, 100);
    CHECK(mid(p2.leading) / mid(p1.leading) == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(mid(p2.secondary) / mid(p1.secondary) == doctest::Approx(std::pow(8.0, 5.0 / 6)).epsilon(1e-9));
}
