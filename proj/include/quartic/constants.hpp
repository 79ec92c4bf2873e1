#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "quartic/padic.hpp"
#include "quartic/zeta.hpp"

namespace quartic {

// #Aut(R^{4-2i} x C^i)
constexpr std::array<int, 3> kAutInfinity = {24, 4, 8};

struct SpecError : ComputationError {
    using ComputationError::ComputationError;
};

// ---- local specifications ----------------------------------------------------------

// one user-supplied local triple: |Delta|_p/#Aut and the two bare integrals as
// rational functions of t = p^{-s}
struct ExplicitTriple {
    Rat mass;
    LocalFactor untwisted, twisted;
};

struct PrimeSpec {
    i64 p = 0;
    bool explicit_data = false;
    std::vector<SplittingType> types;     // when !explicit_data
    std::vector<ExplicitTriple> triples;  // when explicit_data
};

struct LocalSpecification {
    std::vector<int> infinity{0};  // signatures i, sorted, distinct
    std::vector<PrimeSpec> local;  // sorted by p
    bool s4_family = false;
    i64 pmax = 200;

    // schema errors name the offending field
    static LocalSpecification from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    void validate() const;
    const PrimeSpec* at(i64 p) const;
    // a prime allowing only (4)/(1^4) and another allowing only (13)/(1^3 1)
    bool forces_s4() const;
};

LocalSpecification load_specification(const std::string& path);

// ---- archimedean constants -----------------------------------------------------------

struct ArchimedeanConstants {
    Interval M;
    std::array<Interval, 3> Mi, Mi_prime;
};
ArchimedeanConstants archimedean_constants();

// 4^{2/3} |Delta(f)|^{1/6} (1/2pi) int_0^{2pi} |f(cos t, sin t)|^{-2/3} dt
Interval archimedean_integral(const BinaryCubic<double>& f);
// fixed representatives: sign > 0 uses x^3 - x y^2 (rep 0) or x^3 + x^2 y - 2 x y^2 (rep 1),
// sign < 0 uses x^3 - y^3 (rep 0) or x^3 + x y^2 + y^3 (rep 1)
Interval archimedean_integral_check(int sign, int representative = 0);
BinaryCubic<double> archimedean_representative(int sign, int representative);

// ---- Euler products --------------------------------------------------------------------

enum class LocalSource { table, brute };

struct FactorRow {
    i64 p = 0;
    Interval leading, untwisted, twisted;
};

struct ConstantReport {
    i64 pmax = 0;
    Interval c1;
    bool has_c56 = false;
    Interval c56, c56_untwisted, c56_twisted;
    Interval M_sigma, M_sigma_prime, zeta_third, zeta_two_thirds;
    std::vector<FactorRow> factors;  // constrained primes
    // products over unconstrained p <= pmax, and the tail factors beyond pmax
    Interval rest_leading, rest_untwisted, rest_twisted;
    Interval tail_leading, tail_untwisted, tail_twisted;
    double tail_bound = 0;  // largest relative tail width
    std::vector<std::string> caveats;
};

// upper bound for sum_{p > P} p^{-alpha}, alpha > 1, from pi(x) < 1.25506 x / log x
double prime_tail_sum(double alpha, i64 P);

// per-prime factors: (1-1/p) * sum mass, and (1 - p^{-1/3}) * sum mass * I_p(-2/3),
// (1 - p^{-2/3}) * sum mass * I'_p(-2/3)
FactorRow prime_factor(const LocalSpecification& spec, i64 p, LocalSource src = LocalSource::table);

ConstantReport constant_report(const LocalSpecification& spec, i64 pmax,
                               LocalSource src = LocalSource::table);
Interval c1(const LocalSpecification& spec, i64 pmax);
Interval c56(const LocalSpecification& spec, i64 pmax);

struct Prediction {
    Interval leading, secondary, total;
};
// C1 psi~(1) X + C56 psi~(5/6) X^{5/6}
Prediction predict_count(const LocalSpecification& spec, const SmoothWeight& w, double X, i64 pmax);
Prediction predict_count(const ConstantReport& r, const SmoothWeight& w, double X);

struct Residues {
    Interval res1, res56;
};
// residues at 1 and 5/6 of the signature-i Shintani zeta function of the family
Residues residue_from_constants(const LocalSpecification& spec, int i, i64 pmax);

nlohmann::ordered_json report_json(const ConstantReport& r);

}  // namespace quartic
