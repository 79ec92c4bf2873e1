#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "quartic/constants.hpp"

namespace quartic {

using nlohmann::json;

namespace {

Rat parse_rat(const json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) return Rat(v.get<i64>());
        if (v.is_string()) return Rat(v.get<std::string>());
    } catch (const std::exception&) {
    }
    throw SpecError(field + ": expected an integer or a rational string like \"1/8\"");
}

Poly parse_poly(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) throw SpecError(field + ": expected a nonempty coefficient list");
    Poly out;
    for (size_t i = 0; i < v.size(); ++i) out.push_back(parse_rat(v[i], field + "[" + std::to_string(i) + "]"));
    return poly_trim(out);
}

LocalFactor parse_factor(const json& v, const std::string& field) {
    if (!v.is_object() || !v.contains("num")) throw SpecError(field + ": expected {\"num\": [...], \"den\": [...]}");
    LocalFactor f;
    f.num = parse_poly(v["num"], field + ".num");
    f.den = v.contains("den") ? parse_poly(v["den"], field + ".den") : Poly{Rat(1)};
    if (f.den.size() == 1 && f.den[0] == 0) throw SpecError(field + ".den: zero denominator");
    return f;
}

json rat_json(const Rat& r) { return json(r.str()); }

json poly_json(const Poly& a) {
    json out = json::array();
    for (const Rat& c : a) out.push_back(rat_json(c));
    return out;
}

nlohmann::ordered_json ivl_json(const Interval& x) { return nlohmann::ordered_json::array({x.lower(), x.upper()}); }

bool only_types(const PrimeSpec& ps, std::initializer_list<SplittingType> allowed) {
    if (ps.explicit_data || ps.types.empty()) return false;
    for (SplittingType t : ps.types)
        if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) return false;
    return true;
}

Interval rpow_int(i64 p, double e) { return rpow_i(double(p), e); }

Interval pi_interval() { return Interval(ulp_down(M_PI), ulp_up(M_PI)); }

}  // namespace

// ---- specification ------------------------------------------------------------------

LocalSpecification LocalSpecification::from_json(const json& j) {
    if (!j.is_object()) throw SpecError("spec: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "infinity" && it.key() != "s4_family" && it.key() != "local" && it.key() != "pmax")
            throw SpecError(it.key() + ": unknown field");
    LocalSpecification s;
    if (j.contains("infinity")) {
        const json& inf = j["infinity"];
        if (!inf.is_object()) throw SpecError("infinity: expected an object");
        std::vector<int> sig;
        if (inf.contains("signature")) {
            if (!inf["signature"].is_number_integer()) throw SpecError("infinity.signature: expected 0, 1 or 2");
            sig.push_back(inf["signature"].get<int>());
        } else if (inf.contains("signatures")) {
            if (!inf["signatures"].is_array()) throw SpecError("infinity.signatures: expected a list");
            for (const json& x : inf["signatures"]) {
                if (!x.is_number_integer()) throw SpecError("infinity.signatures: expected integers");
                sig.push_back(x.get<int>());
            }
        } else {
            throw SpecError("infinity: needs \"signature\" or \"signatures\"");
        }
        s.infinity = sig;
    }
    if (j.contains("s4_family")) {
        if (!j["s4_family"].is_boolean()) throw SpecError("s4_family: expected a boolean");
        s.s4_family = j["s4_family"].get<bool>();
    }
    if (j.contains("pmax")) {
        if (!j["pmax"].is_number_integer()) throw SpecError("pmax: expected an integer");
        s.pmax = j["pmax"].get<i64>();
    }
    if (j.contains("local")) {
        const json& loc = j["local"];
        if (!loc.is_array()) throw SpecError("local: expected a list");
        for (size_t k = 0; k < loc.size(); ++k) {
            const std::string f = "local[" + std::to_string(k) + "]";
            const json& e = loc[k];
            if (!e.is_object() || !e.contains("p") || !e["p"].is_number_integer())
                throw SpecError(f + ".p: expected an integer prime");
            PrimeSpec ps;
            ps.p = e["p"].get<i64>();
            if (e.contains("types") == e.contains("triples"))
                throw SpecError(f + ": give exactly one of \"types\" or \"triples\"");
            if (e.contains("types")) {
                if (!e["types"].is_array()) throw SpecError(f + ".types: expected a list");
                for (const json& t : e["types"]) {
                    auto st = t.is_string() ? parse_type(t.get<std::string>()) : std::nullopt;
                    if (!st) throw SpecError(f + ".types: unknown splitting type " + t.dump());
                    ps.types.push_back(*st);
                }
            } else {
                ps.explicit_data = true;
                if (!e["triples"].is_array()) throw SpecError(f + ".triples: expected a list");
                for (size_t i = 0; i < e["triples"].size(); ++i) {
                    const json& tr = e["triples"][i];
                    const std::string g = f + ".triples[" + std::to_string(i) + "]";
                    if (!tr.is_object() || !tr.contains("mass") || !tr.contains("untwisted") || !tr.contains("twisted"))
                        throw SpecError(g + ": needs mass, untwisted and twisted");
                    ps.triples.push_back({parse_rat(tr["mass"], g + ".mass"), parse_factor(tr["untwisted"], g + ".untwisted"),
                                          parse_factor(tr["twisted"], g + ".twisted")});
                }
            }
            s.local.push_back(ps);
        }
    }
    std::sort(s.local.begin(), s.local.end(), [](const PrimeSpec& a, const PrimeSpec& b) { return a.p < b.p; });
    std::sort(s.infinity.begin(), s.infinity.end());
    s.validate();
    return s;
}

void LocalSpecification::validate() const {
    std::set<int> seen;
    for (int i : infinity) {
        if (i < 0 || i > 2) throw SpecError("infinity: signature must be 0, 1 or 2");
        if (!seen.insert(i).second) throw SpecError("infinity: repeated signature");
    }
    if (pmax < 11) throw SpecError("pmax: must be at least 11");
    std::set<i64> primes;
    for (const PrimeSpec& ps : local) {
        if (!is_prime(ps.p)) throw SpecError("local.p: " + std::to_string(ps.p) + " is not a prime");
        if (!primes.insert(ps.p).second) throw SpecError("local.p: prime " + std::to_string(ps.p) + " repeated");
        if (!ps.explicit_data && ps.p <= 3) throw SpecError("explicit local data required at 2,3");
        std::set<SplittingType> ts(ps.types.begin(), ps.types.end());
        if (ts.size() != ps.types.size()) throw SpecError("local.types: repeated type at p = " + std::to_string(ps.p));
        for (const ExplicitTriple& t : ps.triples)
            if (t.mass < 0) throw SpecError("local.triples.mass: must be nonnegative");
    }
    if (s4_family && !forces_s4())
        throw SpecError("s4_family: the local conditions do not force a 4-cycle and a 3-cycle");
}

const PrimeSpec* LocalSpecification::at(i64 p) const {
    for (const PrimeSpec& ps : local)
        if (ps.p == p) return &ps;
    return nullptr;
}

bool LocalSpecification::forces_s4() const {
    // (4) and tame (1^4) give a 4-cycle; (13) and tame (1^3 1) give a 3-cycle
    for (const PrimeSpec& a : local) {
        if (!only_types(a, {SplittingType::t4, SplittingType::t1q4})) continue;
        for (const PrimeSpec& b : local)
            if (b.p != a.p && only_types(b, {SplittingType::t13, SplittingType::t1cu1})) return true;
    }
    return false;
}

json LocalSpecification::to_json() const {
    json j;
    j["infinity"] = {{"signatures", infinity}};
    j["s4_family"] = s4_family;
    j["pmax"] = pmax;
    json loc = json::array();
    for (const PrimeSpec& ps : local) {
        json e;
        e["p"] = ps.p;
        if (ps.explicit_data) {
            json tr = json::array();
            for (const ExplicitTriple& t : ps.triples)
                tr.push_back({{"mass", rat_json(t.mass)},
                              {"untwisted", {{"num", poly_json(t.untwisted.num)}, {"den", poly_json(t.untwisted.den)}}},
                              {"twisted", {{"num", poly_json(t.twisted.num)}, {"den", poly_json(t.twisted.den)}}}});
            e["triples"] = tr;
        } else {
            json ts = json::array();
            for (SplittingType t : ps.types) ts.push_back(label(t));
            e["types"] = ts;
        }
        loc.push_back(e);
    }
    j["local"] = loc;
    return j;
}

LocalSpecification load_specification(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("spec: cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("spec: invalid JSON: ") + e.what());
    }
    return LocalSpecification::from_json(j);
}

// ---- Euler products -----------------------------------------------------------------

double prime_tail_sum(double alpha, i64 P) {
    if (!(alpha > 1) || P < 2) throw ComputationError("prime_tail_sum needs alpha > 1 and P >= 2");
    // sum_{p>P} f(p) <= int_P^inf pi(x) |f'(x)| dx with pi(x) < 1.25506 x / log x
    const double v = 1.25506 * alpha * std::pow(double(P), 1 - alpha) / ((alpha - 1) * std::log(double(P)));
    return v * (1 + 1e-12);
}

FactorRow prime_factor(const LocalSpecification& spec, i64 p, LocalSource src) {
    FactorRow row;
    row.p = p;
    const PrimeSpec* ps = spec.at(p);
    const Interval t = rpow_int(p, 2.0 / 3.0);
    const Interval one(1.0);
    Rat m = 0;
    Interval u(0.0), tw(0.0);
    if (ps == nullptr) {
        m = total_maximal_mass(p);
        LocalFactor su = LocalFactor::constant(0), st = LocalFactor::constant(0);
        for (SplittingType ty : kAllTypes) {
            su = su + bare_integral_formal(ty, false, p) * mass(ty, p);
            st = st + bare_integral_formal(ty, true, p) * mass(ty, p);
        }
        u = su.eval(t);
        tw = st.eval(t);
    } else if (ps->explicit_data) {
        for (const ExplicitTriple& e : ps->triples) {
            m += e.mass;
            u += from_rat(e.mass) * e.untwisted.eval(t);
            tw += from_rat(e.mass) * e.twisted.eval(t);
        }
    } else {
        for (SplittingType ty : ps->types) {
            m += mass(ty, p);
            if (src == LocalSource::table) {
                u += local_integral(ty, false, PAdicContext(p)).eval(t);
                tw += local_integral(ty, true, PAdicContext(p)).eval(t);
            } else {
                if (p > 13) throw ComputationError("brute local integrals are limited to p <= 13");
                int M = 0;
                while (ipow(p, M + 2) <= 50000) ++M;
                u += brute_interval_decay(brute_coefficients(ty, false, p, M), t, p);
                tw += brute_interval_decay(brute_coefficients(ty, true, p, M), t, p);
            }
        }
    }
    row.leading = from_rat(m * (1 - Rat(1, p)));
    row.untwisted = (one - rpow_int(p, -1.0 / 3.0)) * u;
    row.twisted = (one - rpow_int(p, -2.0 / 3.0)) * tw;
    return row;
}

ConstantReport constant_report(const LocalSpecification& spec, i64 pmax, LocalSource src) {
    spec.validate();
    if (pmax < 11) throw SpecError("pmax: must be at least 11");
    ConstantReport r;
    r.pmax = pmax;
    const Interval one(1.0);

    Interval lead(1.0), untw(1.0), tw(1.0);
    for (const PrimeSpec& ps : spec.local) {
        FactorRow row = prime_factor(spec, ps.p, src);
        r.factors.push_back(row);
        lead *= row.leading;
        untw *= row.untwisted;
        tw *= row.twisted;
    }
    r.rest_leading = r.rest_untwisted = r.rest_twisted = one;
    for (i64 p : primes_up_to(pmax)) {
        if (spec.at(p)) continue;
        FactorRow row = prime_factor(spec, p, src);
        r.rest_leading *= row.leading;
        r.rest_untwisted *= row.untwisted;
        r.rest_twisted *= row.twisted;
    }
    if (spec.at(2) == nullptr || spec.at(3) == nullptr)
        r.caveats.push_back("p<=3: unconstrained factors at 2 and 3 extrapolate the p > 3 closed forms");
    if (src == LocalSource::brute)
        r.caveats.push_back("brute local integrals: tails beyond the truncation assume 1/p decay per level");
    r.caveats.push_back("error term O(X^{13/16+o(1)}) not modeled");

    // Tails. With y = p^{1/3} the unconstrained factors are exactly
    //   leading:   1 + 1/p^2 - 1/p^3 - 1/p^4                    in (1, 1 + p^-2)
    //   untwisted: 1 + (-y^6 - y^5 - y^4 + y + 1) / y^14        in (1 - 3 p^{-8/3}, 1)
    //   twisted:   1 + (y^10 - y^9 - y^7 - 2y^5 + y^2 + 1) / y^14  in (1, 1 + p^{-4/3}) for p >= 8
    const double s_lead = prime_tail_sum(2.0, pmax);
    const double s_untw = prime_tail_sum(8.0 / 3.0, pmax) + prime_tail_sum(3.0, pmax) + prime_tail_sum(10.0 / 3.0, pmax);
    const double s_tw = prime_tail_sum(4.0 / 3.0, pmax);
    const double eps = 3 * std::pow(double(pmax), -8.0 / 3.0);
    r.tail_leading = Interval(1.0, iexp(Interval(s_lead)).upper());
    r.tail_untwisted = Interval(iexp(Interval(-s_untw / (1 - eps) * (1 + 1e-12))).lower(), 1.0);
    r.tail_twisted = Interval(1.0, iexp(Interval(s_tw)).upper());
    r.tail_bound = std::max({r.tail_leading.upper() - 1, 1 - r.tail_untwisted.lower(), r.tail_twisted.upper() - 1});

    Interval inf_weight(0.0);
    const ArchimedeanConstants ac = archimedean_constants();
    r.M_sigma = r.M_sigma_prime = Interval(0.0);
    for (int i : spec.infinity) {
        inf_weight += one / double(kAutInfinity[size_t(i)]);
        r.M_sigma += ac.Mi[size_t(i)] / double(kAutInfinity[size_t(i)]);
        r.M_sigma_prime += ac.Mi_prime[size_t(i)] / double(kAutInfinity[size_t(i)]);
    }
    r.c1 = 0.5 * inf_weight * lead * r.rest_leading * r.tail_leading;

    r.zeta_third = riemann_zeta(1.0 / 3.0);
    r.zeta_two_thirds = riemann_zeta(2.0 / 3.0);
    if (spec.s4_family) {
        r.has_c56 = true;
        const Interval pre = pi_interval() / 8.0;
        r.c56_untwisted = pre * r.M_sigma * r.zeta_third * untw * r.rest_untwisted * r.tail_untwisted;
        r.c56_twisted = pre * r.M_sigma_prime * r.zeta_two_thirds * tw * r.rest_twisted * r.tail_twisted;
        r.c56 = r.c56_untwisted + r.c56_twisted;
    }
    return r;
}

Interval c1(const LocalSpecification& spec, i64 pmax) { return constant_report(spec, pmax).c1; }

Interval c56(const LocalSpecification& spec, i64 pmax) {
    if (!spec.s4_family) throw ComputationError("secondary constant formula requires S4 family");
    return constant_report(spec, pmax).c56;
}

Prediction predict_count(const ConstantReport& r, const SmoothWeight& w, double X) {
    if (!r.has_c56) throw ComputationError("secondary constant formula requires S4 family");
    if (X < 0) throw ComputationError("X must be nonnegative");
    Prediction out;
    if (X == 0) {
        out.leading = out.secondary = out.total = Interval(0.0);
        return out;
    }
    out.leading = r.c1 * mellin_transform(w, 1.0) * X;
    out.secondary = r.c56 * mellin_transform(w, 5.0 / 6.0) * rpow_i(X, 5.0 / 6.0);
    out.total = out.leading + out.secondary;
    return out;
}

Prediction predict_count(const LocalSpecification& spec, const SmoothWeight& w, double X, i64 pmax) {
    if (!spec.s4_family) throw ComputationError("secondary constant formula requires S4 family");
    return predict_count(constant_report(spec, pmax), w, X);
}

Residues residue_from_constants(const LocalSpecification& spec, int i, i64 pmax) {
    if (i < 0 || i > 2) throw ComputationError("signature must be 0, 1 or 2");
    if (!spec.s4_family) throw ComputationError("secondary constant formula requires S4 family");
    LocalSpecification one = spec;
    one.infinity = {i};
    const ConstantReport r = constant_report(one, pmax);
    // 1/(2 A_i) prod ... and pi/(8 A_i)(...) are the single-signature constants
    return {r.c1, r.c56};
}

nlohmann::ordered_json report_json(const ConstantReport& r) {
    nlohmann::ordered_json j;
    j["c1"] = ivl_json(r.c1);
    j["c56"] = r.has_c56 ? ivl_json(r.c56) : nlohmann::ordered_json(nullptr);
    if (r.has_c56)
        j["c56_branches"] = {{"untwisted", ivl_json(r.c56_untwisted)}, {"twisted", ivl_json(r.c56_twisted)}};
    j["pmax"] = r.pmax;
    j["archimedean"] = {{"M_sigma", ivl_json(r.M_sigma)}, {"M_sigma_prime", ivl_json(r.M_sigma_prime)}};
    j["zeta"] = {{"1/3", ivl_json(r.zeta_third)}, {"2/3", ivl_json(r.zeta_two_thirds)}};
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (const FactorRow& row : r.factors)
        f[std::to_string(row.p)] = {{"leading", ivl_json(row.leading)},
                                    {"untwisted", ivl_json(row.untwisted)},
                                    {"twisted", ivl_json(row.twisted)}};
    j["factors"] = f;
    j["unconstrained"] = {{"leading", ivl_json(r.rest_leading)},
                          {"untwisted", ivl_json(r.rest_untwisted)},
                          {"twisted", ivl_json(r.rest_twisted)}};
    j["tail"] = {{"leading", ivl_json(r.tail_leading)},
                 {"untwisted", ivl_json(r.tail_untwisted)},
                 {"twisted", ivl_json(r.tail_twisted)}};
    j["tail_bound"] = r.tail_bound;
    j["caveats"] = r.caveats;
    return j;
}

}  // namespace quartic
