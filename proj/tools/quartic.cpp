#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "quartic/constants.hpp"
#include "quartic/empirical.hpp"
#include "quartic/enumeration.hpp"
#include "quartic/padic.hpp"
#include "quartic/zeta.hpp"

using namespace quartic;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitCompute = 2, kExitVerify = 3;

// bumped whenever a table closed form changes
constexpr const char* kTableVersion = "local-tables/3 (corrected 1^4 row, pair-weighted isotropy)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    std::ostringstream o;
    o << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
}

ojson ivl(const Interval& x) { return ojson::array({x.lower(), x.upper()}); }

ojson poly_json(const Poly& a) {
    ojson out = ojson::array();
    for (const Rat& c : a) out.push_back(c.str());
    return out;
}

ojson factor_json(const LocalFactor& f) { return {{"num", poly_json(f.num)}, {"den", poly_json(f.den)}}; }

ojson rats_json(const std::vector<Rat>& v) {
    ojson out = ojson::array();
    for (const Rat& c : v) out.push_back(c.str());
    return out;
}

// the config block goes first so that reports are stable under option reordering
int emit(const std::string& verb, const ojson& config, ojson body, int code = kExitOk) {
    ojson report;
    report["verb"] = verb;
    report["config"] = config;
    report["config_hash"] = fnv1a_hex(verb + config.dump());
    report["table_version"] = kTableVersion;
    for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
    std::cout << report.dump(2) << "\n";
    return code;
}

SmoothWeight parse_weight(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--weight: cannot parse '" + item + "'");
        }
    }
    if (v.size() != 4) throw UsageError("--weight expects u,v,u',v'");
    return SmoothWeight::plateau(v[0], v[1], v[2], v[3]);
}

ojson weight_json(const SmoothWeight& w) { return ojson::array({w.u, w.v, w.u1, w.v1}); }

int default_threads() {
    if (const char* e = std::getenv("QUARTIC_THREADS")) {
        const int n = std::atoi(e);
        if (n > 0) return n;
    }
    return 1;
}

i64 checked_prime(i64 p) {
    if (p < 2) throw UsageError("--prime must be a prime");
    for (i64 q = 2; q * q <= p; ++q)
        if (p % q == 0) throw UsageError("--prime must be a prime");
    return p;
}

// ---- verbs --------------------------------------------------------------------------

struct ConstantsOpts {
    std::string spec;
    i64 pmax = 0;
    std::string source = "table";
};

int run_constants(const ConstantsOpts& o) {
    const LocalSpecification spec = load_specification(o.spec);
    const i64 pmax = o.pmax > 0 ? o.pmax : spec.pmax;
    if (o.source != "table" && o.source != "brute") throw UsageError("--source must be table or brute");
    const ConstantReport r = constant_report(spec, pmax, o.source == "brute" ? LocalSource::brute : LocalSource::table);
    ojson config = {{"spec", spec.to_json()}, {"pmax", pmax}, {"source", o.source}};
    ojson body;
    body["report"] = report_json(r);
    return emit("constants", config, body);
}

struct LocalTableOpts {
    i64 p = 5;
    std::string type;
    bool twisted = false;
    std::string format = "json";
    int verify = -1;
};

int run_local_table(const LocalTableOpts& o) {
    const i64 p = checked_prime(o.p);
    const auto t = parse_type(o.type);
    if (!t) throw UsageError("--type: unknown splitting type '" + o.type + "'");
    if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
    const PAdicContext ctx(p, 4);
    const LocalFactor f = local_integral(*t, o.twisted, ctx);
    const LocalFactor printed = printed_table_cell(*t, o.twisted, p);
    const int n = std::max(o.verify, 3) + 1;
    const std::vector<Rat> series = f.series(n), pseries = printed.series(n);
    std::vector<Rat> oracle;
    Rat tail = 0;
    bool pass = true;
    if (o.verify >= 0) {
        const BruteIntegral b = brute_coefficients(*t, o.twisted, p, o.verify);
        oracle = b.coeff;
        tail = b.tail_measure;
        for (int m = 0; m <= o.verify; ++m) pass = pass && oracle[size_t(m)] == series[size_t(m)];
    }
    const int code = pass ? kExitOk : kExitVerify;
    if (o.format == "csv") {
        std::cout << "m,library,printed" << (o.verify >= 0 ? ",oracle,match" : "") << "\n";
        for (int m = 0; m < n; ++m) {
            std::cout << m << "," << series[size_t(m)] << "," << pseries[size_t(m)];
            if (o.verify >= 0) {
                if (m <= o.verify)
                    std::cout << "," << oracle[size_t(m)] << "," << (oracle[size_t(m)] == series[size_t(m)] ? "yes" : "no");
                else
                    std::cout << ",,";
            }
            std::cout << "\n";
        }
        return code;
    }
    ojson config = {{"prime", p}, {"type", label(*t)}, {"twisted", o.twisted}, {"verify", o.verify}};
    ojson body;
    body["mass"] = mass(*t, p).str();
    body["factor"] = factor_json(f);
    body["series"] = rats_json(series);
    body["printed_cell"] = factor_json(printed);
    body["printed_series"] = rats_json(pseries);
    if (o.verify >= 0) {
        body["verification"] = {{"order", o.verify}, {"oracle", rats_json(oracle)}, {"tail_measure", tail.str()},
                                {"pass", pass}};
    }
    return emit("local-table", config, body, code);
}

struct VerifyOpts {
    i64 p = 5;
    int order = 3;
};

int run_verify_tables(const VerifyOpts& o) {
    const i64 p = checked_prime(o.p);
    if (p <= 3) throw UsageError("verify-tables needs p > 3");
    if (o.order < 0 || o.order > 4) throw UsageError("--order must be between 0 and 4");
    const PAdicContext ctx(p, o.order + 1);
    bool all = true;

    ojson drows = ojson::array();
    for (ResolventRow r : {ResolventRow::r111, ResolventRow::r12, ResolventRow::r3, ResolventRow::r1sq1,
                           ResolventRow::r1cu, ResolventRow::rC2sq, ResolventRow::rC4, ResolventRow::r1q4}) {
        for (int m = 0; m <= o.order; ++m) {
            const Rat brute = d_table(r, m, ctx), lib = d_closed_form(r, m, p), printed = d_printed(r, m, p);
            const bool ok = brute == lib;
            all = all && ok;
            drows.push_back({{"row", row_label(r)}, {"m", m}, {"oracle", brute.str()}, {"library", lib.str()},
                             {"printed", printed.str()}, {"pass", ok}, {"printed_matches", brute == printed}});
        }
    }

    ojson cells = ojson::array();
    for (SplittingType t : kAllTypes)
        for (bool tw : {false, true}) {
            const BruteIntegral b = brute_coefficients(t, tw, p, o.order);
            const auto lib = local_integral(t, tw, ctx).series(o.order + 1);
            const auto printed = printed_table_cell(t, tw, p).series(o.order + 1);
            bool ok = true, pok = true;
            for (int m = 0; m <= o.order; ++m) {
                ok = ok && b.coeff[size_t(m)] == lib[size_t(m)];
                pok = pok && b.coeff[size_t(m)] == printed[size_t(m)];
            }
            all = all && ok;
            cells.push_back({{"type", label(t)}, {"twisted", tw}, {"oracle", rats_json(b.coeff)},
                             {"library", rats_json(lib)}, {"pass", ok}, {"printed_matches", pok}});
        }

    Rat unram = 0, total = 0;
    for (SplittingType t : kAllTypes) {
        total += mass(t, p);
        if (disc_valuation(t) == 0) unram += mass(t, p);
    }
    const bool mass_ok = unram == 1 && total == total_maximal_mass(p);
    all = all && mass_ok;

    ojson iso = ojson::object();
    for (SplittingType t : {SplittingType::t2sq_C2sq, SplittingType::t2sq_C4, SplittingType::t1sq1sq_eq,
                            SplittingType::t1sq1sq_neq, SplittingType::t1q4}) {
        const IsotropyCount c = isotropy_pair_weighted(t, p, 2);
        iso[label(t)] = {{"isotropic", c.isotropic.str()}, {"anisotropic", c.anisotropic.str()}};
    }
    const IsotropyCount forms = isotropy_forms_only(p);
    iso["forms_only_2^2"] = {{"isotropic", forms.isotropic.str()}, {"anisotropic", forms.anisotropic.str()}};

    ojson config = {{"prime", p}, {"order", o.order}};
    ojson body;
    body["pass"] = all;
    body["d_table"] = drows;
    body["summary_table"] = cells;
    body["mass_column"] = {{"unramified_sum", unram.str()}, {"total", total.str()}, {"pass", mass_ok}};
    body["isotropy_v2"] = iso;
    return emit("verify-tables", config, body, all ? kExitOk : kExitVerify);
}

// "1/3" or "2" become exact rationals, anything else a double
bool parse_rational(const std::string& s, Rat& out) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size()) return false;
            out = Rat(v);
            return true;
        }
        out = Rat(s);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

double parse_double(const std::string& s, const std::string& what) {
    Rat r;
    if (parse_rational(s, r)) return r.convert_to<double>();
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + ": cannot parse '" + s + "'");
}

struct ZetaOpts {
    std::vector<std::string> hurwitz;
    std::string riemann;
};

int run_zeta(const ZetaOpts& o) {
    if (o.hurwitz.empty() == o.riemann.empty()) throw UsageError("zeta needs exactly one of --hurwitz s a or --riemann s");
    ojson config, body;
    if (!o.riemann.empty()) {
        const double s = parse_double(o.riemann, "--riemann");
        config = {{"riemann", s}};
        body["value"] = ivl(riemann_zeta(s));
    } else {
        const double s = parse_double(o.hurwitz[0], "--hurwitz s");
        Rat a;
        Interval v;
        if (parse_rational(o.hurwitz[1], a)) {
            v = hurwitz_zeta(s, a);
            config = {{"hurwitz", {{"s", s}, {"a", a.str()}}}};
        } else {
            const double ad = parse_double(o.hurwitz[1], "--hurwitz a");
            v = hurwitz_zeta(s, ad);
            config = {{"hurwitz", {{"s", s}, {"a", ad}}}};
        }
        body["value"] = ivl(v);
    }
    return emit("zeta", config, body);
}

struct MellinOpts {
    std::string weight = "1,2,1.25,1.75";
    double at = 1;
    int derivative = 0;
    double power = 0;
};

int run_mellin(const MellinOpts& o) {
    const SmoothWeight w = parse_weight(o.weight);
    const Interval v = mellin_transform(w, o.at, o.derivative, o.power);
    ojson config = {{"weight", weight_json(w)}, {"at", o.at}, {"derivative", o.derivative}, {"power", o.power}};
    ojson body;
    body["value"] = ivl(v);
    body["integral"] = w.integral();
    return emit("mellin", config, body);
}

struct DemoOpts {
    double X = 1000;
    std::string weight;
    bool positive_only = false;
};

int run_demo(const DemoOpts& o) {
    // irrational plateau ends keep the lattice points from pairing up exactly
    const SmoothWeight w = o.weight.empty() ? SmoothWeight::plateau(-2, 2, -std::sqrt(2.0), std::sqrt(2.0))
                                            : parse_weight(o.weight);
    const DemoResult r = smoothed_count_demo(w, o.X, o.positive_only);
    ojson config = {{"demo", "smoothed-count"}, {"X", o.X}, {"weight", weight_json(w)}, {"positive_only", o.positive_only}};
    ojson body;
    body["sum"] = r.sum;
    body["prediction"] = r.prediction;
    body["gap"] = r.gap;
    return emit("demo", config, body);
}

ojson record_json(const OrbitRecord& r) {
    ojson j;
    j["rep"] = serialize(Pair::from_coords([&] {
        std::array<Int, 12> v;
        for (int i = 0; i < 12; ++i) v[size_t(i)] = r.rep[size_t(i)];
        return v;
    }()));
    j["disc"] = r.disc;
    j["stabilizer"] = r.stabilizer;
    j["maximal"] = r.maximal;
    j["field"] = r.field;
    j["unresolved"] = r.unresolved;
    j["box_points"] = r.box_points;
    ojson sp = ojson::object();
    for (const auto& [p, s] : r.splitting) sp[std::to_string(p)] = s;
    j["splitting"] = sp;
    return j;
}

struct EnumerateOpts {
    int bound = 1;
    int radius = 6;
    i64 max_disc = 1000;
    std::string out;
    int threads = 1;
};

int run_enumerate(const EnumerateOpts& o) {
    if (o.bound < 0 || o.bound > 4) throw UsageError("--bound must be between 0 and 4");
    if (o.radius < 0) throw UsageError("--radius must be nonnegative");
    if (o.max_disc < 1) throw UsageError("--max-disc must be positive");
    const int shards = std::max(1, o.threads);
    std::vector<std::future<std::vector<std::pair<Coords, int>>>> jobs;
    for (int s = 0; s < shards; ++s)
        jobs.push_back(std::async(std::launch::async, [&, s] {
            std::vector<std::pair<Coords, int>> part;
            enumerate_box(
                o.bound,
                [&](const Coords& x, int mult) {
                    const i128 d = discriminant(x);
                    if (d != 0 && d <= o.max_disc && d >= -o.max_disc) part.push_back({x, mult});
                },
                s, shards);
            return part;
        }));
    std::vector<std::pair<Coords, int>> pairs;
    for (auto& j : jobs) {
        auto part = j.get();
        pairs.insert(pairs.end(), part.begin(), part.end());
    }
    OrbitStats st;
    const auto records = orbit_reduce(pairs, o.radius, o.bound, &st);
    i64 unresolved = 0;
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw UsageError("--out: cannot write " + o.out);
        for (const OrbitRecord& r : records) out << record_json(r).dump() << "\n";
    }
    for (const OrbitRecord& r : records) unresolved += r.unresolved;
    ojson config = {{"bound", o.bound}, {"radius", o.radius}, {"max_disc", o.max_disc}, {"out", o.out}};
    ojson body;
    body["box_pairs"] = i64(pairs.size());
    body["orbits"] = st.orbits;
    body["groups"] = st.groups;
    body["unresolved_groups"] = st.unresolved_groups;
    body["unresolved_orbits"] = unresolved;
    return emit("enumerate", config, body);
}

struct EmpiricalOpts {
    std::string spec;
    double X = 500;
    std::string weight = "0.05,1,0.1,0.95";
    int bound = 2;
    int radius = 6;
    bool zeta_weighted = false;
    bool list = false;
};

ojson empirical_json(const EmpiricalResult& r, bool list) {
    ojson j;
    j["count"] = r.count;
    j["box_pairs"] = r.box_pairs;
    j["candidates"] = r.candidates;
    j["orbits"] = r.stats.orbits;
    j["accepted"] = i64(r.orbits.size());
    j["unresolved"] = r.unresolved;
    j["unresolved_rate"] = r.orbits.empty() ? 0.0 : double(r.unresolved) / double(r.orbits.size());
    if (list) {
        ojson arr = ojson::array();
        for (const EmpiricalOrbit& e : r.orbits) {
            ojson x = record_json(e.record);
            x["signature"] = e.signature;
            x["weight"] = e.weight;
            arr.push_back(x);
        }
        j["records"] = arr;
    }
    return j;
}

int run_empirical(const EmpiricalOpts& o, bool compare) {
    const LocalSpecification spec = load_specification(o.spec);
    const SmoothWeight w = parse_weight(o.weight);
    EmpiricalOptions eo;
    eo.bound = o.bound;
    eo.radius = o.radius;
    eo.zeta_weighted = o.zeta_weighted;
    ojson config = {{"spec", spec.to_json()}, {"X", o.X},         {"weight", weight_json(w)},
                    {"bound", o.bound},      {"radius", o.radius}, {"zeta_weighted", o.zeta_weighted}};
    if (compare) {
        // check the prediction first: it fails fast for families without the secondary term
        const ConstantReport cr = constant_report(spec, spec.pmax);
        const Prediction pr = predict_count(cr, w, o.X);
        const EmpiricalResult r = empirical_count(spec, w, o.X, eo);
        ojson body;
        body["empirical"] = empirical_json(r, o.list);
        body["predicted"] = {{"leading", ivl(pr.leading)}, {"secondary", ivl(pr.secondary)}, {"total", ivl(pr.total)}};
        body["difference"] = r.count - mid(pr.total);
        body["caveats"] = cr.caveats;
        return emit("compare", config, body);
    }
    const EmpiricalResult r = empirical_count(spec, w, o.X, eo);
    ojson body;
    body["empirical"] = empirical_json(r, o.list);
    return emit("empirical", config, body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quartic ring and field counting constants"};
    app.require_subcommand(1);

    ConstantsOpts co;
    auto* cmd_constants = app.add_subcommand("constants", "Euler products, C1 and C5/6 for a local specification");
    cmd_constants->add_option("--spec", co.spec, "specification file (JSON)")->required();
    cmd_constants->add_option("--pmax", co.pmax, "override pmax from the conditions file");
    cmd_constants->add_option("--source", co.source, "local factors at constrained primes: table or brute");

    LocalTableOpts lo;
    auto* cmd_local = app.add_subcommand("local-table", "local integral of one splitting type");
    cmd_local->add_option("--prime", lo.p)->required();
    cmd_local->add_option("--type", lo.type, "splitting type, e.g. 112, 1^21^2_eq")->required();
    cmd_local->add_flag("--twisted", lo.twisted, "Hasse-twisted integral");
    cmd_local->add_option("--format", lo.format, "json or csv");
    cmd_local->add_option("--verify", lo.verify, "compare coefficients through t^M with brute force");

    VerifyOpts vo;
    auto* cmd_verify = app.add_subcommand("verify-tables", "D-table, summary table and mass column against brute force");
    cmd_verify->add_option("--prime", vo.p);
    cmd_verify->add_option("--order", vo.order, "largest m / power of t checked");

    ZetaOpts zo;
    auto* cmd_zeta = app.add_subcommand("zeta", "Hurwitz or Riemann zeta as an interval");
    cmd_zeta->add_option("--hurwitz", zo.hurwitz, "s a (a may be a fraction)")->expected(2);
    cmd_zeta->add_option("--riemann", zo.riemann, "s");

    MellinOpts mo;
    auto* cmd_mellin = app.add_subcommand("mellin", "Mellin transform of a smooth plateau weight");
    cmd_mellin->add_option("--weight", mo.weight, "u,v,u',v'");
    cmd_mellin->add_option("--at", mo.at, "s")->required();
    cmd_mellin->add_option("--derivative", mo.derivative, "0 or 1");
    cmd_mellin->add_option("--power", mo.power, "extra power of x");

    DemoOpts dmo;
    auto* cmd_demo = app.add_subcommand("demo", "smoothed lattice-count demos");
    cmd_demo->require_subcommand(1);
    auto* cmd_smoothed = cmd_demo->add_subcommand("smoothed-count", "sum psi(n/X) against X int psi");
    cmd_smoothed->add_option("--X", dmo.X);
    cmd_smoothed->add_option("--weight", dmo.weight, "u,v,u',v' (default -2,2,-sqrt2,sqrt2)");
    cmd_smoothed->add_flag("--positive-only", dmo.positive_only);

    EnumerateOpts eno;
    eno.threads = default_threads();
    auto* cmd_enum = app.add_subcommand("enumerate", "box enumeration and orbit reduction");
    cmd_enum->add_option("--bound", eno.bound)->required();
    cmd_enum->add_option("--radius", eno.radius);
    cmd_enum->add_option("--max-disc", eno.max_disc);
    cmd_enum->add_option("--out", eno.out, "orbit records, one JSON object per line");
    cmd_enum->add_option("--threads", eno.threads, "shards run in parallel (default $QUARTIC_THREADS or 1)");

    EmpiricalOpts emo;
    auto add_empirical = [&](CLI::App* c) {
        c->add_option("--spec", emo.spec)->required();
        c->add_option("--X", emo.X);
        c->add_option("--weight", emo.weight, "u,v,u',v'");
        c->add_option("--bound", emo.bound);
        c->add_option("--radius", emo.radius);
        c->add_flag("--zeta-weighted", emo.zeta_weighted, "weight each orbit by 1/#Stab");
        c->add_flag("--list", emo.list, "include the accepted orbit records");
    };
    auto* cmd_emp = app.add_subcommand("empirical", "smoothed field count from the box");
    add_empirical(cmd_emp);
    auto* cmd_cmp = app.add_subcommand("compare", "empirical count against predict_count");
    add_empirical(cmd_cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_constants) return run_constants(co);
        if (*cmd_local) return run_local_table(lo);
        if (*cmd_verify) return run_verify_tables(vo);
        if (*cmd_zeta) return run_zeta(zo);
        if (*cmd_mellin) return run_mellin(mo);
        if (*cmd_demo) return run_demo(dmo);
        if (*cmd_enum) return run_enumerate(eno);
        if (*cmd_emp) return run_empirical(emo, false);
        if (*cmd_cmp) return run_empirical(emo, true);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitUsage;
}
