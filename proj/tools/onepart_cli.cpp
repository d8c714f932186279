// onepart: command-line front end for the Hurwitz number library.
//
//   onepart compute --genus 1 --mu 1,1 --one-part
//   onepart compute --genus 0 --mu 2 --nu 2 --cross-check --format json
//   onepart table --genus 3 --n 4
//   onepart oracle --genus 1 --mu 2,1 --nu 3
//   onepart moduli psi --genus 2 --exp 4
//   onepart verify --suite appendix --out report.json
//
// Exit status: 0 on success, 1 on a failed check, disagreement between
// routes or a budget refusal, 2 on bad arguments.

#include "onepart/onepart.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using onepart::Partition;
using onepart::Rational;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw UsageError("unknown format '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
        if (used != item.size())
            throw UsageError("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    return out;
}

template <class F>
std::pair<Rational, long long> timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    Rational v = f();
    const auto stop = std::chrono::steady_clock::now();
    return {v, std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count()};
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p)
        a.push_back(x);
    return a;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    int genus = 0;
    std::string mu;
    std::string nu;
    bool one_part = false;
    int orbifold = 0;
    int spin = 0;
    std::string route;
    bool cross_check = false;
};

struct RouteResult {
    std::string route;
    Rational value;
    long long micros = 0;
    std::string note;
};

int run_compute(const ComputeArgs& a, Format fmt, const onepart::OracleOptions& opts) {
    if (a.genus < 0)
        throw UsageError("genus must be non-negative");
    const Partition mu = Partition::parse(a.mu);
    const int d = mu.size();
    const int selectors = (!a.nu.empty()) + a.one_part + (a.orbifold != 0) + (a.spin != 0);
    if (selectors > 1)
        throw UsageError("choose at most one of --nu, --one-part, --orbifold, --spin");

    std::string kind = "one-part";
    Partition nu{d};
    if (!a.nu.empty()) {
        kind = "double";
        nu = Partition::parse(a.nu);
        if (nu.size() != d)
            throw UsageError("|mu| = " + std::to_string(d) + " but |nu| = " + std::to_string(nu.size()));
    } else if (a.orbifold != 0) {
        kind = "orbifold";
        if (a.orbifold < 1 || d % a.orbifold != 0)
            throw UsageError("orbifold order " + std::to_string(a.orbifold) + " does not divide " + std::to_string(d));
        nu = Partition::uniform(a.orbifold, d / a.orbifold);
    } else if (a.spin != 0) {
        kind = "spin";
        if (a.spin < 1)
            throw UsageError("spin order must be positive");
    }

    const bool is_one_part = nu == Partition{d};
    std::vector<std::string> routes;
    if (a.cross_check) {
        if (kind == "spin") {
            routes = {"series"};
            if (a.spin == 1)
                routes.push_back("oracle");
        } else {
            if (is_one_part)
                routes.push_back("series");
            routes.push_back("cutjoin");
            routes.push_back("oracle");
        }
    } else if (!a.route.empty()) {
        routes = {a.route};
    } else {
        routes = {kind == "spin" || is_one_part ? "series" : "cutjoin"};
    }

    onepart::SpinValue spin_flag{0, true};
    std::vector<RouteResult> results;
    for (const auto& route : routes) {
        RouteResult res{route, 0, 0, {}};
        if (route == "series") {
            if (kind == "spin") {
                auto [v, us] = timed([&] {
                    spin_flag = onepart::spin_one_part(a.genus, mu, a.spin);
                    return spin_flag.value;
                });
                res.value = v;
                res.micros = us;
                if (!spin_flag.divisible)
                    res.note = "2g - 1 + n not divisible by r";
            } else {
                if (!is_one_part)
                    throw UsageError("the series route needs the one-part profile nu = (d)");
                std::tie(res.value, res.micros) = timed([&] { return onepart::one_part(a.genus, mu); });
            }
        } else if (route == "cutjoin") {
            if (kind == "spin" && a.spin != 1)
                throw UsageError("cut-and-join has no r-spin version");
            std::tie(res.value, res.micros) =
                timed([&] { return onepart::double_cutjoin(a.genus, mu, nu, opts.budget); });
        } else if (route == "oracle") {
            if (kind == "spin" && a.spin != 1)
                throw UsageError("the oracle has no r-spin version");
            const onepart::HurwitzQuery q{a.genus, mu, nu};
            if (a.cross_check && onepart::oracle_cost(q) > onepart::Integer(static_cast<unsigned long>(opts.budget))) {
                continue;  // cross-checking uses the oracle only where affordable
            }
            std::tie(res.value, res.micros) = timed([&] { return onepart::double_hurwitz(q, opts); });
        } else {
            throw UsageError("unknown route '" + route + "'");
        }
        results.push_back(res);
    }

    bool agree = true;
    for (const auto& r : results)
        agree = agree && r.value == results.front().value;

    std::string nu_text = kind == "spin" ? "" : nu.to_string();
    switch (fmt) {
    case Format::text:
        if (results.size() == 1) {
            std::cout << onepart::to_string(results.front().value) << "\n";
        } else {
            for (const auto& r : results)
                std::cout << r.route << " " << onepart::to_string(r.value) << "\n";
            std::cout << (agree ? "agree" : "DISAGREE") << "\n";
        }
        break;
    case Format::json: {
        json q = {{"kind", kind}, {"genus", a.genus}, {"mu", partition_json(mu)}};
        if (kind == "spin")
            q["r"] = a.spin;
        else
            q["nu"] = partition_json(nu);
        json out = {{"query", q}, {"results", json::array()}};
        for (const auto& r : results) {
            json item = {{"route", r.route}, {"value", onepart::to_string(r.value)}, {"micros", r.micros}};
            if (!r.note.empty())
                item["note"] = r.note;
            out["results"].push_back(item);
        }
        if (a.cross_check)
            out["agree"] = agree;
        std::cout << out.dump(2) << "\n";
        break;
    }
    case Format::csv:
        std::cout << "kind,genus,mu,nu,r,value,route,micros\n";
        for (const auto& r : results)
            std::cout << kind << "," << a.genus << ",\"" << mu.to_string() << "\",\"" << nu_text << "\","
                      << (kind == "spin" ? std::to_string(a.spin) : "") << "," << onepart::to_string(r.value) << ","
                      << r.route << "," << r.micros << "\n";
        break;
    }
    if (!agree)
        throw CheckFailed("routes disagree for g=" + std::to_string(a.genus) + " mu=(" + mu.to_string() + ") nu=(" +
                          nu_text + ")");
    return 0;
}

// ---------------------------------------------------------------- table

int run_table(int genus, int n, Format fmt) {
    if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0)
        throw UsageError("table needs g >= 0, n >= 1 and 2g - 2 + n > 0");
    const onepart::SymmetricPoly p = onepart::one_part_polynomial(genus, n);
    switch (fmt) {
    case Format::text:
        std::cout << onepart::appendix_notation(p, genus) << "\n";
        break;
    case Format::json: {
        json terms = json::array();
        for (const auto& [key, c] : p.terms()) {
            json e = json::array();
            for (int x : key)
                e.push_back(x);
            terms.push_back({{"exponents", e}, {"coefficient", onepart::to_string(c)}});
        }
        json out = {{"genus", genus},
                    {"n", n},
                    {"prefactor_exponent", 2 * genus - 2 + n},
                    {"denominator", p.common_denominator().get_str()},
                    {"terms", terms}};
        std::cout << out.dump(2) << "\n";
        break;
    }
    case Format::csv:
        std::cout << "exponents,coefficient\n";
        for (const auto& [key, c] : p.terms()) {
            std::string k;
            for (std::size_t i = 0; i < key.size(); ++i)
                k += (i ? " " : "") + std::to_string(key[i]);
            std::cout << "\"" << k << "\"," << onepart::to_string(c) << "\n";
        }
        break;
    }
    return 0;
}

// ---------------------------------------------------------------- oracle

int run_oracle(int genus, const std::string& mu_text, const std::string& nu_text, Format fmt,
               const onepart::OracleOptions& opts) {
    const onepart::HurwitzQuery q{genus, Partition::parse(mu_text), Partition::parse(nu_text)};
    if (q.mu.size() != q.nu.size())
        throw UsageError("profiles have different sizes");
    const auto start = std::chrono::steady_clock::now();
    const onepart::Integer raw = onepart::raw_count(q, opts);
    const Rational value = onepart::double_hurwitz(q, opts);
    const long long us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    switch (fmt) {
    case Format::text:
        std::cout << onepart::to_string(value) << "\n";
        break;
    case Format::json: {
        json out = {{"query", {{"genus", genus}, {"mu", partition_json(q.mu)}, {"nu", partition_json(q.nu)}}},
                    {"branch_points", q.branch_points()},
                    {"raw_count", raw.get_str()},
                    {"value", onepart::to_string(value)},
                    {"route", "oracle"},
                    {"micros", us}};
        std::cout << out.dump(2) << "\n";
        break;
    }
    case Format::csv:
        std::cout << "genus,mu,nu,raw_count,value,route,micros\n"
                  << genus << ",\"" << q.mu.to_string() << "\",\"" << q.nu.to_string() << "\"," << raw.get_str()
                  << "," << onepart::to_string(value) << ",oracle," << us << "\n";
        break;
    }
    return 0;
}

// ---------------------------------------------------------------- moduli

void emit_scalar(const std::string& what, const json& query, const Rational& v, Format fmt) {
    switch (fmt) {
    case Format::text:
        std::cout << onepart::to_string(v) << "\n";
        break;
    case Format::json:
        std::cout << json{{"quantity", what}, {"query", query}, {"value", onepart::to_string(v)}}.dump(2) << "\n";
        break;
    case Format::csv:
        std::cout << "quantity,value\n" << what << "," << onepart::to_string(v) << "\n";
        break;
    }
}

int run_psi(int genus, const std::string& exps, Format fmt) {
    const std::vector<int> e = parse_int_list(exps);
    if (e.empty())
        throw UsageError("need at least one exponent");
    for (int x : e)
        if (x < 0)
            throw UsageError("psi exponents must be non-negative");
    if (genus < 0 || 2 * genus - 2 + static_cast<int>(e.size()) <= 0)
        throw UsageError("unstable (g, n)");
    const Rational v = onepart::moduli::psi_dvv(genus, e);
    if (genus == 0 && v != onepart::moduli::psi_genus0(std::span<const int>(e)))
        throw CheckFailed("recursion and genus-zero closed form disagree");
    json q = {{"genus", genus}, {"exponents", e}};
    emit_scalar("psi", q, v, fmt);
    return 0;
}

int run_hodge(int genus, int d, Format fmt) {
    if (genus < 0 || d < 1)
        throw UsageError("hodge needs g >= 0 and d >= 1");
    emit_scalar("linear_hodge", json{{"genus", genus}, {"d", d}}, onepart::moduli::linear_hodge(genus, d), fmt);
    return 0;
}

int run_chiodo_g1(int d, Format fmt) {
    if (d < 1)
        throw UsageError("chiodo-g1 needs d >= 1");
    const auto p = onepart::moduli::chiodo_g1_deg01_parts(d);
    const std::vector<std::pair<std::string, Rational>> rows = {{"summand0", p.summand0},   {"summand1", p.summand1},
                                                                {"summand2", p.summand2},   {"summand3a", p.summand3a},
                                                                {"summand3b", p.summand3b}, {"total", p.total()}};
    switch (fmt) {
    case Format::text:
        for (const auto& [k, v] : rows)
            std::cout << k << " " << onepart::to_string(v) << "\n";
        break;
    case Format::json: {
        json out = {{"d", d}};
        for (const auto& [k, v] : rows)
            out[k] = onepart::to_string(v);
        std::cout << out.dump(2) << "\n";
        break;
    }
    case Format::csv:
        std::cout << "part,value\n";
        for (const auto& [k, v] : rows)
            std::cout << k << "," << onepart::to_string(v) << "\n";
        break;
    }
    return 0;
}

// ---------------------------------------------------------------- verify

json report_json(const onepart::verify::VerificationReport& r, bool timing) {
    using onepart::verify::Status;
    json grid = json::object();
    for (const auto& [k, v] : r.grid)
        grid[k] = v;
    json points = json::array();
    for (const auto& p : r.points) {
        json params = json::object();
        for (const auto& [k, v] : p.params)
            params[k] = v;
        json item = {{"identity", p.identity},
                     {"kind", p.kind},
                     {"params", params},
                     {"status", onepart::verify::to_string(p.status)}};
        if (p.status != Status::skip) {
            item["lhs"] = p.lhs;
            item["rhs"] = p.rhs;
        }
        if (!p.note.empty())
            item["note"] = p.note;
        points.push_back(item);
    }
    json out = {{"suite", r.suite},
                {"grid", grid},
                {"summary",
                 {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"skip", r.count(Status::skip)},
                  {"passed", r.passed()}}},
                {"points", points}};
    if (timing && r.elapsed_micros)
        out["elapsed_micros"] = *r.elapsed_micros;
    return out;
}

struct VerifyArgs {
    std::string suite;
    std::optional<int> gmax, dmax, rmax, nmax;
    std::string out;
    bool timing = false;
};

int run_verify(const VerifyArgs& a, Format fmt, const onepart::OracleOptions& opts) {
    namespace v = onepart::verify;
    const auto start = std::chrono::steady_clock::now();
    v::VerificationReport report;
    if (a.suite == "comparison")
        report = v::verify_thm_comparison(a.gmax.value_or(5), a.dmax.value_or(8));
    else if (a.suite == "exchange")
        report = v::verify_exchange_grid(a.gmax.value_or(2), a.dmax.value_or(5), opts);
    else if (a.suite == "appendix") {
        const int g = a.gmax.value_or(5);
        if (g > 5)
            throw UsageError("the published table stops at genus five");
        report = v::verify_appendix(g, a.nmax.value_or(5));
    } else if (a.suite == "structure")
        report = v::verify_polynomial_structure(a.gmax.value_or(5), a.nmax.value_or(5));
    else if (a.suite == "chiodo")
        report = v::verify_prop_chiodo_series(a.gmax.value_or(4), a.dmax.value_or(8));
    else if (a.suite == "spin")
        report = v::verify_spin(a.gmax.value_or(2), a.dmax.value_or(4), a.rmax.value_or(3), opts);
    else
        throw UsageError("unknown suite '" + a.suite + "'");
    report.elapsed_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (fmt == Format::json) {
        text = report_json(report, a.timing).dump(2) + "\n";
    } else if (fmt == Format::csv) {
        std::ostringstream os;
        os << "identity,kind,params,status,lhs,rhs\n";
        for (const auto& p : report.points) {
            std::string params;
            for (const auto& [k, val] : p.params)
                params += (params.empty() ? "" : " ") + k + "=" + val;
            os << p.identity << "," << p.kind << ",\"" << params << "\"," << v::to_string(p.status) << ",\"" << p.lhs
               << "\",\"" << p.rhs << "\"\n";
        }
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& p : report.points) {
            if (p.status == v::Status::pass)
                continue;
            os << v::to_string(p.status) << " " << p.identity;
            for (const auto& [k, val] : p.params)
                os << " " << k << "=" << val;
            if (p.status == v::Status::fail)
                os << " lhs=" << p.lhs << " rhs=" << p.rhs;
            if (!p.note.empty())
                os << " (" << p.note << ")";
            os << "\n";
        }
        os << report.suite << ": " << report.count(v::Status::pass) << " passed, " << report.count(v::Status::fail)
           << " failed, " << report.count(v::Status::skip) << " skipped";
        if (a.timing)
            os << " in " << *report.elapsed_micros << " us";
        os << "\n";
        text = os.str();
    }

    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out);
        if (!f)
            throw UsageError("cannot write '" + a.out + "'");
        f << text;
    }
    if (!report.passed()) {
        std::cerr << "verification failed: " << report.count(v::Status::fail) << " point(s) in suite "
                  << report.suite << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact one-part, double, orbifold and spin Hurwitz numbers"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t budget = onepart::kDefaultOracleBudget;
    unsigned threads = 1;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_oracle_opts = [&](CLI::App* sub) {
        sub->add_option("--budget", budget, "largest enumeration size the oracle accepts")
            ->envname("HURWITZ_BUDGET");
        sub->add_option("--threads", threads, "worker threads for the oracle")->check(CLI::PositiveNumber);
    };

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "compute one Hurwitz number");
    compute->add_option("--genus", ca.genus)->required();
    compute->add_option("--mu", ca.mu, "profile over infinity, e.g. 3,2,1")->required();
    compute->add_option("--nu", ca.nu, "profile over zero (double number)");
    compute->add_flag("--one-part", ca.one_part, "nu = (d) (default)");
    compute->add_option("--orbifold", ca.orbifold, "nu = (q, ..., q)");
    compute->add_option("--spin", ca.spin, "r-spin one-part number");
    compute->add_option("--route", ca.route, "series, oracle or cutjoin")
        ->check(CLI::IsMember({"series", "oracle", "cutjoin"}));
    compute->add_flag("--cross-check", ca.cross_check, "run every available route and require agreement");
    add_common(compute);
    add_oracle_opts(compute);

    int tg = 0, tn = 1;
    auto* table = app.add_subcommand("table", "one-part polynomial in monomial notation");
    table->add_option("--genus", tg)->required();
    table->add_option("--n", tn)->required();
    add_common(table);

    int og = 0;
    std::string omu, onu;
    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration of factorizations");
    oracle->add_option("--genus", og)->required();
    oracle->add_option("--mu", omu)->required();
    oracle->add_option("--nu", onu)->required();
    add_common(oracle);
    add_oracle_opts(oracle);

    auto* moduli = app.add_subcommand("moduli", "intersection numbers");
    moduli->require_subcommand(1);
    int pg = 0;
    std::string pexp;
    auto* psi = moduli->add_subcommand("psi", "psi-class intersection number");
    psi->add_option("--genus", pg)->required();
    psi->add_option("--exp", pexp, "exponents, e.g. 1,0,2")->required();
    add_common(psi);
    int hg = 0, hd = 1;
    auto* hodge = moduli->add_subcommand("hodge", "linear Hodge integral");
    hodge->add_option("--genus", hg)->required();
    hodge->add_option("--d", hd)->required();
    add_common(hodge);
    int cd = 1;
    auto* chiodo = moduli->add_subcommand("chiodo-g1", "degree <= 1 genus-one Chiodo contribution");
    chiodo->add_option("--d", cd)->required();
    add_common(chiodo);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", va.suite)
        ->required()
        ->check(CLI::IsMember({"comparison", "exchange", "appendix", "structure", "chiodo", "spin"}));
    verify->add_option("--gmax", va.gmax);
    verify->add_option("--dmax", va.dmax);
    verify->add_option("--rmax", va.rmax);
    verify->add_option("--nmax", va.nmax);
    verify->add_option("--out", va.out, "write the report here instead of stdout");
    verify->add_flag("--timing", va.timing, "include elapsed time in the report");
    verify->add_option("--format", format, "json (default), text or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    add_oracle_opts(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed() && verify->count("--format") == 0)
        format = "json";

    try {
        const Format fmt = parse_format(format);
        const onepart::OracleOptions opts{budget, threads};
        if (compute->parsed())
            return run_compute(ca, fmt, opts);
        if (table->parsed())
            return run_table(tg, tn, fmt);
        if (oracle->parsed())
            return run_oracle(og, omu, onu, fmt, opts);
        if (psi->parsed())
            return run_psi(pg, pexp, fmt);
        if (hodge->parsed())
            return run_hodge(hg, hd, fmt);
        if (chiodo->parsed())
            return run_chiodo_g1(cd, fmt);
        if (verify->parsed())
            return run_verify(va, fmt, opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const onepart::BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
