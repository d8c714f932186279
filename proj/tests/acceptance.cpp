// Acceptance run: one line per criterion, PASS or FAIL, with the elapsed time
// against its limit. Exit status is nonzero if any criterion fails.

#include "onepart/onepart.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace onepart;
namespace v = onepart::verify;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string summary(const v::VerificationReport& r) {
    std::ostringstream os;
    os << r.count(v::Status::pass) << " pass, " << r.count(v::Status::fail) << " fail, "
       << r.count(v::Status::skip) << " skip";
    return os.str();
}

// First few failing points, for the log.
std::string failures(const v::VerificationReport& r, std::size_t limit = 6) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& p : r.points) {
        if (p.status != v::Status::fail)
            continue;
        if (shown++ == limit) {
            os << "\n      ...";
            break;
        }
        os << "\n      " << p.identity;
        for (const auto& [k, val] : p.params)
            os << " " << k << "=" << val;
        if (!p.note.empty())
            os << " : " << p.note;
    }
    return os.str();
}

Outcome from_report(const v::VerificationReport& r) { return {r.passed(), summary(r) + failures(r)}; }

Outcome appendix_reproduction() {
    return from_report(v::verify_appendix(5, 5));
}

Outcome oracle_concordance() {
    const OracleOptions opts{};
    std::size_t agree = 0, skipped = 0, differ = 0;
    std::ostringstream bad;
    for (int g = 0; g <= 2; ++g) {
        for (int d = 1; d <= 5; ++d) {
            const auto parts = all_partitions(d);
            for (const Partition& mu : parts) {
                for (const Partition& nu : parts) {
                    const HurwitzQuery q{g, mu, nu};
                    if (oracle_cost(q) > Integer(static_cast<unsigned long>(opts.budget))) {
                        ++skipped;
                        continue;
                    }
                    const Rational oracle = double_hurwitz(q, opts);
                    bool same = double_cutjoin(g, mu, nu, opts.budget) == oracle;
                    if (nu == Partition{d})
                        same = same && one_part(g, mu) == oracle;
                    if (same) {
                        ++agree;
                    } else {
                        ++differ;
                        bad << "\n      " << q.to_string();
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << agree << " agree, " << differ << " differ, " << skipped << " over budget" << bad.str();
    return {differ == 0 && agree > 0, os.str()};
}

Outcome hodge_vs_chiodo() {
    v::VerificationReport r = v::verify_thm_comparison(5, 8);
    // the two sides at g = 0 must also equal 1/d^2 individually
    for (int d = 1; d <= 8; ++d) {
        const Rational dd(d);
        const Rational scaled =
            moduli::scale_chiodo_integral(moduli::chiodo_integral_allones(0, d), 1, dd, 0,
                                          std::vector<Rational>(static_cast<std::size_t>(d), 1 / dd))
                .value /
            pow(dd, d - 2);
        r.points.push_back(v::detail::compare("genus0-value", {{"d", std::to_string(d)}}, scaled, 1 / (dd * dd)));
    }
    return from_report(r);
}

Outcome section6_checks() {
    v::VerificationReport r{"section6", {}, {}, {}};
    for (int d = 3; d <= 12; ++d) {
        const Rational dd(d);
        const Rational rhs = moduli::chiodo_g0_one_part_rhs(Partition::uniform(1, d)) / pow(dd, d - 2);
        r.points.push_back(v::detail::compare("genus0-rank-zero", {{"d", std::to_string(d)}}, rhs, 1 / (dd * dd)));
    }
    r.points.push_back(v::detail::compare("genus1-degree01", {{"d", "1"}}, moduli::chiodo_g1_deg01(1), 0));
    return from_report(r);
}

// Three legs: power sums against Bernoulli closed forms (both parities), and
// the evaluation against the one-part number divided by d^{2-g}, moved to
// the unit normalisation by the scaling identity.
Outcome single_part_parity() {
    v::VerificationReport closed{"closed-forms", {}, {}, {}};
    v::VerificationReport literal{"one-part", {}, {}, {}};
    bool ratio_is_d = true;
    for (int g = 1; g <= 4; ++g) {
        for (int d = 1; d <= 9; ++d) {
            const v::detail::Params params{{"g", std::to_string(g)}, {"d", std::to_string(d)}};
            const Rational dd(d);
            const Rational single = moduli::chiodo_integral_single(g, d);
            closed.points.push_back(v::detail::compare(d % 2 ? "odd" : "even", params, single,
                                                       moduli::chiodo_integral_single_faulhaber(g, d)));
            const Rational from_hurwitz = one_part(g, Partition{d}) / pow(dd, 2 - g);
            const Rational at_unit =
                moduli::scale_chiodo_integral(from_hurwitz, dd, 1, g, std::vector<Rational>{dd}).value;
            literal.points.push_back(v::detail::compare("one-part-single", params, single, at_unit));
            if (single != at_unit)
                ratio_is_d = ratio_is_d && at_unit != 0 && single / at_unit == dd;
        }
    }
    std::ostringstream os;
    os << "closed forms: " << summary(closed) << "; one-part leg: " << summary(literal);
    if (!literal.passed())
        os << (ratio_is_d ? " (every failing point is off by exactly a factor d; the evaluation equals d times the "
                            "one-part value)"
                          : " (failures are not a uniform factor d)");
    return {closed.passed() && literal.passed(), os.str() + failures(closed)};
}

Outcome spin_reduction() {
    v::VerificationReport r{"spin", {}, {}, {}};
    for (int g = 0; g <= 3; ++g)
        for (int d = 1; d <= 5; ++d)
            for (const Partition& mu : all_partitions(d)) {
                if (g == 0 && mu.length() == 1)
                    continue;  // b = 0
                r.points.push_back(v::detail::compare("reduction", {{"g", std::to_string(g)}, {"mu", mu.to_string()}},
                                                      spin_one_part(g, mu, 1).value, one_part(g, mu)));
            }
    const v::VerificationReport prefactors = v::verify_spin(2, 4, 3);
    std::size_t checked = 0;
    for (const auto& p : prefactors.points) {
        if (p.identity == "spin-chiodo-prefactor" || p.identity == "spin-chiodo-r1") {
            r.points.push_back(p);
            checked += p.status == v::Status::pass;
        }
    }
    Outcome o = from_report(r);
    o.ok = o.ok && checked > 0;
    return o;
}

Outcome exchange_symmetry() {
    return from_report(v::verify_exchange_grid(2, 5));
}

Outcome polynomial_structure() {
    return from_report(v::verify_polynomial_structure(5, 5));
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "appendix reproduction", 10, appendix_reproduction},
        {2, "oracle concordance", 300, oracle_concordance},
        {3, "hodge and chiodo sides agree", 1, hodge_vs_chiodo},
        {4, "genus zero rank and genus one degree <= 1", 1, section6_checks},
        {5, "single-part evaluation, both parities", 1, single_part_parity},
        {6, "spin reduction and prefactors", 30, spin_reduction},
        {7, "exchange symmetry", 300, exchange_symmetry},
        {8, "polynomial structure", 60, polynomial_structure},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool ok = o.ok && in_time;
        failed += !ok;
        std::printf("criterion %d %s  %s  [%.3f s, limit %.0f s%s]\n    %s\n", c.number, ok ? "PASS" : "FAIL",
                    c.name.c_str(), secs, c.limit_seconds, in_time ? "" : ", TOO SLOW", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
