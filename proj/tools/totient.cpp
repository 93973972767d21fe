#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "totient/alternates.hpp"
#include "totient/claims.hpp"
#include "totient/constraints.hpp"
#include "totient/inverse_totient.hpp"
#include "totient/recurrent_set.hpp"
#include "totient/version.hpp"

namespace {

using totient::Int;
using json = nlohmann::ordered_json;

Int parse_int(const std::string& s, const char* what) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw totient::DomainError(std::string(what) + " is not an integer: " + s);
    }
}

// Top-level JSON shape is fixed: {command, params, result, version}.
// Values that can outgrow 64 bits travel as decimal strings.
void emit(const std::string& command, json params, json result) {
    json j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    j["version"] = totient::version;
    std::cout << j.dump() << "\n";
}

std::string method_name(totient::Method m) {
    return m == totient::Method::two ? "two" : "one";
}

void print_witness_text(const totient::AlternateWitness& w) {
    std::cout << "y0=" << w.y0 << " method=" << method_name(w.method);
    if (w.method == totient::Method::two)
        std::cout << " q=" << w.q;
    else
        std::cout << " a=" << w.a << " a'=" << w.a_alt << " b=" << w.b;
    std::cout << "\n";
}

json witness_json(const totient::AlternateWitness& w) {
    json r;
    r["y0"] = w.y0.get_str();
    r["method"] = method_name(w.method);
    if (w.method == totient::Method::two) {
        r["q"] = w.q.get_str();
    } else {
        r["a"] = w.a.get_str();
        r["a_alt"] = w.a_alt.get_str();
        r["b"] = w.b.get_str();
    }
    return r;
}

std::string ledger_factors(const totient::ConstraintLedger& ledger) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ledger.required.size(); ++i) {
        if (i) os << ' ';
        os << ledger.required[i].first << '^' << ledger.required[i].second;
    }
    return os.str();
}

void print_ledger_text(const totient::ConstraintLedger& ledger) {
    std::cout << ledger_factors(ledger) << "\n";
    if (ledger.source == totient::LedgerSource::generalized)
        std::cout << "primes: " << ledger.required.size() << "\n";
    std::cout << "digits: " << ledger.digits() << "\n";
    if (ledger.conditional) std::cout << "conditional: true\n";
    if (ledger.chain_stop) std::cout << "chain_stop: " << *ledger.chain_stop << "\n";
    std::cout << "external_bound_log10: " << totient::external_bound_log10 << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler-totient toolkit: preimages, alternate solutions, recurrent prime "
                 "sets, constraint ledgers"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags remain valid after the subcommand name

    std::string output = "text";
    bool json_flag = false;
    app.add_option("--output", output, "output mode")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("TOTIENT_OUTPUT");
    app.add_flag("--json", json_flag, "shorthand for --output json");

    std::string preimage_cap, factor_cap;
    std::uint64_t sieve_cap = 0;
    app.add_option("--preimage-cap", preimage_cap, "max n for preimage enumeration")
        ->envname("TOTIENT_PREIMAGE_CAP");
    app.add_option("--sieve-cap", sieve_cap, "max sieve bound")->envname("TOTIENT_SIEVE_CAP");
    app.add_option("--factor-cap", factor_cap, "max value passed to the factorizer")
        ->envname("TOTIENT_FACTOR_CAP");

    std::string arg_n, arg_x0, arg_lo, arg_hi;
    std::uint64_t arg_bound = 0, arg_gen_bound = 0;
    unsigned jobs = 1;
    bool bounds = false, exceptions = false, trace = false;
    bool lemma3 = false, extended = false;
    std::string variant_name;

    CLI::App* cmd_phi = app.add_subcommand("phi", "Euler's totient of n");
    cmd_phi->add_option("n", arg_n, "argument")->required();

    CLI::App* cmd_inverse = app.add_subcommand("inverse", "all x with phi(x) = n, ascending");
    cmd_inverse->add_option("n", arg_n, "totient value")->required();
    cmd_inverse->add_flag("--bounds", bounds, "also print the two solution-count bounds");

    CLI::App* cmd_alternate =
        app.add_subcommand("alternate", "a second preimage y0 != x0 of phi(x0)");
    cmd_alternate->add_option("x0", arg_x0, "starting preimage")->required();

    CLI::App* cmd_scan =
        app.add_subcommand("scan", "find_alternate over [lo, hi]; candidates are reported");
    cmd_scan->add_option("lo", arg_lo, "range start")->required();
    cmd_scan->add_option("hi", arg_hi, "range end")->required();
    cmd_scan->add_option("--jobs", jobs, "worker threads")->envname("TOTIENT_JOBS");

    CLI::App* cmd_set = app.add_subcommand("set", "recurrent prime set below a bound");
    cmd_set->add_option("variant", variant_name, "rule variant")
        ->required()
        ->check(CLI::IsMember({"v3", "v4"}));
    cmd_set->add_option("bound", arg_bound, "upper bound (exclusive)")->required();
    cmd_set->add_flag("--exceptions", exceptions, "print rejected primes with reasons");
    cmd_set->add_flag("--trace", trace, "print members and rejections interleaved");

    CLI::App* cmd_constraints =
        app.add_subcommand("constraints", "forced divisors of a conjecture counterexample");
    cmd_constraints->add_flag("--lemma3", lemma3, "the self-feeding ladder 2,3,7,43");
    cmd_constraints->add_flag("--extended", extended, "ladder plus the conditional 5^2 step");
    cmd_constraints->add_option("--generalized", arg_gen_bound,
                                "ledger from the v4 set below the given bound");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the nine reference checks and report PASS/FAIL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool as_json = json_flag || output == "json";

    try {
        totient::Caps caps = totient::default_caps();
        if (!preimage_cap.empty()) caps.preimage_cap = parse_int(preimage_cap, "--preimage-cap");
        if (sieve_cap != 0) caps.sieve_cap = sieve_cap;
        if (!factor_cap.empty()) caps.factor_cap = parse_int(factor_cap, "--factor-cap");

        if (cmd_phi->parsed()) {
            const Int n = parse_int(arg_n, "n");
            const Int value = totient::euler_phi(n, caps);
            if (as_json)
                emit("phi", {{"n", n.get_str()}}, {{"value", value.get_str()}});
            else
                std::cout << value << "\n";
        } else if (cmd_inverse->parsed()) {
            const Int n = parse_int(arg_n, "n");
            const totient::PreimageSet set = totient::preimages(n, caps);
            if (as_json) {
                json result;
                result["solutions"] = json::array();
                for (const Int& x : set.solutions) result["solutions"].push_back(x.get_str());
                result["count"] = set.solutions.size();
                if (bounds) {
                    result["exponent_bound"] = totient::exponent_bound(n, caps).get_str();
                    result["subset_bound"] = totient::subset_bound(n, caps).get_str();
                }
                emit("inverse", {{"n", n.get_str()}, {"bounds", bounds}}, std::move(result));
            } else {
                for (const Int& x : set.solutions) std::cout << x << "\n";
                if (bounds) {
                    std::cout << "count: " << set.solutions.size() << "\n";
                    std::cout << "exponent_bound: " << totient::exponent_bound(n, caps) << "\n";
                    std::cout << "subset_bound: " << totient::subset_bound(n, caps) << "\n";
                }
            }
        } else if (cmd_alternate->parsed()) {
            const Int x0 = parse_int(arg_x0, "x0");
            const totient::AlternateWitness w = totient::find_alternate(x0, caps);
            if (as_json)
                emit("alternate", {{"x0", x0.get_str()}}, witness_json(w));
            else
                print_witness_text(w);
        } else if (cmd_scan->parsed()) {
            const Int lo = parse_int(arg_lo, "lo"), hi = parse_int(arg_hi, "hi");
            const totient::ScanReport report = totient::scan_conjecture(lo, hi, caps, jobs);
            if (as_json) {
                json result;
                result["scanned"] = report.scanned;
                result["method_two"] = report.via_method_two;
                result["method_one"] = report.via_method_one;
                result["odd_total"] = report.odd_total;
                result["odd_method_two"] = report.odd_via_method_two;
                result["candidates"] = json::array();
                for (const Int& c : report.candidates) result["candidates"].push_back(c.get_str());
                emit("scan",
                     {{"lo", lo.get_str()}, {"hi", hi.get_str()}, {"jobs", jobs}},
                     std::move(result));
            } else {
                std::cout << "scanned: " << report.scanned << "\n";
                std::cout << "method_two: " << report.via_method_two << "\n";
                std::cout << "method_one: " << report.via_method_one << "\n";
                std::cout << "candidates: " << report.candidates.size() << "\n";
                for (const Int& c : report.candidates) std::cout << "candidate: " << c << "\n";
            }
            if (!report.candidates.empty()) return 3;
        } else if (cmd_set->parsed()) {
            const totient::RuleVariant& variant = variant_name == "v3"
                                                      ? totient::RuleVariant::v3()
                                                      : totient::RuleVariant::v4();
            const totient::RecurrentSet set = totient::build_set(variant, arg_bound, caps);
            if (as_json) {
                emit("set",
                     {{"variant", variant_name}, {"bound", arg_bound}},
                     json::parse(totient::to_json(set)));
            } else if (exceptions) {
                for (const totient::Rejection& r : set.exceptions)
                    std::cout << r.p << "\t" << r.reason << "\n";
            } else if (trace) {
                std::size_t mi = 0, ei = 0;
                while (mi < set.members.size() || ei < set.exceptions.size()) {
                    const bool take_member =
                        ei == set.exceptions.size() ||
                        (mi < set.members.size() &&
                         set.members[mi].p < set.exceptions[ei].p);
                    if (take_member) {
                        const auto& [p, cert] = set.members[mi++];
                        totient::RecurrentSet one{set.variant, set.bound, {{p, cert}}, {}};
                        std::cout << totient::to_tsv(one);
                    } else {
                        const auto& r = set.exceptions[ei++];
                        std::cout << r.p << "\tEXCLUDED\t" << r.reason << "\n";
                    }
                }
            } else {
                std::cout << totient::to_tsv(set);
            }
        } else if (cmd_constraints->parsed()) {
            const int picked = int(lemma3) + int(extended) + int(arg_gen_bound != 0);
            if (picked != 1)
                throw totient::DomainError(
                    "constraints: pick exactly one of --lemma3, --extended, --generalized");
            totient::ConstraintLedger ledger;
            json params;
            if (lemma3) {
                ledger = totient::forced_divisor_ladder();
                params = {{"mode", "lemma3"}};
            } else if (extended) {
                ledger = totient::extended_ladder_step(totient::forced_divisor_ladder());
                params = {{"mode", "extended"}};
            } else {
                ledger = totient::generalized_constraint(arg_gen_bound, caps);
                params = {{"mode", "generalized"}, {"bound", arg_gen_bound}};
            }
            if (as_json)
                emit("constraints", std::move(params), json::parse(totient::to_json(ledger)));
            else
                print_ledger_text(ledger);
        } else if (cmd_verify->parsed()) {
            const auto results = totient::run_reference_checks(caps);
            std::size_t passed = 0;
            for (const auto& r : results)
                if (r.pass) ++passed;
            if (as_json) {
                json claims = json::array();
                for (const auto& r : results)
                    claims.push_back({{"id", r.id},
                                      {"title", r.title},
                                      {"pass", r.pass},
                                      {"detail", r.detail}});
                emit("verify", json::object(),
                     {{"claims", std::move(claims)},
                      {"passed", passed},
                      {"total", results.size()},
                      {"pass", passed == results.size()}});
            } else {
                for (const auto& r : results)
                    std::cout << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.title
                              << ": " << r.detail << "\n";
                std::cout << "RESULT " << (passed == results.size() ? "PASS" : "FAIL") << " "
                          << passed << "/" << results.size() << "\n";
            }
            if (passed != results.size()) return 1;
        }
    } catch (const totient::ConjectureCandidate& e) {
        std::cerr << "CONJECTURE CANDIDATE: " << e.what() << "\n";
        return 3;
    } catch (const totient::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
