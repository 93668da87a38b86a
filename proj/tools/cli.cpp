#include "cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kutate/bg.hpp"
#include "kutate/borel.hpp"
#include "kutate/resolve.hpp"
#include "kutate/serialize.hpp"
#include "kutate/tate.hpp"
#include "kutate/verify.hpp"

namespace kutate::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Window {
    int lo = 0;
    int hi = 0;
};

Window parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--degrees", "expected lo:hi, got '" + text + "'");
    Window w;
    try {
        w.lo = std::stoi(text.substr(0, colon));
        w.hi = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--degrees", "expected integers in lo:hi, got '" + text + "'");
    }
    if (w.lo > w.hi) throw CLI::ValidationError("--degrees", "window is reversed");
    return w;
}

ModuleSymbol parse_symbol(const std::string& name) {
    if (name == "k") return ModuleSymbol::k();
    if (name == "M") return ModuleSymbol::m();
    if (name == "N") return ModuleSymbol::n();
    if (name == "H") return ModuleSymbol::h();
    throw CLI::ValidationError("symbol", "expected one of k, M, N, H; got '" + name + "'");
}

void emit(const Json& request, const Json& result, const std::string& format, std::ostream& out) {
    Json report{{"request", request},
                {"result", result},
                {"version", kVersion},
                {"exact", true}};
    if (format == "json")
        out << report.dump(2) << "\n";
    else
        out << render_text(report);
}

Json check_to_json(const SuiteCheck& check) {
    Json j{{"name", check.name}};
    switch (check.status) {
        case CheckStatus::Pass: j["status"] = "pass"; break;
        case CheckStatus::Fail: j["status"] = "fail"; break;
        case CheckStatus::Skip: j["status"] = "skip"; break;
    }
    if (!check.detail.empty()) j["detail"] = check.detail;
    return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Poincare-series calculator for Borel and Tate (co)homology of "
                 "connective K-theory over elementary abelian groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int p = 2, n = 0, j = 0, r = 0, r_max = 10, p_max = 5, n_max = 6;
    std::string degrees, method = "closed", theory = "tate", sym_a = "M", sym_b = "M";

    auto* bh = app.add_subcommand("borel-homology", "Wedge decomposition of k smash B(Z/p)^n_+");
    bh->add_option("--p", p, "prime")->required();
    bh->add_option("--n", n, "rank")->required();
    bh->add_option("--method", method, "closed or recursive")
        ->check(CLI::IsMember({"closed", "recursive"}));

    auto* bc = app.add_subcommand("borel-cohomology", "Wedge decomposition of F(B(Z/p)^n_+, k)");
    bc->add_option("--p", p, "prime")->required();
    bc->add_option("--n", n, "rank")->required();
    bc->add_option("--method", method, "closed or recursive")
        ->check(CLI::IsMember({"closed", "recursive"}));

    auto* ta = app.add_subcommand("tate", "Tate cohomology decomposition over (Z/p)^n");
    ta->add_option("--p", p, "prime")->required();
    ta->add_option("--n", n, "rank")->required();

    auto* ho = app.add_subcommand("homotopy", "Per-degree homotopy groups");
    ho->add_option("--p", p, "prime")->required();
    ho->add_option("--n", n, "rank")->required();
    ho->add_option("--degrees", degrees, "window lo:hi")->required();
    ho->add_option("--theory", theory, "tate or borel-homology")
        ->check(CLI::IsMember({"tate", "borel-homology"}));

    auto* to = app.add_subcommand("tor", "Degreewise Tor of two module symbols, by the SNF oracle");
    to->add_option("--p", p, "prime")->required();
    to->add_option("--a", sym_a, "first symbol: k, M, N or H")->required();
    to->add_option("--b", sym_b, "second symbol: k, M, N or H")->required();
    to->add_option("--j", j, "homological degree 0, 1 or 2")->required();
    to->add_option("--degrees", degrees, "window lo:hi")->required();

    auto* bg = app.add_subcommand("bg-check", "Telescoped-sum reconciliation identities");
    auto* r_opt = bg->add_option("--r", r, "single rank");
    bg->add_option("--r-max", r_max, "check every rank from 2 up")->excludes(r_opt);

    auto* va = app.add_subcommand("verify-all", "Run every identity suite");
    va->add_option("--p-max", p_max, "largest prime");
    va->add_option("--n-max", n_max, "largest rank (odd primes capped at 4)");
    va->add_option("--degrees", degrees, "window lo:hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bh->parsed() || bc->parsed()) {
            Json request{{"subcommand", bh->parsed() ? "borel-homology" : "borel-cohomology"},
                         {"p", p},
                         {"n", n},
                         {"method", method}};
            BorelResult result;
            if (bh->parsed())
                result = method == "closed" ? borel_homology_closed(p, n)
                                            : borel_homology_recursive(p, n);
            else
                result = method == "closed" ? borel_cohomology_closed(p, n)
                                            : borel_cohomology_recursive(p, n);
            emit(request, borel_to_json(result), format, out);
            return 0;
        }
        if (ta->parsed()) {
            Json request{{"subcommand", "tate"}, {"p", p}, {"n", n}};
            emit(request, tate_to_json(tate_decomposition(p, n)), format, out);
            return 0;
        }
        if (ho->parsed()) {
            Window w = parse_window(degrees);
            Json request{{"subcommand", "homotopy"}, {"p", p},         {"n", n},
                         {"lo", w.lo},               {"hi", w.hi},     {"theory", theory}};
            GradedAbelianGroup groups = theory == "tate" ? tate_homotopy(p, n, w.lo, w.hi)
                                                         : homology_coefficients(p, n, w.lo, w.hi);
            emit(request, graded_group_to_json(groups), format, out);
            return 0;
        }
        if (to->parsed()) {
            Window w = parse_window(degrees);
            Json request{{"subcommand", "tor"}, {"p", p},     {"a", sym_a}, {"b", sym_b},
                         {"j", j},              {"lo", w.lo}, {"hi", w.hi}};
            GradedAbelianGroup groups =
                tor(parse_symbol(sym_a), parse_symbol(sym_b), j, p, w.lo, w.hi);
            emit(request, graded_group_to_json(groups), format, out);
            return 0;
        }
        if (bg->parsed()) {
            const int r_lo = r_opt->count() > 0 ? r : 2;
            const int r_hi = r_opt->count() > 0 ? r : r_max;
            Json request{{"subcommand", "bg-check"}, {"r_lo", r_lo}, {"r_hi", r_hi}};
            Json ranks = Json::array();
            bool all_hold = true;
            for (int rr = r_lo; rr <= r_hi; ++rr) {
                Json identities = Json::array();
                for (const IdentityCheck& check : bg_identities(rr)) {
                    identities.push_back(Json{{"name", check.name}, {"holds", check.holds}});
                    all_hold = all_hold && check.holds;
                }
                ranks.push_back(Json{{"r", rr},
                                     {"sum", rf_to_json(bg_sum(rr))},
                                     {"closed", rf_to_json(bg_closed(rr))},
                                     {"ours", rf_to_json(ours(rr))},
                                     {"all_identities", std::move(identities)}});
            }
            emit(request, Json{{"ranks", std::move(ranks)}, {"all_hold", all_hold}}, format, out);
            return all_hold ? 0 : 1;
        }
        if (va->parsed()) {
            VerifyOptions options;
            options.p_max = p_max;
            options.n_max = n_max;
            if (!degrees.empty()) {
                Window w = parse_window(degrees);
                options.lo = w.lo;
                options.hi = w.hi;
            }
            Json request{{"subcommand", "verify-all"},
                         {"p_max", options.p_max},
                         {"n_max", options.n_max},
                         {"lo", options.lo},
                         {"hi", options.hi}};
            std::vector<SuiteReport> reports = verify_all(options);
            Json suites = Json::array();
            bool ok = true;
            for (const SuiteReport& report : reports) {
                Json checks = Json::array();
                for (const SuiteCheck& check : report.checks) checks.push_back(check_to_json(check));
                suites.push_back(Json{{"suite", report.suite},
                                      {"passed", report.all_passed()},
                                      {"checks", std::move(checks)}});
                ok = ok && report.all_passed();
            }
            emit(request, Json{{"suites", std::move(suites)}, {"all_passed", ok}}, format, out);
            return ok ? 0 : 1;
        }
    } catch (const InvalidPrime& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const WindowTooWide& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace kutate::cli
