#include "kutate/verify.hpp"

#include <algorithm>

#include "kutate/bg.hpp"
#include "kutate/borel.hpp"
#include "kutate/resolve.hpp"
#include "kutate/tate.hpp"

namespace kutate {

bool SuiteReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const SuiteCheck& c) { return c.status == CheckStatus::Fail; });
}

void SuiteReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail,
                      pass ? std::string() : std::move(detail)});
}

void SuiteReport::skip(std::string name, std::string reason) {
    checks.push_back({std::move(name), CheckStatus::Skip, std::move(reason)});
}

namespace {

std::vector<int> primes_up_to(int p_max) {
    std::vector<int> primes;
    for (int p = 2; p <= p_max; ++p)
        if (is_prime(p)) primes.push_back(p);
    if (primes.empty()) primes.push_back(2);
    return primes;
}

int rank_cap(int p, int n_max) { return p == 2 ? n_max : std::min(n_max, 4); }

std::string at(int p, int n) { return "p=" + std::to_string(p) + " n=" + std::to_string(n); }

SuiteReport product_table_suite(const std::vector<int>& primes) {
    SuiteReport report{"product-table", {}};
    report.add("p2-specialization", specialize_p2_check());
    for (int p : primes) {
        Decomposition a(p), b(p), c(p);
        a.add(ModuleSymbol::k(), RationalFunction(1));
        a.add(ModuleSymbol::m(), RationalFunction(lp_w(-1) + lp_w(2)));
        b.add(ModuleSymbol::k(), RationalFunction(2));
        b.add(ModuleSymbol::m(), RationalFunction(lp_w(3)));
        c.add(ModuleSymbol::m(), RationalFunction(lp_one() + lp_w(1)));

        report.add("commutative p=" + std::to_string(p),
                   smash(a, b, SmashKind::OrdinarySmash) == smash(b, a, SmashKind::OrdinarySmash));
        report.add("associative p=" + std::to_string(p),
                   smash(smash(a, b, SmashKind::OrdinarySmash), c, SmashKind::OrdinarySmash) ==
                       smash(a, smash(b, c, SmashKind::OrdinarySmash), SmashKind::OrdinarySmash));

        Decomposition unit(p);
        unit.add(ModuleSymbol::k(), RationalFunction(1));
        report.add("unit p=" + std::to_string(p), smash(a, unit, SmashKind::OrdinarySmash) == a);

        bool shift_ok = smash(a.scaled(rf_w(2)), b, SmashKind::OrdinarySmash) ==
                        smash(a, b, SmashKind::OrdinarySmash).scaled(rf_w(2));
        report.add("shift-equivariance p=" + std::to_string(p), shift_ok);

        auto mm = product_table(ModuleSymbol::m(), ModuleSymbol::m(), SmashKind::OrdinarySmash, p);
        auto pp = product_table(ModuleSymbol::p(), ModuleSymbol::p(), SmashKind::HatSmash, p);
        bool nonneg =
            mm.multiplicity(ModuleSymbol::h()).expand(Direction::AtZero, 0, 40).all_nonnegative() &&
            pp.multiplicity(ModuleSymbol::h()).expand(Direction::AtInfinity, -40, 0).all_nonnegative();
        report.add("row-nonnegativity p=" + std::to_string(p), nonneg);
    }
    return report;
}

SuiteReport oracle_suite(const std::vector<int>& primes, int lo, int hi) {
    SuiteReport report{"resolution-oracle", {}};
    const auto m = ModuleSymbol::m(), n = ModuleSymbol::n(), h = ModuleSymbol::h();
    for (int p : primes) {
        const int margin = oracle_margin(p);
        const std::vector<std::pair<ModuleSymbol, ModuleSymbol>> rows = {{m, m}, {m, h}, {h, m}};
        for (const auto& [a, b] : rows) {
            std::string name = "table-row " + a.name() + "*" + b.name() + " p=" + std::to_string(p);
            try {
                report.add(name, verify_table_row(a, b, p, lo, hi), "oracle disagrees with table");
            } catch (const WindowTooWide& e) {
                report.skip(name, e.what());
            }
        }
        // Vanishing statements: Tor_2(M or N, W) = 0 and Tor_1 where stated.
        const int vhi = hi - margin;
        if (vhi < lo) {
            report.skip("tor-vanishing p=" + std::to_string(p), "window cannot honor the safety margin");
            continue;
        }
        bool vanishing = true;
        std::string detail;
        for (const ModuleSymbol& a : {m, n})
            for (const ModuleSymbol& w : {m, n, h, ModuleSymbol::k()}) {
                GradedAbelianGroup t2 = tor(a, w, 2, p, lo, vhi, hi);
                if (!t2.nonzero_degrees().empty()) {
                    vanishing = false;
                    detail = "Tor_2(" + a.name() + "," + w.name() + ") nonzero";
                }
            }
        for (const auto& [a, b] : std::vector<std::pair<ModuleSymbol, ModuleSymbol>>{{m, n}, {n, n}}) {
            GradedAbelianGroup t1 = tor(a, b, 1, p, lo, vhi, hi);
            if (!t1.nonzero_degrees().empty()) {
                vanishing = false;
                detail = "Tor_1(" + a.name() + "," + b.name() + ") nonzero";
            }
        }
        report.add("tor-vanishing p=" + std::to_string(p), vanishing, detail);
    }
    return report;
}

SuiteReport borel_suite(const std::vector<int>& primes, int n_max, int lo, int hi) {
    SuiteReport report{"borel", {}};
    for (int p : primes) {
        for (int n = 0; n <= rank_cap(p, n_max); ++n) {
            bool hom_ok = borel_homology_recursive(p, n).decomposition ==
                          borel_homology_closed(p, n).decomposition;
            report.add("homology-recursive-equals-closed " + at(p, n), hom_ok);

            bool coh_ok = borel_cohomology_recursive(p, n).decomposition ==
                          borel_cohomology_closed(p, n).decomposition;
            report.add("cohomology-recursive-equals-closed " + at(p, n), coh_ok);

            bool dual = cohomology_h_multiplicity(p, n) == homology_h_multiplicity(p, n).inverted();
            report.add("error-term-duality " + at(p, n), dual);

            bool nonneg =
                homology_m_multiplicity(p, n).expand(Direction::AtZero, lo, hi).all_nonnegative() &&
                homology_h_multiplicity(p, n).expand(Direction::AtZero, lo, hi).all_nonnegative() &&
                cohomology_p_multiplicity(p, n)
                    .expand(Direction::AtInfinity, lo, hi)
                    .all_nonnegative() &&
                cohomology_h_multiplicity(p, n)
                    .expand(Direction::AtInfinity, lo, hi)
                    .all_nonnegative();
            report.add("multiplicity-nonnegativity " + at(p, n), nonneg);
        }
    }
    return report;
}

SuiteReport tate_suite(const std::vector<int>& primes, int n_max, int lo, int hi) {
    SuiteReport report{"tate", {}};
    for (int p : primes) {
        for (int n = 0; n <= rank_cap(p, n_max); ++n) {
            report.add("norm-cofiber-consistency " + at(p, n), consistency_check(p, n));

            TateResult t = tate_decomposition(p, n);
            bool nonneg =
                t.q_multiplicity.expand(Direction::AtInfinity, lo, hi).all_nonnegative() &&
                t.f_hom.expand(Direction::AtZero, lo, hi).all_nonnegative() &&
                t.f_coh.expand(Direction::AtInfinity, lo, hi).all_nonnegative();
            report.add("multiplicity-nonnegativity " + at(p, n), nonneg);

            if (n >= 1) {
                bool coeffs = t.q_multiplicity.is_polynomial() &&
                              t.q_multiplicity.num().coeff(0) == 1 &&
                              t.q_multiplicity.num().coeff(-2 * n * (p - 1)) == 0;
                report.add("q-multiplicity-support " + at(p, n), coeffs);
            }
        }
    }
    return report;
}

SuiteReport bg_suite(int r_max) {
    SuiteReport report{"bruner-greenlees", {}};
    for (int r = 2; r <= r_max; ++r) {
        for (const IdentityCheck& check : bg_identities(r))
            report.add(check.name + " r=" + std::to_string(r), check.holds);
        report.add("ours-equals-borel r=" + std::to_string(r),
                   ours(r) == homology_h_multiplicity(2, r));
    }
    return report;
}

}  // namespace

std::vector<SuiteReport> verify_all(const VerifyOptions& options) {
    std::vector<int> primes = primes_up_to(options.p_max);
    std::vector<SuiteReport> reports;
    reports.push_back(product_table_suite(primes));
    reports.push_back(oracle_suite(primes, options.lo, options.hi));
    reports.push_back(borel_suite(primes, options.n_max, options.lo, options.hi));
    reports.push_back(tate_suite(primes, options.n_max, options.lo, options.hi));
    reports.push_back(bg_suite(options.r_max));
    return reports;
}

}  // namespace kutate
