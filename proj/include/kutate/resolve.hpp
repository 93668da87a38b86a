#pragma once

#include <string>
#include <vector>

#include "kutate/graded_group.hpp"
#include "kutate/grmod.hpp"
#include "kutate/laurent.hpp"
#include "kutate/snf.hpp"

namespace kutate {

/// Polynomial in the Bott element; the exponent key maps to an integer
/// coefficient, and beta itself has internal degree 2.
using BetaPolynomial = std::map<int, Int>;

struct FreeGenerator {
    std::string name;
    int degree = 0;
};

struct GradedFreeModule {
    std::vector<FreeGenerator> generators;
};

/// Two-step presentation F1 -> F0 over Z[beta], truncated at degreeBound.
/// For ScrM and ScrN the differential is injective degreewise (a length-1
/// resolution); for Hmod it is the presentation killing (p, beta^{p-1}).
struct ResolutionSpec {
    GradedFreeModule f1;
    GradedFreeModule f0;
    // differential[row in f0][col in f1]
    std::vector<std::vector<BetaPolynomial>> differential;
    int degree_bound = 0;
};

inline constexpr int kDefaultDegreeBudget = 512;

/// Safety margin the oracle keeps beyond a requested window: twice the
/// largest shift a table row can introduce.
inline int oracle_margin(int p) { return 8 * (p - 1); }

ResolutionSpec resolution_of(const ModuleSymbol& sym, int p, int degree_bound);

/// Degreewise cokernel of the presentation differential, by Smith normal
/// form. Accepts FreeK directly.
GradedAbelianGroup coefficient_groups(const ModuleSymbol& sym, int p, int lo, int hi);

/// Tor_j over Z[beta] (Z_{(p)}[beta] for odd p, reported through its p-power
/// torsion) of the two module symbols, computed from the total complex of
/// their truncated free resolutions. Throws WindowTooWide when the window
/// plus safety margin exceeds the degree budget.
GradedAbelianGroup tor(const ModuleSymbol& a, const ModuleSymbol& b, int j, int p, int lo, int hi,
                       int degree_budget = kDefaultDegreeBudget);

/// Graded groups of a wedge decomposition, assembled from oracle-computed
/// groups of each symbol. `h_direction` fixes the expansion direction of
/// Hmod multiplicity series (AtZero on the homology side).
GradedAbelianGroup decomposition_groups(const Decomposition& dec, int lo, int hi,
                                        Direction h_direction = Direction::AtZero);

/// Checks a product-table row against the oracle on the window: the table's
/// graded groups must equal Tor_0 plus Tor_1 shifted up by one. The margin is
/// carved out of the given window; throws WindowTooWide when it cannot be.
bool verify_table_row(const ModuleSymbol& a, const ModuleSymbol& b, int p, int lo, int hi);

}  // namespace kutate
