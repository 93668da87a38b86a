#pragma once

#include "kutate/graded_group.hpp"
#include "kutate/grmod.hpp"
#include "kutate/laurent.hpp"

namespace kutate {

enum class Side { Homology, Cohomology };
enum class Method { Recursive, ClosedForm };

struct BorelResult {
    int prime = 2;
    int n = 0;
    Side side = Side::Homology;
    Method method = Method::ClosedForm;
    Decomposition decomposition{2};
};

/// k smashed with B(Z/p)^n_+, built by smashing one classifying space at a
/// time through the product table. Result uses {k, M, H}.
BorelResult borel_homology_recursive(int p, int n);

/// Same decomposition from the closed forms: M-multiplicity
/// w^{-3}((1+w^2+...+w^{2(p-1)})^n - 1) and the bracketed H-multiplicity.
BorelResult borel_homology_closed(int p, int n);

/// Function spectrum F(B(Z/p)^n_+, k) from the closed forms, multiplicities
/// reported in the printed convention. Result uses {k, P, H}.
BorelResult borel_cohomology_closed(int p, int n);

/// Same by iterated hat-smash against the rank-one case, re-expressed in the
/// printed convention; must agree with the closed form exactly.
BorelResult borel_cohomology_recursive(int p, int n);

/// Per-degree coefficient groups of Borel homology, assembled from the
/// decomposition with every module's graded pieces computed by the Smith
/// normal form oracle.
GradedAbelianGroup homology_coefficients(int p, int n, int lo, int hi);

/// The two closed-form multiplicity series, exposed for cross-checks.
RationalFunction homology_m_multiplicity(int p, int n);
RationalFunction homology_h_multiplicity(int p, int n);
RationalFunction cohomology_p_multiplicity(int p, int n);
RationalFunction cohomology_h_multiplicity(int p, int n);

}  // namespace kutate
