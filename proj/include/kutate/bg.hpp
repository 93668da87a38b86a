#pragma once

#include <string>
#include <vector>

#include "kutate/laurent.hpp"

namespace kutate {

/// Tail operator: the sub-series of f (a Laurent polynomial in x = t^2, i.e.
/// supported on even powers of t) consisting of terms of x-index >= i.
LaurentPolynomial tail(const LaurentPolynomial& f, int i);

/// The telescoped summand
///   [T_i] = (-t)^{4-i} [ (1-x)^r_{[i]} - (x^{1-i}(1-x^2)^r)_{[i]} ] / (1-x)^{r+1},
/// with x = t^2 and the tail cut taken after the monomial prefactor is
/// applied. Requires 2 <= i <= r.
RationalFunction bg_Ti(int r, int i);

/// [T_2] + [T_3] + ... + [T_r]. Requires r >= 2.
RationalFunction bg_sum(int r);

/// The telescoped closed form
///   -t^3/(1+t^3) [ ((1+t^2)^r-1)/(1-t^2) + t((1-t)^r-1)/((1-t)^r(1+t)) ].
RationalFunction bg_closed(int r);

/// The H-multiplicity of rank-r Borel homology at p = 2, in closed form.
RationalFunction ours(int r);

/// true iff t^{-4} * bg_sum(r) equals ours(r) exactly (the Start(2)
/// renormalization is multiplication by t^{-4}).
bool bg_vs_ours(int r);

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

/// Every intermediate identity of the derivation chain at one rank:
/// the two telescoped partial sums against their closed forms, the
/// sign-substitution step, the column regrouping, the numerator regrouping
/// with its denominator factor, the closed form against the sum, and the
/// final comparison with ours(r).
std::vector<IdentityCheck> bg_identities(int r);

}  // namespace kutate
