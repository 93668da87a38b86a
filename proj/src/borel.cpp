#include "kutate/borel.hpp"

#include "kutate/errors.hpp"
#include "kutate/resolve.hpp"

namespace kutate {

namespace {

void require_inputs(int p, int n) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (n < 0) throw Error("rank must be nonnegative");
}

// 1 + w^2 + ... + w^{2(p-1)}
LaurentPolynomial full_sum(int p) { return geometric_sum(p, 2); }
// 1 + w^2 + ... + w^{2(p-2)}
LaurentPolynomial short_sum(int p) { return geometric_sum(p - 1, 2); }

}  // namespace

RationalFunction homology_m_multiplicity(int p, int n) {
    RationalFunction s(full_sum(p));
    return (s.pow(n) - RationalFunction(1)).shifted(-3);
}

RationalFunction homology_h_multiplicity(int p, int n) {
    // 1/((1-w^{2(p-1)})(1-w^2)(1-w)^{n-1}) *
    //   ((1 - S^n (1-w)^n)/(1 - S(1-w)) - (1 - (1-w)^n)/(1 - (1-w)))
    const RationalFunction s(full_sum(p));
    const RationalFunction one(1);
    const RationalFunction b(lp_one() - lp_w(1));  // 1 - w
    const RationalFunction bracket =
        (one - s.pow(n) * b.pow(n)) / (one - s * b) - (one - b.pow(n)) / (one - b);
    const RationalFunction prefactor =
        (RationalFunction(lp_one() - lp_w(2 * (p - 1))) * RationalFunction(lp_one() - lp_w(2)))
            .pow(-1) *
        b.pow(-(n - 1));
    return prefactor * bracket;
}

RationalFunction cohomology_p_multiplicity(int p, int n) {
    RationalFunction s(full_sum(p).inverted());
    RationalFunction bare = s.pow(n) - RationalFunction(1);
    return p == 2 ? bare : bare.shifted(-1);
}

RationalFunction cohomology_h_multiplicity(int p, int n) {
    // The printed cohomology formula is the homology formula under w -> w^{-1};
    // it is built here directly in the inverted variable.
    const RationalFunction s(full_sum(p).inverted());
    const RationalFunction one(1);
    const RationalFunction b(lp_one() - lp_w(-1));  // 1 - w^{-1}
    const RationalFunction bracket =
        (one - s.pow(n) * b.pow(n)) / (one - s * b) - (one - b.pow(n)) / (one - b);
    const RationalFunction prefactor =
        (RationalFunction(lp_one() - lp_w(-2 * (p - 1))) * RationalFunction(lp_one() - lp_w(-2)))
            .pow(-1) *
        b.pow(-(n - 1));
    return prefactor * bracket;
}

BorelResult borel_homology_recursive(int p, int n) {
    require_inputs(p, n);
    Decomposition rank_one(p);
    rank_one.add(ModuleSymbol::k(), RationalFunction(1));
    rank_one.add(ModuleSymbol::m(), RationalFunction(short_sum(p).shifted(-1)));

    Decomposition dec(p);
    dec.add(ModuleSymbol::k(), RationalFunction(1));
    for (int i = 0; i < n; ++i) dec = smash(dec, rank_one, SmashKind::OrdinarySmash);

    return {p, n, Side::Homology, Method::Recursive, dec};
}

BorelResult borel_homology_closed(int p, int n) {
    require_inputs(p, n);
    Decomposition dec(p);
    dec.add(ModuleSymbol::k(), RationalFunction(1));
    dec.add(ModuleSymbol::m(), homology_m_multiplicity(p, n));
    dec.add(ModuleSymbol::h(), homology_h_multiplicity(p, n));
    return {p, n, Side::Homology, Method::ClosedForm, dec};
}

BorelResult borel_cohomology_closed(int p, int n) {
    require_inputs(p, n);
    Decomposition dec(p);
    dec.add(ModuleSymbol::k(), RationalFunction(1));
    dec.add(ModuleSymbol::p(), cohomology_p_multiplicity(p, n));
    dec.add(ModuleSymbol::h(), cohomology_h_multiplicity(p, n));
    return {p, n, Side::Cohomology, Method::ClosedForm, dec};
}

BorelResult borel_cohomology_recursive(int p, int n) {
    require_inputs(p, n);
    // Iterate in the definitional normalization, where the rank-one function
    // spectrum is k v P (1 + w^{-2} + ... + w^{-2(p-2)}).
    Decomposition rank_one(p);
    rank_one.add(ModuleSymbol::k(), RationalFunction(1));
    rank_one.add(ModuleSymbol::p(), RationalFunction(short_sum(p).inverted()));

    Decomposition dec(p);
    dec.add(ModuleSymbol::k(), RationalFunction(1));
    for (int i = 0; i < n; ++i) dec = smash(dec, rank_one, SmashKind::HatSmash);

    // Re-express in the printed convention: the P class of the propositions
    // is the shifted class (by w^{-2} at p = 2, w^{-3} at odd p), and the H
    // multiplicity compensates by w^2.
    Decomposition printed(p);
    printed.add(ModuleSymbol::k(), dec.multiplicity(ModuleSymbol::k()));
    printed.add(ModuleSymbol::p(), dec.multiplicity(ModuleSymbol::p()).shifted(p == 2 ? -2 : -3));
    printed.add(ModuleSymbol::h(), dec.multiplicity(ModuleSymbol::h()).shifted(2));
    return {p, n, Side::Cohomology, Method::Recursive, printed};
}

GradedAbelianGroup homology_coefficients(int p, int n, int lo, int hi) {
    require_inputs(p, n);
    BorelResult closed = borel_homology_closed(p, n);
    return decomposition_groups(closed.decomposition, lo, hi, Direction::AtZero);
}

}  // namespace kutate
