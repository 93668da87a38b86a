#include "kutate/bg.hpp"

#include "kutate/errors.hpp"

namespace kutate {

namespace {

void require_rank(int r) {
    if (r < 2) throw IndexOutOfRange("rank must be at least 2, got " + std::to_string(r));
}

// (-t)^{4-i} as a Laurent monomial.
LaurentPolynomial signed_power(int i) {
    return LaurentPolynomial::monomial(i % 2 == 0 ? 1 : -1, 4 - i);
}

LaurentPolynomial one_minus(int degree) { return lp_one() - lp_w(degree); }
LaurentPolynomial one_plus(int degree) { return lp_one() + lp_w(degree); }

// Sum over i of (-t)^{4-i} ((1-x)^r)_{[i]}.
LaurentPolynomial part1_sum(int r) {
    LaurentPolynomial total;
    const LaurentPolynomial base = one_minus(2).pow(static_cast<unsigned>(r));
    for (int i = 2; i <= r; ++i) total += signed_power(i) * tail(base, i);
    return total;
}

// Sum over i of (-t)^{4-i} (x^{1-i}(1-x^2)^r)_{[i]}.
LaurentPolynomial part2_sum(int r) {
    LaurentPolynomial total;
    const LaurentPolynomial base = one_minus(4).pow(static_cast<unsigned>(r));
    for (int i = 2; i <= r; ++i)
        total += signed_power(i) * tail(base.shifted(2 * (1 - i)), i);
    return total;
}

// t^3/(1+t) [ t((1+t)^r - 1) + ((1-t^2)^r - 1) ]
RationalFunction part1_closed(int r) {
    LaurentPolynomial bracket = lp_w(1) * (one_plus(1).pow(static_cast<unsigned>(r)) - lp_one()) +
                                (one_minus(2).pow(static_cast<unsigned>(r)) - lp_one());
    return RationalFunction(lp_w(3) * bracket, one_plus(1));
}

// t^3/(1+t^3) [ t^3((1+t)^r - 1) + ((1-t^4)^r - 1) ]
RationalFunction part2_closed(int r) {
    LaurentPolynomial bracket = lp_w(3) * (one_plus(1).pow(static_cast<unsigned>(r)) - lp_one()) +
                                (one_minus(4).pow(static_cast<unsigned>(r)) - lp_one());
    return RationalFunction(lp_w(3) * bracket, one_plus(3));
}

// The four-term regrouping of the sum after substituting u = -t, evaluated
// back in t.
RationalFunction withneg_formula(int r) {
    const RationalFunction one(1);
    const RationalFunction u4(lp_w(4)), u3(lp_w(3)), u6(lp_w(6));
    const RationalFunction du1(one_minus(1)), du3(one_minus(3));
    const RationalFunction pow_u = RationalFunction(one_minus(1)).pow(r);      // (1-u)^r
    const RationalFunction pow_u2 = RationalFunction(one_minus(2)).pow(r);     // (1-u^2)^r
    const RationalFunction pow_u4 = RationalFunction(one_minus(4)).pow(r);     // (1-u^4)^r
    RationalFunction bracket = u4 / du1 * (pow_u - one) - u3 / du1 * (pow_u2 - one) -
                               u6 / du3 * (pow_u - one) + u3 / du3 * (pow_u4 - one);
    RationalFunction in_u = RationalFunction(one_minus(2)).pow(-(r + 1)) * bracket;
    return in_u.negated_variable();  // u = -t
}

}  // namespace

LaurentPolynomial tail(const LaurentPolynomial& f, int i) {
    if (!f.supported_on_multiples_of(2))
        throw Error("tail operator expects a polynomial in x = t^2");
    return f.tail_from_degree(2 * i);
}

RationalFunction bg_Ti(int r, int i) {
    require_rank(r);
    if (i < 2 || i > r)
        throw IndexOutOfRange("summand index " + std::to_string(i) + " outside 2.." + std::to_string(r));
    const LaurentPolynomial first = tail(one_minus(2).pow(static_cast<unsigned>(r)), i);
    const LaurentPolynomial second =
        tail(one_minus(4).pow(static_cast<unsigned>(r)).shifted(2 * (1 - i)), i);
    return RationalFunction(signed_power(i) * (first - second),
                            one_minus(2).pow(static_cast<unsigned>(r + 1)));
}

RationalFunction bg_sum(int r) {
    require_rank(r);
    RationalFunction total;
    for (int i = 2; i <= r; ++i) total += bg_Ti(r, i);
    return total;
}

RationalFunction bg_closed(int r) {
    require_rank(r);
    const RationalFunction one(1);
    RationalFunction first = (RationalFunction(one_plus(2)).pow(r) - one) / RationalFunction(one_minus(2));
    RationalFunction second = rf_w(1) * (RationalFunction(one_minus(1)).pow(r) - one) /
                              (RationalFunction(one_minus(1)).pow(r) * RationalFunction(one_plus(1)));
    return -RationalFunction(lp_w(3), one_plus(3)) * (first + second);
}

RationalFunction ours(int r) {
    if (r < 0) throw IndexOutOfRange("rank must be nonnegative");
    const RationalFunction one(1);
    const RationalFunction a(one_plus(2));   // 1 + w^2
    const RationalFunction b(one_minus(1));  // 1 - w
    const RationalFunction bracket =
        (one - a.pow(r) * b.pow(r)) / (one - a * b) - (one - b.pow(r)) / (one - b);
    return RationalFunction(one_minus(2)).pow(-2) * b.pow(-(r - 1)) * bracket;
}

bool bg_vs_ours(int r) {
    require_rank(r);
    return bg_sum(r).shifted(-4) == ours(r);
}

std::vector<IdentityCheck> bg_identities(int r) {
    require_rank(r);
    std::vector<IdentityCheck> checks;

    const LaurentPolynomial p1 = part1_sum(r);
    const LaurentPolynomial p2 = part2_sum(r);
    checks.push_back({"part1-closed-form", RationalFunction(p1) == part1_closed(r)});
    checks.push_back({"part2-closed-form", RationalFunction(p2) == part2_closed(r)});

    const RationalFunction sum = bg_sum(r);
    checks.push_back({"telescoped-sum-assembles-from-parts",
                      sum == RationalFunction(p1 - p2, one_minus(2).pow(static_cast<unsigned>(r + 1)))});

    // Column regrouping after u = -t: u^4/(1-u) - u^6/(1-u^3) collapses to
    // u^4(1+u)/(1-u^3) against the common bracket (1-u)^r - 1.
    const RationalFunction bracket_u = RationalFunction(one_minus(1)).pow(r) - RationalFunction(1);
    const RationalFunction lhs =
        (RationalFunction(lp_w(4), one_minus(1)) - RationalFunction(lp_w(6), one_minus(3))) * bracket_u;
    const RationalFunction rhs =
        RationalFunction(lp_w(4) * one_plus(1), one_minus(3)) * bracket_u;
    checks.push_back({"column-regrouping", lhs == rhs});

    checks.push_back({"sign-substitution", sum == withneg_formula(r)});
    checks.push_back({"closed-form-equals-sum", sum == bg_closed(r)});

    // Numerator regrouping of the final comparison, with a = 1+w^2, b = 1-w.
    const LaurentPolynomial a = one_plus(2);
    const LaurentPolynomial b = one_minus(1);
    const LaurentPolynomial ar = a.pow(static_cast<unsigned>(r));
    const LaurentPolynomial br = b.pow(static_cast<unsigned>(r));
    const LaurentPolynomial numerator =
        (lp_one() - ar * br) * (lp_one() - b) - (lp_one() - a * b) * (lp_one() - br);
    const LaurentPolynomial term1 = -(lp_w(1) * ar * br);
    const LaurentPolynomial term2 = lp_w(2) * b;
    const LaurentPolynomial term3 = lp_w(1) * br - lp_w(2) * br * b;
    checks.push_back({"numerator-regrouping", numerator == term1 + term2 + term3});
    checks.push_back(
        {"denominator-factor", (lp_one() - a * b) * (lp_one() - b) == lp_w(2) * (lp_one() - lp_w(1) + lp_w(2))});

    checks.push_back({"shifted-equals-borel-multiplicity", bg_vs_ours(r)});
    return checks;
}

}  // namespace kutate
