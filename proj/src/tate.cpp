#include "kutate/tate.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "kutate/borel.hpp"
#include "kutate/errors.hpp"

namespace kutate {

namespace {

void require_inputs(int p, int n) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (n < 0) throw Error("rank must be nonnegative");
}

// (1 + w^{-2} + ... + w^{-2(p-1)})^n - w^{-2n(p-1)}
RationalFunction q_multiplicity_of(int p, int n) {
    RationalFunction s(geometric_sum(p, -2));
    return s.pow(n) - RationalFunction(LaurentPolynomial::monomial(1, -2 * n * (p - 1)));
}

// The first summand of the theorem's f, as printed for p = 2:
// w/((1-w^2)^2 (1-w)^{n-1}) * ((1-(1+w^2)^n(1-w)^n)/(1-(1+w^2)(1-w)) - (1-(1-w)^n)/(1-(1-w)))
RationalFunction f_hom_p2(int n) {
    const RationalFunction one(1);
    const RationalFunction a(lp_one() + lp_w(2));
    const RationalFunction b(lp_one() - lp_w(1));
    const RationalFunction bracket =
        (one - a.pow(n) * b.pow(n)) / (one - a * b) - (one - b.pow(n)) / (one - b);
    return rf_w(1) * RationalFunction(lp_one() - lp_w(2)).pow(-2) * b.pow(-(n - 1)) * bracket;
}

RationalFunction f_coh_p2(int n) {
    const RationalFunction one(1);
    const RationalFunction a(lp_one() + lp_w(-2));
    const RationalFunction b(lp_one() - lp_w(-1));
    const RationalFunction bracket =
        (one - a.pow(n) * b.pow(n)) / (one - a * b) - (one - b.pow(n)) / (one - b);
    return RationalFunction(lp_one() - lp_w(-2)).pow(-2) * b.pow(-(n - 1)) * bracket;
}

// The odd-p form of the theorem (which at p = 2 must agree with the above).
RationalFunction f_hom_general(int p, int n) {
    const RationalFunction one(1);
    const RationalFunction s(geometric_sum(p, 2));
    const RationalFunction b(lp_one() - lp_w(1));
    const RationalFunction bracket =
        (one - s.pow(n) * b.pow(n)) / (one - s * b) - (one - b.pow(n)) / (one - b);
    return rf_w(1) *
           (RationalFunction(lp_one() - lp_w(2 * (p - 1))) * RationalFunction(lp_one() - lp_w(2)))
               .pow(-1) *
           b.pow(-(n - 1)) * bracket;
}

RationalFunction f_coh_general(int p, int n) {
    const RationalFunction one(1);
    const RationalFunction s(geometric_sum(p, -2));
    const RationalFunction b(lp_one() - lp_w(-1));
    const RationalFunction bracket =
        (one - s.pow(n) * b.pow(n)) / (one - s * b) - (one - b.pow(n)) / (one - b);
    return (RationalFunction(lp_one() - lp_w(-2 * (p - 1))) * RationalFunction(lp_one() - lp_w(-2)))
               .pow(-1) *
           b.pow(-(n - 1)) * bracket;
}

}  // namespace

TateResult tate_decomposition(int p, int n) {
    require_inputs(p, n);
    TateResult result;
    result.prime = p;
    result.n = n;
    result.q_multiplicity = q_multiplicity_of(p, n);
    if (p == 2) {
        result.f_hom = f_hom_p2(n);
        result.f_coh = f_coh_p2(n);
    } else {
        result.f_hom = f_hom_general(p, n);
        result.f_coh = f_coh_general(p, n);
    }
    return result;
}

bool consistency_check(int p, int n) {
    TateResult t = tate_decomposition(p, n);
    RationalFunction q_hom = homology_h_multiplicity(p, n);
    RationalFunction q_coh = cohomology_h_multiplicity(p, n);
    return t.f_hom + t.f_coh == rf_w(1) * q_hom + q_coh;
}

GradedAbelianGroup tate_homotopy(int p, int n, int lo, int hi) {
    require_inputs(p, n);
    if (lo > hi) throw Error("window is reversed");
    TateResult t = tate_decomposition(p, n);
    GradedAbelianGroup result(lo, hi);

    // Every copy of Q_n contributes one Z_p in each degree of its shift's
    // parity; all shifts in the q multiplicity are even.
    if (!t.q_multiplicity.is_polynomial()) throw Error("q multiplicity must be a polynomial");
    Int even_rank = 0;
    for (const auto& [s, c] : t.q_multiplicity.num().terms()) {
        if (c < 0) throw Error("negative Q multiplicity");
        if (s % 2 != 0) throw Error("odd shift in Q multiplicity");
        even_rank += c;
    }
    for (int d = lo; d <= hi; ++d)
        if (d % 2 == 0) result.add_free(d, even_rank);

    // Z/p torsion: f's two directed expansions, spread over the internal
    // degrees 0, 2, ..., 2(p-2) of H.
    const int internal_top = 2 * (p - 2);
    CoefficientTable hom = t.f_hom.expand(Direction::AtZero, lo - internal_top, hi);
    CoefficientTable coh = t.f_coh.expand(Direction::AtInfinity, lo - internal_top, hi);
    for (int s = lo - internal_top; s <= hi; ++s) {
        Int c = hom.at(s) + coh.at(s);
        if (c < 0) throw Error("negative H multiplicity in Tate decomposition");
        if (c == 0) continue;
        for (int k = 0; k <= internal_top; k += 2) {
            int d = s + k;
            if (d >= lo && d <= hi) result.add_torsion(d, p, c);
        }
    }
    return result;
}

QnCoefficients::Band QnCoefficients::band(int j) const {
    int d = 2 * j;
    if (d < 0) return Band::Lower;
    if (d <= middle_max) return Band::Middle;
    if (d >= upper_min) return Band::Upper;
    return Band::Intermediate;  // odd p only; inferred, not printed
}

QnCoefficients qn_postnikov_profile(int p, int n) {
    require_inputs(p, n);
    if (n < 1) throw Error("profile requires rank >= 1");
    QnCoefficients q;
    q.prime = p;
    q.n = n;
    q.middle_max = 2 * (p - 1) * (n - 1);
    q.upper_min = 2 * (p - 1) * n;
    return q;
}

int qn_valuation(int p, int n, int m) {
    require_inputs(p, n);
    if (n < 1) throw Error("Q_n requires rank >= 1");
    // Q_n is the Z_p[beta, p/beta^{p-1}]-submodule of Q_p[beta, beta^{-1}]
    // generated by 1 and beta^{(p-1)(n-1)} (beta^{p-1}/p)^i, i >= 1. A ring
    // monomial beta^a (p/beta^{p-1})^b contributes valuation b and degree
    // shift a - b(p-1) with a, b >= 0. Enumerate generator times monomial
    // landing in degree 2m and take the smallest valuation.
    const int step = p - 1;
    int best = 0;
    bool found = false;
    // Generator exponents (valuation v0, beta exponent e0).
    std::vector<std::pair<int, int>> generators = {{0, 0}};
    // Past i ~ m/step - n the valuation stabilizes; a small cushion suffices.
    const int max_i = std::max(1, std::abs(m) / step + n + 4);
    for (int i = 1; i <= max_i; ++i) generators.emplace_back(-i, step * (n - 1 + i));
    for (auto [v0, e0] : generators) {
        // Need a - b(p-1) = m - e0 with a, b >= 0; minimal b is
        // max(0, ceil((e0 - m)/step)); valuation is v0 + b.
        int deficit = e0 - m;
        int b = deficit <= 0 ? 0 : (deficit + step - 1) / step;
        int v = v0 + b;
        if (!found || v < best) {
            best = v;
            found = true;
        }
    }
    return best;
}

}  // namespace kutate
