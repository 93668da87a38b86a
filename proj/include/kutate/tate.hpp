#pragma once

#include "kutate/graded_group.hpp"
#include "kutate/laurent.hpp"

namespace kutate {

/// Tate cohomology of connective K-theory over (Z/p)^n, as a Q_n part and an
/// H part. The H multiplicity f is kept as two directed summands: f_hom
/// expands at zero, f_coh at infinity; they are never combined into one
/// series.
struct TateResult {
    int prime = 2;
    int n = 0;
    RationalFunction q_multiplicity;  // Laurent polynomial in w^{-2}
    RationalFunction f_hom;
    RationalFunction f_coh;
};

/// Postnikov-style profile of Q_n's coefficients: one copy of the p-adic
/// integers in every even degree, organized into bookkeeping bands.
struct QnCoefficients {
    int prime = 2;
    int n = 1;
    int middle_max = 0;  // top degree of the truncated connective band
    int upper_min = 0;   // bottom degree of the upper Eilenberg-MacLane band

    enum class Band { Lower, Middle, Intermediate, Upper };
    Band band(int j) const;  // band of the degree-2j piece

    /// p-adic rank of pi_d; 1 for even d, 0 for odd d.
    int rank(int d) const { return d % 2 == 0 ? 1 : 0; }
};

TateResult tate_decomposition(int p, int n);

/// Structural check that the Tate H part is the homology H part shifted up
/// by one plus the cohomology H part: f == w*q_hom + q_coh exactly.
bool consistency_check(int p, int n);

/// Per-degree homotopy of the Tate spectrum: p-adic free rank from the Q_n
/// copies, Z/p torsion from f expanded in its two directions and spread over
/// the internal degrees of H.
GradedAbelianGroup tate_homotopy(int p, int n, int lo, int hi);

QnCoefficients qn_postnikov_profile(int p, int n);

/// Lattice oracle for Q_n: smallest p-valuation occurring in the degree-2m
/// piece, by enumerating module multiples of the defining generators.
/// Every even degree carries exactly one copy of Z_p; this function exposes
/// the valuation so tests can check the enumeration against the closed form.
int qn_valuation(int p, int n, int m);

}  // namespace kutate
