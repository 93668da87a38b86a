#pragma once

#include <map>
#include <string>
#include <vector>

#include "kutate/bigint.hpp"
#include "kutate/errors.hpp"

namespace kutate {

/// Integer Laurent polynomial in one formal variable, stored in canonical
/// form: finite support, no zero coefficients.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Int& constant);
    explicit LaurentPolynomial(long constant);

    static LaurentPolynomial monomial(const Int& coeff, int degree);
    static LaurentPolynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Lowest/highest degree with a nonzero coefficient. Throws on zero.
    int lowest_degree() const;
    int highest_degree() const;
    const Int& leading_coeff_low() const;
    const Int& leading_coeff_high() const;

    /// Coefficient at a degree (zero when absent).
    const Int& coeff(int degree) const;

    const std::map<int, Int>& terms() const { return coeffs_; }

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const Int& scalar) const;
    bool operator==(const LaurentPolynomial& other) const = default;

    /// Multiplication by w^k.
    LaurentPolynomial shifted(int k) const;
    /// Substitution w -> w^{-1}.
    LaurentPolynomial inverted() const;
    /// Substitution w -> -w.
    LaurentPolynomial negated_variable() const;
    LaurentPolynomial pow(unsigned exponent) const;

    /// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
    Int content() const;
    LaurentPolynomial divided_by_content(const Int& c) const;

    /// true when every nonzero degree is a multiple of `stride`.
    bool supported_on_multiples_of(int stride) const;

    /// Sub-polynomial of the terms with degree >= cut.
    LaurentPolynomial tail_from_degree(int cut) const;

    std::string to_string(const std::string& var = "w") const;

  private:
    std::map<int, Int> coeffs_;
    void set(int degree, Int value);
    friend class RationalFunction;
};

enum class Direction {
    AtZero,      // expand in ascending powers of w
    AtInfinity,  // expand in ascending powers of w^{-1}
};

/// Integer coefficients of a formal expansion on an inclusive degree window.
struct CoefficientTable {
    int lo = 0;
    int hi = -1;
    std::vector<Int> values;  // indexed by degree - lo

    CoefficientTable() = default;
    CoefficientTable(int lo_, int hi_);

    const Int& at(int degree) const;
    Int& at(int degree);
    bool all_nonnegative() const;
    bool operator==(const CoefficientTable& other) const = default;
};

/// Exact quotient of two Laurent polynomials.
///
/// Canonical form: the denominator's lowest-degree term sits in degree 0 with
/// a positive coefficient, and the common integer content of numerator and
/// denominator is 1. Full polynomial gcd reduction is not performed; equality
/// is decided by cross-multiplication.
class RationalFunction {
  public:
    RationalFunction();  // 0/1
    explicit RationalFunction(LaurentPolynomial numerator);
    RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);
    explicit RationalFunction(long constant);

    static RationalFunction monomial(const Int& coeff, int degree);

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator-(const RationalFunction& other) const;
    RationalFunction operator*(const RationalFunction& other) const;
    /// Exact division; throws Error when dividing by zero.
    RationalFunction operator/(const RationalFunction& other) const;
    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);

    /// w^k * this.
    RationalFunction shifted(int k) const;
    /// this^k; negative k inverts (throws Error on zero).
    RationalFunction pow(int exponent) const;
    /// Substitution w -> w^{-1}.
    RationalFunction inverted() const;
    /// Substitution w -> -w.
    RationalFunction negated_variable() const;

    /// Cross-multiplication equality: a.num*b.den == b.num*a.den.
    bool operator==(const RationalFunction& other) const;

    /// Formal-series coefficients in the chosen direction, restricted to
    /// [lo, hi]. Throws NonUnitLeadingTerm when the expansion is not defined
    /// over the integers in that direction.
    CoefficientTable expand(Direction dir, int lo, int hi) const;

    std::string to_string(const std::string& var = "w") const;

  private:
    LaurentPolynomial num_;
    LaurentPolynomial den_;
    void canonicalize();
};

/// Convenience builders used throughout the closed-form formulas.
LaurentPolynomial lp_one();
LaurentPolynomial lp_w(int degree = 1);
/// 1 + w^step + w^{2 step} + ... + w^{(count-1) step}
LaurentPolynomial geometric_sum(int count, int step);
RationalFunction rf_w(int degree);

}  // namespace kutate
