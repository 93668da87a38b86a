#include "kutate/laurent.hpp"

#include <sstream>

namespace kutate {

namespace {
const Int kZero = 0;
}

LaurentPolynomial::LaurentPolynomial(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPolynomial::LaurentPolynomial(long constant) : LaurentPolynomial(Int(constant)) {}

LaurentPolynomial LaurentPolynomial::monomial(const Int& coeff, int degree) {
    LaurentPolynomial p;
    if (coeff != 0) p.coeffs_[degree] = coeff;
    return p;
}

bool LaurentPolynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentPolynomial::lowest_degree() const {
    if (is_zero()) throw Error("lowest_degree of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPolynomial::highest_degree() const {
    if (is_zero()) throw Error("highest_degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

const Int& LaurentPolynomial::leading_coeff_low() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.begin()->second;
}

const Int& LaurentPolynomial::leading_coeff_high() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.rbegin()->second;
}

const Int& LaurentPolynomial::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? kZero : it->second;
}

void LaurentPolynomial::set(int degree, Int value) {
    if (value == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(value);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial result;
    for (const auto& [d, c] : coeffs_) result.coeffs_[d] = -c;
    return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [d, c] : other.coeffs_) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            coeffs_[d] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [d, c] : other.coeffs_) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            coeffs_[d] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial result = *this;
    result += other;
    return result;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    LaurentPolynomial result = *this;
    result -= other;
    return result;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial result;
    for (const auto& [da, ca] : coeffs_)
        for (const auto& [db, cb] : other.coeffs_) {
            int d = da + db;
            auto it = result.coeffs_.find(d);
            if (it == result.coeffs_.end()) {
                result.coeffs_[d] = ca * cb;
            } else {
                it->second += ca * cb;
            }
        }
    for (auto it = result.coeffs_.begin(); it != result.coeffs_.end();) {
        if (it->second == 0)
            it = result.coeffs_.erase(it);
        else
            ++it;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::operator*(const Int& scalar) const {
    LaurentPolynomial result;
    if (scalar == 0) return result;
    for (const auto& [d, c] : coeffs_) result.coeffs_[d] = c * scalar;
    return result;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial result;
    for (const auto& [d, c] : coeffs_) result.coeffs_[d + k] = c;
    return result;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
    LaurentPolynomial result;
    for (const auto& [d, c] : coeffs_) result.coeffs_[-d] = c;
    return result;
}

LaurentPolynomial LaurentPolynomial::negated_variable() const {
    LaurentPolynomial result;
    for (const auto& [d, c] : coeffs_) result.coeffs_[d] = (d % 2 != 0) ? Int(-c) : c;
    return result;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
    LaurentPolynomial result(Int(1));
    LaurentPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

Int LaurentPolynomial::content() const {
    Int g = 0;
    for (const auto& [d, c] : coeffs_) {
        g = gcd_int(g, c);
        if (g == 1) break;
    }
    return g;
}

LaurentPolynomial LaurentPolynomial::divided_by_content(const Int& c) const {
    LaurentPolynomial result;
    for (const auto& [d, v] : coeffs_) result.coeffs_[d] = v / c;
    return result;
}

bool LaurentPolynomial::supported_on_multiples_of(int stride) const {
    for (const auto& [d, c] : coeffs_) {
        int r = d % stride;
        if (r != 0) return false;
    }
    return true;
}

LaurentPolynomial LaurentPolynomial::tail_from_degree(int cut) const {
    LaurentPolynomial result;
    for (auto it = coeffs_.lower_bound(cut); it != coeffs_.end(); ++it)
        result.coeffs_[it->first] = it->second;
    return result;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (d == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << var;
            if (d != 1) out << "^" << d;
        }
        first = false;
    }
    return out.str();
}

CoefficientTable::CoefficientTable(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw Error("coefficient table window is reversed");
    values.assign(static_cast<size_t>(hi - lo + 1), Int(0));
}

const Int& CoefficientTable::at(int degree) const {
    if (degree < lo || degree > hi) throw Error("degree outside coefficient table");
    return values[static_cast<size_t>(degree - lo)];
}

Int& CoefficientTable::at(int degree) {
    if (degree < lo || degree > hi) throw Error("degree outside coefficient table");
    return values[static_cast<size_t>(degree - lo)];
}

bool CoefficientTable::all_nonnegative() const {
    for (const Int& v : values)
        if (v < 0) return false;
    return true;
}

RationalFunction::RationalFunction() : num_(), den_(Int(1)) {}

RationalFunction::RationalFunction(LaurentPolynomial numerator)
    : num_(std::move(numerator)), den_(Int(1)) {}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
}

RationalFunction::RationalFunction(long constant) : num_(Int(constant)), den_(Int(1)) {}

RationalFunction RationalFunction::monomial(const Int& coeff, int degree) {
    return RationalFunction(LaurentPolynomial::monomial(coeff, degree));
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPolynomial(Int(1));
        return;
    }
    // Clear the common monomial factor: move the denominator's lowest term to
    // degree 0.
    int shift = -den_.lowest_degree();
    if (shift != 0) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    if (den_.leading_coeff_low() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int c = gcd_int(num_.content(), den_.content());
    if (c > 1) {
        num_ = num_.divided_by_content(c);
        den_ = den_.divided_by_content(c);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction result = *this;
    result.num_ = -result.num_;
    return result;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
    if (other.is_zero()) throw Error("division by zero rational function");
    return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
    *this = *this + other;
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
    *this = *this * other;
    return *this;
}

RationalFunction RationalFunction::shifted(int k) const {
    RationalFunction result = *this;
    result.num_ = result.num_.shifted(k);
    result.canonicalize();
    return result;
}

RationalFunction RationalFunction::pow(int exponent) const {
    if (exponent >= 0) {
        return RationalFunction(num_.pow(static_cast<unsigned>(exponent)),
                                den_.pow(static_cast<unsigned>(exponent)));
    }
    if (is_zero()) throw Error("negative power of zero rational function");
    return RationalFunction(den_.pow(static_cast<unsigned>(-exponent)),
                            num_.pow(static_cast<unsigned>(-exponent)));
}

RationalFunction RationalFunction::inverted() const {
    return RationalFunction(num_.inverted(), den_.inverted());
}

RationalFunction RationalFunction::negated_variable() const {
    return RationalFunction(num_.negated_variable(), den_.negated_variable());
}

bool RationalFunction::operator==(const RationalFunction& other) const {
    return num_ * other.den_ == other.num_ * den_;
}

CoefficientTable RationalFunction::expand(Direction dir, int lo, int hi) const {
    if (lo > hi) throw Error("expansion window is reversed");
    if (dir == Direction::AtInfinity) {
        CoefficientTable mirrored = inverted().expand(Direction::AtZero, -hi, -lo);
        CoefficientTable table(lo, hi);
        for (int d = lo; d <= hi; ++d) table.at(d) = mirrored.at(-d);
        return table;
    }
    CoefficientTable table(lo, hi);
    if (num_.is_zero()) return table;
    // Canonical form puts the denominator's lowest term in degree 0.
    const Int& unit = den_.leading_coeff_low();
    if (unit != 1 && unit != -1)
        throw NonUnitLeadingTerm("denominator's lowest coefficient is " + unit.str() +
                                 "; expansion at zero is not defined over the integers");
    int start = num_.lowest_degree();
    if (start > hi) return table;
    // Degreewise long division: c_j = (num_j - sum_{k>=1} den_k c_{j-k}) / den_0.
    std::vector<Int> series(static_cast<size_t>(hi - start + 1));
    for (int j = start; j <= hi; ++j) {
        Int value = num_.coeff(j);
        for (const auto& [k, dk] : den_.terms()) {
            if (k == 0) continue;
            if (k > j - start) break;
            value -= dk * series[static_cast<size_t>(j - k - start)];
        }
        if (unit == -1) value = -value;
        series[static_cast<size_t>(j - start)] = std::move(value);
    }
    for (int d = std::max(lo, start); d <= hi; ++d)
        table.at(d) = series[static_cast<size_t>(d - start)];
    return table;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

LaurentPolynomial lp_one() { return LaurentPolynomial(Int(1)); }

LaurentPolynomial lp_w(int degree) { return LaurentPolynomial::monomial(1, degree); }

LaurentPolynomial geometric_sum(int count, int step) {
    LaurentPolynomial result;
    for (int j = 0; j < count; ++j) result += lp_w(j * step);
    return result;
}

RationalFunction rf_w(int degree) { return RationalFunction(lp_w(degree)); }

}  // namespace kutate
