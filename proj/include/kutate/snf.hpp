#pragma once

#include <vector>

#include "kutate/bigint.hpp"
#include "kutate/errors.hpp"

namespace kutate {

/// Dense integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;
    bool is_zero() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Result of a Smith normal form computation U*A*V = D, where U and V are
/// unimodular and D is diagonal with d_1 | d_2 | ... | d_rank, the rest zero.
struct SmithResult {
    std::vector<Int> diagonal;  // positive invariant factors, length = rank
    IntMatrix u;                // rows(A) x rows(A)
    IntMatrix v;                // cols(A) x cols(A)
    IntMatrix v_inverse;        // cols(A) x cols(A)
    int rank = 0;
};

/// Computes the Smith normal form with standard pivoting over arbitrary
/// precision integers, and verifies U*A*V = D exactly before returning.
SmithResult smith_normal_form(const IntMatrix& a);

/// Structure of a finitely generated abelian group.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, ascending

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& other) const = default;
};

/// Cokernel Z^rows / im(a).
AbelianGroup cokernel(const IntMatrix& a);

/// Homology ker(a) / im(b) of the two-step complex  . --b--> . --a--> .
/// Requires a*b = 0 (checked).
AbelianGroup homology_at(const IntMatrix& a, const IntMatrix& b);

}  // namespace kutate
