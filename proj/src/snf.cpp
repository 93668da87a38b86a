#include "kutate/snf.hpp"

#include <algorithm>
#include <utility>

namespace kutate {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix dimension mismatch in product");
    IntMatrix result(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Int& bkj = other.at(k, j);
                if (bkj != 0) result.at(i, j) += aik * bkj;
            }
        }
    return result;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

namespace {

struct Reducer {
    IntMatrix b;
    IntMatrix u;     // row ops accumulate on the left
    IntMatrix v;     // column ops accumulate on the right
    IntMatrix vinv;  // inverse column ops accumulate on V^{-1}

    explicit Reducer(const IntMatrix& a)
        : b(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          vinv(IntMatrix::identity(a.cols())) {}

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < b.cols(); ++j) std::swap(b.at(r1, j), b.at(r2, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
    }

    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < b.rows(); ++i) std::swap(b.at(i, c1), b.at(i, c2));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
        for (int j = 0; j < vinv.cols(); ++j) std::swap(vinv.at(c1, j), vinv.at(c2, j));
    }

    // row[r1] -= q * row[r2]
    void add_row(int r1, int r2, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < b.cols(); ++j) b.at(r1, j) -= q * b.at(r2, j);
        for (int j = 0; j < u.cols(); ++j) u.at(r1, j) -= q * u.at(r2, j);
    }

    // col[c1] -= q * col[c2]
    void add_col(int c1, int c2, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < b.rows(); ++i) b.at(i, c1) -= q * b.at(i, c2);
        for (int i = 0; i < v.rows(); ++i) v.at(i, c1) -= q * v.at(i, c2);
        // Applying E on the right of V means applying E^{-1} on the left of
        // V^{-1}: row c2 of V^{-1} gains q * row c1.
        for (int j = 0; j < vinv.cols(); ++j) vinv.at(c2, j) += q * vinv.at(c1, j);
    }

    void negate_row(int r) {
        for (int j = 0; j < b.cols(); ++j) b.at(r, j) = -b.at(r, j);
        for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
};

// Round-toward-nearest quotient keeps entries small during reduction.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs_int(r) > abs_int(b)) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    Reducer red(a);
    const int rows = a.rows();
    const int cols = a.cols();
    const int bound = std::min(rows, cols);
    int t = 0;
    for (; t < bound; ++t) {
        // Locate a pivot of minimal absolute value in the remaining block.
        int pr = -1, pc = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& val = red.b.at(i, j);
                if (val == 0) continue;
                Int mag = abs_int(val);
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        red.swap_rows(t, pr);
        red.swap_cols(t, pc);

        while (true) {
            // Clear row t and column t off the pivot. A nonzero remainder is
            // strictly smaller than the pivot, so promoting it and repeating
            // terminates.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < rows; ++i) {
                    const Int& val = red.b.at(i, t);
                    if (val == 0) continue;
                    Int q = nearest_quotient(val, red.b.at(t, t));
                    red.add_row(i, t, q);
                    if (red.b.at(i, t) != 0) {
                        red.swap_rows(t, i);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < cols; ++j) {
                    const Int& val = red.b.at(t, j);
                    if (val == 0) continue;
                    Int q = nearest_quotient(val, red.b.at(t, t));
                    red.add_col(j, t, q);
                    if (red.b.at(t, j) != 0) {
                        red.swap_cols(t, j);
                        clean = false;
                    }
                }
            }
            // Enforce d_t | every entry of the remaining block. A violation
            // folds the offending row into row t; re-cleaning then shrinks
            // the pivot to a proper divisor.
            int bad_row = -1;
            for (int i = t + 1; i < rows && bad_row < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (red.b.at(i, j) % red.b.at(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0) break;
            red.add_row(t, bad_row, Int(-1));
        }
        if (red.b.at(t, t) < 0) red.negate_row(t);
    }

    SmithResult result;
    result.rank = t;
    result.diagonal.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) result.diagonal.push_back(red.b.at(i, i));
    result.u = std::move(red.u);
    result.v = std::move(red.v);
    result.v_inverse = std::move(red.vinv);

    // Exactness post-check: U*A*V must equal the diagonal matrix.
    IntMatrix check = result.u * a * result.v;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Int expected =
                (i == j && i < result.rank) ? result.diagonal[static_cast<size_t>(i)] : Int(0);
            if (check.at(i, j) != expected) throw Error("Smith normal form post-check failed");
        }
    if (!(result.v * result.v_inverse == IntMatrix::identity(cols)))
        throw Error("Smith normal form V inverse check failed");
    return result;
}

AbelianGroup cokernel(const IntMatrix& a) {
    AbelianGroup group;
    if (a.rows() == 0) return group;
    if (a.cols() == 0) {
        group.free_rank = a.rows();
        return group;
    }
    SmithResult snf = smith_normal_form(a);
    group.free_rank = a.rows() - snf.rank;
    for (const Int& d : snf.diagonal)
        if (d > 1) group.torsion.push_back(d);
    std::sort(group.torsion.begin(), group.torsion.end());
    return group;
}

AbelianGroup homology_at(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("complex dimension mismatch");
    const int n = a.cols();  // dimension of the middle term
    AbelianGroup group;
    if (n == 0) return group;

    if (a.rows() == 0 || a.is_zero()) {
        // Kernel is everything; homology is the cokernel of b into Z^n.
        if (b.cols() == 0) {
            group.free_rank = n;
            return group;
        }
        IntMatrix b_into_n(n, b.cols());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < b.cols(); ++j) b_into_n.at(i, j) = b.at(i, j);
        return cokernel(b_into_n);
    }
    if (b.cols() > 0 && !(a * b).is_zero())
        throw Error("not a chain complex: composite differential is nonzero");

    SmithResult snf_a = smith_normal_form(a);
    const int rank_a = snf_a.rank;
    const int nullity = n - rank_a;
    if (nullity == 0) return group;  // injective differential, nothing survives

    if (b.cols() == 0) {
        group.free_rank = nullity;
        return group;
    }

    // Coordinates of im(b) in the kernel basis (the last `nullity` columns of V).
    IntMatrix coords = snf_a.v_inverse * b;
    for (int i = 0; i < rank_a; ++i)
        for (int j = 0; j < coords.cols(); ++j)
            if (coords.at(i, j) != 0) throw Error("image does not lie in the kernel");

    IntMatrix x(nullity, coords.cols());
    for (int i = 0; i < nullity; ++i)
        for (int j = 0; j < coords.cols(); ++j) x.at(i, j) = coords.at(rank_a + i, j);
    return cokernel(x);
}

}  // namespace kutate
