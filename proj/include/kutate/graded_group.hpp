#pragma once

#include <map>
#include <string>

#include "kutate/bigint.hpp"
#include "kutate/snf.hpp"

namespace kutate {

/// One graded piece: free rank plus a multiset of torsion orders, stored as
/// order -> count so large multiplicities never materialize element-wise.
struct DegreeGroup {
    Int free = 0;
    std::map<Int, Int> torsion;

    bool is_trivial() const { return free == 0 && torsion.empty(); }
    Int torsion_count() const;
    bool operator==(const DegreeGroup& other) const = default;
    std::string to_string() const;
};

/// Finitely generated abelian group in each degree of an inclusive window.
/// Degrees outside the window are unreported, not asserted zero.
class GradedAbelianGroup {
  public:
    GradedAbelianGroup(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return hi_; }

    const DegreeGroup& at(int degree) const;
    bool in_window(int degree) const { return degree >= lo_ && degree <= hi_; }

    void add_free(int degree, const Int& rank);
    void add_torsion(int degree, const Int& order, const Int& count);
    /// Adds `copies` copies of a finitely generated group at a degree.
    void absorb(int degree, const AbelianGroup& group, const Int& copies = 1);
    void absorb(const GradedAbelianGroup& other, const Int& copies = 1);

    GradedAbelianGroup shifted(int k) const;
    GradedAbelianGroup restricted(int lo, int hi) const;

    const std::map<int, DegreeGroup>& nonzero_degrees() const { return degrees_; }

    bool operator==(const GradedAbelianGroup& other) const = default;
    std::string to_string() const;

  private:
    int lo_;
    int hi_;
    std::map<int, DegreeGroup> degrees_;  // trivial entries are never stored
};

}  // namespace kutate
