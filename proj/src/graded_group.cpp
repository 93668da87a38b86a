#include "kutate/graded_group.hpp"

#include <sstream>

#include "kutate/errors.hpp"

namespace kutate {

namespace {
const DegreeGroup kTrivial{};
}

Int DegreeGroup::torsion_count() const {
    Int total = 0;
    for (const auto& [order, count] : torsion) total += count;
    return total;
}

std::string DegreeGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free > 0) {
        out << "Z";
        if (free > 1) out << "^" << free.str();
        first = false;
    }
    for (const auto& [order, count] : torsion) {
        if (!first) out << " + ";
        out << "Z/" << order.str();
        if (count > 1) out << "^" << count.str();
        first = false;
    }
    return out.str();
}

GradedAbelianGroup::GradedAbelianGroup(int lo, int hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw Error("graded group window is reversed");
}

const DegreeGroup& GradedAbelianGroup::at(int degree) const {
    if (!in_window(degree)) throw Error("degree outside graded group window");
    auto it = degrees_.find(degree);
    return it == degrees_.end() ? kTrivial : it->second;
}

void GradedAbelianGroup::add_free(int degree, const Int& rank) {
    if (!in_window(degree) || rank == 0) return;
    if (rank < 0) throw Error("negative free rank");
    DegreeGroup& g = degrees_[degree];
    g.free += rank;
}

void GradedAbelianGroup::add_torsion(int degree, const Int& order, const Int& count) {
    if (!in_window(degree) || count == 0) return;
    if (count < 0) throw Error("negative torsion count");
    if (order < 2) throw Error("torsion order must be at least 2");
    DegreeGroup& g = degrees_[degree];
    g.torsion[order] += count;
}

void GradedAbelianGroup::absorb(int degree, const AbelianGroup& group, const Int& copies) {
    if (!in_window(degree) || copies == 0) return;
    if (copies < 0) throw Error("negative copy count");
    add_free(degree, Int(group.free_rank) * copies);
    for (const Int& order : group.torsion) add_torsion(degree, order, copies);
}

void GradedAbelianGroup::absorb(const GradedAbelianGroup& other, const Int& copies) {
    for (const auto& [d, g] : other.degrees_) {
        if (!in_window(d)) continue;
        add_free(d, g.free * copies);
        for (const auto& [order, count] : g.torsion) add_torsion(d, order, count * copies);
    }
}

GradedAbelianGroup GradedAbelianGroup::shifted(int k) const {
    GradedAbelianGroup result(lo_ + k, hi_ + k);
    for (const auto& [d, g] : degrees_) result.degrees_[d + k] = g;
    return result;
}

GradedAbelianGroup GradedAbelianGroup::restricted(int lo, int hi) const {
    if (lo < lo_ || hi > hi_) throw Error("restriction window exceeds computed window");
    GradedAbelianGroup result(lo, hi);
    for (const auto& [d, g] : degrees_)
        if (d >= lo && d <= hi) result.degrees_[d] = g;
    return result;
}

std::string GradedAbelianGroup::to_string() const {
    std::ostringstream out;
    for (int d = lo_; d <= hi_; ++d) {
        const DegreeGroup& g = at(d);
        if (g.is_trivial()) continue;
        out << d << ": " << g.to_string() << "\n";
    }
    std::string s = out.str();
    return s.empty() ? "0 on the whole window\n" : s;
}

}  // namespace kutate
