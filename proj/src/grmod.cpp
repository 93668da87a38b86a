#include "kutate/grmod.hpp"

#include <sstream>

namespace kutate {

ModuleSymbol ModuleSymbol::q(int rank) {
    if (rank < 1) throw Error("Q symbol requires rank >= 1");
    return {SymbolKind::ScrQ, rank};
}

std::string ModuleSymbol::name() const {
    switch (kind) {
        case SymbolKind::FreeK: return "k";
        case SymbolKind::ScrM: return "M";
        case SymbolKind::ScrN: return "N";
        case SymbolKind::Hmod: return "H";
        case SymbolKind::ScrP: return "P";
        case SymbolKind::ScrQ: return "Q" + std::to_string(q_rank);
    }
    return "?";
}

Decomposition::Decomposition(int prime) : prime_(prime) {
    if (!is_prime(prime)) throw InvalidPrime("not a prime: " + std::to_string(prime));
}

RationalFunction Decomposition::multiplicity(const ModuleSymbol& sym) const {
    auto it = terms_.find(sym);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void Decomposition::add(const ModuleSymbol& sym, const RationalFunction& mult) {
    if (mult.is_zero()) return;
    auto it = terms_.find(sym);
    if (it == terms_.end()) {
        terms_.emplace(sym, mult);
    } else {
        it->second += mult;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Decomposition Decomposition::scaled(const RationalFunction& factor) const {
    Decomposition result(prime_);
    if (factor.is_zero()) return result;
    for (const auto& [sym, mult] : terms_) result.add(sym, mult * factor);
    return result;
}

bool Decomposition::operator==(const Decomposition& other) const {
    if (prime_ != other.prime_) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (const auto& [sym, mult] : terms_) {
        auto it = other.terms_.find(sym);
        if (it == other.terms_.end() || !(mult == it->second)) return false;
    }
    return true;
}

std::string Decomposition::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [sym, mult] : terms_) {
        if (!first) out << "  v  ";
        out << sym.name() << " * [" << mult.to_string() << "]";
        first = false;
    }
    return out.str();
}

namespace {

// H w^4 / (1 - w^{2(p-1)})^2
RationalFunction mm_error(int p) {
    return RationalFunction(lp_w(4), (lp_one() - lp_w(2 * (p - 1))).pow(2));
}

// H w^2 (1+w) / (1 - w^{2(p-1)})
RationalFunction mh_coefficient(int p) {
    return RationalFunction(lp_w(2) * (lp_one() + lp_w(1)), lp_one() - lp_w(2 * (p - 1)));
}

// H w^{-4} / (1 - w^{-2(p-1)})^2
RationalFunction pp_error(int p) {
    return RationalFunction(lp_w(-4), (lp_one() - lp_w(-2 * (p - 1))).pow(2));
}

// H w^{-1} (1 + w^{-1}) / (1 - w^{-2(p-1)})
RationalFunction ph_coefficient(int p) {
    return RationalFunction(lp_w(-1) * (lp_one() + lp_w(-1)), lp_one() - lp_w(-2 * (p - 1)));
}

}  // namespace

Decomposition product_table(const ModuleSymbol& a, const ModuleSymbol& b, SmashKind kind, int p) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    // k is the unit on both sides, for either kind of smash.
    if (a.kind == SymbolKind::FreeK || b.kind == SymbolKind::FreeK) {
        Decomposition result(p);
        result.add(a.kind == SymbolKind::FreeK ? b : a, RationalFunction(1));
        return result;
    }
    SymbolKind lo = std::min(a.kind, b.kind);
    SymbolKind hi = std::max(a.kind, b.kind);
    if (kind == SmashKind::OrdinarySmash) {
        if (lo == SymbolKind::ScrM && hi == SymbolKind::ScrM) {
            Decomposition result(p);
            result.add(ModuleSymbol::m(), rf_w(3));
            result.add(ModuleSymbol::h(), mm_error(p));
            return result;
        }
        if (lo == SymbolKind::ScrM && hi == SymbolKind::Hmod) {
            Decomposition result(p);
            result.add(ModuleSymbol::h(), mh_coefficient(p));
            return result;
        }
    } else {
        if (lo == SymbolKind::Hmod && hi == SymbolKind::ScrP) {
            Decomposition result(p);
            result.add(ModuleSymbol::h(), ph_coefficient(p));
            return result;
        }
        if (lo == SymbolKind::ScrP && hi == SymbolKind::ScrP) {
            Decomposition result(p);
            result.add(ModuleSymbol::p(), rf_w(-2));
            result.add(ModuleSymbol::h(), pp_error(p));
            return result;
        }
    }
    throw UnsupportedPair("no product row for " + a.name() + " * " + b.name() +
                          (kind == SmashKind::HatSmash ? " (hat smash)" : " (smash)"));
}

Decomposition smash(const Decomposition& a, const Decomposition& b, SmashKind kind) {
    if (a.prime() != b.prime()) throw Error("smash of decompositions over different primes");
    Decomposition result(a.prime());
    for (const auto& [sa, ma] : a.terms())
        for (const auto& [sb, mb] : b.terms()) {
            Decomposition row = product_table(sa, sb, kind, a.prime());
            RationalFunction factor = ma * mb;
            for (const auto& [sym, mult] : row.terms()) result.add(sym, mult * factor);
        }
    return result;
}

bool specialize_p2_check() {
    // The p = 2 rows, written out independently of the parameterized table.
    const RationalFunction mm2(lp_w(4), (lp_one() - lp_w(2)).pow(2));            // w^2/(1-w^2)^2 shifted: w^4/(1-w^2)^2
    const RationalFunction mh2(lp_w(2), lp_one() - lp_w(1));                     // w^2/(1-w)
    const RationalFunction pp2(lp_w(-4), (lp_one() - lp_w(-2)).pow(2));          // w^-4/(1-w^-2)^2
    const RationalFunction ph2(lp_w(-1), lp_one() - lp_w(-1));                   // w^-1/(1-w^-1)

    const auto m = ModuleSymbol::m(), h = ModuleSymbol::h(), p = ModuleSymbol::p();

    Decomposition mm = product_table(m, m, SmashKind::OrdinarySmash, 2);
    if (!(mm.multiplicity(m) == rf_w(3))) return false;
    if (!(mm.multiplicity(h) == mm2)) return false;

    Decomposition mh = product_table(m, h, SmashKind::OrdinarySmash, 2);
    if (!(mh.multiplicity(h) == mh2)) return false;

    Decomposition pp = product_table(p, p, SmashKind::HatSmash, 2);
    if (!(pp.multiplicity(p) == rf_w(-2))) return false;
    if (!(pp.multiplicity(h) == pp2)) return false;

    Decomposition ph = product_table(p, h, SmashKind::HatSmash, 2);
    if (!(ph.multiplicity(h) == ph2)) return false;

    return true;
}

}  // namespace kutate
