#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kutate/laurent.hpp"

namespace kutate {

/// The building blocks every decomposition is written in. `Hmod` denotes
/// k/(2, beta) when p = 2 and the p-local truncation k/(p, beta^{p-1}) when
/// p is odd.
enum class SymbolKind { FreeK, ScrM, ScrN, Hmod, ScrP, ScrQ };

struct ModuleSymbol {
    SymbolKind kind = SymbolKind::FreeK;
    int q_rank = 0;  // meaningful for ScrQ only, >= 1

    static ModuleSymbol k() { return {SymbolKind::FreeK, 0}; }
    static ModuleSymbol m() { return {SymbolKind::ScrM, 0}; }
    static ModuleSymbol n() { return {SymbolKind::ScrN, 0}; }
    static ModuleSymbol h() { return {SymbolKind::Hmod, 0}; }
    static ModuleSymbol p() { return {SymbolKind::ScrP, 0}; }
    static ModuleSymbol q(int rank);

    auto operator<=>(const ModuleSymbol&) const = default;
    std::string name() const;
};

enum class SmashKind { OrdinarySmash, HatSmash };

/// Formal sum of building blocks with rational-function multiplicities.
/// Terms with zero multiplicity are never stored.
class Decomposition {
  public:
    explicit Decomposition(int prime);

    int prime() const { return prime_; }
    const std::map<ModuleSymbol, RationalFunction>& terms() const { return terms_; }

    bool has(const ModuleSymbol& sym) const { return terms_.contains(sym); }
    /// Multiplicity of a symbol (zero when absent).
    RationalFunction multiplicity(const ModuleSymbol& sym) const;

    void add(const ModuleSymbol& sym, const RationalFunction& mult);
    Decomposition scaled(const RationalFunction& factor) const;

    /// Equality of all multiplicities by cross-multiplication.
    bool operator==(const Decomposition& other) const;

    std::string to_string() const;

  private:
    int prime_;
    std::map<ModuleSymbol, RationalFunction> terms_;
};

/// The smash product of two single building blocks, straight from the table.
/// Supported pairs: anything with k; M*M and M*H under the ordinary smash;
/// P*P and P*H under the hat smash. Everything else throws UnsupportedPair.
Decomposition product_table(const ModuleSymbol& a, const ModuleSymbol& b, SmashKind kind, int p);

/// Bilinear extension of the table to whole decompositions.
Decomposition smash(const Decomposition& a, const Decomposition& b, SmashKind kind);

/// true iff every prime-parameterized table row evaluated at p = 2 equals the
/// corresponding p = 2 row.
bool specialize_p2_check();

}  // namespace kutate
