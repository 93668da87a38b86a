#include "kutate/resolve.hpp"

#include <algorithm>
#include <tuple>

#include "kutate/errors.hpp"

namespace kutate {

namespace {

// Full truncated free resolution: modules[0] <- modules[1] <- ... with
// maps[j] : modules[j+1] -> modules[j], entries in Z[beta].
struct ChainResolution {
    std::vector<GradedFreeModule> modules;
    std::vector<std::vector<std::vector<BetaPolynomial>>> maps;

    int length() const { return static_cast<int>(modules.size()) - 1; }
};

BetaPolynomial beta_term(int exponent, Int coeff) { return BetaPolynomial{{exponent, std::move(coeff)}}; }

// Bottom-degree shift of ScrM: the quotient N/Z[beta] is regraded so its
// lowest nonzero piece sits in dimension 2.
int m_shift(int p) { return 2 * (2 - p); }

ChainResolution chain_for(const ModuleSymbol& sym, int p, int degree_bound) {
    ChainResolution chain;
    const int step = 2 * (p - 1);
    switch (sym.kind) {
        case SymbolKind::FreeK: {
            chain.modules.push_back({{{"z0", 0}}});
            return chain;
        }
        case SymbolKind::ScrN:
        case SymbolKind::ScrM: {
            const int shift = sym.kind == SymbolKind::ScrM ? m_shift(p) : 0;
            GradedFreeModule f0, f1;
            for (int i = 0; step * i + shift <= degree_bound; ++i)
                f0.generators.push_back({"z" + std::to_string(i), step * i + shift});
            const int t_start = sym.kind == SymbolKind::ScrM ? 0 : 1;
            for (int i = t_start; step * i + shift <= degree_bound; ++i)
                f1.generators.push_back({"t" + std::to_string(i), step * i + shift});
            std::vector<std::vector<BetaPolynomial>> diff(
                f0.generators.size(), std::vector<BetaPolynomial>(f1.generators.size()));
            for (size_t c = 0; c < f1.generators.size(); ++c) {
                int i = t_start + static_cast<int>(c);
                if (i == 0) {
                    diff[0][c] = beta_term(0, 1);  // t_0 -> z_0
                } else {
                    // t_i -> p z_i - beta^{p-1} z_{i-1}
                    diff[static_cast<size_t>(i)][c] = beta_term(0, p);
                    diff[static_cast<size_t>(i - 1)][c][p - 1] = -1;
                }
            }
            chain.modules.push_back(std::move(f0));
            chain.modules.push_back(std::move(f1));
            chain.maps.push_back(std::move(diff));
            return chain;
        }
        case SymbolKind::Hmod: {
            // Koszul resolution of k/(p, beta^{p-1}).
            GradedFreeModule f0{{{"z", 0}}};
            GradedFreeModule f1;
            f1.generators.push_back({"a", 0});
            if (step <= degree_bound) f1.generators.push_back({"b", step});
            std::vector<std::vector<BetaPolynomial>> d1(1, std::vector<BetaPolynomial>(f1.generators.size()));
            d1[0][0] = beta_term(0, p);
            if (f1.generators.size() > 1) d1[0][1] = beta_term(p - 1, 1);
            chain.modules.push_back(std::move(f0));
            chain.maps.push_back(std::move(d1));
            if (step <= degree_bound) {
                GradedFreeModule f2{{{"u", step}}};
                std::vector<std::vector<BetaPolynomial>> d2(2, std::vector<BetaPolynomial>(1));
                d2[0][0] = beta_term(p - 1, 1);  // u -> beta^{p-1} a
                d2[1][0] = beta_term(0, -p);     // u -> -p b
                chain.modules.push_back(f1);
                chain.modules.push_back(std::move(f2));
                chain.maps.push_back(std::move(d2));
            } else {
                chain.modules.push_back(f1);
            }
            return chain;
        }
        default:
            throw UnsupportedSymbol("no finite-type resolution for symbol " + sym.name());
    }
}

// Basis of a free module's slice in one internal degree: (generator index,
// beta exponent).
std::vector<std::pair<int, int>> module_slice(const GradedFreeModule& mod, int degree) {
    std::vector<std::pair<int, int>> basis;
    for (int g = 0; g < static_cast<int>(mod.generators.size()); ++g) {
        int rem = degree - mod.generators[static_cast<size_t>(g)].degree;
        if (rem >= 0 && rem % 2 == 0) basis.emplace_back(g, rem / 2);
    }
    return basis;
}

// Basis element of a tensor slice: (homological piece r, generator of A_r,
// generator of B_{j-r}, beta exponent).
struct TensorBasisElement {
    int r;
    int gen_a;
    int gen_b;
    int beta;
    auto operator<=>(const TensorBasisElement&) const = default;
};

struct TensorSlice {
    int spot = 0;
    std::vector<TensorBasisElement> basis;
    std::map<TensorBasisElement, int> index;

    int find(const TensorBasisElement& e) const {
        auto it = index.find(e);
        return it == index.end() ? -1 : it->second;
    }
};

TensorSlice tensor_slice(const ChainResolution& a, const ChainResolution& b, int spot, int degree) {
    TensorSlice slice;
    slice.spot = spot;
    for (int r = 0; r <= spot; ++r) {
        int s = spot - r;
        if (r > a.length() || s > b.length()) continue;
        const GradedFreeModule& ma = a.modules[static_cast<size_t>(r)];
        const GradedFreeModule& mb = b.modules[static_cast<size_t>(s)];
        for (int ga = 0; ga < static_cast<int>(ma.generators.size()); ++ga) {
            int da = ma.generators[static_cast<size_t>(ga)].degree;
            if (da > degree) continue;
            for (int gb = 0; gb < static_cast<int>(mb.generators.size()); ++gb) {
                int rem = degree - da - mb.generators[static_cast<size_t>(gb)].degree;
                if (rem < 0 || rem % 2 != 0) continue;
                TensorBasisElement e{r, ga, gb, rem / 2};
                slice.index.emplace(e, static_cast<int>(slice.basis.size()));
                slice.basis.push_back(e);
            }
        }
    }
    return slice;
}

// Differential of the total complex restricted to one internal degree:
// d(x (x) y) = dx (x) y + (-1)^r x (x) dy.
IntMatrix tensor_differential(const ChainResolution& a, const ChainResolution& b,
                              const TensorSlice& from, const TensorSlice& to) {
    IntMatrix m(static_cast<int>(to.basis.size()), static_cast<int>(from.basis.size()));
    for (int col = 0; col < static_cast<int>(from.basis.size()); ++col) {
        const TensorBasisElement& e = from.basis[static_cast<size_t>(col)];
        const int s = from.spot - e.r;
        if (e.r >= 1) {
            const auto& diff = a.maps[static_cast<size_t>(e.r - 1)];
            for (int row_gen = 0; row_gen < static_cast<int>(diff.size()); ++row_gen) {
                for (const auto& [exp, coeff] :
                     diff[static_cast<size_t>(row_gen)][static_cast<size_t>(e.gen_a)]) {
                    int target = to.find({e.r - 1, row_gen, e.gen_b, e.beta + exp});
                    if (target < 0) throw Error("tensor differential left the computed slice");
                    m.at(target, col) += coeff;
                }
            }
        }
        if (s >= 1) {
            const int sign = e.r % 2 == 0 ? 1 : -1;
            const auto& diff = b.maps[static_cast<size_t>(s - 1)];
            for (int row_gen = 0; row_gen < static_cast<int>(diff.size()); ++row_gen) {
                for (const auto& [exp, coeff] :
                     diff[static_cast<size_t>(row_gen)][static_cast<size_t>(e.gen_b)]) {
                    int target = to.find({e.r, e.gen_a, row_gen, e.beta + exp});
                    if (target < 0) throw Error("tensor differential left the computed slice");
                    m.at(target, col) += sign * coeff;
                }
            }
        }
    }
    return m;
}

}  // namespace

ResolutionSpec resolution_of(const ModuleSymbol& sym, int p, int degree_bound) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (sym.kind != SymbolKind::ScrM && sym.kind != SymbolKind::ScrN && sym.kind != SymbolKind::Hmod)
        throw UnsupportedSymbol("resolution_of supports M, N and H only, got " + sym.name());
    ChainResolution chain = chain_for(sym, p, degree_bound);
    ResolutionSpec spec;
    spec.f0 = chain.modules[0];
    spec.f1 = chain.modules[1];
    spec.differential = chain.maps[0];
    spec.degree_bound = degree_bound;
    return spec;
}

GradedAbelianGroup coefficient_groups(const ModuleSymbol& sym, int p, int lo, int hi) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (lo > hi) throw Error("window is reversed");
    GradedAbelianGroup result(lo, hi);
    if (sym.kind == SymbolKind::FreeK) {
        for (int d = std::max(lo, 0); d <= hi; ++d)
            if (d % 2 == 0) result.add_free(d, 1);
        return result;
    }
    ChainResolution chain = chain_for(sym, p, hi);
    for (int d = lo; d <= hi; ++d) {
        auto rows = module_slice(chain.modules[0], d);
        if (rows.empty()) continue;
        auto cols = module_slice(chain.modules[1], d);
        IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
            auto [gen_c, beta_c] = cols[static_cast<size_t>(c)];
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                auto [gen_r, beta_r] = rows[static_cast<size_t>(r)];
                int exp = beta_r - beta_c;
                if (exp < 0) continue;
                auto it = chain.maps[0][static_cast<size_t>(gen_r)][static_cast<size_t>(gen_c)].find(exp);
                if (it != chain.maps[0][static_cast<size_t>(gen_r)][static_cast<size_t>(gen_c)].end())
                    m.at(r, c) = it->second;
            }
        }
        AbelianGroup g = cokernel(m);
        for (const Int& order : g.torsion) {
            Int o = order;
            while (o % p == 0) o /= p;
            if (o != 1) throw Error("prime-to-p torsion in oracle output");
        }
        result.absorb(d, g);
    }
    return result;
}

GradedAbelianGroup tor(const ModuleSymbol& a, const ModuleSymbol& b, int j, int p, int lo, int hi,
                       int degree_budget) {
    if (!is_prime(p)) throw InvalidPrime("not a prime: " + std::to_string(p));
    if (j < 0 || j > 2) throw IndexOutOfRange("tor degree must be 0, 1 or 2");
    if (lo > hi) throw Error("window is reversed");
    const int bound = hi + oracle_margin(p);
    if (bound > degree_budget)
        throw WindowTooWide("window [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "] plus safety margin " + std::to_string(oracle_margin(p)) +
                            " exceeds the degree budget " + std::to_string(degree_budget));
    ChainResolution chain_a = chain_for(a, p, bound);
    ChainResolution chain_b = chain_for(b, p, bound);

    GradedAbelianGroup result(lo, hi);
    for (int d = lo; d <= hi; ++d) {
        TensorSlice below = tensor_slice(chain_a, chain_b, j - 1, d);
        TensorSlice here = tensor_slice(chain_a, chain_b, j, d);
        if (here.basis.empty()) continue;
        TensorSlice above = tensor_slice(chain_a, chain_b, j + 1, d);

        IntMatrix out = (j == 0) ? IntMatrix(0, static_cast<int>(here.basis.size()))
                                 : tensor_differential(chain_a, chain_b, here, below);
        IntMatrix in = tensor_differential(chain_a, chain_b, above, here);
        AbelianGroup g = homology_at(out, in);
        for (const Int& order : g.torsion) {
            Int o = order;
            while (o % p == 0) o /= p;
            if (o != 1) throw Error("prime-to-p torsion in oracle output");
        }
        result.absorb(d, g);
    }
    return result;
}

GradedAbelianGroup decomposition_groups(const Decomposition& dec, int lo, int hi, Direction h_direction) {
    const int p = dec.prime();
    GradedAbelianGroup result(lo, hi);
    for (const auto& [sym, mult] : dec.terms()) {
        switch (sym.kind) {
            case SymbolKind::FreeK: {
                if (!mult.is_polynomial())
                    throw Error("free-k multiplicity must be a Laurent polynomial");
                for (const auto& [s, c] : mult.num().terms()) {
                    if (c < 0) throw Error("negative multiplicity for symbol k");
                    for (int d = std::max(lo, s); d <= hi; ++d)
                        if ((d - s) % 2 == 0) result.add_free(d, c);
                }
                break;
            }
            case SymbolKind::ScrM:
            case SymbolKind::ScrN: {
                if (!mult.is_polynomial())
                    throw Error("multiplicity of " + sym.name() + " must be a Laurent polynomial");
                if (mult.is_zero()) break;
                const auto& terms = mult.num().terms();
                int min_s = terms.begin()->first;
                int max_s = terms.rbegin()->first;
                GradedAbelianGroup groups = coefficient_groups(sym, p, lo - max_s, hi - min_s);
                for (const auto& [s, c] : terms) {
                    if (c < 0) throw Error("negative multiplicity for symbol " + sym.name());
                    result.absorb(groups.shifted(s), c);
                }
                break;
            }
            case SymbolKind::Hmod: {
                const int internal_top = 2 * (p - 2);
                GradedAbelianGroup groups = coefficient_groups(sym, p, 0, std::max(0, internal_top));
                CoefficientTable counts = mult.expand(h_direction, lo - internal_top, hi);
                if (!counts.all_nonnegative())
                    throw Error("negative multiplicity for symbol " + sym.name());
                for (int s = counts.lo; s <= counts.hi; ++s) {
                    const Int& c = counts.at(s);
                    if (c != 0) result.absorb(groups.shifted(s), c);
                }
                break;
            }
            default:
                throw UnsupportedSymbol("no oracle-backed groups for symbol " + sym.name());
        }
    }
    return result;
}

bool verify_table_row(const ModuleSymbol& a, const ModuleSymbol& b, int p, int lo, int hi) {
    const int margin = oracle_margin(p);
    if (hi - margin < lo)
        throw WindowTooWide("window [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "] cannot honor the safety margin " + std::to_string(margin));
    const int vhi = hi - margin;
    Decomposition dec = product_table(a, b, SmashKind::OrdinarySmash, p);
    GradedAbelianGroup expected = decomposition_groups(dec, lo, vhi, Direction::AtZero);
    GradedAbelianGroup actual = tor(a, b, 0, p, lo, vhi, hi);
    GradedAbelianGroup tor1 = tor(a, b, 1, p, lo - 1, vhi - 1, hi);
    actual.absorb(tor1.shifted(1));
    return expected == actual;
}

}  // namespace kutate
