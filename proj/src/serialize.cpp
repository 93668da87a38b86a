#include "kutate/serialize.hpp"

#include <sstream>

#include "kutate/errors.hpp"

namespace kutate {

namespace {

// Largest integer exactly representable in a double, so every emitted JSON
// number survives any standards-conforming reader.
const Int kJsonSafe = (Int(1) << 53) - 1;

// Serialized torsion lists are flat multisets; refuse to materialize absurd
// ones instead of exhausting memory.
const Int kMaxTorsionList = 1000000;

}  // namespace

Json int_to_json(const Int& value) {
    if (abs_int(value) <= kJsonSafe) return Json(static_cast<std::int64_t>(value));
    return Json(value.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("expected an integer or a decimal string");
}

Json laurent_to_json(const LaurentPolynomial& p) {
    Json j = Json::object();
    for (const auto& [d, c] : p.terms()) j[std::to_string(d)] = int_to_json(c);
    return j;
}

LaurentPolynomial laurent_from_json(const Json& j) {
    if (!j.is_object()) throw Error("expected an object of degree -> coefficient");
    LaurentPolynomial p;
    for (const auto& [key, value] : j.items())
        p += LaurentPolynomial::monomial(int_from_json(value), std::stoi(key));
    return p;
}

Json rf_to_json(const RationalFunction& f) {
    return Json{{"num", laurent_to_json(f.num())}, {"den", laurent_to_json(f.den())}};
}

RationalFunction rf_from_json(const Json& j) {
    return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json symbol_to_json(const ModuleSymbol& s) {
    if (s.kind == SymbolKind::ScrQ) return Json{{"Q", s.q_rank}};
    return Json(s.name());
}

ModuleSymbol symbol_from_json(const Json& j) {
    if (j.is_object()) return ModuleSymbol::q(j.at("Q").get<int>());
    const std::string name = j.get<std::string>();
    if (name == "k") return ModuleSymbol::k();
    if (name == "M") return ModuleSymbol::m();
    if (name == "N") return ModuleSymbol::n();
    if (name == "H") return ModuleSymbol::h();
    if (name == "P") return ModuleSymbol::p();
    throw Error("unknown module symbol: " + name);
}

Json decomposition_to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& [sym, mult] : d.terms())
        terms.push_back(Json{{"symbol", symbol_to_json(sym)}, {"multiplicity", rf_to_json(mult)}});
    return Json{{"prime", d.prime()}, {"terms", std::move(terms)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d(j.at("prime").get<int>());
    for (const auto& term : j.at("terms"))
        d.add(symbol_from_json(term.at("symbol")), rf_from_json(term.at("multiplicity")));
    return d;
}

Json graded_group_to_json(const GradedAbelianGroup& g) {
    Json degrees = Json::array();
    for (const auto& [d, group] : g.nonzero_degrees()) {
        Json torsion = Json::array();
        if (group.torsion_count() > kMaxTorsionList)
            throw Error("torsion multiset too large to serialize; narrow the window");
        for (const auto& [order, count] : group.torsion)
            for (Int i = 0; i < count; ++i) torsion.push_back(int_to_json(order));
        degrees.push_back(
            Json{{"d", d}, {"free", int_to_json(group.free)}, {"torsion", std::move(torsion)}});
    }
    return Json{{"lo", g.lo()}, {"hi", g.hi()}, {"degrees", std::move(degrees)}};
}

GradedAbelianGroup graded_group_from_json(const Json& j) {
    GradedAbelianGroup g(j.at("lo").get<int>(), j.at("hi").get<int>());
    for (const auto& entry : j.at("degrees")) {
        const int d = entry.at("d").get<int>();
        g.add_free(d, int_from_json(entry.at("free")));
        for (const auto& order : entry.at("torsion")) g.add_torsion(d, int_from_json(order), 1);
    }
    return g;
}

Json borel_to_json(const BorelResult& r) {
    Json j = decomposition_to_json(r.decomposition);
    j["n"] = r.n;
    j["side"] = r.side == Side::Homology ? "homology" : "cohomology";
    j["method"] = r.method == Method::Recursive ? "recursive" : "closed";
    return j;
}

Json tate_to_json(const TateResult& r) {
    return Json{{"prime", r.prime},
                {"n", r.n},
                {"q_multiplicity", rf_to_json(r.q_multiplicity)},
                {"f_hom", rf_to_json(r.f_hom)},
                {"f_coh", rf_to_json(r.f_coh)}};
}

TateResult tate_from_json(const Json& j) {
    TateResult r;
    r.prime = j.at("prime").get<int>();
    r.n = j.at("n").get<int>();
    r.q_multiplicity = rf_from_json(j.at("q_multiplicity"));
    r.f_hom = rf_from_json(j.at("f_hom"));
    r.f_coh = rf_from_json(j.at("f_coh"));
    return r;
}

Json table_to_json(const CoefficientTable& t) {
    Json values = Json::array();
    for (const Int& v : t.values) values.push_back(int_to_json(v));
    return Json{{"lo", t.lo}, {"hi", t.hi}, {"values", std::move(values)}};
}

namespace {

void render(const Json& j, std::ostringstream& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render(value, out, indent + 1);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                render(value, out, indent + 1);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
        if (j.empty()) out << pad << "[]\n";
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream out;
    render(j, out, 0);
    return out.str();
}

}  // namespace kutate
