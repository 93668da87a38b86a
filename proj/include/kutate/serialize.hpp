#pragma once

#include <string>

#include <json.hpp>

#include "kutate/borel.hpp"
#include "kutate/graded_group.hpp"
#include "kutate/grmod.hpp"
#include "kutate/laurent.hpp"
#include "kutate/tate.hpp"

namespace kutate {

using Json = nlohmann::ordered_json;

/// Integers serialize as JSON numbers while they fit the double-safe range,
/// as decimal strings beyond it.
Json int_to_json(const Int& value);
Int int_from_json(const Json& j);

Json laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"num": {degree: coeff, ...}, "den": {...}}
Json rf_to_json(const RationalFunction& f);
RationalFunction rf_from_json(const Json& j);

/// "k" | "M" | "N" | "H" | "P" | {"Q": n}
Json symbol_to_json(const ModuleSymbol& s);
ModuleSymbol symbol_from_json(const Json& j);

/// {"prime": p, "terms": [{"symbol": ..., "multiplicity": ...}]}
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"lo", "hi", "degrees": [{"d", "free", "torsion": [orders...]}]}
Json graded_group_to_json(const GradedAbelianGroup& g);
GradedAbelianGroup graded_group_from_json(const Json& j);

/// Decomposition fields plus {"n", "side", "method"}.
Json borel_to_json(const BorelResult& r);

/// {"prime", "n", "q_multiplicity", "f_hom", "f_coh"}
Json tate_to_json(const TateResult& r);
TateResult tate_from_json(const Json& j);

Json table_to_json(const CoefficientTable& t);

/// Deterministic plain-text rendering of a JSON document; both CLI output
/// formats carry identical data.
std::string render_text(const Json& j);

}  // namespace kutate
