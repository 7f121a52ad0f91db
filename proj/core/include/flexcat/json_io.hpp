#pragma once

#include "flexcat/catalysis.hpp"
#include "flexcat/gmultiset.hpp"
#include "flexcat/majorization.hpp"
#include "flexcat/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace flexcat::json_io {

using nlohmann::json;

// Wire formats. Rationals are strings "p/q" (or "p"); big integers are
// decimal strings. Decoders throw Error(schema_violation | parse_error).
//
//   GroupElement  zvec: ["1","-2"]   rat: "3/4"   magphase: {"mag":"1","phase":"1/3"}
//   GMultiset     {"group":"zvec","arity":1,"elems":[{"e":<element>,"m":"4"}, ...]}
//   IntPolynomial {"arity":1,"terms":[{"exp":[2],"coeff":"-1"}, ...]}
//   ProbVector    ["1/2","29/100","21/100","0"]   (decimals accepted on input)

json to_json(const Rational& r);
Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);

json to_json(const GroupElement& e);
GroupElement element_from_json(const json& j, GroupKind kind, std::size_t arity);
/// Infers the group from the JSON shape (array, string, object).
GroupElement element_from_json(const json& j);

json to_json(const GMultiset& m);
GMultiset multiset_from_json(const json& j);

json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);

json to_json(const ProbVector& v);
ProbVector prob_vector_from_json(const json& j);

json to_json(const State& s);
State state_from_json(const json& j, const TTInstance& tt);
std::vector<State> states_from_json(const json& j, const TTInstance& tt);

json to_json(const NegativityResult& r);

json to_json(const CatalystCycle& c);
CatalystCycle cycle_from_json(const json& j, const TTInstance& tt);

json to_json(const FlexReport& r);
json to_json(const MulticopyStatement& s);
json to_json(const MajorizationCheck& c);
json to_json(const ScanRecord& r);

/// Full scan state: p, q, next n, p^n, q p^n and the running summary.
json checkpoint_to_json(const PositivityScan& scan);
PositivityScan checkpoint_from_json(const json& j);

}  // namespace flexcat::json_io
