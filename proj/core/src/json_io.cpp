#include "flexcat/json_io.hpp"

#include "flexcat/errors.hpp"

#include <limits>

namespace flexcat::json_io {
namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::schema_violation, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t small_unsigned(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    schema(std::string(what) + " must be a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<std::uint32_t>::max()) schema(std::string(what) + " is too large");
  return static_cast<std::size_t>(v);
}

json optional_index(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json optional_unsigned(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

std::optional<unsigned> optional_unsigned_from(const json& j, const char* what) {
  if (j.is_null()) return std::nullopt;
  return static_cast<unsigned>(small_unsigned(j, what));
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational_or_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Rational(parse_integer(j.dump()));
  if (j.is_number_float())
    schema("inexact number " + j.dump() + "; write rationals as strings such as \"29/100\"");
  schema("expected a rational string, got " + j.dump());
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return parse_integer(j.dump());
  schema("expected an integer string, got " + j.dump());
}

json to_json(const GroupElement& e) {
  switch (e.kind()) {
    case GroupKind::zvec: {
      json arr = json::array();
      for (const auto& c : e.coords()) arr.push_back(to_string(c));
      return arr;
    }
    case GroupKind::rat: return to_json(e.value());
    case GroupKind::magphase: return json{{"mag", to_json(e.mag())}, {"phase", to_json(e.phase())}};
  }
  return nullptr;
}

GroupElement element_from_json(const json& j) {
  if (j.is_array()) {
    if (j.empty()) schema("zvec element needs at least one coordinate");
    std::vector<Integer> coords;
    coords.reserve(j.size());
    for (const auto& c : j) coords.push_back(integer_from_json(c));
    return GroupElement::zvec(std::move(coords));
  }
  if (j.is_object()) {
    const Rational mag = rational_from_json(field(j, "mag"));
    const Rational phase = rational_from_json(field(j, "phase"));
    if (sgn(mag) <= 0) schema("magnitude must be positive, got " + to_string(mag));
    if (sgn(phase) < 0 || phase >= 1) schema("phase must lie in [0,1), got " + to_string(phase));
    return GroupElement::mag_phase(mag, phase);
  }
  if (j.is_string() || j.is_number()) return GroupElement::rat(rational_from_json(j));
  schema("cannot read a group element from " + j.dump());
}

GroupElement element_from_json(const json& j, GroupKind kind, std::size_t arity) {
  GroupElement e = element_from_json(j);
  // Integers written as plain strings are valid rat elements; reinterpret
  // a length-1 zvec only when asked for one.
  if (e.kind() == GroupKind::rat && kind == GroupKind::zvec && arity == 1 && j.is_string()) {
    const auto& v = e.value();
    if (v.get_den() != 1) schema("zvec coordinates must be integers, got " + to_string(v));
    return GroupElement::zvec({Integer(v.get_num())});
  }
  if (e.kind() != kind || e.arity() != arity)
    schema("element " + j.dump() + " is not in group " + std::string(to_string(kind)) + "/" +
           std::to_string(arity));
  return e;
}

json to_json(const GMultiset& m) {
  json elems = json::array();
  for (const auto& [e, mult] : m.entries()) elems.push_back({{"e", to_json(e)}, {"m", to_string(mult)}});
  return json{{"group", std::string(to_string(m.kind()))}, {"arity", m.arity()}, {"elems", elems}};
}

GMultiset multiset_from_json(const json& j) {
  const json& group = field(j, "group");
  if (!group.is_string()) schema("'group' must be a string");
  const GroupKind kind = parse_group_kind(group.get<std::string>());
  std::size_t arity = 1;
  if (j.contains("arity")) arity = small_unsigned(j.at("arity"), "arity");
  if (arity == 0) schema("arity must be >= 1");
  const json& elems = field(j, "elems");
  if (!elems.is_array()) schema("'elems' must be an array");
  std::vector<GMultiset::Entry> entries;
  entries.reserve(elems.size());
  for (const auto& item : elems) {
    Integer mult = integer_from_json(field(item, "m"));
    if (sgn(mult) <= 0) schema("multiplicities must be positive, got " + to_string(mult));
    entries.emplace_back(element_from_json(field(item, "e"), kind, arity), std::move(mult));
  }
  return GMultiset::from_entries(kind, arity, entries);
}

json to_json(const IntPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", m}, {"coeff", to_string(c)}});
  return json{{"arity", p.arity()}, {"terms", terms}};
}

IntPolynomial polynomial_from_json(const json& j) {
  const std::size_t arity = small_unsigned(field(j, "arity"), "arity");
  if (arity == 0) schema("arity must be >= 1");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) schema("'terms' must be an array");
  IntPolynomial p(arity);
  for (const auto& t : terms) {
    const json& exp = field(t, "exp");
    if (!exp.is_array() || exp.size() != arity)
      schema("'exp' must be an array of " + std::to_string(arity) + " exponents");
    Monomial m;
    m.reserve(arity);
    for (const auto& e : exp) m.push_back(static_cast<std::uint32_t>(small_unsigned(e, "exponent")));
    p.add_term(m, integer_from_json(field(t, "coeff")));
  }
  return p;
}

json to_json(const ProbVector& v) {
  json arr = json::array();
  for (const auto& p : v.probs()) arr.push_back(to_json(p));
  return arr;
}

ProbVector prob_vector_from_json(const json& j) {
  if (!j.is_array()) schema("probability vector must be an array of rational strings");
  std::vector<Rational> probs;
  probs.reserve(j.size());
  for (const auto& x : j) probs.push_back(rational_from_json(x));
  return ProbVector(std::move(probs));
}

json to_json(const State& s) {
  if (const auto* m = std::get_if<GMultiset>(&s)) return to_json(*m);
  return to_json(std::get<ProbVector>(s));
}

State state_from_json(const json& j, const TTInstance& tt) {
  State s = tt.is_multiset() ? State(multiset_from_json(j)) : State(prob_vector_from_json(j));
  try {
    require_state(tt, s, "state");
  } catch (const Error& e) {
    schema(e.what());
  }
  return s;
}

std::vector<State> states_from_json(const json& j, const TTInstance& tt) {
  if (!j.is_array()) schema("expected an array of states");
  std::vector<State> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(state_from_json(x, tt));
  return out;
}

json to_json(const NegativityResult& r) {
  if (r.is_finite()) return json{{"negativity", r.value}};
  return json{{"negativity", nullptr}, {"exceeds_bound", r.value}};
}

json to_json(const CatalystCycle& c) {
  json cats = json::array();
  for (const auto& s : c.catalysts) cats.push_back(to_json(s));
  json out{{"length", c.length()}, {"catalysts", cats}};
  json discards = json::array();
  for (const auto& d : c.discards) discards.push_back(d ? to_json(*d) : json(nullptr));
  out["discards"] = discards;
  return out;
}

CatalystCycle cycle_from_json(const json& j, const TTInstance& tt) {
  CatalystCycle c;
  c.catalysts = states_from_json(field(j, "catalysts"), tt);
  if (c.catalysts.empty()) schema("a cycle needs at least one catalyst");
  if (j.contains("discards")) {
    const json& ds = j.at("discards");
    if (!ds.is_array()) schema("'discards' must be an array");
    if (!ds.empty() && ds.size() != c.catalysts.size())
      schema("'discards' must have one slot per catalyst");
    for (const auto& d : ds)
      c.discards.push_back(d.is_null() ? std::nullopt : std::optional<State>(state_from_json(d, tt)));
  }
  return c;
}

json to_json(const FlexReport& r) {
  json edges = json::array();
  json discards = json::array();
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < r.edges[i].size(); ++j) {
      const auto& e = r.edges[i][j];
      row.push_back(e.status == EdgeStatus::present ? "present"
                    : e.status == EdgeStatus::absent ? "absent"
                                                     : "unknown");
      if (e.discard) discards.push_back({{"from", i}, {"to", j}, {"d", to_json(*e.discard)}});
    }
    edges.push_back(row);
  }
  json successor = json::array();
  for (const auto& s : r.successor) successor.push_back(optional_index(s));
  return json{{"size", r.edges.size()},
              {"edges", edges},
              {"discards", discards},
              {"successor", successor},
              {"every_node_has_successor", r.every_node_has_successor},
              {"cycle", r.cycle ? json(*r.cycle) : json(nullptr)}};
}

json to_json(const MulticopyStatement& s) {
  return json{{"copies", s.copies},
              {"aggregate_catalyst", to_json(s.aggregate_catalyst)},
              {"aggregate_discard", s.aggregate_discard ? to_json(*s.aggregate_discard) : json(nullptr)}};
}

json to_json(const MajorizationCheck& c) {
  json violation = nullptr;
  if (c.first_violation)
    violation = {{"k", c.first_violation->k},
                 {"lhs", to_json(c.first_violation->lhs)},
                 {"rhs", to_json(c.first_violation->rhs)}};
  return json{{"majorizes", c.holds}, {"first_violation", violation}};
}

json to_json(const ScanRecord& r) {
  return json{{"n", r.n}, {"p_pow_nonneg", r.power_nonneg}, {"q_p_pow_nonneg", r.weighted_nonneg}};
}

json checkpoint_to_json(const PositivityScan& scan) {
  return json{{"p", to_json(scan.p())},
              {"q", to_json(scan.q())},
              {"next_n", scan.next_n()},
              {"p_pow", to_json(scan.power())},
              {"q_p_pow", to_json(scan.weighted())},
              {"first_q_failure", optional_unsigned(scan.first_weighted_failure())},
              {"first_nonneg_power", optional_unsigned(scan.first_nonneg_power())}};
}

PositivityScan checkpoint_from_json(const json& j) {
  return PositivityScan(polynomial_from_json(field(j, "p")), polynomial_from_json(field(j, "q")),
                        static_cast<unsigned>(small_unsigned(field(j, "next_n"), "next_n")),
                        polynomial_from_json(field(j, "p_pow")), polynomial_from_json(field(j, "q_p_pow")),
                        optional_unsigned_from(field(j, "first_q_failure"), "first_q_failure"),
                        optional_unsigned_from(field(j, "first_nonneg_power"), "first_nonneg_power"));
}

}  // namespace flexcat::json_io
