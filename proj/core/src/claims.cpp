#include "flexcat/claims.hpp"

#include "flexcat/catalysis.hpp"
#include "flexcat/errors.hpp"
#include "flexcat/json_io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace flexcat::claims {

using nlohmann::json;
namespace jio = flexcat::json_io;
using flexcat::to_string;

namespace {

struct Checks {
  json list = json::array();
  std::size_t failed = 0;

  void add(const std::string& name, bool ok, json info = nullptr) {
    json item{{"check", name}, {"ok", ok}};
    if (!info.is_null()) item["info"] = std::move(info);
    list.push_back(std::move(item));
    if (!ok) ++failed;
  }
  ClaimStatus status() const { return failed == 0 ? ClaimStatus::pass : ClaimStatus::fail; }
  std::string summary() const {
    return std::to_string(list.size() - failed) + "/" + std::to_string(list.size()) + " checks";
  }
};

struct Evaluation {
  Checks checks;
  std::optional<std::string> note;
};

Rational q(const char* text) { return parse_rational(text); }

IntPolynomial uni(std::initializer_list<long> coeffs) {
  std::vector<Integer> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return IntPolynomial::univariate(cs);
}

GMultiset zset(std::initializer_list<std::pair<long, long>> entries) {
  std::vector<GMultiset::Entry> es;
  for (auto [e, m] : entries) es.emplace_back(GroupElement::zvec({Integer(e)}), Integer(m));
  return GMultiset::from_entries(GroupKind::zvec, 1, es);
}

ProbVector pv(std::initializer_list<const char*> probs) {
  std::vector<Rational> v;
  for (const char* p : probs) v.push_back(q(p));
  return ProbVector(std::move(v));
}

ProbVector weights(std::initializer_list<long> ws) {
  std::vector<Rational> v;
  for (long w : ws) v.emplace_back(w);
  return ProbVector::from_weights(std::move(v));
}

json multiplicity_profile(const GMultiset& m) {
  json out = json::array();
  for (const auto& [e, mult] : m.entries()) out.push_back(to_string(mult));
  return out;
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::schema_violation, std::string("certificate lacks '") + key + "'");
  return j.at(key);
}

// ---------------------------------------------------------------- pm-omega

const TTInstance kPm = TTInstance::multiset(GroupKind::magphase, Relation::translation);

Evaluation evaluate_pm_omega(const json& w) {
  const GMultiset a = jio::multiset_from_json(need(w, "A"));
  const GMultiset b = jio::multiset_from_json(need(w, "B"));
  const CatalystCycle cycle = jio::cycle_from_json(need(w, "cycle"), kPm);
  const GMultiset aa = msum(a, a), bb = msum(b, b), ab = msum(a, b), ba = msum(b, a);

  Evaluation ev;
  auto& c = ev.checks;
  c.add("A+A prop B+B", equal_up_to_translation(aa, bb).has_value());
  c.add("A+B prop B+A", equal_up_to_translation(ab, ba).has_value());
  c.add("not A+A prop B+A", !equal_up_to_translation(aa, ba).has_value(),
        json{{"profile_AA", multiplicity_profile(aa)}, {"profile_BA", multiplicity_profile(ba)}});
  c.add("not A+B prop B+B", !equal_up_to_translation(ab, bb).has_value());
  c.add("no self-loop at A", !cat_with(kPm, a, b, a));
  c.add("no self-loop at B", !cat_with(kPm, a, b, b));
  std::string reason;
  c.add("2-cycle valid", cycle.length() == 2 && cycle_is_valid(kPm, a, b, cycle, &reason),
        reason.empty() ? json(nullptr) : json(reason));
  return ev;
}

json witness_pm_omega(json& extra) {
  const auto e0 = GroupElement::mag_phase(1, 0);
  const auto third = GroupElement::mag_phase(1, q("1/3"));
  const auto two_thirds = GroupElement::mag_phase(1, q("2/3"));
  const GMultiset a = GMultiset::from_entries(GroupKind::magphase, 1, {{e0, 1}, {third, 2}});
  const GMultiset b = GMultiset::from_entries(GroupKind::magphase, 1, {{e0, 1}, {two_thirds, 2}});

  const std::vector<State> s{a, b};
  const FlexReport report = flex_cycle_search(kPm, a, b, s, false);
  extra["search"] = jio::to_json(report);

  CatalystCycle cycle;
  if (report.cycle)
    for (auto i : *report.cycle) cycle.catalysts.push_back(s[i]);
  return json{{"A", jio::to_json(a)}, {"B", jio::to_json(b)}, {"cycle", jio::to_json(cycle)}};
}

// ---------------------------------------------------------------- advantage

const TTInstance kZ = TTInstance::multiset(GroupKind::zvec, Relation::equal);

Evaluation evaluate_advantage(const json& w) {
  const json& polys = need(w, "polynomials");
  std::map<std::string, IntPolynomial> p;
  for (const char* name : {"X", "Y", "A", "B", "C0", "C1", "D0", "D1"})
    p.emplace(name, jio::polynomial_from_json(need(polys, name)));
  const CatalystCycle cycle = jio::cycle_from_json(need(w, "cycle"), kZ);

  Evaluation ev;
  auto& c = ev.checks;

  bool nonneg = true;
  for (const char* name : {"A", "B", "C0", "C1", "D0", "D1"}) nonneg = nonneg && is_nonneg(p.at(name)) && !p.at(name).is_zero();
  c.add("A,B,C0,C1,D0,D1 nonnegative", nonneg);
  if (!nonneg) return ev;

  std::map<std::string, GMultiset> m;
  for (const auto& [name, poly] : p)
    if (name != "X" && name != "Y") m.emplace(name, iota(poly));

  c.add("A = B X Y", p.at("A") == p.at("B") * p.at("X") * p.at("Y"));
  c.add("i(A)+i(C0) = i(B)+i(D1)+i(C1)",
        msum(m.at("A"), m.at("C0")) == msum(msum(m.at("B"), m.at("D1")), m.at("C1")));
  c.add("i(A)+i(C1) = i(B)+i(D0)+i(C0)",
        msum(m.at("A"), m.at("C1")) == msum(msum(m.at("B"), m.at("D0")), m.at("C0")));
  std::string reason;
  c.add("catalyst cycle valid", cycle.length() == 2 && cycle_is_valid(kZ, m.at("A"), m.at("B"), cycle, &reason),
        reason.empty() ? json(nullptr) : json(reason));

  const auto quotient = divide_exact(p.at("A"), p.at("B"));
  const bool quotient_negative = quotient && !is_nonneg(*quotient) && *quotient == p.at("X") * p.at("Y");
  c.add("A/B = XY has a negative coefficient", quotient_negative,
        quotient ? json{{"quotient", quotient->str()}, {"x^2", to_string(quotient->coefficient({2}))}}
                 : json(nullptr));
  c.add("(i(A), i(B)) not in CatExt_Z", !catext_exists(kZ, m.at("A"), m.at("B")).has_value());
  c.add("size i(A) = 70", m.at("A").size() == 70, to_string(m.at("A").size()));
  c.add("size i(C0) = 10", m.at("C0").size() == 10, to_string(m.at("C0").size()));

  // Element listings as displayed alongside the example.
  const std::map<std::string, GMultiset> listed{
      {"A", zset({{0, 8}, {1, 18}, {2, 8}, {3, 5}, {4, 17}, {5, 12}, {6, 2}})},
      {"B", zset({{0, 1}, {1, 1}})},
      {"C0", zset({{0, 4}, {1, 5}, {2, 1}})},
      {"C1", zset({{0, 2}, {1, 4}, {2, 1}, {3, 1}, {4, 4}, {5, 2}})},
      {"D0", zset({{0, 16}, {1, 8}, {2, 1}})},
      {"D1", zset({{0, 4}, {1, 8}, {3, 4}, {4, 17}, {5, 4}, {7, 8}, {8, 4}})}};
  bool same = true;
  for (const char* name : {"A", "B", "C0", "C1"}) same = same && listed.at(name) == m.at(name);
  const bool direct = listed.at("D0") == m.at("D0") && listed.at("D1") == m.at("D1");
  const bool swapped = listed.at("D0") == m.at("D1") && listed.at("D1") == m.at("D0");
  c.add("element listings match", same && (direct || swapped),
        json{{"D_labels", direct ? "as defined" : swapped ? "swapped" : "mismatch"}});
  if (same && swapped && !direct)
    ev.note = "listed i(D0) = " + listed.at("D0").str() + " is i(X^2) = i(D1), and the listed i(D1) is i(Y^2) = i(D0); "
              "the identities hold with D0 = Y^2, D1 = X^2";
  return ev;
}

json witness_advantage(json& extra) {
  const IntPolynomial x = uni({4, 1}), y = uni({2, 2, -1, 2, 2}), b = uni({1, 1});
  const IntPolynomial a = b * x * y, c0 = b * x, c1 = b * y, d0 = y * y, d1 = x * x;
  json polys{{"X", jio::to_json(x)},   {"Y", jio::to_json(y)},   {"A", jio::to_json(a)},
             {"B", jio::to_json(b)},   {"C0", jio::to_json(c0)}, {"C1", jio::to_json(c1)},
             {"D0", jio::to_json(d0)}, {"D1", jio::to_json(d1)}};

  const std::vector<State> s{iota(c0), iota(c1)};
  const FlexReport report = flex_cycle_search(kZ, iota(a), iota(b), s, true);
  extra["search"] = jio::to_json(report);

  CatalystCycle cycle;
  if (report.cycle) {
    const auto& idx = *report.cycle;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      cycle.catalysts.push_back(s[idx[k]]);
      cycle.discards.push_back(report.edges[idx[k]][idx[(k + 1) % idx.size()]].discard);
    }
  }
  return json{{"polynomials", polys}, {"cycle", jio::to_json(cycle)}};
}

// ---------------------------------------------------------------- locc-positive

const TTInstance kLocc = TTInstance::majorization();

Evaluation evaluate_locc_positive(const json& w) {
  const ProbVector a = jio::prob_vector_from_json(need(w, "a"));
  const ProbVector b = jio::prob_vector_from_json(need(w, "b"));
  const CatalystCycle cycle = jio::cycle_from_json(need(w, "cycle"), kLocc);

  Evaluation ev;
  auto& c = ev.checks;
  struct Rel {
    const char* name;
    const ProbVector& u1;
    const ProbVector& u2;
    const ProbVector& v1;
    const ProbVector& v2;
    bool expected;
  };
  const Rel rels[] = {{"a(x)a < b(x)b", a, a, b, b, true},
                      {"a(x)b < b(x)a", a, b, b, a, true},
                      {"not a(x)a < b(x)a", a, a, b, a, false},
                      {"not a(x)b < b(x)b", a, b, b, b, false}};
  for (const auto& r : rels) {
    const MajorizationCheck mc = check_majorization(tensor(r.u1, r.u2), tensor(r.v1, r.v2));
    c.add(r.name, mc.holds == r.expected, jio::to_json(mc));
  }
  std::string reason;
  c.add("2-cycle a -> b -> a valid", cycle.length() == 2 && cycle_is_valid(kLocc, a, b, cycle, &reason),
        reason.empty() ? json(nullptr) : json(reason));
  return ev;
}

json witness_locc_positive(json& extra) {
  const ProbVector a = pv({"4/10", "4/10", "1/10", "1/10"});
  const ProbVector b = pv({"1/2", "29/100", "21/100", "0"});
  const std::vector<State> s{a, b};
  const FlexReport report = flex_cycle_search(kLocc, a, b, s, false);
  extra["search"] = jio::to_json(report);
  CatalystCycle cycle;
  if (report.cycle)
    for (auto i : *report.cycle) cycle.catalysts.push_back(s[i]);
  return json{{"a", jio::to_json(a)}, {"b", jio::to_json(b)}, {"cycle", jio::to_json(cycle)}};
}

// ---------------------------------------------------------------- no-unique-factorisation

Evaluation evaluate_no_unique_factorisation(const json& w) {
  const char* names[] = {"pa2", "pb2", "pc2", "pd2"};
  std::vector<ProbVector> v;
  for (const char* n : names) v.push_back(jio::prob_vector_from_json(need(w, n)));
  const ProbVector expected = jio::prob_vector_from_json(need(w, "product"));

  Evaluation ev;
  auto& c = ev.checks;
  const ProbVector ab = tensor(v[0], v[1]), cd = tensor(v[2], v[3]);
  c.add("pa2(x)pb2 LU-equivalent to pc2(x)pd2", lu_equivalent(ab, cd));
  c.add("common product", lu_equivalent(ab, expected) && lu_equivalent(cd, expected), jio::to_json(ab));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      c.add(std::string(names[i]) + " not LU-equivalent to " + names[j], !lu_equivalent(v[i], v[j]));
  for (std::size_t i = 0; i < v.size(); ++i)
    c.add(std::string(names[i]) + " irreducible", tensor_factorizations(v[i]).empty());
  return ev;
}

json witness_no_unique_factorisation(json&) {
  return json{{"pa2", jio::to_json(weights({1, 1, 2, 8}))},
              {"pb2", jio::to_json(weights({1, 1, 2}))},
              {"pc2", jio::to_json(weights({1, 1, 1, 1, 4, 8}))},
              {"pd2", jio::to_json(weights({1, 2}))},
              {"product", jio::to_json(weights({1, 1, 1, 1, 2, 2, 2, 2, 4, 8, 8, 16}))}};
}

// ---------------------------------------------------------------- anyposint

void require_n_list(const std::vector<unsigned>& ns) {
  if (ns.empty()) throw Error(Errc::invalid_argument, "n list must not be empty");
  for (unsigned n : ns)
    if (n < 2) throw Error(Errc::invalid_argument, "every n must be >= 2, got " + std::to_string(n));
}

Evaluation evaluate_anyposint(const json& w) {
  Evaluation ev;
  for (const auto& item : need(w, "instances")) {
    const unsigned n = need(item, "n").get<unsigned>();
    const IntPolynomial p = jio::polynomial_from_json(need(item, "p"));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const NegativityResult neg = negativity(p, n);
    ev.checks.add(tag + "negativity(p) = n", neg.is_finite() && neg.value == n, jio::to_json(neg));
    ev.checks.add(tag + "(1+x) p nonnegative", is_nonneg(uni({1, 1}) * p));
    ev.checks.add(tag + "coefficient bound", satisfies_coefficient_bound(p, n));
  }
  return ev;
}

json witness_anyposint(const std::vector<unsigned>& ns) {
  require_n_list(ns);
  json inst = json::array();
  for (unsigned n : ns) inst.push_back({{"n", n}, {"p", jio::to_json(construct_negativity_n(n))}});
  return json{{"instances", inst}};
}

// ---------------------------------------------------------------- arbnumreq

Evaluation evaluate_arbnumreq(const json& w) {
  Evaluation ev;
  for (const auto& item : need(w, "instances")) {
    const unsigned n = need(item, "n").get<unsigned>();
    const IntPolynomial d = jio::polynomial_from_json(need(item, "D"));
    const IntPolynomial b = jio::polynomial_from_json(need(item, "B"));
    const IntPolynomial a = jio::polynomial_from_json(need(item, "A"));
    const CatalystCycle cycle = jio::cycle_from_json(need(item, "cycle"), kZ);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    auto& c = ev.checks;

    const bool shapes = n >= 1 && a == b * d && is_nonneg(a) && is_nonneg(b) && !b.is_zero() &&
                        sgn(b.coefficient({0})) > 0;
    c.add(tag + "A = B D with A, B nonnegative, B(0) > 0", shapes);
    if (!shapes) continue;
    const IntPolynomial dn = poly_pow(d, n);
    c.add(tag + "D^n nonnegative", is_nonneg(dn));
    if (!is_nonneg(dn)) continue;
    c.add(tag + "n i(A) = n i(B) + i(D^n)", n_fold(iota(a), n) == msum(n_fold(iota(b), n), iota(dn)));
    bool shorter_fail = true;
    IntPolynomial pk = d;
    for (unsigned k = 1; k < n; ++k, pk = pk * d) shorter_fail = shorter_fail && !is_nonneg(pk);
    c.add(tag + "D^k has a negative coefficient for all k < n", shorter_fail);
    std::string reason;
    c.add(tag + "extraction cycle of length n valid",
          cycle.length() == n && cycle_is_valid(kZ, iota(a), iota(b), cycle, &reason),
          reason.empty() ? json(nullptr) : json(reason));
  }
  return ev;
}

json witness_arbnumreq(const std::vector<unsigned>& ns) {
  require_n_list(ns);
  json inst = json::array();
  for (unsigned n : ns) {
    const IntPolynomial d = construct_negativity_n(n), b = uni({1, 1}), a = b * d;
    const CatalystCycle cycle =
        multicopy_to_chain(kZ, iota(a), iota(b), GMultiset::identity(GroupKind::zvec, 1), n, true);
    inst.push_back({{"n", n},
                    {"D", jio::to_json(d)},
                    {"B", jio::to_json(b)},
                    {"A", jio::to_json(a)},
                    {"cycle", jio::to_json(cycle)}});
  }
  return json{{"instances", inst}};
}

// ---------------------------------------------------------------- open-question-scan

IntPolynomial bivariate(std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
  std::vector<std::pair<Monomial, Integer>> ts;
  for (auto [i, j, c] : terms) ts.push_back({{i, j}, Integer(c)});
  return IntPolynomial::from_terms(2, ts);
}

json scan_summary(const ScanReport& r) {
  auto opt = [](const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"n_max", r.n_max},
              {"first_q_failure", opt(r.first_weighted_failure)},
              {"first_nonneg_power", opt(r.first_nonneg_power)}};
}

json scan_pair(const char* name, const IntPolynomial& p, const IntPolynomial& qq, unsigned n_max) {
  const ScanReport r = essential_positivity_scan(p, qq, n_max);
  return json{{"name", name},
              {"p", jio::to_json(p)},
              {"q", jio::to_json(qq)},
              {"p_str", p.str()},
              {"q_str", qq.str()},
              {"result", scan_summary(r)}};
}

json witness_open_question(unsigned uni_max, unsigned bi_max) {
  if (uni_max < 1 || bi_max < 1) throw Error(Errc::invalid_argument, "scan bounds must be >= 1");
  const IntPolynomial p1 = uni({1, 1, 1, -1, 1, -1, 1, 1, 1});
  const IntPolynomial q1 = uni({1, 1, 1, 1});
  const IntPolynomial p2 = bivariate({{0, 0, 1}, {3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1},
                                      {3, 1, 1}, {2, 2, -1}, {1, 3, 1}, {3, 2, 1}, {2, 3, 1}});
  const IntPolynomial q2 = bivariate({{1, 0, 1}, {0, 1, 1}});
  return json{{"pairs", json::array({scan_pair("univariate", p1, q1, uni_max),
                                     scan_pair("bivariate", p2, q2, bi_max)})}};
}

std::string scan_text(const json& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& pair : w.at("pairs")) {
    const json& r = pair.at("result");
    if (!first) out << "; ";
    first = false;
    out << pair.at("name").get<std::string>() << " n<=" << r.at("n_max") << ": ";
    if (r.at("first_q_failure").is_null())
      out << "no q*p^n failure";
    else
      out << "q*p^n fails at n=" << r.at("first_q_failure");
    if (r.at("first_nonneg_power").is_null())
      out << ", p^n never nonnegative for n>=1";
    else
      out << ", p^n nonnegative at n=" << r.at("first_nonneg_power");
  }
  return out.str();
}

/// Reruns the scans and compares their summaries with the certificate.
ClaimStatus reverify_open_question(const json& w) {
  for (const auto& pair : need(w, "pairs")) {
    const IntPolynomial p = jio::polynomial_from_json(need(pair, "p"));
    const IntPolynomial qq = jio::polynomial_from_json(need(pair, "q"));
    const json& result = need(pair, "result");
    const auto r = essential_positivity_scan(p, qq, need(result, "n_max").get<unsigned>());
    if (scan_summary(r) != result) return ClaimStatus::fail;
  }
  return ClaimStatus::evidence_only;
}

// ---------------------------------------------------------------- plumbing

using Evaluator = std::function<Evaluation(const json&)>;

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table{
      {"pm-omega", evaluate_pm_omega},
      {"advantage", evaluate_advantage},
      {"locc-positive", evaluate_locc_positive},
      {"no-unique-factorisation", evaluate_no_unique_factorisation},
      {"anyposint", evaluate_anyposint},
      {"arbnumreq", evaluate_arbnumreq}};
  return table;
}

ClaimReport finish(std::string id, json witness, json extra) {
  ClaimReport r;
  r.id = std::move(id);
  Evaluation ev = evaluators().at(r.id)(witness);
  r.status = ev.checks.status();
  r.summary = ev.checks.summary();
  r.paper_note = std::move(ev.note);
  extra["witness"] = std::move(witness);
  extra["checks"] = std::move(ev.checks.list);
  r.details = std::move(extra);
  return r;
}

template <typename F>
ClaimReport timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport r = f();
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::evidence_only: return "evidence-only";
  }
  return "fail";
}

ClaimStatus parse_claim_status(std::string_view s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "evidence-only") return ClaimStatus::evidence_only;
  throw Error(Errc::schema_violation, "unknown claim status '" + std::string(s) + "'");
}

ClaimReport verify_pm_omega() {
  return timed([] {
    json extra = json::object();
    json w = witness_pm_omega(extra);
    ClaimReport r = finish("pm-omega", std::move(w), std::move(extra));
    const json& s = r.details.at("search");
    const bool found = s.at("every_node_has_successor").get<bool>() && s.at("cycle") == json::array({0, 1});
    if (!found) r.status = ClaimStatus::fail;
    return r;
  });
}

ClaimReport verify_advantage() {
  return timed([] {
    json extra = json::object();
    json w = witness_advantage(extra);
    return finish("advantage", std::move(w), std::move(extra));
  });
}

ClaimReport verify_locc_positive() {
  return timed([] {
    json extra = json::object();
    json w = witness_locc_positive(extra);
    ClaimReport r = finish("locc-positive", std::move(w), std::move(extra));
    const json& s = r.details.at("search");
    const bool found = s.at("every_node_has_successor").get<bool>() && s.at("cycle") == json::array({0, 1});
    if (!found) r.status = ClaimStatus::fail;
    return r;
  });
}

ClaimReport verify_no_unique_factorisation() {
  return timed([] {
    json extra = json::object();
    json w = witness_no_unique_factorisation(extra);
    return finish("no-unique-factorisation", std::move(w), std::move(extra));
  });
}

ClaimReport verify_anyposint(const std::vector<unsigned>& ns) {
  return timed([&] { return finish("anyposint", witness_anyposint(ns), json::object()); });
}

ClaimReport verify_arbnumreq(const std::vector<unsigned>& ns) {
  return timed([&] { return finish("arbnumreq", witness_arbnumreq(ns), json::object()); });
}

ClaimReport scan_open_question(unsigned univariate_n_max, unsigned bivariate_n_max) {
  return timed([&] {
    ClaimReport r;
    r.id = "open-question-scan";
    r.status = ClaimStatus::evidence_only;
    json w = witness_open_question(univariate_n_max, bivariate_n_max);
    r.summary = scan_text(w);
    r.details = json{{"witness", std::move(w)}};
    return r;
  });
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"pm-omega",  "advantage", "locc-positive", "no-unique-factorisation",
                                            "anyposint", "arbnumreq", "open-question-scan"};
  return ids;
}

std::vector<ClaimReport> run_all(const BenchConfig& config) {
  for (const auto& id : config.only)
    if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end())
      throw Error(Errc::invalid_argument, "unknown claim id '" + id + "'");
  auto wanted = [&](const std::string& id) {
    return config.only.empty() || std::find(config.only.begin(), config.only.end(), id) != config.only.end();
  };
  const std::map<std::string, std::function<ClaimReport()>> run{
      {"pm-omega", verify_pm_omega},
      {"advantage", verify_advantage},
      {"locc-positive", verify_locc_positive},
      {"no-unique-factorisation", verify_no_unique_factorisation},
      {"anyposint", [&] { return verify_anyposint(config.anyposint_ns); }},
      {"arbnumreq", [&] { return verify_arbnumreq(config.arbnumreq_ns); }},
      {"open-question-scan", [&] { return scan_open_question(config.scan_univariate, config.scan_bivariate); }}};
  std::vector<ClaimReport> out;
  for (const auto& id : claim_ids())
    if (wanted(id)) out.push_back(run.at(id)());
  return out;
}

bool all_passed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == ClaimStatus::fail; });
}

json to_json(const ClaimReport& r, bool with_timing) {
  json j{{"id", r.id}, {"status", std::string(to_string(r.status))}, {"summary", r.summary}, {"details", r.details}};
  if (r.paper_note) j["paper_note"] = *r.paper_note;
  if (with_timing) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

json to_json(const std::vector<ClaimReport>& rs, bool with_timing) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(to_json(r, with_timing));
  return arr;
}

ClaimReport report_from_json(const json& j) {
  ClaimReport r;
  r.id = need(j, "id").get<std::string>();
  r.status = parse_claim_status(need(j, "status").get<std::string>());
  r.summary = j.value("summary", "");
  r.details = need(j, "details");
  if (j.contains("paper_note")) r.paper_note = j.at("paper_note").get<std::string>();
  r.runtime_seconds = j.value("runtime_seconds", 0.0);
  return r;
}

std::string render_table(const std::vector<ClaimReport>& reports, bool with_timing) {
  std::size_t id_w = 5;
  for (const auto& r : reports) id_w = std::max(id_w, r.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(id_w)) << "claim" << "  " << std::setw(15) << "status";
  if (with_timing) out << std::right << std::setw(9) << "time(s)" << "  " << std::left;
  out << "summary\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(id_w)) << r.id << "  " << std::setw(15) << to_string(r.status);
    if (with_timing)
      out << std::right << std::setw(9) << std::fixed << std::setprecision(3) << r.runtime_seconds << "  "
          << std::left;
    out << r.summary << "\n";
    if (r.paper_note) out << std::string(id_w + 2, ' ') << "note: " << *r.paper_note << "\n";
  }
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.status == ClaimStatus::fail; });
  out << (failed == 0 ? "all claims pass" : std::to_string(failed) + " claim(s) failed") << "\n";
  return out.str();
}

ClaimStatus reverify(const json& report) {
  const std::string id = need(report, "id").get<std::string>();
  const json& witness = need(need(report, "details"), "witness");
  if (id == "open-question-scan") return reverify_open_question(witness);
  const auto it = evaluators().find(id);
  if (it == evaluators().end()) throw Error(Errc::schema_violation, "unknown claim id '" + id + "'");
  return it->second(witness).checks.status();
}

}  // namespace flexcat::claims
