// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include "flexcat/catalysis.hpp"
#include "flexcat/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace flexcat;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

struct Run {
  int status = -1;
  std::string out;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Run flexcat_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(FLEXCAT_BIN);
  for (const auto& a : args) cmd += " " + quote(a);
  return shell(cmd);
}

struct Line {
  int id;
  bool ok;
  std::string text;
};

std::vector<Line> results;

void report(int id, bool ok, const std::string& text) {
  results.push_back({id, ok, text});
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << text << std::endl;
}

// ------------------------------------------------------------------ 1

void criterion1() {
  const auto t0 = Clock::now();
  const Run r = flexcat_cli({"verify-paper"});
  const double dt = seconds_since(t0);
  std::ostringstream why;
  bool ok = r.status == 0 && dt < 60.0;
  try {
    const json rep = json::parse(r.out);
    std::size_t passed = 0, evidence = 0;
    for (const auto& c : rep) {
      const std::string st = c.at("status");
      if (st == "pass") ++passed;
      else if (st == "evidence-only") ++evidence;
      else ok = false, why << " " << c.at("id").get<std::string>() << "=" << st;
    }
    std::vector<unsigned> any, arb;
    for (const auto& c : rep) {
      if (c.at("id") == "anyposint")
        for (const auto& i : c.at("details").at("witness").at("instances")) any.push_back(i.at("n"));
      if (c.at("id") == "arbnumreq")
        for (const auto& i : c.at("details").at("witness").at("instances")) arb.push_back(i.at("n"));
    }
    ok = ok && passed == 6 && any == std::vector<unsigned>{2, 3, 4, 5} && arb == std::vector<unsigned>{2, 3};
    why << " " << passed << " claims pass, " << evidence << " evidence-only";
  } catch (const std::exception& e) {
    ok = false;
    why << " bad report: " << e.what();
  }
  std::ostringstream txt;
  txt << "verify-paper exit " << r.status << " in " << dt << " s (limit 60);" << why.str();
  report(1, ok, txt.str());
}

// ------------------------------------------------------------------ 2

void criterion2() {
  const auto t0 = Clock::now();
  const Run r = shell(std::string(quote(FLEXCAT_PROPERTY_BIN)) + " --gtest_color=no");
  const auto pos = r.out.find("[  PASSED  ]");
  std::string passed = pos == std::string::npos ? "none" : r.out.substr(pos + 13, r.out.find('\n', pos) - pos - 13);
  const bool ok = r.status == 0 && pos != std::string::npos && r.out.find("[  FAILED  ]") == std::string::npos;
  std::ostringstream txt;
  txt << "property suite (1000 trials per law) exit " << r.status << ", passed " << passed << " in "
      << seconds_since(t0) << " s";
  report(2, ok, txt.str());
}

// ------------------------------------------------------------------ 3

void criterion3() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240603);
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const Rational mag_pool[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  const TTInstance tt = TTInstance::multiset(GroupKind::magphase, Relation::translation);

  int agree = 0, yes = 0, total = 200;
  std::string first_disagreement;
  for (int t = 0; t < total; ++t) {
    const long d = uni(1, 6);
    auto phase = [&] { return Rational(uni(0, d - 1), d); };
    const long support = uni(1, 4);
    std::vector<GMultiset::Entry> ea, eb;
    std::vector<Rational> mags;
    for (long i = 0; i < support; ++i) {
      mags.push_back(mag_pool[uni(0, 3)]);
      ea.emplace_back(GroupElement::mag_phase(mags.back(), phase()), Integer(1));
    }
    if (uni(0, 1) == 0) {
      // Same magnitudes, fresh phases: catalysis expected.
      for (const auto& m : mags) eb.emplace_back(GroupElement::mag_phase(m, phase()), Integer(1));
    } else {
      for (long i = 0; i < support; ++i) eb.emplace_back(GroupElement::mag_phase(mag_pool[uni(0, 3)], phase()), Integer(1));
    }
    const GMultiset a = GMultiset::from_entries(GroupKind::magphase, 1, ea);
    const GMultiset b = GMultiset::from_entries(GroupKind::magphase, 1, eb);

    std::vector<GroupElement> pool;
    for (const Rational& m : {Rational(1), Rational(2)})
      for (long k = 0; k < d; ++k) pool.push_back(GroupElement::mag_phase(m, Rational(k, d)));
    const SearchBounds bounds{static_cast<std::size_t>(d), 1, 10'000'000};

    const bool decided = cat_pm_decide(a, b).has_value();
    const bool searched = brute_force_catalyst_search(tt, a, b, pool, bounds).has_value();
    yes += decided;
    if (decided == searched) ++agree;
    else if (first_disagreement.empty()) first_disagreement = " first disagreement: " + a.str() + " vs " + b.str();
  }
  const double dt = seconds_since(t0);
  std::ostringstream txt;
  txt << agree << "/" << total << " MagPhase instances agree (" << yes << " catalysable) in " << dt
      << " s (limit 300)" << first_disagreement;
  report(3, agree == total && dt < 300.0, txt.str());
}

// ------------------------------------------------------------------ 4

void criterion4() {
  bool ok = true;
  double worst = 0;
  std::ostringstream detail;
  for (unsigned n = 2; n <= 8; ++n) {
    const auto t0 = Clock::now();
    bool good = false;
    try {
      const IntPolynomial p = construct_negativity_n(n);
      const NegativityResult r = negativity(p, n);
      good = r.is_finite() && r.value == n && is_nonneg(IntPolynomial::univariate({1, 1}) * p) &&
             satisfies_coefficient_bound(p, n);
    } catch (const std::exception& e) {
      detail << " n=" << n << " threw " << e.what();
    }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (!good || dt >= 10.0) {
      ok = false;
      detail << " n=" << n << (good ? " slow" : " wrong");
    }
  }
  std::ostringstream txt;
  txt << "construct_negativity_n verified for n=2..8, slowest " << worst << " s (limit 10 each)" << detail.str();
  report(4, ok, txt.str());
}

// ------------------------------------------------------------------ 5

std::vector<json> read_lines(const std::string& path) {
  std::ifstream f(path);
  std::vector<json> out;
  for (std::string s; std::getline(f, s);)
    if (!s.empty()) out.push_back(json::parse(s));
  return out;
}

bool monotone(const std::vector<json>& log, unsigned last) {
  if (log.size() != last + 1) return false;
  for (unsigned i = 0; i < log.size(); ++i)
    if (log[i].at("n") != i || !log[i].at("p_pow_nonneg").is_boolean() || !log[i].at("q_p_pow_nonneg").is_boolean())
      return false;
  return true;
}

void criterion5() {
  const std::string p1 = R"({"arity":1,"terms":[{"exp":[0],"coeff":"1"},{"exp":[1],"coeff":"1"},{"exp":[2],"coeff":"1"},{"exp":[3],"coeff":"-1"},{"exp":[4],"coeff":"1"},{"exp":[5],"coeff":"-1"},{"exp":[6],"coeff":"1"},{"exp":[7],"coeff":"1"},{"exp":[8],"coeff":"1"}]})";
  const std::string q1 = R"({"arity":1,"terms":[{"exp":[0],"coeff":"1"},{"exp":[1],"coeff":"1"},{"exp":[2],"coeff":"1"},{"exp":[3],"coeff":"1"}]})";
  const std::string p2 = R"({"arity":2,"terms":[{"exp":[0,0],"coeff":"1"},{"exp":[3,0],"coeff":"1"},{"exp":[2,1],"coeff":"1"},{"exp":[1,2],"coeff":"1"},{"exp":[0,3],"coeff":"1"},{"exp":[3,1],"coeff":"1"},{"exp":[2,2],"coeff":"-1"},{"exp":[1,3],"coeff":"1"},{"exp":[3,2],"coeff":"1"},{"exp":[2,3],"coeff":"1"}]})";
  const std::string q2 = R"({"arity":2,"terms":[{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"1"}]})";

  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  struct Case { const char* name; const std::string& p; const std::string& q; unsigned max, split; };
  for (const Case& c : {Case{"univariate", p1, q1, 100, 40}, Case{"bivariate", p2, q2, 50, 20}}) {
    const std::string full = std::string("scan_") + c.name + "_full.jsonl";
    const std::string part = std::string("scan_") + c.name + "_resumed.jsonl";
    const std::string ck = std::string("scan_") + c.name + ".checkpoint.json";
    const Run a = flexcat_cli({"poly-scan", "--p", c.p, "--q", c.q, "--max", std::to_string(c.max), "--log", full});
    const Run b1 = flexcat_cli({"poly-scan", "--p", c.p, "--q", c.q, "--max", std::to_string(c.split), "--log", part,
                                "--checkpoint", ck});
    const Run b2 = flexcat_cli({"poly-scan", "--resume", ck, "--max", std::to_string(c.max), "--log", part,
                                "--checkpoint", ck});
    bool good = a.status == 0 && b1.status == 0 && b2.status == 0;
    try {
      const auto lf = read_lines(full), lr = read_lines(part);
      good = good && monotone(lf, c.max) && lf == lr;
      const json sa = json::parse(a.out), sb = json::parse(b2.out);
      good = good && sa.at("first_q_failure") == sb.at("first_q_failure") &&
             sa.at("first_nonneg_power") == sb.at("first_nonneg_power") && sb.at("resumed_from") == c.split + 1;
      detail << " " << c.name << " n<=" << c.max << ": first q*p^n failure " << sa.at("first_q_failure").dump()
             << ", first nonneg p^n " << sa.at("first_nonneg_power").dump() << ";";
    } catch (const std::exception& e) {
      good = false;
      detail << " " << c.name << ": " << e.what();
    }
    ok = ok && good;
  }
  std::ostringstream txt;
  txt << "scans complete with monotone JSON-lines logs and checkpoint resume identical to straight runs in "
      << seconds_since(t0) << " s (evidence only:" << detail.str() << ")";
  report(5, ok, txt.str());
}

// ------------------------------------------------------------------ 6

using Schema = std::function<bool(const json&)>;

bool is_rat(const json& j) { return j.is_string(); }
bool is_rat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_rat(x)) return false;
  return true;
}
bool is_multiset(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("arity") || !j.contains("elems")) return false;
  if (!j["elems"].is_array() || j["elems"].empty()) return false;
  for (const auto& e : j["elems"])
    if (!e.contains("e") || !e.contains("m") || !e["m"].is_string()) return false;
  return true;
}
bool is_poly(const json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms") || !j["terms"].is_array()) return false;
  for (const auto& t : j["terms"])
    if (!t.contains("exp") || !t["exp"].is_array() || !t.contains("coeff") || !t["coeff"].is_string()) return false;
  return true;
}
bool is_state(const json& j) { return is_multiset(j) || is_rat_array(j); }
bool is_cycle(const json& j) {
  if (!j.is_object() || !j.contains("catalysts") || !j["catalysts"].is_array()) return false;
  for (const auto& c : j["catalysts"])
    if (!is_state(c)) return false;
  if (j.contains("discards"))
    for (const auto& d : j["discards"])
      if (!d.is_null() && !is_state(d)) return false;
  return true;
}

bool error_schema(const json& j) {
  return j.is_object() && j.contains("error") && j["error"].contains("kind") && j["error"]["kind"].is_string() &&
         j["error"].contains("message") && j["error"]["message"].is_string();
}
bool maj_schema(const json& j) {
  if (!j.contains("majorizes") || !j["majorizes"].is_boolean() || !j.contains("first_violation")) return false;
  const json& v = j["first_violation"];
  return v.is_null() || (v["k"].is_number_unsigned() && is_rat(v["lhs"]) && is_rat(v["rhs"]));
}
bool locc_schema(const json& j) { return j.contains("catalysis") && j["catalysis"].is_boolean() && maj_schema(j["check"]); }
bool lu_schema(const json& j) { return j.contains("lu_equivalent") && j["lu_equivalent"].is_boolean(); }
bool msum_schema(const json& j) { return j.contains("result") && is_multiset(j["result"]) && j["size"].is_string(); }
bool deconv_schema(const json& j) { return j.contains("quotient") && (j["quotient"].is_null() || is_multiset(j["quotient"])); }
bool flex_schema(const json& j) {
  return j.contains("edges") && j["edges"].is_array() && j.contains("successor") && j["every_node_has_successor"].is_boolean() &&
         j.contains("cycle") && (j["cycle"].is_null() || j["cycle"].is_array()) && j["in_cat_f"].is_boolean() &&
         (j["catalyst_cycle"].is_null() || is_cycle(j["catalyst_cycle"]));
}
bool catpm_schema(const json& j) {
  return j["catalysis"].is_boolean() && (j["catalyst"].is_null() || is_multiset(j["catalyst"])) && j.contains("translation");
}
bool chain_schema(const json& j) { return j["feasible"].is_boolean() && (j["cycle"].is_null() || is_cycle(j["cycle"])); }
bool multicopy_schema(const json& j) {
  if (!j["valid"].is_boolean()) return false;
  if (j["statement"].is_null()) return j["reason"].is_string();
  return j["statement"]["copies"].is_number_unsigned() && is_state(j["statement"]["aggregate_catalyst"]);
}
bool neg_schema(const json& j) {
  return j.contains("negativity") && (j["negativity"].is_number_unsigned() || j["exceeds_bound"].is_number_unsigned());
}
bool construct_schema(const json& j) { return j["n"].is_number_unsigned() && is_poly(j["p"]) && j["p_str"].is_string(); }
bool scan_schema(const json& j) {
  return j["n_max"].is_number_unsigned() && j["next_n"].is_number_unsigned() && j.contains("first_q_failure") &&
         j.contains("first_nonneg_power");
}
bool factor_schema(const json& j) {
  if (!j["irreducible"].is_boolean() || !j["factorizations"].is_array()) return false;
  for (const auto& f : j["factorizations"])
    if (!is_rat_array(f["first"]) || !is_rat_array(f["second"])) return false;
  return true;
}
bool search_schema(const json& j) {
  return j["found"].is_boolean() && (j["catalyst"].is_null() || is_state(j["catalyst"])) && j["candidate_bound"].is_number();
}
bool report_schema(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& c : j)
    if (!c["id"].is_string() || !c["status"].is_string() || !c["details"].is_object()) return false;
  return true;
}

void criterion6() {
  const std::string A = R"(["4/10","4/10","1/10","1/10"])", B = R"(["1/2","29/100","21/100","0"])";
  const std::string oa = R"({"group":"magphase","arity":1,"elems":[{"e":{"mag":"1","phase":"0"},"m":"1"},{"e":{"mag":"1","phase":"1/3"},"m":"2"}]})";
  const std::string ob = R"({"group":"magphase","arity":1,"elems":[{"e":{"mag":"1","phase":"0"},"m":"1"},{"e":{"mag":"1","phase":"2/3"},"m":"2"}]})";
  const std::string z01 = R"({"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"1"},{"e":["1"],"m":"1"}]})";
  const std::string z0 = R"({"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"1"}]})";
  const std::string c0 = R"({"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"4"},{"e":["1"],"m":"5"},{"e":["2"],"m":"1"}]})";
  const std::string ad = R"({"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"8"},{"e":["1"],"m":"18"},{"e":["2"],"m":"8"},{"e":["3"],"m":"5"},{"e":["4"],"m":"17"},{"e":["5"],"m":"12"},{"e":["6"],"m":"2"}]})";
  const std::string c1 = R"({"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"2"},{"e":["1"],"m":"4"},{"e":["2"],"m":"1"},{"e":["3"],"m":"1"},{"e":["4"],"m":"4"},{"e":["5"],"m":"2"}]})";
  const std::string y = R"({"arity":1,"terms":[{"exp":[0],"coeff":"2"},{"exp":[1],"coeff":"2"},{"exp":[2],"coeff":"-1"},{"exp":[3],"coeff":"2"},{"exp":[4],"coeff":"2"}]})";
  const std::string onepx = R"({"arity":1,"terms":[{"exp":[0],"coeff":"1"},{"exp":[1],"coeff":"1"}]})";
  const std::string oneminus = R"({"arity":1,"terms":[{"exp":[0],"coeff":"1"},{"exp":[1],"coeff":"-1"}]})";
  const std::string arb_a = R"({"group":"zvec","elems":[{"e":["0"],"m":"312"},{"e":["1"],"m":"337"},{"e":["2"],"m":"24"},{"e":["3"],"m":"311"},{"e":["4"],"m":"624"},{"e":["5"],"m":"312"}]})";
  const std::string pool3 = R"([{"mag":"1","phase":"0"},{"mag":"1","phase":"1/3"},{"mag":"1","phase":"2/3"}])";
  const std::string adv_cycle = R"({"catalysts":[)" + c0 + "," + c1 + R"(],"discards":[{"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"16"},{"e":["1"],"m":"8"},{"e":["2"],"m":"1"}]},{"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"4"},{"e":["1"],"m":"8"},{"e":["3"],"m":"4"},{"e":["4"],"m":"17"},{"e":["5"],"m":"4"},{"e":["7"],"m":"8"},{"e":["8"],"m":"4"}]}]})";

  struct Case {
    std::string name;
    std::vector<std::string> args;
    int expected;
    Schema schema;
  };
  const std::vector<Case> cases{
      {"majorize false", {"majorize", "--u", A, "--v", B}, 1, maj_schema},
      {"majorize true", {"majorize", "--u", R"(["1/4","1/4","1/4","1/4"])", "--v", B}, 0, maj_schema},
      {"majorize decimals", {"majorize", "--u", R"(["0.4","0.4","0.1","0.1"])", "--v", R"(["0.4","0.4","0.1","0.1"])"}, 0, maj_schema},
      {"majorize malformed", {"majorize", "--u", R"(["1/2",)", "--v", B}, 2, error_schema},
      {"majorize sum!=1", {"majorize", "--u", R"(["1/2","1/3"])", "--v", B}, 2, error_schema},
      {"majorize missing --v", {"majorize", "--u", A}, 2, error_schema},
      {"locc-cat self catalyst", {"locc-cat", "--a", A, "--b", B, "--c", A}, 1, locc_schema},
      {"locc-cat flexible edge", {"locc-cat", "--a", A, "--b", B, "--c", B, "--c-next", A}, 0, locc_schema},
      {"lu-equal true", {"lu-equal", "--u", R"(["1/2","1/2","0"])", "--v", R"(["1/2","1/2"])"}, 0, lu_schema},
      {"lu-equal false", {"lu-equal", "--u", R"(["1/2","1/2"])", "--v", R"(["1/3","1/3","1/3"])"}, 1, lu_schema},
      {"msum", {"msum", "--a", z01, "--b", z01}, 0, msum_schema},
      {"msum group mismatch", {"msum", "--a", z01, "--b", oa}, 2, error_schema},
      {"msum bad multiplicity", {"msum", "--a", R"({"group":"zvec","elems":[{"e":["0"],"m":"0"}]})", "--b", z01}, 2, error_schema},
      {"deconvolve found", {"deconvolve", "--s", c0, "--b", z01}, 0, deconv_schema},
      {"deconvolve absent", {"deconvolve", "--s", ad, "--b", z01}, 1, deconv_schema},
      {"deconvolve magphase", {"deconvolve", "--s", oa, "--b", ob}, 2, error_schema},
      {"flex-cycle pm", {"flex-cycle", "--tt", "magphase-prop", "--a", oa, "--b", ob, "--catalysts", "[" + oa + "," + ob + "]"}, 0, flex_schema},
      {"flex-cycle extraction", {"flex-cycle", "--tt", "zvec-eq", "--extraction", "--a", ad, "--b", z01, "--catalysts", "[" + c0 + "," + c1 + "]"}, 0, flex_schema},
      {"flex-cycle locc", {"flex-cycle", "--tt", "majorization", "--a", A, "--b", B, "--catalysts", "[" + A + "," + B + "]"}, 0, flex_schema},
      {"flex-cycle no successor", {"flex-cycle", "--tt", "majorization", "--a", A, "--b", B, "--catalysts", "[" + A + "]"}, 1, flex_schema},
      {"flex-cycle bad tt", {"flex-cycle", "--tt", "qubits", "--a", A, "--b", B, "--catalysts", "[" + A + "]"}, 2, error_schema},
      {"flex-cycle wrong state type", {"flex-cycle", "--tt", "zvec-eq", "--a", A, "--b", B, "--catalysts", "[" + A + "]"}, 2, error_schema},
      {"cat-pm yes", {"cat-pm", "--a", oa, "--b", ob}, 0, catpm_schema},
      {"cat-pm no", {"cat-pm", "--a", R"({"group":"magphase","elems":[{"e":{"mag":"1","phase":"0"},"m":"1"},{"e":{"mag":"2","phase":"0"},"m":"1"}]})",
                     "--b", R"({"group":"magphase","elems":[{"e":{"mag":"1","phase":"0"},"m":"1"},{"e":{"mag":"3","phase":"0"},"m":"1"}]})"}, 1, catpm_schema},
      {"multicopy-chain n=2", {"multicopy-chain", "--tt", "zvec-eq", "--a", arb_a, "--b", z01, "--c", z0, "--n", "2", "--extraction"}, 0, chain_schema},
      {"multicopy-chain infeasible", {"multicopy-chain", "--tt", "zvec-eq", "--a", arb_a, "--b", z01, "--c", z0, "--n", "1", "--extraction"}, 1, chain_schema},
      {"chain-multicopy valid", {"chain-multicopy", "--tt", "zvec-eq", "--a", ad, "--b", z01, "--cycle", adv_cycle}, 0, multicopy_schema},
      {"chain-multicopy invalid", {"chain-multicopy", "--tt", "zvec-eq", "--a", z01, "--b", ad, "--cycle", adv_cycle}, 1, multicopy_schema},
      {"poly-neg Y", {"poly-neg", "--poly", y, "--max", "10"}, 0, neg_schema},
      {"poly-neg 1-x", {"poly-neg", "--poly", oneminus, "--max", "10"}, 1, neg_schema},
      {"poly-neg bad exp", {"poly-neg", "--poly", R"({"arity":1,"terms":[{"exp":["a"],"coeff":"1"}]})"}, 2, error_schema},
      {"construct-neg 4", {"construct-neg", "--n", "4"}, 0, construct_schema},
      {"construct-neg non-number", {"construct-neg", "--n", "four"}, 2, error_schema},
      {"poly-scan", {"poly-scan", "--p", onepx, "--max", "5"}, 0, scan_schema},
      {"poly-scan arity mismatch", {"poly-scan", "--p", onepx, "--q", R"({"arity":2,"terms":[{"exp":[1,0],"coeff":"1"}]})"}, 2, error_schema},
      {"factorize reducible", {"factorize", "--u", R"(["1/4","1/4","1/4","1/4"])"}, 0, factor_schema},
      {"factorize irreducible", {"factorize", "--u", R"(["1/12","1/12","2/12","8/12"])"}, 1, factor_schema},
      {"factorize support 1", {"factorize", "--u", R"(["1"])"}, 2, error_schema},
      {"search-cat found", {"search-cat", "--tt", "magphase-prop", "--a", oa, "--b", ob, "--pool", pool3, "--max-support", "3"}, 0, search_schema},
      {"search-cat none", {"search-cat", "--tt", "zvec-prop", "--a", c0, "--b", z01, "--pool", R"([["0"],["1"]])", "--max-support", "2", "--max-mult", "2"}, 1, search_schema},
      {"search-cat too large", {"search-cat", "--tt", "magphase-prop", "--a", oa, "--b", ob, "--pool", pool3, "--max-support", "3", "--max-mult", "1000", "--max-candidates", "1000"}, 2, error_schema},
      {"verify-paper subset", {"verify-paper", "--claims", "pm-omega,locc-positive"}, 0, report_schema},
      {"verify-paper unknown claim", {"verify-paper", "--claims", "fermat"}, 2, error_schema},
      {"unknown subcommand", {"teleport"}, 2, error_schema},
  };

  int good = 0;
  std::ostringstream bad;
  for (const auto& c : cases) {
    const Run r = flexcat_cli(c.args);
    bool ok = r.status == c.expected;
    try {
      ok = ok && c.schema(json::parse(r.out));
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) ++good;
    else bad << " [" << c.name << ": exit " << r.status << "]";
  }
  std::ostringstream txt;
  txt << good << "/" << cases.size() << " CLI invocations with documented exit status and schema-valid JSON"
      << bad.str();
  report(6, good == static_cast<int>(cases.size()) && cases.size() >= 30, txt.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  bool all = true;
  for (const auto& l : results) all = all && l.ok;
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
