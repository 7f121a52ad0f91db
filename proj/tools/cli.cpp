#include "cli.hpp"

#include "flexcat/catalysis.hpp"
#include "flexcat/claims.hpp"
#include "flexcat/errors.hpp"
#include "flexcat/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace flexcat::cli {
namespace {

using nlohmann::json;
namespace jio = flexcat::json_io;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_used = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_argument, "cannot read file '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

/// Option values are inline JSON, "@path" or "-" (standard input).
json load_json(Io& io, const std::string& value, const std::string& option) {
  std::string text;
  if (value == "-") {
    if (io.stdin_used) throw Error(Errc::invalid_argument, "only one option may read standard input");
    io.stdin_used = true;
    text.assign(std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>());
  } else if (!value.empty() && value.front() == '@') {
    text = read_file(value.substr(1));
  } else {
    text = value;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, "malformed JSON in " + option + " at byte " + std::to_string(e.byte) + ": " +
                                       e.what());
  }
}

void emit(Io& io, const json& j) { io.out << j.dump() << '\n'; }

int emit_error(Io& io, std::string_view kind, const std::string& message, int status) {
  io.err << "flexcat: " << message << '\n';
  io.out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  return status;
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::invalid_argument, "cannot write '" + path + "'");
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

/// Applies FLEXCAT_CONFIG defaults ({"subcommand": {"option": value}}).
/// Explicit flags still win because they are parsed afterwards.
void apply_config(CLI::App& app) {
  const char* path = std::getenv("FLEXCAT_CONFIG");
  if (path == nullptr || *path == '\0') return;
  json cfg;
  try {
    cfg = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("malformed FLEXCAT_CONFIG at byte ") + std::to_string(e.byte));
  }
  if (!cfg.is_object()) throw Error(Errc::schema_violation, "FLEXCAT_CONFIG must hold a JSON object");
  for (const auto& [name, opts] : cfg.items()) {
    CLI::App* sub = nullptr;
    try {
      sub = app.get_subcommand(name);
    } catch (const CLI::OptionNotFound&) {
      throw Error(Errc::schema_violation, "FLEXCAT_CONFIG: unknown subcommand '" + name + "'");
    }
    if (!opts.is_object()) throw Error(Errc::schema_violation, "FLEXCAT_CONFIG: '" + name + "' must be an object");
    for (const auto& [key, value] : opts.items()) {
      CLI::Option* opt = sub->get_option_no_throw("--" + key);
      if (opt == nullptr)
        throw Error(Errc::schema_violation, "FLEXCAT_CONFIG: unknown option --" + key + " for " + name);
      std::string text;
      if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_array() && opt->get_items_expected_max() > 1) {
        for (const auto& v : value) text += (text.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
      } else {
        text = value.dump();
      }
      opt->default_val(text);
    }
  }
}

using Handler = std::function<int(Io&)>;

struct Commands {
  // Raw option text; JSON is decoded after parsing.
  std::map<std::string, std::string> s;
  std::string tt = "zvec-eq";
  unsigned n = 1;
  unsigned max = 100;
  unsigned max_support = 1, max_mult = 1;
  std::uint64_t max_candidates = 10'000'000;
  std::size_t min_factor = 2;
  bool extraction = false;
  bool timings = false;
  unsigned checkpoint_every = 10;
  std::vector<std::string> claim_list;
  std::vector<unsigned> anyposint_ns{2, 3, 4, 5};
  std::vector<unsigned> arbnumreq_ns{2, 3};
  unsigned scan_uni = 100, scan_bi = 50;
};

bool has(const Commands& c, const std::string& key) { return c.s.count(key) && !c.s.at(key).empty(); }

json input(Io& io, Commands& c, const std::string& key) {
  if (!has(c, key)) throw Error(Errc::invalid_argument, "--" + key + " is required");
  return load_json(io, c.s.at(key), "--" + key);
}

State state(Io& io, Commands& c, const std::string& key, const TTInstance& tt) {
  return jio::state_from_json(input(io, c, key), tt);
}

int run_majorize(Io& io, Commands& c) {
  const ProbVector u = jio::prob_vector_from_json(input(io, c, "u"));
  const ProbVector v = jio::prob_vector_from_json(input(io, c, "v"));
  const MajorizationCheck mc = check_majorization(u, v);
  emit(io, jio::to_json(mc));
  return mc.holds ? kTrue : kFalse;
}

int run_locc_cat(Io& io, Commands& c) {
  const ProbVector a = jio::prob_vector_from_json(input(io, c, "a"));
  const ProbVector b = jio::prob_vector_from_json(input(io, c, "b"));
  const ProbVector cat = jio::prob_vector_from_json(input(io, c, "c"));
  const ProbVector next = has(c, "c-next") ? jio::prob_vector_from_json(input(io, c, "c-next")) : cat;
  const MajorizationCheck mc = check_majorization(tensor(a, cat), tensor(b, next));
  emit(io, json{{"catalysis", mc.holds}, {"check", jio::to_json(mc)}});
  return mc.holds ? kTrue : kFalse;
}

int run_lu_equal(Io& io, Commands& c) {
  const ProbVector u = jio::prob_vector_from_json(input(io, c, "u"));
  const ProbVector v = jio::prob_vector_from_json(input(io, c, "v"));
  const bool eq = lu_equivalent(u, v);
  emit(io, json{{"lu_equivalent", eq}});
  return eq ? kTrue : kFalse;
}

int run_msum(Io& io, Commands& c) {
  const GMultiset a = jio::multiset_from_json(input(io, c, "a"));
  const GMultiset b = jio::multiset_from_json(input(io, c, "b"));
  const GMultiset s = msum(a, b);
  emit(io, json{{"result", jio::to_json(s)}, {"size", to_string(s.size())}});
  return kTrue;
}

int run_deconvolve(Io& io, Commands& c) {
  const GMultiset s = jio::multiset_from_json(input(io, c, "s"));
  const GMultiset b = jio::multiset_from_json(input(io, c, "b"));
  const auto d = deconvolve(s, b);
  emit(io, json{{"quotient", d ? jio::to_json(*d) : json(nullptr)}});
  return d ? kTrue : kFalse;
}

int run_flex_cycle(Io& io, Commands& c) {
  const TTInstance tt = TTInstance::parse(c.tt);
  const State a = state(io, c, "a", tt), b = state(io, c, "b", tt);
  const std::vector<State> cats = jio::states_from_json(input(io, c, "catalysts"), tt);
  if (cats.empty()) throw Error(Errc::invalid_argument, "--catalysts must not be empty");
  DiscardWitnesses witnesses;
  if (has(c, "witnesses")) {
    const json w = input(io, c, "witnesses");
    if (!w.is_array()) throw Error(Errc::schema_violation, "--witnesses must be an array of {from,to,d}");
    for (const auto& item : w) {
      if (!item.is_object() || !item.contains("from") || !item.contains("to") || !item.contains("d"))
        throw Error(Errc::schema_violation, "each witness needs 'from', 'to' and 'd'");
      const auto from = item.at("from").get<std::size_t>(), to = item.at("to").get<std::size_t>();
      if (from >= cats.size() || to >= cats.size())
        throw Error(Errc::invalid_argument, "witness index out of range");
      witnesses.insert_or_assign({from, to}, jio::state_from_json(item.at("d"), tt));
    }
  }
  const FlexReport r = flex_cycle_search(tt, a, b, cats, c.extraction, witnesses.empty() ? nullptr : &witnesses);
  json j = jio::to_json(r);
  j["in_cat_f"] = r.every_node_has_successor;
  json cycle = nullptr;
  if (r.cycle) {
    CatalystCycle cc;
    const auto& idx = *r.cycle;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      cc.catalysts.push_back(cats[idx[k]]);
      if (c.extraction) cc.discards.push_back(r.edges[idx[k]][idx[(k + 1) % idx.size()]].discard);
    }
    cycle = jio::to_json(cc);
  }
  j["catalyst_cycle"] = cycle;
  emit(io, j);
  return r.every_node_has_successor ? kTrue : kFalse;
}

int run_cat_pm(Io& io, Commands& c) {
  const GMultiset a = jio::multiset_from_json(input(io, c, "a"));
  const GMultiset b = jio::multiset_from_json(input(io, c, "b"));
  const auto r = cat_pm_decide(a, b);
  emit(io, json{{"catalysis", r.has_value()},
                {"catalyst", r ? jio::to_json(r->catalyst) : json(nullptr)},
                {"translation", r ? jio::to_json(r->translation) : json(nullptr)}});
  return r ? kTrue : kFalse;
}

int run_multicopy_chain(Io& io, Commands& c) {
  const TTInstance tt = TTInstance::parse(c.tt);
  const State a = state(io, c, "a", tt), b = state(io, c, "b", tt), cat = state(io, c, "c", tt);
  std::optional<State> discard;
  if (has(c, "discard")) discard = state(io, c, "discard", tt);
  try {
    const CatalystCycle cycle = multicopy_to_chain(tt, a, b, cat, c.n, c.extraction, discard);
    emit(io, json{{"feasible", true}, {"cycle", jio::to_json(cycle)}});
    return kTrue;
  } catch (const Error& e) {
    if (e.code() != Errc::not_multicopy_feasible) throw;
    emit(io, json{{"feasible", false}, {"cycle", nullptr}, {"reason", e.what()}});
    return kFalse;
  }
}

int run_chain_multicopy(Io& io, Commands& c) {
  const TTInstance tt = TTInstance::parse(c.tt);
  const State a = state(io, c, "a", tt), b = state(io, c, "b", tt);
  const CatalystCycle cycle = jio::cycle_from_json(input(io, c, "cycle"), tt);
  try {
    const MulticopyStatement st = chain_to_multicopy(tt, a, b, cycle);
    emit(io, json{{"valid", true}, {"statement", jio::to_json(st)}});
    return kTrue;
  } catch (const Error& e) {
    if (e.code() != Errc::invalid_cycle) throw;
    emit(io, json{{"valid", false}, {"statement", nullptr}, {"reason", e.what()}});
    return kFalse;
  }
}

int run_poly_neg(Io& io, Commands& c) {
  const IntPolynomial p = jio::polynomial_from_json(input(io, c, "poly"));
  if (c.max < 1) throw Error(Errc::invalid_argument, "--max must be >= 1");
  const NegativityResult r = negativity(p, c.max);
  emit(io, jio::to_json(r));
  return r.is_finite() ? kTrue : kFalse;
}

int run_construct_neg(Io& io, Commands& c) {
  if (c.n < 1) throw Error(Errc::invalid_argument, "--n must be >= 1");
  const IntPolynomial p = construct_negativity_n(c.n);
  emit(io, json{{"n", c.n}, {"p", jio::to_json(p)}, {"p_str", p.str()}, {"negativity", c.n}});
  return kTrue;
}

int run_poly_scan(Io& io, Commands& c) {
  std::optional<PositivityScan> scan;
  std::optional<unsigned> resumed_from;
  if (has(c, "resume")) {
    scan.emplace(jio::checkpoint_from_json(load_json(io, "@" + c.s.at("resume"), "--resume")));
    resumed_from = scan->next_n();
    if (has(c, "p") && jio::polynomial_from_json(input(io, c, "p")) != scan->p())
      throw Error(Errc::invalid_argument, "--p differs from the checkpoint's p");
    if (has(c, "q") && jio::polynomial_from_json(input(io, c, "q")) != scan->q())
      throw Error(Errc::invalid_argument, "--q differs from the checkpoint's q");
  } else {
    const IntPolynomial p = jio::polynomial_from_json(input(io, c, "p"));
    const IntPolynomial q =
        has(c, "q") ? jio::polynomial_from_json(input(io, c, "q")) : IntPolynomial::constant(p.arity(), 1);
    scan.emplace(p, q);
  }

  std::ofstream log;
  if (has(c, "log")) {
    log.open(c.s.at("log"), resumed_from ? std::ios::app : std::ios::trunc);
    if (!log) throw Error(Errc::invalid_argument, "cannot write log '" + c.s.at("log") + "'");
  }
  const bool checkpointing = has(c, "checkpoint");
  auto save = [&] {
    if (checkpointing) write_atomic(c.s.at("checkpoint"), jio::checkpoint_to_json(*scan).dump() + "\n");
  };

  unsigned steps = 0;
  const unsigned first = scan->next_n();
  while (scan->next_n() <= c.max) {
    const ScanRecord rec = scan->step();
    if (log.is_open()) log << jio::to_json(rec).dump() << '\n' << std::flush;
    if (checkpointing && c.checkpoint_every > 0 && ++steps % c.checkpoint_every == 0) save();
  }
  save();

  auto opt = [](const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); };
  emit(io, json{{"n_max", c.max},
                {"resumed_from", opt(resumed_from)},
                {"scanned", scan->next_n() > first ? json::array({first, scan->next_n() - 1}) : json(nullptr)},
                {"next_n", scan->next_n()},
                {"first_q_failure", opt(scan->first_weighted_failure())},
                {"first_nonneg_power", opt(scan->first_nonneg_power())}});
  return kTrue;
}

int run_factorize(Io& io, Commands& c) {
  const ProbVector u = jio::prob_vector_from_json(input(io, c, "u"));
  const auto fs = tensor_factorizations(u, c.min_factor);
  json arr = json::array();
  for (const auto& f : fs) arr.push_back({{"first", jio::to_json(f.first)}, {"second", jio::to_json(f.second)}});
  emit(io, json{{"irreducible", fs.empty()}, {"factorizations", arr}});
  return fs.empty() ? kFalse : kTrue;
}

int run_search_cat(Io& io, Commands& c) {
  const TTInstance tt = TTInstance::parse(c.tt);
  const State a = state(io, c, "a", tt), b = state(io, c, "b", tt);
  const json pool_json = input(io, c, "pool");
  if (!pool_json.is_array()) throw Error(Errc::schema_violation, "--pool must be an array of elements");
  GroupKind kind = GroupKind::rat;
  std::size_t arity = 1;
  if (const auto* m = std::get_if<GMultiset>(&a)) kind = m->kind(), arity = m->arity();
  std::vector<GroupElement> pool;
  for (const auto& e : pool_json) pool.push_back(jio::element_from_json(e, kind, arity));
  const SearchBounds bounds{c.max_support, c.max_mult, c.max_candidates};
  const auto found = brute_force_catalyst_search(tt, a, b, pool, bounds);
  emit(io, json{{"found", found.has_value()},
                {"catalyst", found ? jio::to_json(*found) : json(nullptr)},
                {"candidate_bound", catalyst_candidate_count(pool.size(), bounds)}});
  return found ? kTrue : kFalse;
}

int run_verify_paper(Io& io, Commands& c) {
  if (has(c, "reverify")) {
    const json reports = load_json(io, "@" + c.s.at("reverify"), "--reverify");
    if (!reports.is_array()) throw Error(Errc::schema_violation, "a report must be a JSON array of claims");
    json out = json::array();
    bool ok = true;
    for (const auto& r : reports) {
      const auto claimed = claims::report_from_json(r).status;
      const auto again = claims::reverify(r);
      ok = ok && again == claimed && again != claims::ClaimStatus::fail;
      out.push_back({{"id", r.at("id")},
                     {"claimed", claims::to_string(claimed)},
                     {"reverified", claims::to_string(again)}});
    }
    emit(io, out);
    return ok ? kTrue : kFalse;
  }

  claims::BenchConfig cfg;
  cfg.anyposint_ns = c.anyposint_ns;
  cfg.arbnumreq_ns = c.arbnumreq_ns;
  cfg.scan_univariate = c.scan_uni;
  cfg.scan_bivariate = c.scan_bi;
  cfg.only = c.claim_list;
  const auto reports = claims::run_all(cfg);
  const std::string report = claims::to_json(reports, c.timings).dump(2) + "\n";
  const std::string table = claims::render_table(reports, c.timings);
  if (has(c, "json")) {
    write_atomic(c.s.at("json"), report);
    io.out << table;
  } else {
    io.out << report;
    io.err << table;
  }
  return claims::all_passed(reports) ? kTrue : kFalse;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  Commands c;
  CLI::App app{"Exact checks for catalytic and flexible-catalytic transformations", "flexcat"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "flexcat 0.1.0");

  std::map<CLI::App*, std::function<int(Io&, Commands&)>> handlers;
  auto json_opt = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = true) {
    auto* o = sub->add_option("--" + name, c.s[name], help + " (JSON, @file or -)");
    if (required) o->required();
  };
  auto add = [&](const char* name, const char* help, std::function<int(Io&, Commands&)> h) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers.emplace(sub, std::move(h));
    return sub;
  };
  auto tt_opt = [&](CLI::App* sub) {
    sub->add_option("--tt", c.tt, "zvec-eq|zvec-prop|rat-eq|rat-prop|magphase-eq|magphase-prop|majorization")
        ->capture_default_str();
  };

  auto* s = add("majorize", "u < v: partial sums of u never exceed those of v", run_majorize);
  json_opt(s, "u", "probability vector");
  json_opt(s, "v", "probability vector");

  s = add("locc-cat", "a (x) c < b (x) c' (c' defaults to c)", run_locc_cat);
  json_opt(s, "a", "probability vector");
  json_opt(s, "b", "probability vector");
  json_opt(s, "c", "catalyst");
  json_opt(s, "c-next", "next catalyst", false);

  s = add("lu-equal", "equal up to zeros and ordering", run_lu_equal);
  json_opt(s, "u", "probability vector");
  json_opt(s, "v", "probability vector");

  s = add("msum", "multiset convolution", run_msum);
  json_opt(s, "a", "multiset");
  json_opt(s, "b", "multiset");

  s = add("deconvolve", "d with b + d = s", run_deconvolve);
  json_opt(s, "s", "multiset");
  json_opt(s, "b", "multiset");

  s = add("flex-cycle", "edge matrix, successors and shortest catalyst cycle", run_flex_cycle);
  tt_opt(s);
  json_opt(s, "a", "state");
  json_opt(s, "b", "state");
  json_opt(s, "catalysts", "array of states");
  json_opt(s, "witnesses", "array of {from,to,d} discards", false);
  s->add_flag("--extraction", c.extraction, "allow a discard on each edge");

  s = add("cat-pm", "catalysis decision over magphase up to translation", run_cat_pm);
  json_opt(s, "a", "magphase multiset");
  json_opt(s, "b", "magphase multiset");

  s = add("multicopy-chain", "n-copy statement to an n-cycle of catalysts", run_multicopy_chain);
  tt_opt(s);
  json_opt(s, "a", "state");
  json_opt(s, "b", "state");
  json_opt(s, "c", "catalyst");
  json_opt(s, "discard", "discard state", false);
  s->add_option("--n", c.n, "number of copies")->required();
  s->add_flag("--extraction", c.extraction, "extraction form");

  s = add("chain-multicopy", "catalyst cycle to its aggregate multicopy statement", run_chain_multicopy);
  tt_opt(s);
  json_opt(s, "a", "state");
  json_opt(s, "b", "state");
  json_opt(s, "cycle", "{catalysts, discards}");

  s = add("poly-neg", "smallest n <= max with p^n nonnegative", run_poly_neg);
  json_opt(s, "poly", "polynomial");
  s->add_option("--max", c.max, "largest power to try")->capture_default_str();

  s = add("construct-neg", "degree-4 polynomial with negativity exactly n", run_construct_neg);
  s->add_option("--n", c.n, "target negativity")->required();

  s = add("poly-scan", "scan p^n and q p^n for n = 0..max", run_poly_scan);
  json_opt(s, "p", "polynomial", false);
  json_opt(s, "q", "polynomial (default 1)", false);
  s->add_option("--max", c.max, "last n to scan")->capture_default_str();
  s->add_option("--log", c.s["log"], "JSON-lines log, one record per n");
  s->add_option("--checkpoint", c.s["checkpoint"], "checkpoint file written while scanning");
  s->add_option("--checkpoint-every", c.checkpoint_every, "steps between checkpoints")->capture_default_str();
  s->add_option("--resume", c.s["resume"], "continue from a checkpoint file");

  s = add("factorize", "all nontrivial tensor factorizations", run_factorize);
  json_opt(s, "u", "probability vector");
  s->add_option("--min-factor", c.min_factor, "minimum support of each factor")->capture_default_str();

  s = add("search-cat", "exhaustive bounded catalyst search", run_search_cat);
  tt_opt(s);
  json_opt(s, "a", "state");
  json_opt(s, "b", "state");
  json_opt(s, "pool", "array of group elements (rat weights for majorization)");
  s->add_option("--max-support", c.max_support, "distinct elements per catalyst")->capture_default_str();
  s->add_option("--max-mult", c.max_mult, "largest multiplicity")->capture_default_str();
  s->add_option("--max-candidates", c.max_candidates, "enumeration cap")->capture_default_str();

  s = add("verify-paper", "run every claim verifier", run_verify_paper);
  s->add_option("--json", c.s["json"], "write the JSON report here; the table goes to stdout");
  s->add_option("--claims", c.claim_list, "comma-separated claim ids")->delimiter(',');
  s->add_flag("--timings", c.timings, "include runtimes");
  s->add_option("--anyposint", c.anyposint_ns, "n values")->delimiter(',')->capture_default_str();
  s->add_option("--arbnumreq", c.arbnumreq_ns, "n values")->delimiter(',')->capture_default_str();
  s->add_option("--scan-univariate", c.scan_uni, "scan bound")->capture_default_str();
  s->add_option("--scan-bivariate", c.scan_bi, "scan bound")->capture_default_str();
  s->add_option("--reverify", c.s["reverify"], "re-check a saved report instead of running");

  try {
    apply_config(app);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    return emit_error(io, "usage", e.what(), kUsage);
  } catch (const Error& e) {
    return emit_error(io, to_string(e.code()), e.what(), kUsage);
  }

  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(io, c);
    return emit_error(io, "usage", "no subcommand given", kUsage);
  } catch (const Error& e) {
    const bool internal = e.code() == Errc::construction_invariant_violated;
    return emit_error(io, to_string(e.code()), e.what(), internal ? kInternal : kUsage);
  } catch (const json::exception& e) {
    return emit_error(io, to_string(Errc::schema_violation), e.what(), kUsage);
  } catch (const std::exception& e) {
    return emit_error(io, "internal", e.what(), kInternal);
  }
}

}  // namespace flexcat::cli
