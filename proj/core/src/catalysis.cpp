#include "flexcat/catalysis.hpp"

#include "flexcat/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace flexcat {
namespace {

bool decidable_extraction(const TTInstance& tt) { return tt.is_multiset() && is_ordered(tt.group); }

const GMultiset& as_multiset(const State& s) { return std::get<GMultiset>(s); }
const ProbVector& as_prob(const State& s) { return std::get<ProbVector>(s); }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max()
                                                             : a + b;
}

/// Lexicographically smallest shortest cycle, rotated to start at its
/// smallest node. adj[i][j] is true for a present edge i -> j.
std::optional<std::vector<std::size_t>> shortest_cycle(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::optional<std::vector<std::size_t>> best;

  for (std::size_t s = 0; s < n; ++s) {
    // dist[v]: shortest path v -> s through nodes >= s.
    std::vector<std::size_t> dist(n, kInf);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t v = s; v < n; ++v) {
        if (v == s || dist[v] != kInf || !adj[v][w]) continue;
        dist[v] = dist[w] + 1;
        queue.push_back(v);
      }
    }
    std::size_t len = kInf;
    for (std::size_t w = s; w < n; ++w)
      if (adj[s][w] && dist[w] != kInf) len = std::min(len, dist[w] + 1);
    if (len == kInf || (best && len >= best->size())) continue;

    std::vector<std::size_t> cycle{s};
    std::size_t cur = s;
    for (std::size_t remaining = len; remaining > 1; --remaining) {
      for (std::size_t w = s; w < n; ++w) {
        if (w != s && adj[cur][w] && dist[w] == remaining - 1) {
          cycle.push_back(w);
          cur = w;
          break;
        }
      }
    }
    best = std::move(cycle);
  }
  return best;
}

}  // namespace

std::string TTInstance::name() const {
  if (family == Family::majorization) return "majorization";
  return std::string(to_string(group)) + (relation == Relation::equal ? "-eq" : "-prop");
}

TTInstance TTInstance::parse(std::string_view name) {
  if (name == "majorization") return majorization();
  const auto dash = name.rfind('-');
  if (dash != std::string_view::npos) {
    const auto rel = name.substr(dash + 1);
    if (rel == "eq" || rel == "prop") {
      const GroupKind group = parse_group_kind(name.substr(0, dash));
      return multiset(group, rel == "eq" ? Relation::equal : Relation::translation);
    }
  }
  throw Error(Errc::schema_violation, "unknown transformation theory '" + std::string(name) + "'");
}

std::string describe(const State& s) {
  if (const auto* m = std::get_if<GMultiset>(&s)) return m->str();
  return as_prob(s).str();
}

void require_state(const TTInstance& tt, const State& s, const char* what) {
  if (tt.is_multiset()) {
    const auto* m = std::get_if<GMultiset>(&s);
    if (!m)
      throw Error(Errc::type_mismatch, std::string(what) + " must be a multiset for " + tt.name());
    if (m->kind() != tt.group)
      throw Error(Errc::type_mismatch, std::string(what) + " is over " +
                                           std::string(to_string(m->kind())) + ", expected " +
                                           std::string(to_string(tt.group)));
  } else if (!std::holds_alternative<ProbVector>(s)) {
    throw Error(Errc::type_mismatch, std::string(what) + " must be a probability vector for " + tt.name());
  }
}

State compose(const TTInstance& tt, const State& a, const State& b) {
  require_state(tt, a, "left operand");
  require_state(tt, b, "right operand");
  if (tt.is_multiset()) return msum(as_multiset(a), as_multiset(b));
  return tensor(as_prob(a), as_prob(b));
}

State repeat(const TTInstance& tt, const State& s, unsigned k) {
  require_state(tt, s, "state");
  if (tt.is_multiset()) {
    const auto& m = as_multiset(s);
    if (k == 0) return GMultiset::identity(m.kind(), m.arity());
    return n_fold(m, k);
  }
  State result = ProbVector({Rational(1)});
  State base = s;
  while (k > 0) {
    if (k & 1u) result = compose(tt, result, base);
    k >>= 1u;
    if (k > 0) base = compose(tt, base, base);
  }
  return result;
}

bool leq(const TTInstance& tt, const State& a, const State& b) {
  require_state(tt, a, "left state");
  require_state(tt, b, "right state");
  if (!tt.is_multiset()) return majorizes(as_prob(a), as_prob(b));
  const auto& x = as_multiset(a);
  const auto& y = as_multiset(b);
  if (!x.same_group(y)) throw Error(Errc::group_mismatch, "cannot compare multisets of different arity");
  if (tt.relation == Relation::equal) return x == y;
  return equal_up_to_translation(x, y).has_value();
}

bool cat_with(const TTInstance& tt, const State& a, const State& b, const State& c) {
  return leq(tt, compose(tt, a, c), compose(tt, b, c));
}

bool catext_with(const TTInstance& tt, const State& a, const State& b, const State& c, const State& d) {
  if (!tt.is_multiset())
    throw Error(Errc::unsupported_operation, "catalytic extraction is only defined for multiset theories");
  return leq(tt, compose(tt, a, c), compose(tt, compose(tt, b, d), c));
}

std::optional<GMultiset> catext_exists(const TTInstance& tt, const GMultiset& a, const GMultiset& b) {
  if (!decidable_extraction(tt))
    throw Error(Errc::unsupported_operation, "catext_exists needs Z^m or Q, got " + tt.name());
  require_state(tt, a, "A");
  require_state(tt, b, "B");
  return deconvolve(a, b);
}

EdgeResult flex_edge(const TTInstance& tt, const State& a, const State& b, const State& c,
                     const State& c_next, bool extraction, const std::optional<State>& candidate) {
  const State lhs = compose(tt, a, c);
  if (!extraction) return {leq(tt, lhs, compose(tt, b, c_next)), std::nullopt};

  if (candidate) {
    const bool ok = leq(tt, lhs, compose(tt, compose(tt, b, *candidate), c_next));
    return {ok, ok ? candidate : std::nullopt};
  }
  if (!decidable_extraction(tt))
    throw Error(Errc::unsupported_operation,
                "extraction edges over " + tt.name() + " need an explicit discard witness");
  auto d = deconvolve(as_multiset(lhs), as_multiset(compose(tt, b, c_next)));
  if (!d) return {false, std::nullopt};
  return {true, State(std::move(*d))};
}

FlexReport flex_cycle_search(const TTInstance& tt, const State& a, const State& b,
                             std::span<const State> catalysts, bool extraction,
                             const DiscardWitnesses* witnesses) {
  const std::size_t n = catalysts.size();
  if (n == 0) throw Error(Errc::invalid_argument, "catalyst set must be nonempty");
  // Without a decision procedure, edges lacking a witness stay unknown.
  const bool needs_witness = extraction && !decidable_extraction(tt);
  const DiscardWitnesses none;
  if (witnesses == nullptr) witnesses = &none;

  FlexReport report;
  report.edges.assign(n, std::vector<FlexEdge>(n));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FlexEdge& edge = report.edges[i][j];
      std::optional<State> candidate;
      if (needs_witness) {
        const auto it = witnesses->find({i, j});
        if (it == witnesses->end()) {
          edge.status = EdgeStatus::unknown;
          continue;
        }
        candidate = it->second;
      }
      auto result = flex_edge(tt, a, b, catalysts[i], catalysts[j], extraction, candidate);
      edge.status = result.holds ? EdgeStatus::present : EdgeStatus::absent;
      edge.discard = std::move(result.discard);
      adj[i][j] = result.holds;
    }
  }

  report.successor.resize(n);
  report.every_node_has_successor = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) {
        report.successor[i] = j;
        break;
      }
    }
    if (!report.successor[i]) report.every_node_has_successor = false;
  }
  report.cycle = shortest_cycle(adj);
  return report;
}

bool cycle_is_valid(const TTInstance& tt, const State& a, const State& b, const CatalystCycle& cycle,
                    std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  const std::size_t n = cycle.length();
  if (n == 0) return fail("cycle has no catalysts");
  if (!cycle.discards.empty() && cycle.discards.size() != n)
    return fail("expected " + std::to_string(n) + " discard slots, got " +
                std::to_string(cycle.discards.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const State& from = cycle.catalysts[i];
    const State& to = cycle.catalysts[(i + 1) % n];
    State rhs = compose(tt, b, to);
    if (!cycle.discards.empty() && cycle.discards[i])
      rhs = compose(tt, compose(tt, b, *cycle.discards[i]), to);
    if (!leq(tt, compose(tt, a, from), rhs))
      return fail("edge " + std::to_string(i) + " -> " + std::to_string((i + 1) % n) + " does not hold");
  }
  return true;
}

CatalystCycle multicopy_to_chain(const TTInstance& tt, const State& a, const State& b, const State& c,
                                 unsigned n, bool extraction, const std::optional<State>& discard) {
  if (n == 0) throw Error(Errc::invalid_argument, "number of copies must be >= 1");
  const State lhs = compose(tt, repeat(tt, a, n), c);
  const State rhs = compose(tt, repeat(tt, b, n), c);

  std::optional<State> d;
  if (!extraction) {
    if (!leq(tt, lhs, rhs))
      throw Error(Errc::not_multicopy_feasible, "n A o C does not transform into n B o C");
  } else if (discard) {
    if (!leq(tt, lhs, compose(tt, rhs, *discard)))
      throw Error(Errc::not_multicopy_feasible, "n A o C does not transform into n B o D o C");
    d = discard;
  } else {
    if (!decidable_extraction(tt))
      throw Error(Errc::unsupported_operation,
                  "extraction over " + tt.name() + " needs an explicit discard");
    auto found = deconvolve(as_multiset(lhs), as_multiset(rhs));
    if (!found) throw Error(Errc::not_multicopy_feasible, "no discard D with n B o D o C = n A o C");
    d = State(std::move(*found));
  }

  CatalystCycle cycle;
  cycle.catalysts.reserve(n);
  cycle.catalysts.push_back(compose(tt, repeat(tt, a, n - 1), c));
  for (unsigned i = 1; i < n; ++i)
    cycle.catalysts.push_back(compose(tt, compose(tt, repeat(tt, a, i - 1), repeat(tt, b, n - i)), c));
  if (extraction) {
    cycle.discards.assign(n, std::nullopt);
    cycle.discards[0] = std::move(d);
  }

  std::string why;
  if (!cycle_is_valid(tt, a, b, cycle, &why))
    throw Error(Errc::construction_invariant_violated, "multicopy chain: " + why);
  return cycle;
}

MulticopyStatement chain_to_multicopy(const TTInstance& tt, const State& a, const State& b,
                                      const CatalystCycle& cycle) {
  std::string why;
  if (!cycle_is_valid(tt, a, b, cycle, &why)) throw Error(Errc::invalid_cycle, why);

  const auto n = static_cast<unsigned>(cycle.length());
  State sum = cycle.catalysts.front();
  for (std::size_t i = 1; i < cycle.length(); ++i) sum = compose(tt, sum, cycle.catalysts[i]);
  std::optional<State> discard_sum;
  for (const auto& d : cycle.discards) {
    if (!d) continue;
    discard_sum = discard_sum ? compose(tt, *discard_sum, *d) : *d;
  }

  State rhs = compose(tt, repeat(tt, b, n), sum);
  if (discard_sum) rhs = compose(tt, rhs, *discard_sum);
  if (!leq(tt, compose(tt, repeat(tt, a, n), sum), rhs))
    throw Error(Errc::construction_invariant_violated, "aggregate multicopy statement does not hold");
  return {n, std::move(sum), std::move(discard_sum)};
}

std::optional<PmCatalyst> cat_pm_decide(const GMultiset& a, const GMultiset& b) {
  if (a.kind() != GroupKind::magphase || b.kind() != GroupKind::magphase)
    throw Error(Errc::group_mismatch, "cat_pm_decide needs magphase multisets");

  auto project = [](const GMultiset& m) {
    std::vector<GMultiset::Entry> entries;
    for (const auto& [x, mult] : m.entries())
      entries.emplace_back(GroupElement::mag_phase(x.mag(), Rational(0)), mult);
    return GMultiset::from_entries(GroupKind::magphase, 1, entries);
  };
  if (!equal_up_to_translation(project(a), project(b))) return std::nullopt;

  Integer order = 1;
  for (const auto* m : {&a, &b})
    for (const auto& [x, mult] : m->entries()) order = lcm(order, Integer(x.phase().get_den()));
  if (!order.fits_ulong_p() || order > 1'000'000)
    throw Error(Errc::search_too_large, "torsion catalyst of order " + to_string(order) + " is too large");

  const unsigned long n = order.get_ui();
  std::vector<GMultiset::Entry> torsion;
  torsion.reserve(n);
  for (unsigned long k = 0; k < n; ++k)
    torsion.emplace_back(GroupElement::mag_phase(Rational(1), Rational(Integer(k), order)), Integer(1));
  GMultiset catalyst = GMultiset::from_entries(GroupKind::magphase, 1, torsion);

  auto g = equal_up_to_translation(msum(a, catalyst), msum(b, catalyst));
  if (!g)
    throw Error(Errc::construction_invariant_violated,
                "torsion catalyst failed for proportional magnitude projections");
  return PmCatalyst{std::move(catalyst), std::move(*g)};
}

std::uint64_t catalyst_candidate_count(std::size_t pool_size, const SearchBounds& bounds) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(pool_size, k)
  std::uint64_t mult_pow = 1;
  const std::size_t kmax = std::min(bounds.max_support, pool_size);
  for (std::size_t k = 1; k <= kmax; ++k) {
    binom = saturating_mul(binom, pool_size - k + 1) / k;
    mult_pow = saturating_mul(mult_pow, bounds.max_mult);
    total = saturating_add(total, saturating_mul(binom, mult_pow));
  }
  return total;
}

std::optional<State> brute_force_catalyst_search(const TTInstance& tt, const State& a, const State& b,
                                                 std::span<const GroupElement> pool,
                                                 const SearchBounds& bounds) {
  require_state(tt, a, "A");
  require_state(tt, b, "B");
  if (pool.empty()) throw Error(Errc::invalid_argument, "element pool must be nonempty");
  if (bounds.max_support == 0 || bounds.max_mult == 0)
    throw Error(Errc::invalid_argument, "search bounds must be positive");

  std::vector<GroupElement> elems(pool.begin(), pool.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  std::size_t arity = 1;
  if (tt.is_multiset()) {
    arity = as_multiset(a).arity();
    for (const auto& e : elems)
      if (e.kind() != tt.group || e.arity() != arity)
        throw Error(Errc::group_mismatch, "pool element " + e.str() + " is not in the state group");
  } else {
    for (const auto& e : elems)
      if (e.kind() != GroupKind::rat || sgn(e.value()) <= 0)
        throw Error(Errc::invalid_argument, "majorization pools hold positive rat weights, got " + e.str());
  }

  if (catalyst_candidate_count(elems.size(), bounds) > bounds.max_candidates)
    throw Error(Errc::search_too_large,
                "more than " + std::to_string(bounds.max_candidates) + " candidate catalysts");

  auto build = [&](const std::vector<std::pair<std::size_t, unsigned>>& chosen) -> State {
    if (tt.is_multiset()) {
      std::vector<GMultiset::Entry> entries;
      for (const auto& [idx, m] : chosen) entries.emplace_back(elems[idx], Integer(m));
      return GMultiset::from_entries(tt.group, arity, entries);
    }
    std::vector<Rational> weights;
    for (const auto& [idx, m] : chosen)
      for (unsigned r = 0; r < m; ++r) weights.push_back(elems[idx].value());
    return ProbVector::from_weights(std::move(weights));
  };

  const std::size_t max_total = std::min(bounds.max_support, elems.size()) * bounds.max_mult;
  std::vector<std::pair<std::size_t, unsigned>> chosen;
  std::optional<State> hit;

  // Preorder walk with ascending (element, multiplicity) choices visits
  // candidates of one total size in lexicographic order.
  std::function<bool(std::size_t, std::size_t, std::size_t)> walk =
      [&](std::size_t start, std::size_t total, std::size_t target) -> bool {
    if (total == target) {
      State candidate = build(chosen);
      if (cat_with(tt, a, b, candidate)) {
        hit = std::move(candidate);
        return true;
      }
      return false;
    }
    if (chosen.size() == bounds.max_support) return false;
    for (std::size_t i = start; i < elems.size(); ++i) {
      for (unsigned m = 1; m <= bounds.max_mult && total + m <= target; ++m) {
        chosen.emplace_back(i, m);
        const bool done = walk(i + 1, total + m, target);
        chosen.pop_back();
        if (done) return true;
      }
    }
    return false;
  };

  for (std::size_t target = 1; target <= max_total; ++target)
    if (walk(0, 0, target)) return hit;
  return std::nullopt;
}

}  // namespace flexcat
