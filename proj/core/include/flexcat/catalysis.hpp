#pragma once

#include "flexcat/gmultiset.hpp"
#include "flexcat/majorization.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace flexcat {

/// Preorder of a multiset transformation theory: exact equality, or
/// equality up to a translation by one group element.
enum class Relation { equal, translation };

/// One of the concrete transformation theories:
///   multiset family  states are GMultisets over `group`, composed by
///                    msum, compared by `relation`;
///   majorization     states are ProbVectors, composed by tensor,
///                    compared by majorization (LOCC).
struct TTInstance {
  enum class Family { multiset, majorization };

  Family family = Family::majorization;
  GroupKind group = GroupKind::zvec;
  Relation relation = Relation::equal;

  static TTInstance multiset(GroupKind group, Relation relation) {
    return {Family::multiset, group, relation};
  }
  static TTInstance majorization() { return {}; }

  bool is_multiset() const { return family == Family::multiset; }

  /// "zvec-eq", "rat-prop", "magphase-prop", "majorization", ...
  std::string name() const;
  static TTInstance parse(std::string_view name);

  friend bool operator==(const TTInstance&, const TTInstance&) = default;
};

using State = std::variant<GMultiset, ProbVector>;

std::string describe(const State& s);

/// Checks that `s` has the state type of `tt` (and the right group for
/// multiset theories); throws type_mismatch otherwise.
void require_state(const TTInstance& tt, const State& s, const char* what);

State compose(const TTInstance& tt, const State& a, const State& b);
/// k copies of `s` composed; k = 0 gives the unit state of s's type.
State repeat(const TTInstance& tt, const State& s, unsigned k);
bool leq(const TTInstance& tt, const State& a, const State& b);

/// A o C <= B o C.
bool cat_with(const TTInstance& tt, const State& a, const State& b, const State& c);

/// A o C ~ B o D o C for an explicit discard D. Multiset theories only.
bool catext_with(const TTInstance& tt, const State& a, const State& b, const State& c, const State& d);

/// Decides catalytic extraction over Z^m or Q. Over these groups a
/// catalyst never helps, so this is exact deconvolution: returns D with
/// B o D == A, or nothing (which proves A cannot be catalytically
/// extracted into B).
std::optional<GMultiset> catext_exists(const TTInstance& tt, const GMultiset& a, const GMultiset& b);

struct EdgeResult {
  bool holds = false;
  std::optional<State> discard;
};

/// One flexible-catalysis step A o C <= B o C'. With `extraction` set, a
/// discard D is allowed: A o C ~ B o D o C'. Over Z^m and Q the discard
/// is found by deconvolution; elsewhere it must be supplied as
/// `candidate` (throws unsupported_operation when it is not).
EdgeResult flex_edge(const TTInstance& tt, const State& a, const State& b, const State& c,
                     const State& c_next, bool extraction,
                     const std::optional<State>& candidate = std::nullopt);

enum class EdgeStatus { absent, present, unknown };

struct FlexEdge {
  EdgeStatus status = EdgeStatus::absent;
  std::optional<State> discard;
};

/// Caller-supplied discards keyed by (from, to) catalyst index.
using DiscardWitnesses = std::map<std::pair<std::size_t, std::size_t>, State>;

struct FlexReport {
  /// edges[i][j]: the step from catalyst i to catalyst j.
  std::vector<std::vector<FlexEdge>> edges;
  /// First j with a present edge i -> j.
  std::vector<std::optional<std::size_t>> successor;
  /// Every catalyst has a successor: (A, B) is in Cat^(f)(S).
  bool every_node_has_successor = false;
  /// A shortest directed cycle, starting at its smallest index;
  /// lexicographically first among shortest ones.
  std::optional<std::vector<std::size_t>> cycle;
};

FlexReport flex_cycle_search(const TTInstance& tt, const State& a, const State& b,
                             std::span<const State> catalysts, bool extraction,
                             const DiscardWitnesses* witnesses = nullptr);

/// C_0, ..., C_{n-1} with A o C_{i-1} <= B o [D_i o] C_i for i = 1..n
/// (indices mod n). Discards are present only for extraction cycles.
struct CatalystCycle {
  std::vector<State> catalysts;
  std::vector<std::optional<State>> discards;

  std::size_t length() const { return catalysts.size(); }
};

/// Checks every edge of the cycle. On failure, `reason` (if given)
/// receives a description of the first failing edge.
bool cycle_is_valid(const TTInstance& tt, const State& a, const State& b, const CatalystCycle& cycle,
                    std::string* reason = nullptr);

/// Turns a multicopy catalysis n A o C <= n B [o D] o C into the n-cycle
///   C_0 = (n-1)A o C,  C_i = (i-1)A o (n-i)B o C  (i = 1..n-1).
/// In extraction mode the discard rides on the first edge; it is found
/// by deconvolution over ordered groups when not supplied.
CatalystCycle multicopy_to_chain(const TTInstance& tt, const State& a, const State& b, const State& c,
                                 unsigned n, bool extraction = false,
                                 const std::optional<State>& discard = std::nullopt);

struct MulticopyStatement {
  unsigned copies = 0;
  State aggregate_catalyst;
  std::optional<State> aggregate_discard;
};

/// Sums a valid n-cycle into n A o (sum C) <= n B [o sum D] o (sum C),
/// re-checking the aggregate before returning. Throws invalid_cycle.
MulticopyStatement chain_to_multicopy(const TTInstance& tt, const State& a, const State& b,
                                      const CatalystCycle& cycle);

struct PmCatalyst {
  GMultiset catalyst;       // the torsion catalyst {(1, k/N) : 0 <= k < N}
  GroupElement translation; // g with A o T + g == B o T
};

/// Catalysis decision for the permutation-matrix theory (magphase, up to
/// translation). Catalysis is possible iff the magnitude projections are
/// proportional; the finite torsion subgroup generated by the phases is
/// then a catalyst. Finite flexible catalysis gives nothing more.
std::optional<PmCatalyst> cat_pm_decide(const GMultiset& a, const GMultiset& b);

struct SearchBounds {
  std::size_t max_support = 1;
  unsigned max_mult = 1;
  std::uint64_t max_candidates = 10'000'000;
};

/// Number of candidates the search would visit for a pool of this size.
std::uint64_t catalyst_candidate_count(std::size_t pool_size, const SearchBounds& bounds);

/// Exhaustive catalyst search: every C with support drawn from `pool`,
/// at most max_support distinct elements, multiplicities <= max_mult,
/// visited by total size, then lexicographically on (element,
/// multiplicity) pairs. Returns the first C with cat_with true. For the
/// majorization theory the pool holds positive rat weights and each
/// candidate is normalized. Nothing means "no catalyst within bounds".
std::optional<State> brute_force_catalyst_search(const TTInstance& tt, const State& a, const State& b,
                                                 std::span<const GroupElement> pool,
                                                 const SearchBounds& bounds);

}  // namespace flexcat
