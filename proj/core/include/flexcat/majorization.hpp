#pragma once

#include "flexcat/number.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flexcat {

/// Squared Schmidt coefficients of a pure bipartite state: a finite
/// multiset of nonnegative rationals summing to exactly 1. Stored sorted
/// in decreasing order, so equality is multiset equality. Zeros are kept.
class ProbVector {
 public:
  /// Throws schema_violation if an entry is negative, the list is empty,
  /// or the entries do not sum to 1.
  explicit ProbVector(std::vector<Rational> probs);

  /// Normalizes nonnegative weights (not all zero) to sum to 1.
  static ProbVector from_weights(std::vector<Rational> weights);

  const std::vector<Rational>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  /// Number of nonzero entries (the Schmidt rank).
  std::size_t support() const;
  /// The same vector with zero entries removed.
  ProbVector nonzero() const;

  friend bool operator==(const ProbVector& a, const ProbVector& b) { return a.probs_ == b.probs_; }
  friend bool operator<(const ProbVector& a, const ProbVector& b);

  std::string str() const;

 private:
  std::vector<Rational> probs_;
};

struct MajorizationViolation {
  std::size_t k;  // 1-based number of largest entries summed
  Rational lhs;   // partial sum of u
  Rational rhs;   // partial sum of v
};

struct MajorizationCheck {
  bool holds;
  std::optional<MajorizationViolation> first_violation;
};

/// u < v: for every k, the k largest entries of u sum to at most the k
/// largest entries of v (shorter vector padded with zeros).
MajorizationCheck check_majorization(const ProbVector& u, const ProbVector& v);
bool majorizes(const ProbVector& u, const ProbVector& v);

ProbVector tensor(const ProbVector& u, const ProbVector& v);

/// An LOCC protocol turns src into dst with certainty iff src < dst.
bool locc_possible(const ProbVector& src, const ProbVector& dst);

/// Equal after dropping zeros.
bool lu_equivalent(const ProbVector& u, const ProbVector& v);

struct FactorPair {
  ProbVector first;
  ProbVector second;
};

/// Every unordered pair (a, b), each with at least `min_factor` nonzero
/// entries, such that a (x) b is LU equivalent to u. An empty result for
/// min_factor = 2 certifies LU irreducibility. Exhaustive; sorted.
std::vector<FactorPair> tensor_factorizations(const ProbVector& u, std::size_t min_factor = 2);

}  // namespace flexcat
