#pragma once

#include "flexcat/group.hpp"
#include "flexcat/number.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flexcat {

/// A finite, nonempty multiset over one of the concrete groups, with
/// arbitrary-precision multiplicities. Immutable once built.
///
/// Invariants: at least one element; every key lives in the same group
/// (kind and arity); every stored multiplicity is positive.
class GMultiset {
 public:
  using Map = std::map<GroupElement, Integer>;
  using Entry = std::pair<GroupElement, Integer>;

  /// Validating constructor. Repeated elements are merged; zero
  /// multiplicities are dropped; negative ones are rejected.
  static GMultiset from_entries(GroupKind kind, std::size_t arity, const std::vector<Entry>& entries);
  static GMultiset singleton(const GroupElement& element);
  /// {identity^1}: the neutral element for msum.
  static GMultiset identity(GroupKind kind, std::size_t arity = 1);

  GroupKind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  const Map& entries() const { return elems_; }

  Integer multiplicity(const GroupElement& element) const;
  /// Sum of multiplicities.
  Integer size() const;
  std::size_t support_size() const { return elems_.size(); }

  /// Smallest / largest element in the canonical ordering.
  const GroupElement& min_element() const { return elems_.begin()->first; }
  const GroupElement& max_element() const { return elems_.rbegin()->first; }

  bool same_group(const GMultiset& other) const {
    return kind_ == other.kind_ && arity_ == other.arity_;
  }

  friend bool operator==(const GMultiset& a, const GMultiset& b) {
    return a.same_group(b) && a.elems_ == b.elems_;
  }

  /// Compact rendering such as "{0^4, 1^5, 2}".
  std::string str() const;

 private:
  friend class MultisetBuilder;
  GMultiset(GroupKind kind, std::size_t arity, Map elems)
      : kind_(kind), arity_(arity), elems_(std::move(elems)) {}

  GroupKind kind_;
  std::size_t arity_;
  Map elems_;
};

/// Convolution: every sum a+b, multiplicities multiplied.
GMultiset msum(const GMultiset& a, const GMultiset& b);

/// a + a + ... + a (n terms). n must be >= 1.
GMultiset n_fold(const GMultiset& a, unsigned n);

GMultiset translate(const GMultiset& a, const GroupElement& g);

/// Some g with translate(a, g) == b, or nothing. When several g work
/// (only possible over magphase), returns the canonically smallest.
std::optional<GroupElement> equal_up_to_translation(const GMultiset& a, const GMultiset& b);

/// The unique d with msum(b, d) == s, if any. Ordered groups only.
std::optional<GMultiset> deconvolve(const GMultiset& s, const GMultiset& b);

/// Shifts a so that each coordinate's minimum is zero. Ordered groups only.
GMultiset min_normalize(const GMultiset& a);

}  // namespace flexcat
