#pragma once

#include "flexcat/number.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace flexcat {

/// The three concrete abelian groups the multiset reductions need:
///   zvec      integer vectors Z^m under componentwise addition,
///   rat       the rationals under addition,
///   magphase  Q+ x (Q/Z): magnitudes multiply, phases (fractions of a
///             full turn) add modulo 1.
enum class GroupKind { zvec, rat, magphase };

std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

/// True for the groups with a translation-invariant total order (zvec
/// lexicographic, rat numeric). Only these support greedy deconvolution.
constexpr bool is_ordered(GroupKind kind) { return kind != GroupKind::magphase; }

struct MagPhase {
  Rational mag;
  Rational phase;
};

class GroupElement {
 public:
  static GroupElement zvec(std::vector<Integer> coords);
  static GroupElement rat(Rational value);
  /// Requires mag > 0; the phase is reduced into [0, 1).
  static GroupElement mag_phase(Rational mag, Rational phase);
  static GroupElement identity(GroupKind kind, std::size_t arity = 1);

  GroupKind kind() const;
  /// Vector length for zvec, 1 otherwise.
  std::size_t arity() const;

  const std::vector<Integer>& coords() const;
  const Rational& value() const;
  const Rational& mag() const;
  const Rational& phase() const;

  bool is_identity() const;
  /// True when this element and `other` live in the same group (kind and arity).
  bool same_group(const GroupElement& other) const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement operator-(const GroupElement& other) const { return *this + (-other); }

  /// Canonical ordering: zvec lexicographic, rat numeric, magphase by
  /// (mag, phase). Used for determinism only; it is a group order only
  /// for zvec and rat.
  friend int compare(const GroupElement& a, const GroupElement& b);
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return compare(a, b) == 0; }

  std::string str() const;

 private:
  using Repr = std::variant<std::vector<Integer>, Rational, MagPhase>;
  explicit GroupElement(Repr repr) : repr_(std::move(repr)) {}

  Repr repr_;
};

}  // namespace flexcat
