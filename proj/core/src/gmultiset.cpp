#include "flexcat/gmultiset.hpp"

#include "flexcat/errors.hpp"

namespace flexcat {

/// Grants the free functions below access to the unchecked constructor.
class MultisetBuilder {
 public:
  static GMultiset make(GroupKind kind, std::size_t arity, GMultiset::Map elems) {
    return GMultiset(kind, arity, std::move(elems));
  }
};

namespace {

void require_same_group(const GMultiset& a, const GMultiset& b, const char* op) {
  if (!a.same_group(b))
    throw Error(Errc::group_mismatch, std::string(op) + ": multisets over " +
                                          std::string(to_string(a.kind())) + "/" +
                                          std::to_string(a.arity()) + " and " +
                                          std::string(to_string(b.kind())) + "/" +
                                          std::to_string(b.arity()));
}

void require_ordered(const GMultiset& a, const char* op) {
  if (!is_ordered(a.kind()))
    throw Error(Errc::unsupported_operation,
                std::string(op) + " needs an ordered torsion-free group, got " +
                    std::string(to_string(a.kind())));
}

}  // namespace

GMultiset GMultiset::from_entries(GroupKind kind, std::size_t arity, const std::vector<Entry>& entries) {
  if (kind != GroupKind::zvec && arity != 1)
    throw Error(Errc::schema_violation, "arity must be 1 for group " + std::string(to_string(kind)));
  if (arity == 0) throw Error(Errc::schema_violation, "arity must be >= 1");
  Map elems;
  for (const auto& [element, mult] : entries) {
    if (element.kind() != kind || element.arity() != arity)
      throw Error(Errc::group_mismatch, "element " + element.str() + " is not in group " +
                                            std::string(to_string(kind)) + "/" + std::to_string(arity));
    if (sgn(mult) < 0)
      throw Error(Errc::schema_violation, "negative multiplicity for " + element.str());
    if (sgn(mult) == 0) continue;
    elems[element] += mult;
  }
  if (elems.empty()) throw Error(Errc::schema_violation, "multiset must be nonempty");
  return GMultiset(kind, arity, std::move(elems));
}

GMultiset GMultiset::singleton(const GroupElement& element) {
  return GMultiset(element.kind(), element.arity(), Map{{element, Integer(1)}});
}

GMultiset GMultiset::identity(GroupKind kind, std::size_t arity) {
  return singleton(GroupElement::identity(kind, arity));
}

Integer GMultiset::multiplicity(const GroupElement& element) const {
  const auto it = elems_.find(element);
  return it == elems_.end() ? Integer(0) : it->second;
}

Integer GMultiset::size() const {
  Integer total = 0;
  for (const auto& [element, mult] : elems_) total += mult;
  return total;
}

std::string GMultiset::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [element, mult] : elems_) {
    if (!first) s += ", ";
    first = false;
    s += element.str();
    if (mult != 1) s += "^" + to_string(mult);
  }
  return s + "}";
}

GMultiset msum(const GMultiset& a, const GMultiset& b) {
  require_same_group(a, b, "msum");
  GMultiset::Map out;
  for (const auto& [x, mx] : a.entries())
    for (const auto& [y, my] : b.entries()) out[x + y] += mx * my;
  return MultisetBuilder::make(a.kind(), a.arity(), std::move(out));
}

GMultiset n_fold(const GMultiset& a, unsigned n) {
  if (n == 0) throw Error(Errc::invalid_argument, "n_fold needs n >= 1");
  // Binary powering; msum is associative and commutative.
  GMultiset result = GMultiset::identity(a.kind(), a.arity());
  GMultiset base = a;
  while (true) {
    if (n & 1u) result = msum(result, base);
    n >>= 1u;
    if (n == 0) break;
    base = msum(base, base);
  }
  return result;
}

GMultiset translate(const GMultiset& a, const GroupElement& g) {
  if (g.kind() != a.kind() || g.arity() != a.arity())
    throw Error(Errc::group_mismatch, "cannot translate " + a.str() + " by " + g.str());
  GMultiset::Map out;
  for (const auto& [x, m] : a.entries()) out.emplace(x + g, m);
  return MultisetBuilder::make(a.kind(), a.arity(), std::move(out));
}

std::optional<GroupElement> equal_up_to_translation(const GMultiset& a, const GMultiset& b) {
  require_same_group(a, b, "equal_up_to_translation");
  if (a.support_size() != b.support_size() || a.size() != b.size()) return std::nullopt;

  if (is_ordered(a.kind())) {
    // The canonical order is translation invariant here, so minima must align.
    GroupElement g = b.min_element() - a.min_element();
    if (translate(a, g) == b) return g;
    return std::nullopt;
  }

  // magphase: magnitudes are ordered, phases are not. Anchor on a's first
  // element and try every element of b with the smallest magnitude and a
  // matching multiplicity.
  const auto& [anchor, anchor_mult] = *a.entries().begin();
  const Rational& min_mag_b = b.min_element().mag();
  std::optional<GroupElement> best;
  for (const auto& [y, my] : b.entries()) {
    if (y.mag() != min_mag_b) break;
    if (my != anchor_mult) continue;
    GroupElement g = y - anchor;
    if (best && !(g < *best)) continue;
    if (translate(a, g) == b) best = g;
  }
  return best;
}

std::optional<GMultiset> deconvolve(const GMultiset& s, const GMultiset& b) {
  require_same_group(s, b, "deconvolve");
  require_ordered(s, "deconvolve");
  const Integer s_size = s.size();
  const Integer b_size = b.size();
  if (s_size % b_size != 0) return std::nullopt;

  const GroupElement& b_min = b.min_element();
  const Integer& b_min_mult = b.entries().begin()->second;
  GMultiset::Map remainder = s.entries();
  GMultiset::Map quotient;

  while (!remainder.empty()) {
    const auto [s_min, s_mult] = *remainder.begin();
    // The smallest remaining element is b_min + d_min and arises only that way.
    if (s_mult % b_min_mult != 0) return std::nullopt;
    const Integer count = s_mult / b_min_mult;
    const GroupElement d = s_min - b_min;
    for (const auto& [y, my] : b.entries()) {
      auto it = remainder.find(y + d);
      const Integer needed = my * count;
      if (it == remainder.end() || it->second < needed) return std::nullopt;
      it->second -= needed;
      if (sgn(it->second) == 0) remainder.erase(it);
    }
    quotient.emplace(d, count);
  }
  return MultisetBuilder::make(s.kind(), s.arity(), std::move(quotient));
}

GMultiset min_normalize(const GMultiset& a) {
  require_ordered(a, "min_normalize");
  if (a.kind() == GroupKind::rat) return translate(a, -a.min_element());
  std::vector<Integer> mins = a.min_element().coords();
  for (const auto& [x, m] : a.entries()) {
    const auto& c = x.coords();
    for (std::size_t i = 0; i < mins.size(); ++i)
      if (c[i] < mins[i]) mins[i] = c[i];
  }
  for (auto& v : mins) v = -v;
  return translate(a, GroupElement::zvec(std::move(mins)));
}

}  // namespace flexcat
