#pragma once

#include "flexcat/catalysis.hpp"
#include "flexcat/gmultiset.hpp"
#include "flexcat/majorization.hpp"
#include "flexcat/number.hpp"
#include "flexcat/polynomial.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace th {

using namespace flexcat;

inline Rational q(const std::string& s) { return parse_rational(s); }

inline GroupElement z(long v) { return GroupElement::zvec({Integer(v)}); }
inline GroupElement z2(long a, long b) { return GroupElement::zvec({Integer(a), Integer(b)}); }
inline GroupElement mp(const std::string& mag, const std::string& phase) {
  return GroupElement::mag_phase(q(mag), q(phase));
}

/// {e1^m1, e2^m2, ...} over Z.
inline GMultiset Z(std::initializer_list<std::pair<long, long>> entries) {
  std::vector<GMultiset::Entry> es;
  for (auto [e, m] : entries) es.emplace_back(z(e), Integer(m));
  return GMultiset::from_entries(GroupKind::zvec, 1, es);
}

inline GMultiset MS(GroupKind kind, std::size_t arity, std::vector<std::pair<GroupElement, long>> entries) {
  std::vector<GMultiset::Entry> es;
  for (auto& [e, m] : entries) es.emplace_back(e, Integer(m));
  return GMultiset::from_entries(kind, arity, es);
}

inline GMultiset PM(std::vector<std::pair<GroupElement, long>> entries) {
  return MS(GroupKind::magphase, 1, std::move(entries));
}

inline IntPolynomial P(std::initializer_list<long> coeffs) {
  std::vector<Integer> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return IntPolynomial::univariate(cs);
}

inline ProbVector V(std::initializer_list<const char*> probs) {
  std::vector<Rational> v;
  for (const char* p : probs) v.push_back(parse_rational_or_decimal(p));
  return ProbVector(std::move(v));
}

inline ProbVector W(std::initializer_list<long> weights) {
  std::vector<Rational> v;
  for (long w : weights) v.emplace_back(w);
  return ProbVector::from_weights(std::move(v));
}

// Objects from the worked extraction example.
struct Advantage {
  IntPolynomial X = P({4, 1});
  IntPolynomial Y = P({2, 2, -1, 2, 2});
  IntPolynomial B = P({1, 1});
  IntPolynomial A = B * X * Y;
  IntPolynomial C0 = B * X;
  IntPolynomial C1 = B * Y;
  IntPolynomial D0 = Y * Y;
  IntPolynomial D1 = X * X;
};

inline const TTInstance kZeq = TTInstance::multiset(GroupKind::zvec, Relation::equal);
inline const TTInstance kZprop = TTInstance::multiset(GroupKind::zvec, Relation::translation);
inline const TTInstance kPMprop = TTInstance::multiset(GroupKind::magphase, Relation::translation);
inline const TTInstance kMaj = TTInstance::majorization();

inline ProbVector locc_a() { return V({"0.4", "0.4", "0.1", "0.1"}); }
inline ProbVector locc_b() { return V({"0.5", "0.29", "0.21", "0"}); }
inline GMultiset omega_a() { return PM({{mp("1", "0"), 1}, {mp("1", "1/3"), 2}}); }
inline GMultiset omega_b() { return PM({{mp("1", "0"), 1}, {mp("1", "2/3"), 2}}); }

}  // namespace th
