#include "flexcat/polynomial.hpp"

#include "flexcat/errors.hpp"

#include <unordered_map>

namespace flexcat {
namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : m) h = (h ^ e) * 0x100000001b3ull;
    return h;
  }
};

void require_same_arity(const IntPolynomial& a, const IntPolynomial& b, const char* op) {
  if (a.arity() != b.arity())
    throw Error(Errc::invalid_argument, std::string(op) + ": arity " + std::to_string(a.arity()) +
                                            " vs " + std::to_string(b.arity()));
}

Monomial zero_monomial(std::size_t arity) { return Monomial(arity, 0); }

const char* variable_name(std::size_t arity, std::size_t i) {
  static const char* const small[] = {"x", "y", "z", "w"};
  if (arity <= 4) return small[i];
  return nullptr;
}

}  // namespace

IntPolynomial::IntPolynomial(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw Error(Errc::invalid_argument, "polynomial arity must be >= 1");
}

IntPolynomial IntPolynomial::constant(std::size_t arity, const Integer& c) {
  IntPolynomial p(arity);
  p.add_term(zero_monomial(arity), c);
  return p;
}

IntPolynomial IntPolynomial::univariate(const std::vector<Integer>& coeffs) {
  IntPolynomial p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(Monomial{static_cast<std::uint32_t>(i)}, coeffs[i]);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw Error(Errc::invalid_argument, "variable index out of range");
  Monomial m = zero_monomial(arity);
  m[index] = 1;
  IntPolynomial p(arity);
  p.add_term(m, Integer(1));
  return p;
}

IntPolynomial IntPolynomial::from_terms(std::size_t arity,
                                        const std::vector<std::pair<Monomial, Integer>>& terms) {
  IntPolynomial p(arity);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

Integer IntPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Integer> IntPolynomial::coefficients() const {
  if (arity_ != 1) throw Error(Errc::invalid_argument, "coefficients() needs a univariate polynomial");
  if (terms_.empty()) return {};
  std::vector<Integer> out(terms_.rbegin()->first[0] + 1, Integer(0));
  for (const auto& [m, c] : terms_) out[m[0]] = c;
  return out;
}

void IntPolynomial::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != arity_)
    throw Error(Errc::invalid_argument, "exponent vector length " + std::to_string(m.size()) +
                                            " does not match arity " + std::to_string(arity_));
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_arity(a, b, "add");
  IntPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_arity(a, b, "subtract");
  IntPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, Integer(-c));
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_arity(a, b, "multiply");
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Monomial m(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = acc.try_emplace(m);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  IntPolynomial out(a.arity_);
  for (auto& [mono, c] : acc)
    if (sgn(c) != 0) out.terms_.emplace(mono, std::move(c));
  return out;
}

std::string IntPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Integer mag = abs(c);
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      const char* name = variable_name(arity_, i);
      mono += name ? std::string(name) : "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += mono;
    }
  }
  return s;
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial poly_pow(const IntPolynomial& p, unsigned n) {
  IntPolynomial result = IntPolynomial::constant(p.arity(), Integer(1));
  IntPolynomial base = p;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool is_nonneg(const IntPolynomial& p) {
  for (const auto& [m, c] : p.terms())
    if (sgn(c) < 0) return false;
  return true;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_arity(a, b, "divide");
  if (b.is_zero()) throw Error(Errc::invalid_argument, "division by the zero polynomial");
  const auto& [lead_b, lead_b_coeff] = *b.terms().rbegin();
  IntPolynomial remainder = a;
  IntPolynomial quotient(a.arity());
  // Lexicographic leading terms strictly decrease, so this terminates.
  while (!remainder.is_zero()) {
    const auto& [lead_r, lead_r_coeff] = *remainder.terms().rbegin();
    Monomial shift(a.arity());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lead_r[i] < lead_b[i]) return std::nullopt;
      shift[i] = lead_r[i] - lead_b[i];
    }
    if (!mpz_divisible_p(lead_r_coeff.get_mpz_t(), lead_b_coeff.get_mpz_t())) return std::nullopt;
    const Integer factor = lead_r_coeff / lead_b_coeff;
    IntPolynomial term(a.arity());
    term.add_term(shift, factor);
    quotient.add_term(shift, factor);
    remainder = remainder - term * b;
  }
  return quotient;
}

GMultiset iota(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::domain_error, "iota is undefined on the zero polynomial");
  std::vector<GMultiset::Entry> entries;
  entries.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c) < 0)
      throw Error(Errc::domain_error, "iota needs nonnegative coefficients, got " + to_string(c));
    std::vector<Integer> coords(m.begin(), m.end());
    entries.emplace_back(GroupElement::zvec(std::move(coords)), c);
  }
  return GMultiset::from_entries(GroupKind::zvec, p.arity(), entries);
}

IntPolynomial iota_inv(const GMultiset& m) {
  if (m.kind() != GroupKind::zvec)
    throw Error(Errc::domain_error, "iota_inv needs a multiset over Z^m");
  IntPolynomial p(m.arity());
  for (const auto& [x, mult] : m.entries()) {
    Monomial mono(m.arity());
    const auto& coords = x.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (sgn(coords[i]) < 0)
        throw Error(Errc::domain_error, "iota_inv needs nonnegative coordinates, got " + x.str());
      if (!coords[i].fits_uint_p() || coords[i] > Integer(UINT32_MAX))
        throw Error(Errc::domain_error, "exponent too large: " + x.str());
      mono[i] = static_cast<std::uint32_t>(coords[i].get_ui());
    }
    p.add_term(mono, mult);
  }
  return p;
}

NegativityResult negativity(const IntPolynomial& p, unsigned n_max) {
  if (n_max == 0) throw Error(Errc::invalid_argument, "negativity bound must be >= 1");
  if (p.is_zero()) throw Error(Errc::invalid_argument, "negativity of the zero polynomial");
  IntPolynomial power = p;
  for (unsigned k = 1; k <= n_max; ++k) {
    if (k > 1) power = power * p;
    if (is_nonneg(power)) return {NegativityResult::Kind::finite, k};
  }
  return {NegativityResult::Kind::exceeds_bound, n_max};
}

bool satisfies_coefficient_bound(const IntPolynomial& p, unsigned n) {
  if (p.arity() != 1) return false;
  const Integer a0 = p.coefficient({0});
  const Integer a1 = p.coefficient({1});
  const Integer a2 = p.coefficient({2});
  const Integer twice_neg = -2 * a0 * a2;
  const Integer a1_sq = a1 * a1;
  const Integer n_big(n);
  return (n_big - 2) * a1_sq < twice_neg && twice_neg <= (n_big - 1) * a1_sq;
}

IntPolynomial construct_negativity_n(unsigned n) {
  if (n == 0) throw Error(Errc::invalid_argument, "negativity must be a positive integer");
  if (n == 1) return IntPolynomial::univariate({Integer(1), Integer(1)});

  Integer a1;
  mpz_ui_pow_ui(a1.get_mpz_t(), 5, n);
  // floor((n-1)/2 * 5^(2n)) with exact integer arithmetic.
  const Integer a0 = (Integer(n - 1) * a1 * a1) / 2;
  IntPolynomial p = IntPolynomial::univariate({a0, a1, Integer(-1), a0, a0});

  const auto neg = negativity(p, n);
  if (!neg.is_finite() || neg.value != n)
    throw Error(Errc::construction_invariant_violated,
                "constructed polynomial does not have negativity " + std::to_string(n));
  if (!is_nonneg(IntPolynomial::univariate({Integer(1), Integer(1)}) * p))
    throw Error(Errc::construction_invariant_violated, "(1+x) p has a negative coefficient");
  if (!satisfies_coefficient_bound(p, n))
    throw Error(Errc::construction_invariant_violated, "coefficient bound violated");
  return p;
}

PositivityScan::PositivityScan(IntPolynomial p, IntPolynomial q)
    : p_(std::move(p)), q_(std::move(q)), power_(IntPolynomial::constant(p_.arity(), Integer(1))),
      weighted_(q_) {
  require_same_arity(p_, q_, "scan");
  if (q_.is_zero()) throw Error(Errc::invalid_argument, "scan weight q must be nonzero");
}

PositivityScan::PositivityScan(IntPolynomial p, IntPolynomial q, unsigned next_n, IntPolynomial power,
                               IntPolynomial weighted, std::optional<unsigned> first_weighted_failure,
                               std::optional<unsigned> first_nonneg_power)
    : p_(std::move(p)), q_(std::move(q)), next_n_(next_n), power_(std::move(power)),
      weighted_(std::move(weighted)), first_weighted_failure_(first_weighted_failure),
      first_nonneg_power_(first_nonneg_power) {
  require_same_arity(p_, q_, "scan");
  if (q_.is_zero()) throw Error(Errc::invalid_argument, "scan weight q must be nonzero");
  if (!(poly_pow(p_, next_n_) == power_) || !(q_ * power_ == weighted_))
    throw Error(Errc::schema_violation, "checkpoint state is inconsistent with p, q and n");
}

ScanRecord PositivityScan::step() {
  const ScanRecord record{next_n_, is_nonneg(power_), is_nonneg(weighted_)};
  if (!record.weighted_nonneg && !first_weighted_failure_) first_weighted_failure_ = record.n;
  if (record.n >= 1 && record.power_nonneg && !first_nonneg_power_) first_nonneg_power_ = record.n;
  power_ = power_ * p_;
  weighted_ = weighted_ * p_;
  ++next_n_;
  return record;
}

ScanReport essential_positivity_scan(const IntPolynomial& p, const IntPolynomial& q, unsigned n_max) {
  PositivityScan scan(p, q);
  ScanReport report{n_max, {}, std::nullopt, std::nullopt};
  report.records.reserve(n_max + 1);
  while (scan.next_n() <= n_max) report.records.push_back(scan.step());
  report.first_weighted_failure = scan.first_weighted_failure();
  report.first_nonneg_power = scan.first_nonneg_power();
  return report;
}

}  // namespace flexcat
