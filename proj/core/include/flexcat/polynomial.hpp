#pragma once

#include "flexcat/gmultiset.hpp"
#include "flexcat/number.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flexcat {

/// Exponent vector of a monomial, one entry per variable.
using Monomial = std::vector<std::uint32_t>;

/// Sparse polynomial in `arity` variables with big-integer coefficients.
/// No zero coefficient is ever stored; the zero polynomial has no terms.
class IntPolynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  explicit IntPolynomial(std::size_t arity = 1);

  static IntPolynomial constant(std::size_t arity, const Integer& c);
  /// a0 + a1 x + a2 x^2 + ...
  static IntPolynomial univariate(const std::vector<Integer>& coeffs);
  /// The variable x_index (0-based) in `arity` variables.
  static IntPolynomial variable(std::size_t arity, std::size_t index);
  static IntPolynomial from_terms(std::size_t arity, const std::vector<std::pair<Monomial, Integer>>& terms);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  /// Dense coefficient list for univariate polynomials (index = degree).
  std::vector<Integer> coefficients() const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, e.g. "8 + 10*x - 2*x^2" or "x*y^2 + 1".
  std::string str() const;

 private:
  std::size_t arity_;
  Terms terms_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_pow(const IntPolynomial& p, unsigned n);

/// True iff no stored coefficient is negative.
bool is_nonneg(const IntPolynomial& p);

/// Exact quotient a / b in Z[x1..xm], or nothing if b does not divide a.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Polynomial -> multiset over Z^m (exponent vector with multiplicity
/// equal to its coefficient). Requires a nonzero, nonnegative polynomial.
GMultiset iota(const IntPolynomial& p);

/// Inverse of iota on multisets over Z^m with nonnegative coordinates.
IntPolynomial iota_inv(const GMultiset& m);

struct NegativityResult {
  enum class Kind { finite, exceeds_bound };

  Kind kind;
  /// The negativity for Kind::finite, the searched bound otherwise.
  unsigned value;

  bool is_finite() const { return kind == Kind::finite; }
  friend bool operator==(const NegativityResult&, const NegativityResult&) = default;
};

/// Smallest k in [1, n_max] with p^k nonnegative, checking every k in
/// order (nonnegativity of powers is not monotone).
NegativityResult negativity(const IntPolynomial& p, unsigned n_max);

/// Degree-4 polynomial a0 + a1 x - x^2 + a3 x^3 + a4 x^4 with negativity
/// exactly n and (1+x) p nonnegative: a1 = 5^n, a0 = a3 = a4 =
/// floor((n-1)/2 * 5^(2n)). n = 1 yields 1 + x. Both properties are
/// checked before returning.
IntPolynomial construct_negativity_n(unsigned n);

/// Both sides of the bound (n-2)/2 a1^2 < -a0 a2 <= (n-1)/2 a1^2 that pins
/// the sign change of the x^2 coefficient of p^k at k = n.
bool satisfies_coefficient_bound(const IntPolynomial& p, unsigned n);

struct ScanRecord {
  unsigned n;
  bool power_nonneg;     // p^n in Z>=0[x]
  bool weighted_nonneg;  // q * p^n in Z>=0[x]

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Incremental scan of p^n and q p^n for n = 0, 1, 2, ... The full state
/// is exposed so a scan can be checkpointed and resumed.
class PositivityScan {
 public:
  PositivityScan(IntPolynomial p, IntPolynomial q);
  /// Rebuilds a scan whose next record is for `next_n`.
  PositivityScan(IntPolynomial p, IntPolynomial q, unsigned next_n, IntPolynomial power,
                 IntPolynomial weighted, std::optional<unsigned> first_weighted_failure,
                 std::optional<unsigned> first_nonneg_power);

  /// Emits the record for next_n() and advances.
  ScanRecord step();

  unsigned next_n() const { return next_n_; }
  const IntPolynomial& p() const { return p_; }
  const IntPolynomial& q() const { return q_; }
  /// p^next_n and q p^next_n.
  const IntPolynomial& power() const { return power_; }
  const IntPolynomial& weighted() const { return weighted_; }
  const std::optional<unsigned>& first_weighted_failure() const { return first_weighted_failure_; }
  /// First n >= 1 with p^n nonnegative seen so far.
  const std::optional<unsigned>& first_nonneg_power() const { return first_nonneg_power_; }

 private:
  IntPolynomial p_;
  IntPolynomial q_;
  unsigned next_n_ = 0;
  IntPolynomial power_;
  IntPolynomial weighted_;
  std::optional<unsigned> first_weighted_failure_;
  std::optional<unsigned> first_nonneg_power_;
};

struct ScanReport {
  unsigned n_max;
  std::vector<ScanRecord> records;
  std::optional<unsigned> first_weighted_failure;
  std::optional<unsigned> first_nonneg_power;
};

/// Records for every 0 <= n <= n_max.
ScanReport essential_positivity_scan(const IntPolynomial& p, const IntPolynomial& q, unsigned n_max);

}  // namespace flexcat
