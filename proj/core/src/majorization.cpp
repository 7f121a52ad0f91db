#include "flexcat/majorization.hpp"

#include "flexcat/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace flexcat {
namespace {

void sort_desc(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
}

/// Multiset of positive rationals, largest first.
using RatCounts = std::map<Rational, std::size_t, std::greater<>>;

RatCounts counts_of(const std::vector<Rational>& v) {
  RatCounts c;
  for (const auto& x : v) ++c[x];
  return c;
}

/// Given factor `a` (largest first), finds the unique b with a (x) b == u
/// as multisets of positive rationals, by repeatedly peeling off the
/// largest remaining product.
std::optional<std::vector<Rational>> divide_out(const RatCounts& u, const std::vector<Rational>& a) {
  RatCounts rest = u;
  std::vector<Rational> b;
  const Rational& a_max = a.front();
  while (!rest.empty()) {
    const Rational bj = rest.begin()->first / a_max;
    for (const auto& ai : a) {
      const Rational prod = ai * bj;
      auto it = rest.find(prod);
      if (it == rest.end()) return std::nullopt;
      if (--it->second == 0) rest.erase(it);
    }
    b.push_back(bj);
  }
  return b;
}

}  // namespace

ProbVector::ProbVector(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(Errc::schema_violation, "probability vector must be nonempty");
  Rational total = 0;
  for (auto& p : probs_) {
    p.canonicalize();
    if (sgn(p) < 0) throw Error(Errc::schema_violation, "negative probability " + to_string(p));
    total += p;
  }
  if (total != 1)
    throw Error(Errc::schema_violation, "probabilities must sum to 1, got " + to_string(total));
  sort_desc(probs_);
}

ProbVector ProbVector::from_weights(std::vector<Rational> weights) {
  Rational total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw Error(Errc::schema_violation, "negative weight " + to_string(w));
    total += w;
  }
  if (sgn(total) == 0) throw Error(Errc::schema_violation, "weights must not all be zero");
  for (auto& w : weights) w /= total;
  return ProbVector(std::move(weights));
}

std::size_t ProbVector::support() const {
  return static_cast<std::size_t>(
      std::count_if(probs_.begin(), probs_.end(), [](const Rational& p) { return sgn(p) > 0; }));
}

ProbVector ProbVector::nonzero() const {
  std::vector<Rational> nz;
  for (const auto& p : probs_)
    if (sgn(p) > 0) nz.push_back(p);
  return ProbVector(std::move(nz));
}

bool operator<(const ProbVector& a, const ProbVector& b) {
  return std::lexicographical_compare(a.probs_.begin(), a.probs_.end(), b.probs_.begin(), b.probs_.end());
}

std::string ProbVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(probs_[i]);
  }
  return s + ")";
}

MajorizationCheck check_majorization(const ProbVector& u, const ProbVector& v) {
  const auto& x = u.probs();
  const auto& y = v.probs();
  const std::size_t len = std::max(x.size(), y.size());
  Rational sum_u = 0;
  Rational sum_v = 0;
  // Both totals are 1, so the last partial sum never fails.
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (k < x.size()) sum_u += x[k];
    if (k < y.size()) sum_v += y[k];
    if (sum_u > sum_v) return {false, MajorizationViolation{k + 1, sum_u, sum_v}};
  }
  return {true, std::nullopt};
}

bool majorizes(const ProbVector& u, const ProbVector& v) { return check_majorization(u, v).holds; }

ProbVector tensor(const ProbVector& u, const ProbVector& v) {
  std::vector<Rational> out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u.probs())
    for (const auto& b : v.probs()) out.emplace_back(a * b);
  return ProbVector(std::move(out));
}

bool locc_possible(const ProbVector& src, const ProbVector& dst) { return majorizes(src, dst); }

bool lu_equivalent(const ProbVector& u, const ProbVector& v) { return u.nonzero() == v.nonzero(); }

std::vector<FactorPair> tensor_factorizations(const ProbVector& u, std::size_t min_factor) {
  const ProbVector nz = u.nonzero();
  const std::size_t n = nz.size();
  if (n < 2) throw Error(Errc::invalid_argument, "factorization needs at least 2 nonzero entries");
  if (min_factor < 1) throw Error(Errc::invalid_argument, "min_factor must be >= 1");

  const auto& entries = nz.probs();
  const RatCounts u_counts = counts_of(entries);
  const Rational& u_max = entries.front();
  std::set<std::pair<ProbVector, ProbVector>> found;

  for (std::size_t d1 = min_factor; d1 * min_factor <= n; ++d1) {
    if (n % d1 != 0) continue;
    // The row u_max belongs to is a_i * b_max, i.e. a scaled copy of a
    // containing u_max itself. Enumerate (d1 - 1)-subsets of the other
    // entries; skipping equal neighbours avoids duplicate sub-multisets.
    std::vector<Rational> row{u_max};
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (row.size() == d1) {
        std::vector<Rational> a;
        a.reserve(d1);
        for (const auto& r : row) a.emplace_back(r / u_max);
        auto b = divide_out(u_counts, a);
        if (!b) return;
        ProbVector fa = ProbVector::from_weights(std::move(a));
        ProbVector fb = ProbVector::from_weights(std::move(*b));
        if (!(tensor(fa, fb) == nz)) return;
        if (fb < fa) std::swap(fa, fb);
        found.emplace(std::move(fa), std::move(fb));
        return;
      }
      for (std::size_t i = start; i < entries.size(); ++i) {
        if (i > start && entries[i] == entries[i - 1]) continue;
        row.push_back(entries[i]);
        choose(i + 1);
        row.pop_back();
      }
    };
    choose(1);
  }

  std::vector<FactorPair> out;
  out.reserve(found.size());
  for (const auto& [a, b] : found) out.push_back({a, b});
  return out;
}

}  // namespace flexcat
