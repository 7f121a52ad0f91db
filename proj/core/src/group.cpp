#include "flexcat/group.hpp"

#include "flexcat/errors.hpp"

namespace flexcat {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::zvec: return "zvec";
    case GroupKind::rat: return "rat";
    case GroupKind::magphase: return "magphase";
  }
  return "unknown";
}

GroupKind parse_group_kind(std::string_view text) {
  if (text == "zvec") return GroupKind::zvec;
  if (text == "rat") return GroupKind::rat;
  if (text == "magphase") return GroupKind::magphase;
  throw Error(Errc::schema_violation, "unknown group '" + std::string(text) + "'");
}

GroupElement GroupElement::zvec(std::vector<Integer> coords) {
  if (coords.empty()) throw Error(Errc::invalid_argument, "zvec element needs arity >= 1");
  return GroupElement(Repr(std::move(coords)));
}

GroupElement GroupElement::rat(Rational value) {
  value.canonicalize();
  return GroupElement(Repr(std::move(value)));
}

GroupElement GroupElement::mag_phase(Rational mag, Rational phase) {
  mag.canonicalize();
  if (sgn(mag) <= 0) throw Error(Errc::domain_error, "magnitude must be positive, got " + to_string(mag));
  return GroupElement(Repr(MagPhase{std::move(mag), fractional_part(phase)}));
}

GroupElement GroupElement::identity(GroupKind kind, std::size_t arity) {
  switch (kind) {
    case GroupKind::zvec: return zvec(std::vector<Integer>(arity, Integer(0)));
    case GroupKind::rat: return rat(Rational(0));
    case GroupKind::magphase: return mag_phase(Rational(1), Rational(0));
  }
  throw Error(Errc::invalid_argument, "unknown group kind");
}

GroupKind GroupElement::kind() const { return static_cast<GroupKind>(repr_.index()); }

std::size_t GroupElement::arity() const {
  if (const auto* v = std::get_if<std::vector<Integer>>(&repr_)) return v->size();
  return 1;
}

const std::vector<Integer>& GroupElement::coords() const {
  if (const auto* v = std::get_if<std::vector<Integer>>(&repr_)) return *v;
  throw Error(Errc::group_mismatch, "element is not a zvec");
}

const Rational& GroupElement::value() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return *r;
  throw Error(Errc::group_mismatch, "element is not a rat");
}

const Rational& GroupElement::mag() const {
  if (const auto* m = std::get_if<MagPhase>(&repr_)) return m->mag;
  throw Error(Errc::group_mismatch, "element is not a magphase");
}

const Rational& GroupElement::phase() const {
  if (const auto* m = std::get_if<MagPhase>(&repr_)) return m->phase;
  throw Error(Errc::group_mismatch, "element is not a magphase");
}

bool GroupElement::is_identity() const { return *this == identity(kind(), arity()); }

bool GroupElement::same_group(const GroupElement& other) const {
  return kind() == other.kind() && arity() == other.arity();
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (!same_group(other))
    throw Error(Errc::group_mismatch, "cannot add " + str() + " and " + other.str());
  switch (kind()) {
    case GroupKind::zvec: {
      const auto& a = coords();
      const auto& b = other.coords();
      std::vector<Integer> sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      return GroupElement(Repr(std::move(sum)));
    }
    case GroupKind::rat:
      return GroupElement(Repr(Rational(value() + other.value())));
    case GroupKind::magphase:
      return mag_phase(mag() * other.mag(), phase() + other.phase());
  }
  throw Error(Errc::invalid_argument, "unknown group kind");
}

GroupElement GroupElement::operator-() const {
  switch (kind()) {
    case GroupKind::zvec: {
      std::vector<Integer> neg(coords());
      for (auto& c : neg) c = -c;
      return GroupElement(Repr(std::move(neg)));
    }
    case GroupKind::rat:
      return GroupElement(Repr(Rational(-value())));
    case GroupKind::magphase:
      return mag_phase(1 / mag(), -phase());
  }
  throw Error(Errc::invalid_argument, "unknown group kind");
}

int compare(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case GroupKind::zvec: {
      const auto& x = a.coords();
      const auto& y = b.coords();
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0 ? -1 : 1;
      }
      return 0;
    }
    case GroupKind::rat: {
      const int c = cmp(a.value(), b.value());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case GroupKind::magphase: {
      int c = cmp(a.mag(), b.mag());
      if (c == 0) c = cmp(a.phase(), b.phase());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  return 0;
}

std::string GroupElement::str() const {
  switch (kind()) {
    case GroupKind::zvec: {
      const auto& v = coords();
      if (v.size() == 1) return to_string(v[0]);
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
      }
      return s + ")";
    }
    case GroupKind::rat: return to_string(value());
    case GroupKind::magphase: return "(" + to_string(mag()) + "," + to_string(phase()) + ")";
  }
  return "?";
}

}  // namespace flexcat
