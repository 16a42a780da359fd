#include "hmcat/scalar.hpp"

#include <cctype>

namespace hmcat {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce(std::int64_t n, std::uint32_t p) {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidInput("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

bool Field::is_unit(std::int64_t n) const {
  if (is_rational()) return n != 0;
  return reduce(n, p_) != 0;
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Scalar::from_int(Field f, std::int64_t n) {
  if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
  return Scalar(Residue{f.characteristic(), reduce(n, f.characteristic())});
}

Scalar Scalar::parse(Field f, const std::string& text) {
  auto bad = [&] { return StructuralError("malformed scalar '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero("scalar '" + text + "' has zero denominator");
  if (f.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint32_t p = f.characteristic();
  mpz_class pm(p);
  mpz_class nr = n % pm, dr = d % pm;
  if (nr < 0) nr += pm;
  if (dr < 0) dr += pm;
  if (dr == 0) throw DivisionByZero("denominator of '" + text + "' vanishes in " + f.name());
  const auto nv = static_cast<std::uint32_t>(nr.get_ui());
  const auto dv = static_cast<std::uint32_t>(dr.get_ui());
  return Scalar(Residue{p, static_cast<std::uint32_t>(
                               static_cast<std::uint64_t>(nv) * pow_mod(dv, p - 2, p) % p)});
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&rep_)) return Field(r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->v == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw FieldMismatch("scalar arithmetic across fields " + field().name() + " and " +
                        o.field().name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&rep_)) {
    const std::uint64_t s = static_cast<std::uint64_t>(r->v) + std::get<Residue>(o.rep_).v;
    return Scalar(Residue{r->p, static_cast<std::uint32_t>(s % r->p)});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&rep_)) {
    const std::uint64_t s = static_cast<std::uint64_t>(r->v) * std::get<Residue>(o.rep_).v;
    return Scalar(Residue{r->p, static_cast<std::uint32_t>(s % r->p)});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&rep_)) return Scalar(Residue{r->p, r->v ? r->p - r->v : 0});
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field().name());
  if (auto r = std::get_if<Residue>(&rep_)) return Scalar(Residue{r->p, pow_mod(r->v, r->p - 2, r->p)});
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&rep_)) return r->v == std::get<Residue>(o.rep_).v;
  return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&rep_)) return std::to_string(r->v);
  return std::get<mpq_class>(rep_).get_str();
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->v;
  throw FieldMismatch("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return *q;
  throw FieldMismatch("rational() on a residue scalar");
}

}  // namespace hmcat
