/**
 * @file scalar.hpp
 * @brief Exact field elements: residues modulo a prime, or GMP rationals.
 *
 * Every Scalar knows its field. Mixing fields in one operation throws
 * FieldMismatch; dividing by zero throws DivisionByZero. There is no
 * floating point anywhere in hmcat.
 */
#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "hmcat/errors.hpp"

namespace hmcat {

/// Field descriptor: F_p for a prime p < 2^31, or the rationals.
class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  /// True iff the integer n is a unit in this field.
  bool is_unit(std::int64_t n) const;

  /// "F5" or "Q".
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

class Scalar {
 public:
  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, std::int64_t n);
  /// Accepts "n", "-n", "n/d" (d != 0). Residues are reduced mod p.
  static Scalar parse(Field f, const std::string& text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;

  /// Canonical text: residue in [0, p), or reduced "n" / "n/d".
  std::string to_string() const;

  /// Residue value; only valid in a prime field.
  std::uint32_t residue() const;
  /// Rational value; only valid over Q.
  const mpq_class& rational() const;

 private:
  struct Residue {
    std::uint32_t p;
    std::uint32_t v;
  };
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  void require_same_field(const Scalar& o) const;

  std::variant<Residue, mpq_class> rep_;
};

}  // namespace hmcat
