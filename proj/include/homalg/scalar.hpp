#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace homalg {

class Scalar;

/// The ground field: arbitrary-precision rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rational() { return Field(); }
  static Field prime(std::uint64_t p);

  /// Parses "rational" or "prime:p".
  static Field parse(const std::string& descriptor);

  bool is_prime() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  std::string descriptor() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Parses "n", "-n" or "p/q".
  Scalar parse_scalar(const std::string& text) const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Prime-field elements are stored as their
/// canonical residue in [0, p). Mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT: rational integer literal

  Field field() const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  const mpq_class& value() const { return value_; }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "n" for integers and "p/q" in lowest terms otherwise.
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(mpq_class value, std::uint64_t p) : value_(std::move(value)), p_(p) {}
  void check_field(const Scalar& other) const;
  void reduce();

  mpq_class value_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homalg
