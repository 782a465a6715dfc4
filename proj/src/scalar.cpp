#include "homalg/scalar.hpp"

#include <ostream>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_number(p)) {
    throw FieldMismatch("not a prime modulus: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& descriptor) {
  if (descriptor == "rational") return rational();
  const std::string prefix = "prime:";
  if (descriptor.rfind(prefix, 0) == 0) {
    const std::string digits = descriptor.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw FieldMismatch("bad field descriptor: " + descriptor);
    }
    return prime(std::stoull(digits));
  }
  throw FieldMismatch("bad field descriptor: " + descriptor);
}

std::string Field::descriptor() const {
  return p_ == 0 ? "rational" : "prime:" + std::to_string(p_);
}

Scalar Field::zero() const { return Scalar(mpq_class(0), p_); }
Scalar Field::one() const { return Scalar(mpq_class(1), p_); }

Scalar Field::from_int(long value) const {
  Scalar s(mpq_class(value), p_);
  s.reduce();
  return s;
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) return Scalar(value, 0);
  Scalar num(mpq_class(value.get_num()), p_);
  Scalar den(mpq_class(value.get_den()), p_);
  num.reduce();
  den.reduce();
  return num / den;
}

Scalar Field::parse_scalar(const std::string& text) const {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error("malformed scalar: \"" + text + "\"");
  }
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return from_rational(q);
}

Field Scalar::field() const { return Field(p_); }

void Scalar::check_field(const Scalar& other) const {
  if (p_ != other.p_) {
    throw FieldMismatch("scalars from " + field().descriptor() + " and " +
                        other.field().descriptor() + " mixed");
  }
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class r = value_.get_num();
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class rem;
  mpz_fdiv_r(rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(rem);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_field(other);
  value_ += other.value_;
  if (p_ != 0 && value_ >= static_cast<unsigned long>(p_)) {
    value_ -= static_cast<unsigned long>(p_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_field(other);
  value_ -= other.value_;
  if (p_ != 0 && sgn(value_) < 0) value_ += static_cast<unsigned long>(p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_field(other);
  value_ *= other.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(-value_, p_);
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (p_ == 0) return Scalar(1 / value_, 0);
  mpz_class inv;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class v = value_.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), p_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_field(b);
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace homalg
