#include "magnus/scalar.hpp"

#include <ostream>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t power_mod(std::uint64_t base, std::uint64_t exp,
                        std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("GF(" + std::to_string(p) +
                      "): modulus must be a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    rational_ = value;
  } else {
    residue_ = reduce(mpz_class(value), field.modulus());
  }
}

Scalar Scalar::fraction(Field field, const mpz_class& num,
                        const mpz_class& den) {
  Scalar s;
  s.field_ = field;
  if (field.is_rational()) {
    if (den == 0) throw DomainError("zero denominator");
    s.rational_ = mpq_class(num, den);
    s.rational_.canonicalize();
    return s;
  }
  std::uint32_t d = reduce(den, field.modulus());
  if (d == 0) throw DomainError("denominator vanishes in " + field.name());
  std::uint64_t n = reduce(num, field.modulus());
  s.residue_ = static_cast<std::uint32_t>(
      n * power_mod(d, field.modulus() - 2, field.modulus()) %
      field.modulus());
  return s;
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

bool Scalar::is_negative() const noexcept {
  return field_.is_rational() && sgn(rational_) < 0;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " +
                        other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.rational_ = -rational_;
  } else if (residue_ != 0) {
    s.residue_ = field_.modulus() - residue_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    rational_ += other.rational_;
  } else {
    residue_ = static_cast<std::uint32_t>(
        (std::uint64_t{residue_} + other.residue_) % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    rational_ *= other.rational_;
  } else {
    residue_ = static_cast<std::uint32_t>(
        std::uint64_t{residue_} * other.residue_ % field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.rational_ = 1 / rational_;
  } else {
    s.residue_ = power_mod(residue_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? a.rational_ == b.rational_
                                : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace magnus
