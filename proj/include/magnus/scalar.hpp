#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace magnus {

/// Identifies the coefficient field: the rationals, or GF(p) for a prime p
/// below 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const noexcept { return modulus_ == 0; }
  constexpr std::uint32_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  /// num/den mapped into the field. Throws DomainError if den vanishes there.
  static Scalar fraction(Field field, const mpz_class& num,
                         const mpz_class& den);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign of rationals; residues are never negative.
  bool is_negative() const noexcept;

  const mpq_class& rational() const noexcept { return rational_; }
  std::uint32_t residue() const noexcept { return residue_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws FieldMismatch when the fields differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/2" over Q; the residue "3" over GF(p).
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  mpq_class rational_;
  std::uint32_t residue_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace magnus
