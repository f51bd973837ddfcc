#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "homlie/error.hpp"

namespace homlie {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

enum class FieldKind { rational, prime };

/// The coefficient field: Q, or F_p for a word-sized prime p.
class FieldSpec {
 public:
  /// Defaults to Q.
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws Error{usage} unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::rational; }
  bool is_prime() const noexcept { return kind_ == FieldKind::prime; }
  /// Modulus; 0 for Q.
  std::uint64_t modulus() const noexcept { return p_; }

  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  static FieldSpec trusted_prime(std::uint64_t p) noexcept;

  FieldKind kind_ = FieldKind::rational;
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues live in [0, p). Mixing fields in one operation throws
/// Error{field_mismatch}.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long value);
  static Scalar from_mpz(const FieldSpec& field, const mpz_class& value);
  /// num/den over Q; throws division_by_zero when den == 0.
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar rational(long num, long den = 1);
  /// Residue of `value` modulo the field's prime.
  static Scalar residue(const FieldSpec& field, std::uint64_t value);

  /// Parses a literal: optional sign, digits, optionally "/digits" over Q;
  /// an integer reduced mod p over F_p.
  static Scalar parse(const FieldSpec& field, std::string_view literal);

  FieldSpec field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Q only.
  const mpq_class& as_rational() const;
  /// F_p only.
  std::uint64_t as_residue() const;

  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality of canonical forms. Scalars over different fields are
  /// never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical literal ("-3/4", "17", "0"); round-trips through parse.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };

  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Residue r) : rep_(r) {}

  const Residue& residue_checked(const Scalar& other) const;

  std::variant<mpq_class, Residue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_inv(const Scalar& a);

/// Image of a rational under Z_(p) -> F_p. Throws Error{reduction} when p
/// divides the denominator.
Scalar reduce_mod(const Scalar& a, std::uint64_t p);

/// Field-generic arithmetic on raw residues.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;
/// a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept;

}  // namespace homlie
