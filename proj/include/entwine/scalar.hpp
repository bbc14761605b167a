#pragma once

// Exact scalars over the rationals or a prime field.
//
// A Scalar carries the field it lives in; mixing scalars from different
// fields raises InputError. Rationals are always kept reduced with a
// positive denominator, so equality and text encoding are canonical.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace entwine {

class Scalar;

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  /// "num/den" or "num" for Q, an integer in [0,p) for F_p.
  Scalar parse(const std::string& text) const;

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  explicit Scalar(mpq_class q);
  Scalar(std::uint32_t residue, std::uint32_t p);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;  // throws DomainError on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// this += a * b, the inner step of every elimination and product.
  void add_product(const Scalar& a, const Scalar& b);

  /// Canonical text encoding ("num/den", den omitted when 1; residue for F_p).
  std::string str() const;

  /// Only meaningful for rationals.
  mpq_class rational() const;
  /// Only meaningful for prime fields.
  std::uint32_t residue() const;

 private:
  // Rationals are stored as Small whenever numerator and denominator fit in
  // an int64 (den > 0, reduced, num != INT64_MIN) and as mpq_class
  // otherwise, so each value has exactly one representation.
  struct Small {
    std::int64_t num;
    std::int64_t den;
    friend bool operator==(const Small&, const Small&) = default;
  };
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  void require_same_field(const Scalar& o) const;
  bool is_residue() const { return std::holds_alternative<Residue>(v_); }
  mpq_class big() const;
  static Scalar normalized(mpq_class q);

  std::variant<Small, mpq_class, Residue> v_ = Small{0, 1};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace entwine
