#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "subalg/error.hpp"

namespace subalg {

enum class FieldTag : std::uint8_t { rationals, prime_field };

bool is_prime_u64(std::uint64_t n);

// Field descriptor. Every Scalar carries one; mixing distinct fields in a
// computation raises field_mismatch.
class Field {
public:
  static Field rationals() { return Field(FieldTag::rationals, 0); }
  static Field prime(std::uint64_t p);

  FieldTag tag() const { return tag_; }
  // 0 for the rationals, p otherwise.
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return tag_ == o.tag_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const;                    // "Q" or "Fp:5"
  static Field parse(const std::string& s);   // parse_error on anything else

private:
  Field(FieldTag t, std::uint64_t p) : tag_(t), p_(p) {}
  FieldTag tag_;
  std::uint64_t p_;
};

void check_same_field(const Field& a, const Field& b, const char* where);

// Exact field element: arbitrary-precision rational or residue mod p.
// Rationals stay reduced with positive denominator (mpq canonical form).
class Scalar {
public:
  Scalar() : field_(Field::rationals()), r_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(long v, const Field& f);
  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t v, std::uint64_t p);

  // Exact parse of "3", "-2", "3/7". Over F_p a fraction means a * b^-1.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return field_; }
  FieldTag tag() const { return field_.tag(); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  // this -= a*b, the elimination inner step
  void submul(const Scalar& a, const Scalar& b);

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational value; only valid when tag() == rationals.
  const mpq_class& rat() const { return q_; }
  // Residue in [0, p); only valid when tag() == prime_field.
  std::uint64_t res() const { return r_; }

  std::string str() const;

private:
  Scalar(const Field& f) : field_(f), r_(0) {}
  Field field_;
  mpq_class q_;
  std::uint64_t r_;
};

}  // namespace subalg
