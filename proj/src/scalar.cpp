#include "subalg/scalar.hpp"

#include <array>

namespace subalg {

const char* errc_name(errc c) {
  switch (c) {
    case errc::field_mismatch: return "FieldMismatch";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::wrong_rank: return "WrongRank";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::certification_failed: return "CertificationFailed";
    case errc::not_in_corner: return "NotInCorner";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::frame_violation: return "FrameViolation";
    case errc::not_parabolic: return "NotParabolic";
    case errc::not_max_nonunital: return "NotMaxNonunital";
    case errc::not_gamma_max: return "NotGammaMax";
    case errc::not_omega_max: return "NotOmegaMax";
    case errc::not_in_omega: return "NotInOmega";
    case errc::parse_error: return "ParseError";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::invalid_params: return "InvalidParams";
  }
  return "Error";
}

bool is_rejection(errc c) {
  switch (c) {
    case errc::not_parabolic:
    case errc::not_max_nonunital:
    case errc::not_gamma_max:
    case errc::not_omega_max:
    case errc::not_in_omega:
    case errc::dimension_too_small:
    case errc::frame_violation:
      return true;
    default:
      return false;
  }
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0 mod p
  return powmod(a, p - 2, p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 62)) fail(errc::invalid_params, "prime too large");
  if (!is_prime_u64(p)) fail(errc::invalid_params, "characteristic must be prime, got " + std::to_string(p));
  return Field(FieldTag::prime_field, p);
}

std::string Field::str() const {
  if (tag_ == FieldTag::rationals) return "Q";
  return "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    const std::string body = s.substr(3);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse_error, "bad field '" + s + "'");
    try {
      return prime(std::stoull(body));
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad field '" + s + "'");
    }
  }
  fail(errc::parse_error, "bad field '" + s + "' (expected \"Q\" or \"Fp:<p>\")");
}

void check_same_field(const Field& a, const Field& b, const char* where) {
  if (a != b)
    fail(errc::field_mismatch,
         std::string(where) + ": " + a.str() + " vs " + b.str());
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const Field& f) {
  Scalar s(f);
  if (f.tag() == FieldTag::rationals) {
    s.q_ = mpq_class(v);
  } else {
    const std::uint64_t p = f.characteristic();
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(errc::parse_error, "zero denominator");
  Scalar s(Field::rationals());
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s(Field::rationals());
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Field f = Field::prime(p);
  Scalar s(f);
  s.r_ = v % p;
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  const auto slash = text.find('/');
  const std::string num_s = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
  mpz_class num, den;
  try {
    num = mpz_class(num_s);
    den = mpz_class(den_s);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad scalar '" + text + "'");
  }
  if (den == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
  if (f.tag() == FieldTag::rationals) {
    Scalar s(f);
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t p = f.characteristic();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class nr = ((num % pz) + pz) % pz;
  mpz_class dr = ((den % pz) + pz) % pz;
  std::uint64_t n64 = nr.get_ui();
  std::uint64_t d64 = dr.get_ui();
  if (d64 == 0) fail(errc::parse_error, "denominator divisible by p in '" + text + "'");
  Scalar s(f);
  s.r_ = mulmod(n64, invmod(d64, p), p);
  return s;
}

bool Scalar::is_zero() const {
  return tag() == FieldTag::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return tag() == FieldTag::rationals ? q_ == 1 : r_ == 1 % field_.characteristic();
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s = *this;
  s *= o;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (tag() == FieldTag::rationals) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(field_, o.field_, "scalar +");
  if (tag() == FieldTag::rationals) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    const std::uint64_t p = field_.characteristic();
    if (r_ >= p) r_ -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(field_, o.field_, "scalar -");
  if (tag() == FieldTag::rationals) {
    q_ -= o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(field_, o.field_, "scalar *");
  if (tag() == FieldTag::rationals) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, field_.characteristic());
  }
  return *this;
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
  check_same_field(field_, a.field_, "scalar submul");
  check_same_field(field_, b.field_, "scalar submul");
  if (tag() == FieldTag::rationals) {
    q_ -= a.q_ * b.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t ab = mulmod(a.r_, b.r_, p);
    r_ = r_ >= ab ? r_ - ab : r_ + p - ab;
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::invalid_params, "inverse of zero");
  Scalar s = *this;
  if (tag() == FieldTag::rationals) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = invmod(r_, field_.characteristic());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(field_, o.field_, "scalar ==");
  return tag() == FieldTag::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (tag() == FieldTag::rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace subalg
