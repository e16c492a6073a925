#pragma once

// Exact scalars over Q and F_p (p >= 5), plus the classification-only
// field tags (real place, p-adic place, algebraic closure).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "e6kit/error.hpp"

namespace e6kit {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
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

}  // namespace detail

enum class FieldKind { Rationals, PrimeField, RealPlace, PadicPlace, AlgClosed };

/// Which field a scalar lives in. Only Rationals and PrimeField carry arithmetic.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec real_place() { return {FieldKind::RealPlace, 0}; }
  static FieldSpec alg_closed() { return {FieldKind::AlgClosed, 0}; }

  static FieldSpec prime_field(std::uint64_t p) {
    if (!detail::is_prime(p)) fail(ErrorCode::InvalidFieldSpec, "Fp modulus " + std::to_string(p) + " is not prime");
    if (p == 2 || p == 3) fail(ErrorCode::InvalidFieldSpec, "characteristic 2 and 3 are not supported");
    if (p >= (1ULL << 62)) fail(ErrorCode::InvalidFieldSpec, "modulus too large");
    return {FieldKind::PrimeField, p};
  }

  static FieldSpec padic_place(std::uint64_t p) {
    if (!detail::is_prime(p)) fail(ErrorCode::InvalidFieldSpec, "Qp prime " + std::to_string(p) + " is not prime");
    return {FieldKind::PadicPlace, p};
  }

  /// Grammar: "Q" | "R" | "Kbar" | "Fp:<prime>" | "Qp:<prime>".
  static FieldSpec parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    if (colon == std::string_view::npos) {
      if (head == "Q") return rationals();
      if (head == "R") return real_place();
      if (head == "Kbar") return alg_closed();
      fail(ErrorCode::InvalidFieldSpec, "unknown field '" + std::string(text) + "'");
    }
    std::string_view tail = text.substr(colon + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string_view::npos || tail.size() > 19) {
      fail(ErrorCode::InvalidFieldSpec, "bad prime in '" + std::string(text) + "'");
    }
    std::uint64_t p = std::stoull(std::string(tail));
    if (head == "Fp") return prime_field(p);
    if (head == "Qp") return padic_place(p);
    fail(ErrorCode::InvalidFieldSpec, "unknown field '" + std::string(text) + "'");
  }

  bool is_arithmetic() const { return kind == FieldKind::Rationals || kind == FieldKind::PrimeField; }

  std::string to_string() const {
    switch (kind) {
      case FieldKind::Rationals: return "Q";
      case FieldKind::PrimeField: return "Fp:" + std::to_string(p);
      case FieldKind::RealPlace: return "R";
      case FieldKind::PadicPlace: return "Qp:" + std::to_string(p);
      case FieldKind::AlgClosed: return "Kbar";
    }
    return "?";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// A count that may be infinite (square classes of Q, quaternion classes over Q).
struct Cardinal {
  std::optional<std::uint64_t> value;

  static Cardinal infinite() { return {}; }
  static Cardinal finite(std::uint64_t n) { return {n}; }
  bool is_infinite() const { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "infinite"; }
  friend bool operator==(const Cardinal&, const Cardinal&) = default;
};

class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}

  Scalar(const FieldSpec& field, long long value) : field_(field) {
    require_arithmetic(field);
    if (field.kind == FieldKind::Rationals) {
      value_ = mpq_class(mpz_class(std::to_string(value)));
    } else {
      long long r = value % static_cast<long long>(field.p);
      if (r < 0) r += static_cast<long long>(field.p);
      value_ = static_cast<std::uint64_t>(r);
    }
  }

  Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
    require_arithmetic(field);
    if (field.kind == FieldKind::Rationals) {
      mpq_class v = value;
      v.canonicalize();
      value_ = v;
    } else {
      std::uint64_t num = reduce(value.get_num(), field.p);
      std::uint64_t den = reduce(value.get_den(), field.p);
      if (den == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(field.p));
      value_ = detail::mulmod(num, detail::powmod(den, field.p - 2, field.p), field.p);
    }
  }

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  static Scalar rational(const FieldSpec& field, long long num, long long den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
    return Scalar(field, mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
  }

  /// Parses "a" or "a/b" with optional sign.
  static Scalar parse(const FieldSpec& field, std::string_view text) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad scalar '" + s + "'");
    if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    return Scalar(field, q);
  }

  const FieldSpec& field() const { return field_; }

  bool is_zero() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }
  bool is_one() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar operator-() const {
    Scalar out = *this;
    if (auto r = std::get_if<std::uint64_t>(&out.value_)) {
      *r = (*r == 0) ? 0 : field_.p - *r;
    } else {
      std::get<mpq_class>(out.value_) = -std::get<mpq_class>(value_);
    }
    return out;
  }

  Scalar& operator+=(const Scalar& rhs) {
    check_same(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
      std::uint64_t s = *r + rhs.residue();
      *r = s >= field_.p ? s - field_.p : s;
    } else {
      std::get<mpq_class>(value_) += rhs.rational_value();
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& rhs) {
    check_same(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
      std::uint64_t b = rhs.residue();
      *r = *r >= b ? *r - b : *r + field_.p - b;
    } else {
      std::get<mpq_class>(value_) -= rhs.rational_value();
    }
    return *this;
  }
  Scalar& operator*=(const Scalar& rhs) {
    check_same(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
      *r = detail::mulmod(*r, rhs.residue(), field_.p);
    } else {
      std::get<mpq_class>(value_) *= rhs.rational_value();
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& rhs) {
    check_same(rhs);
    *this *= rhs.inverse();
    return *this;
  }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Equality across fields is false rather than an error; arithmetic is where mixing is rejected.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  Scalar inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar out = *this;
    if (auto r = std::get_if<std::uint64_t>(&out.value_)) {
      *r = detail::powmod(*r, field_.p - 2, field_.p);
    } else {
      std::get<mpq_class>(out.value_) = 1 / std::get<mpq_class>(value_);
    }
    return out;
  }

  Scalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = one(field_);
    Scalar base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Square test inside the field itself (Euler's criterion mod p, perfect squares over Q).
  bool is_square() const {
    if (is_zero()) return true;
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
      return detail::powmod(*r, (field_.p - 1) / 2, field_.p) == 1;
    }
    const mpq_class& q = rational_value();
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
  }

  std::string to_string() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
  }

 private:
  static void require_arithmetic(const FieldSpec& field) {
    if (!field.is_arithmetic()) {
      fail(ErrorCode::NonArithmeticField, "no element arithmetic over " + field.to_string());
    }
  }

  static std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
  }

  void check_same(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) {
      fail(ErrorCode::MixedFields, field_.to_string() + " vs " + rhs.field_.to_string());
    }
  }

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

/// Seeded stream of field elements. The bounded draw uses rejection on raw
/// mt19937_64 output so sequences do not depend on the standard library's
/// distribution implementation.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return x % n;
  }

  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Over F_p the draw is uniform on the whole field; over Q numerator and
  /// denominator magnitudes stay within `bound`.
  Scalar scalar(const FieldSpec& field, long long bound = 5) {
    if (!field.is_arithmetic()) fail(ErrorCode::NonArithmeticField, "cannot sample over " + field.to_string());
    if (bound < 1) fail(ErrorCode::InvalidArgument, "sample bound must be >= 1");
    if (field.kind == FieldKind::PrimeField) {
      return Scalar(field, static_cast<long long>(below(field.p)));
    }
    long long num = between(-bound, bound);
    long long den = between(1, bound);
    return Scalar::rational(field, num, den);
  }

  Scalar nonzero(const FieldSpec& field, long long bound = 5) {
    for (;;) {
      Scalar s = scalar(field, bound);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline Scalar sample(const FieldSpec& field, std::uint64_t seed, long long bound) {
  Sampler sampler(seed);
  return sampler.scalar(field, bound);
}

/// Order of k*/(k*)^2.
inline Cardinal square_class_count(const FieldSpec& field) {
  switch (field.kind) {
    case FieldKind::AlgClosed: return Cardinal::finite(1);
    case FieldKind::PrimeField: return Cardinal::finite(2);
    case FieldKind::RealPlace: return Cardinal::finite(2);
    case FieldKind::PadicPlace: return Cardinal::finite(field.p == 2 ? 8 : 4);
    case FieldKind::Rationals: return Cardinal::infinite();
  }
  return Cardinal::infinite();
}

}  // namespace e6kit
