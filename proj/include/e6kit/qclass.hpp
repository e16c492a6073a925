#pragma once

// Quaternion algebras (a, b) over Q and its completions via Hilbert symbols,
// and the per-field class reports for k-involutions at the G2, F4 and E6 levels.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "e6kit/error.hpp"
#include "e6kit/scalar.hpp"

namespace e6kit {

struct QuatPresentation {
  mpq_class a;
  mpq_class b;

  QuatPresentation(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {
    a.canonicalize();
    b.canonicalize();
    if (sgn(a) == 0 || sgn(b) == 0) fail(ErrorCode::ZeroArgument, "quaternion parameters must be nonzero");
  }
  QuatPresentation(long a_, long b_) : QuatPresentation(mpq_class(a_), mpq_class(b_)) {}
};

namespace detail {

/// Integer in the same square class as q (num * den).
inline mpz_class square_class_integer(const mpq_class& q) { return q.get_num() * q.get_den(); }

/// p-adic valuation and unit part.
inline std::pair<unsigned long, mpz_class> split_valuation(mpz_class n, unsigned long p) {
  unsigned long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  return {v, n};
}

/// Legendre symbol (u / p) for odd p not dividing u.
inline int legendre(const mpz_class& u, unsigned long p) {
  mpz_class pp(p);
  return mpz_legendre(u.get_mpz_t(), pp.get_mpz_t());
}

inline unsigned long mod_ui(const mpz_class& n, unsigned long m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), m);
  return r.get_ui();
}

/// Prime divisors of |n| by trial division.
inline std::vector<unsigned long> prime_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) fail(ErrorCode::ZeroArgument, "no prime divisors of 0");
  std::vector<unsigned long> out;
  for (unsigned long p = 2; n > 1; ++p) {
    if (mpz_class(p) * p > n) {
      if (!n.fits_ulong_p()) fail(ErrorCode::InvalidArgument, "argument too large to factor");
      out.push_back(n.get_ui());
      break;
    }
    if (p > 10'000'000UL) fail(ErrorCode::InvalidArgument, "argument too large to factor");
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  return out;
}

}  // namespace detail

/// (a, b)_v for v the real place or a p-adic place.
inline int hilbert_symbol(const mpq_class& a, const mpq_class& b, const FieldSpec& place) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(ErrorCode::ZeroArgument, "Hilbert symbol of 0");
  if (place.kind == FieldKind::RealPlace) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (place.kind != FieldKind::PadicPlace) fail(ErrorCode::InvalidArgument, "Hilbert symbols are local: use R or Qp");
  const unsigned long p = place.p;
  auto [alpha, u] = detail::split_valuation(detail::square_class_integer(a), p);
  auto [beta, v] = detail::split_valuation(detail::square_class_integer(b), p);
  if (p != 2) {
    int sign = ((alpha * beta) % 2 == 1 && (p - 1) / 2 % 2 == 1) ? -1 : 1;
    if (beta % 2 == 1) sign *= detail::legendre(u, p);
    if (alpha % 2 == 1) sign *= detail::legendre(v, p);
    return sign;
  }
  // p = 2: (-1)^(e(u)e(v) + alpha w(v) + beta w(u)), e(x) = (x-1)/2, w(x) = (x^2-1)/8 mod 2.
  unsigned long u8 = detail::mod_ui(u, 8), v8 = detail::mod_ui(v, 8);
  auto eps = [](unsigned long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](unsigned long x) { return ((x * x - 1) / 8) % 2; };
  unsigned long e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
  return e % 2 == 0 ? 1 : -1;
}

inline int hilbert_symbol(long a, long b, const FieldSpec& place) { return hilbert_symbol(mpq_class(a), mpq_class(b), place); }

/// The finite places where (a, b) can ramify: 2 and the primes dividing a, b.
inline std::vector<unsigned long> relevant_primes(const mpq_class& a, const mpq_class& b) {
  std::set<unsigned long> ps{2};
  for (const mpz_class& n : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
    if (abs(n) > 1) {
      for (auto p : detail::prime_divisors(n)) ps.insert(p);
    }
  }
  return {ps.begin(), ps.end()};
}

inline bool is_split(const QuatPresentation& q, const FieldSpec& field) {
  switch (field.kind) {
    case FieldKind::PrimeField:
    case FieldKind::AlgClosed: return true;
    case FieldKind::RealPlace:
    case FieldKind::PadicPlace: return hilbert_symbol(q.a, q.b, field) == 1;
    case FieldKind::Rationals: {
      if (hilbert_symbol(q.a, q.b, FieldSpec::real_place()) != 1) return false;
      for (auto p : relevant_primes(q.a, q.b)) {
        if (hilbert_symbol(q.a, q.b, FieldSpec::padic_place(p)) != 1) return false;
      }
      return true;
    }
  }
  return false;
}

inline Cardinal quaternion_class_count(const FieldSpec& field) {
  switch (field.kind) {
    case FieldKind::AlgClosed:
    case FieldKind::PrimeField: return Cardinal::finite(1);
    case FieldKind::RealPlace:
    case FieldKind::PadicPlace: return Cardinal::finite(2);
    case FieldKind::Rationals: return Cardinal::infinite();
  }
  return Cardinal::infinite();
}

/// Smallest positive quadratic nonresidue mod an odd prime p.
inline unsigned long smallest_nonresidue(unsigned long p) {
  if (p < 3 || !detail::is_prime(p)) fail(ErrorCode::InvalidArgument, "need an odd prime");
  for (unsigned long z = 2; z < p; ++z) {
    if (detail::powmod(z, (p - 1) / 2, p) == p - 1) return z;
  }
  fail(ErrorCode::Internal, "no nonresidue found");
}

/// Primes p = 3 mod 4 up to `limit`; (-1, p) is a division algebra over Q for each.
inline std::vector<unsigned long> division_family_primes(unsigned long limit) {
  std::vector<unsigned long> out;
  for (unsigned long p = 3; p <= limit; p += 4) {
    if (detail::is_prime(p) && !is_split(QuatPresentation(mpq_class(-1), mpq_class(p)), FieldSpec::rationals())) out.push_back(p);
  }
  return out;
}

enum class GroupLevel { G2, F4, E6 };

inline GroupLevel parse_level(const std::string& s) {
  if (s == "G2" || s == "g2") return GroupLevel::G2;
  if (s == "F4" || s == "f4") return GroupLevel::F4;
  if (s == "E6" || s == "e6") return GroupLevel::E6;
  fail(ErrorCode::InvalidArgument, "level must be G2, F4 or E6");
}

inline std::string to_string(GroupLevel l) {
  switch (l) {
    case GroupLevel::G2: return "G2";
    case GroupLevel::F4: return "F4";
    case GroupLevel::E6: return "E6";
  }
  return "?";
}

struct ClassReport {
  FieldSpec field;
  GroupLevel level = GroupLevel::E6;
  std::vector<std::pair<std::string, Cardinal>> classes;
  Cardinal total;
  std::vector<std::string> representatives;
  /// Over Q: presentations (a, b) of division algebras indexing infinitely many classes.
  std::vector<std::string> family;

  Cardinal count(const std::string& kind) const {
    for (const auto& [k, c] : classes) {
      if (k == kind) return c;
    }
    fail(ErrorCode::InvalidArgument, "no class kind '" + kind + "'");
  }
};

namespace detail {

inline Cardinal sum(const std::vector<std::pair<std::string, Cardinal>>& classes) {
  std::uint64_t t = 0;
  for (const auto& [k, c] : classes) {
    if (c.is_infinite()) return Cardinal::infinite();
    t += *c.value;
  }
  return Cardinal::finite(t);
}

inline std::vector<std::string> q_family(std::size_t how_many) {
  std::vector<std::string> out;
  for (auto p : division_family_primes(200)) {
    if (out.size() == how_many) break;
    out.push_back("(-1," + std::to_string(p) + ")");
  }
  return out;
}

/// Torus parameters (split, division) for the E6/F4 representatives, trailing pair.
struct TorusChoice {
  std::string split;
  std::string division;  // empty when only one class
};

inline TorusChoice tail_choice(const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::AlgClosed:
    case FieldKind::PrimeField: return {"1,1", ""};
    case FieldKind::RealPlace: return {"-1,1", "1,1"};
    case FieldKind::PadicPlace: {
      if (f.p == 2) return {"-1,1", "1,1"};
      return {"-1,1", "-" + std::to_string(f.p) + ",-" + std::to_string(smallest_nonresidue(f.p))};
    }
    case FieldKind::Rationals: return {"-1,1", ""};
  }
  return {"1,1", ""};
}

}  // namespace detail

/// sigma : theta : dagger : theta dagger = 1 : c : 1 : c.
inline ClassReport e6_class_report(const FieldSpec& field) {
  ClassReport r;
  r.field = field;
  r.level = GroupLevel::E6;
  Cardinal c = quaternion_class_count(field);
  r.classes = {{"sigma", Cardinal::finite(1)}, {"theta", c}, {"dagger", Cardinal::finite(1)}, {"theta_dagger", c}};
  r.total = detail::sum(r.classes);
  r.representatives = {"s", "varpi"};
  auto choice = detail::tail_choice(field);
  std::vector<std::string> ts{"t:1,1,1,1," + choice.split};
  if (!choice.division.empty()) ts.push_back("t:1,1,1,1," + choice.division);
  for (const auto& t : ts) r.representatives.push_back(t);
  for (const auto& t : ts) r.representatives.push_back(t + ".varpi");
  if (field.kind == FieldKind::Rationals) r.family = detail::q_family(5);
  return r;
}

/// Type (I) classes follow the quaternion subalgebra (and gamma over R); type (II) is unique.
inline ClassReport f4_class_report(const FieldSpec& field) {
  ClassReport r;
  r.field = field;
  r.level = GroupLevel::F4;
  Cardinal type1;
  switch (field.kind) {
    case FieldKind::AlgClosed:
    case FieldKind::PrimeField: type1 = Cardinal::finite(1); break;
    case FieldKind::RealPlace: type1 = Cardinal::finite(3); break;
    case FieldKind::PadicPlace: type1 = Cardinal::finite(2); break;
    case FieldKind::Rationals: type1 = Cardinal::infinite(); break;
  }
  r.classes = {{"type_I", type1}, {"type_II", Cardinal::finite(1)}};
  r.total = detail::sum(r.classes);
  r.representatives = {"s"};
  auto choice = detail::tail_choice(field);
  if (field.kind == FieldKind::PrimeField || field.kind == FieldKind::AlgClosed) {
    r.representatives.push_back("t:1,1,1,1");
  } else {
    r.representatives.push_back("t:1,1," + choice.split);
    if (field.kind == FieldKind::RealPlace) {
      r.representatives.push_back("t:1,1,1,1");
      r.representatives.push_back("t:-1,1,1,1");
    } else if (!choice.division.empty()) {
      r.representatives.push_back("t:1,1," + choice.division);
    }
  }
  if (field.kind == FieldKind::Rationals) r.family = detail::q_family(5);
  return r;
}

/// theta-classes of Aut(C), one per quaternion class; parameters are (eta, nu).
inline ClassReport g2_class_report(const FieldSpec& field) {
  ClassReport r;
  r.field = field;
  r.level = GroupLevel::G2;
  Cardinal c = quaternion_class_count(field);
  r.classes = {{"theta", c}};
  r.total = c;
  r.representatives = {"t:1,1"};
  if (field.kind == FieldKind::RealPlace || (field.kind == FieldKind::PadicPlace && field.p == 2)) {
    r.representatives.push_back("t:1,-1");
  } else if (field.kind == FieldKind::PadicPlace) {
    auto z = smallest_nonresidue(field.p);
    r.representatives.push_back("t:-" + std::to_string(z) + ",-" + std::to_string(field.p) + "/" + std::to_string(z));
  } else if (field.kind == FieldKind::Rationals) {
    for (auto p : division_family_primes(200)) {
      if (r.representatives.size() == 6) break;
      r.representatives.push_back("t:" + std::to_string(p) + ",1");
    }
    r.family = detail::q_family(5);
  }
  return r;
}

inline ClassReport class_report(const FieldSpec& field, GroupLevel level) {
  switch (level) {
    case GroupLevel::G2: return g2_class_report(field);
    case GroupLevel::F4: return f4_class_report(field);
    case GroupLevel::E6: return e6_class_report(field);
  }
  return e6_class_report(field);
}

}  // namespace e6kit
