#pragma once

// Composition algebras of dimension 1, 2, 4, 8 by Cayley-Dickson doubling.
//
// Basis order is recursive: (first copy, second copy). With the matrix base
// the dimension-4 algebra is M_2(k) with basis (E11, E12, E21, E22).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "e6kit/error.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/scalar.hpp"

namespace e6kit {

struct Term {
  std::uint32_t index;
  Scalar coeff;
};

/// Sparse bilinear product table: table[i][j] lists the terms of e_i * e_j.
using ProductTable = std::vector<std::vector<std::vector<Term>>>;

inline Vec apply_table(const ProductTable& table, const FieldSpec& field, std::size_t n, const Vec& x, const Vec& y) {
  if (x.size() != table.size() || y.size() != table.size()) fail(ErrorCode::AlgebraMismatch, "operand dimension");
  Vec out = zero_vec(field, n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = table[i][j];
      if (terms.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += t.coeff * xy;
    }
  }
  return out;
}

inline ProductTable tabulate(std::size_t n, const FieldSpec& field, const auto& product) {
  ProductTable table(n, std::vector<std::vector<Term>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(field, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = product(ei, unit_vec(field, n, j));
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) table[i][j].push_back({static_cast<std::uint32_t>(k), p[k]});
      }
    }
  }
  return table;
}

class CDAlgebra {
 public:
  /// `kappas` are the doubling parameters applied on top of the base
  /// (k itself, or M_2(k) when `matrix_base` is set).
  CDAlgebra(const FieldSpec& field, std::vector<Scalar> kappas, bool matrix_base = false)
      : field_(field), kappas_(std::move(kappas)), matrix_base_(matrix_base) {
    if (!field.is_arithmetic()) fail(ErrorCode::NonArithmeticField, "composition algebra over " + field.to_string());
    for (const auto& k : kappas_) {
      if (!(k.field() == field_)) fail(ErrorCode::MixedFields, "doubling parameter field");
      if (k.is_zero()) fail(ErrorCode::InvalidArgument, "doubling parameter must be nonzero");
    }
    dim_ = (matrix_base_ ? 4U : 1U) << kappas_.size();
    if (dim_ > 8) fail(ErrorCode::InvalidArgument, "dimension exceeds 8");
    table_ = tabulate(dim_, field_, [this](const Vec& x, const Vec& y) { return mul_rec(kappas_.size(), x, y); });
    conj_table_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) conj_table_[i] = conj_rec(kappas_.size(), unit_vec(field_, dim_, i));
    unit_ = zero_vec(field_, dim_);
    unit_[0] = Scalar::one(field_);
    if (matrix_base_) unit_[3] = Scalar::one(field_);
    gram_ = Matrix(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        gram_(i, j) = bilin_direct(unit_vec(field_, dim_, i), unit_vec(field_, dim_, j));
  }

  /// Split octonions: M_2(k) doubled once with kappa = 1.
  static CDAlgebra split_octonions(const FieldSpec& field) { return CDAlgebra(field, {Scalar::one(field)}, true); }

  static CDAlgebra split_quaternions(const FieldSpec& field) { return CDAlgebra(field, {}, true); }

  /// "cd:<field>:<list>" where list is comma separated kappas, optionally led by "m2".
  static CDAlgebra parse(std::string_view text) {
    if (text.substr(0, 3) != "cd:") fail(ErrorCode::ParseError, "algebra descriptor must start with 'cd:'");
    std::string_view rest = text.substr(3);
    auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) fail(ErrorCode::ParseError, "missing kappa list");
    FieldSpec field = FieldSpec::parse(rest.substr(0, colon));
    std::string_view list = rest.substr(colon + 1);
    bool matrix_base = false;
    std::vector<Scalar> kappas;
    std::size_t start = 0;
    while (start <= list.size() && !list.empty()) {
      auto comma = list.find(',', start);
      std::string_view item = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (item == "m2" && start == 0) {
        matrix_base = true;
      } else {
        kappas.push_back(Scalar::parse(field, item));
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return CDAlgebra(field, std::move(kappas), matrix_base);
  }

  std::string descriptor() const {
    std::string out = "cd:" + field_.to_string() + ":";
    bool first = true;
    if (matrix_base_) {
      out += "m2";
      first = false;
    }
    for (const auto& k : kappas_) {
      if (!first) out += ",";
      out += k.to_string();
      first = false;
    }
    return out;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Scalar>& kappas() const { return kappas_; }
  bool matrix_base() const { return matrix_base_; }
  const ProductTable& table() const { return table_; }

  const Vec& unit() const { return unit_; }
  Vec zero() const { return zero_vec(field_, dim_); }
  Vec basis(std::size_t i) const { return unit_vec(field_, dim_, i); }

  Vec element(const std::vector<long long>& coords) const {
    if (coords.size() != dim_) fail(ErrorCode::AlgebraMismatch, "coordinate count");
    Vec v;
    for (auto c : coords) v.emplace_back(field_, c);
    return v;
  }

  Vec sample(Sampler& sampler, long long bound = 5) const {
    Vec v;
    for (std::size_t i = 0; i < dim_; ++i) v.push_back(sampler.scalar(field_, bound));
    return v;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    return apply_table(table_, field_, dim_, x, y);
  }

  Vec conj(const Vec& x) const {
    check(x);
    Vec out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x[i].is_zero()) axpy(out, x[i], conj_table_[i]);
    }
    return out;
  }

  Scalar bilin(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    Scalar s = Scalar::zero(field_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!y[j].is_zero() && !gram_(i, j).is_zero()) s += x[i] * gram_(i, j) * y[j];
      }
    }
    return s;
  }

  Scalar qnorm(const Vec& x) const {
    check(x);
    return norm_rec(kappas_.size(), x);
  }

  /// t(x) = <x, e>, so that x + conj(x) = t(x) e.
  Scalar trace(const Vec& x) const { return bilin(x, unit_); }

  const Matrix& gram() const { return gram_; }

  void check(const Vec& x) const {
    if (x.size() != dim_) fail(ErrorCode::AlgebraMismatch, "expected dimension " + std::to_string(dim_));
    for (const auto& c : x) {
      if (!(c.field() == field_)) fail(ErrorCode::AlgebraMismatch, "element over a different field");
    }
  }

 private:
  static Vec half(const Vec& x, bool second) {
    std::size_t h = x.size() / 2;
    return second ? Vec(x.begin() + static_cast<std::ptrdiff_t>(h), x.end())
                  : Vec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h));
  }

  static Vec join(const Vec& a, const Vec& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  Vec mul_rec(std::size_t level, const Vec& x, const Vec& y) const {
    if (level == 0) {
      if (!matrix_base_) return {x[0] * y[0]};
      // [[x0,x1],[x2,x3]] * [[y0,y1],[y2,y3]]
      return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
              x[2] * y[1] + x[3] * y[3]};
    }
    const Scalar& kappa = kappas_[level - 1];
    Vec a1 = half(x, false), a2 = half(x, true), b1 = half(y, false), b2 = half(y, true);
    Vec first = mul_rec(level - 1, a1, b1) + kappa * mul_rec(level - 1, conj_rec(level - 1, b2), a2);
    Vec second = mul_rec(level - 1, b2, a1) + mul_rec(level - 1, a2, conj_rec(level - 1, b1));
    return join(first, second);
  }

  Vec conj_rec(std::size_t level, const Vec& x) const {
    if (level == 0) {
      if (!matrix_base_) return x;
      return {x[3], -x[1], -x[2], x[0]};
    }
    return join(conj_rec(level - 1, half(x, false)), -half(x, true));
  }

  Scalar norm_rec(std::size_t level, const Vec& x) const {
    if (level == 0) {
      if (!matrix_base_) return x[0] * x[0];
      return x[0] * x[3] - x[1] * x[2];
    }
    return norm_rec(level - 1, half(x, false)) - kappas_[level - 1] * norm_rec(level - 1, half(x, true));
  }

  Scalar bilin_direct(const Vec& x, const Vec& y) const {
    std::size_t top = kappas_.size();
    return norm_rec(top, x + y) - norm_rec(top, x) - norm_rec(top, y);
  }

  FieldSpec field_;
  std::vector<Scalar> kappas_;
  bool matrix_base_ = false;
  std::size_t dim_ = 1;
  ProductTable table_;
  std::vector<Vec> conj_table_;
  Vec unit_;
  Matrix gram_;
};

}  // namespace e6kit
