#pragma once

// The 27-dimensional Albert algebra in two models.
//
// Hermitian: coordinates (xi1, xi2, xi3, a[8], b[8], c[8]) for the matrix
//   [ xi1             c               g1^-1 g3 conj(b) ]
//   [ g2^-1 g1 conj(c) xi2            a                ]
//   [ b               g3^-1 g2 conj(a) xi3             ]
// Tits: coordinates (a0, a1, a2), each a row-major 3x3 matrix.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "e6kit/cda.hpp"
#include "e6kit/error.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/scalar.hpp"

namespace e6kit {

enum class AlbertModel { Hermitian, Tits };

inline constexpr std::size_t kAlbertDim = 27;

namespace mat3 {

// Row-major 3x3 matrices stored as Vec of length 9.

inline Vec zero(const FieldSpec& f) { return zero_vec(f, 9); }

inline Vec identity(const FieldSpec& f) {
  Vec m = zero(f);
  for (int i = 0; i < 3; ++i) m[4 * i] = Scalar::one(f);
  return m;
}

inline Vec diag(const Scalar& a, const Scalar& b, const Scalar& c) {
  Vec m = zero(a.field());
  m[0] = a;
  m[4] = b;
  m[8] = c;
  return m;
}

inline Vec mul(const Vec& x, const Vec& y) {
  Vec z = zero(x[0].field());
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (x[3 * i + k].is_zero()) continue;
      for (int j = 0; j < 3; ++j) z[3 * i + j] += x[3 * i + k] * y[3 * k + j];
    }
  return z;
}

inline Scalar trace(const Vec& x) { return x[0] + x[4] + x[8]; }

inline Scalar det(const Vec& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

/// Adjugate, the sharp map of the degree-3 algebra M_3(k).
inline Vec adj(const Vec& m) {
  return {m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
          m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
          m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3]};
}

inline Vec transpose(const Vec& m) { return {m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}; }

inline Vec inverse(const Vec& m) {
  Scalar d = det(m);
  if (d.is_zero()) fail(ErrorCode::SingularMatrix, "3x3 matrix is singular");
  return d.inverse() * adj(m);
}

inline Vec from_ints(const FieldSpec& f, const std::array<long long, 9>& v) {
  Vec m;
  for (auto x : v) m.emplace_back(f, x);
  return m;
}

}  // namespace mat3

class AlbertAlgebra {
 public:
  static std::shared_ptr<const AlbertAlgebra> hermitian(const CDAlgebra& octonions, std::array<Scalar, 3> gamma) {
    return std::shared_ptr<const AlbertAlgebra>(new AlbertAlgebra(octonions, gamma));
  }

  /// Her_3(C, id) over the split octonions.
  static std::shared_ptr<const AlbertAlgebra> split_hermitian(const FieldSpec& field) {
    auto one = Scalar::one(field);
    return hermitian(CDAlgebra::split_octonions(field), {one, one, one});
  }

  static std::shared_ptr<const AlbertAlgebra> tits(const FieldSpec& field, const Scalar& varsigma) {
    return std::shared_ptr<const AlbertAlgebra>(new AlbertAlgebra(field, varsigma));
  }

  AlbertModel model() const { return model_; }
  bool is_hermitian() const { return model_ == AlbertModel::Hermitian; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return kAlbertDim; }
  const CDAlgebra& octonions() const {
    require(AlbertModel::Hermitian, "octonion coordinates");
    return *octonions_;
  }
  const std::array<Scalar, 3>& gamma() const {
    require(AlbertModel::Hermitian, "gamma");
    return gamma_;
  }
  const Scalar& varsigma() const {
    require(AlbertModel::Tits, "varsigma");
    return varsigma_;
  }
  bool gamma_is_identity() const {
    return is_hermitian() && gamma_[0].is_one() && gamma_[1].is_one() && gamma_[2].is_one();
  }

  std::string describe() const {
    if (is_hermitian()) {
      return "Her3(" + octonions_->descriptor() + ", gamma=(" + gamma_[0].to_string() + "," + gamma_[1].to_string() +
             "," + gamma_[2].to_string() + "))";
    }
    return "J(M3(" + field_.to_string() + "), varsigma=" + varsigma_.to_string() + ")";
  }

  // --- elements -----------------------------------------------------------

  Vec zero() const { return zero_vec(field_, kAlbertDim); }
  const Vec& unit() const { return unit_; }
  Vec basis(std::size_t i) const { return unit_vec(field_, kAlbertDim, i); }

  Vec her(const Scalar& xi1, const Scalar& xi2, const Scalar& xi3, const Vec& a, const Vec& b, const Vec& c) const {
    require(AlbertModel::Hermitian, "h(xi; a, b, c)");
    octonions_->check(a);
    octonions_->check(b);
    octonions_->check(c);
    Vec x{xi1, xi2, xi3};
    x.insert(x.end(), a.begin(), a.end());
    x.insert(x.end(), b.begin(), b.end());
    x.insert(x.end(), c.begin(), c.end());
    return x;
  }

  Vec tits_elem(const Vec& a0, const Vec& a1, const Vec& a2) const {
    require(AlbertModel::Tits, "(a0, a1, a2)");
    if (a0.size() != 9 || a1.size() != 9 || a2.size() != 9) fail(ErrorCode::InvalidArgument, "Tits parts are 3x3");
    Vec x = a0;
    x.insert(x.end(), a1.begin(), a1.end());
    x.insert(x.end(), a2.begin(), a2.end());
    return x;
  }

  /// diag(x1,x2,x3) in the Hermitian model, (diag(x1,x2,x3), 0, 0) in the Tits model.
  Vec diag(const Scalar& x1, const Scalar& x2, const Scalar& x3) const {
    Vec x = zero();
    if (is_hermitian()) {
      x[0] = x1;
      x[1] = x2;
      x[2] = x3;
    } else {
      x[0] = x1;
      x[4] = x2;
      x[8] = x3;
    }
    return x;
  }

  Vec diag(long long x1, long long x2, long long x3) const {
    return diag(Scalar(field_, x1), Scalar(field_, x2), Scalar(field_, x3));
  }

  static Vec block(const Vec& x, std::size_t offset, std::size_t len) {
    return Vec(x.begin() + static_cast<std::ptrdiff_t>(offset), x.begin() + static_cast<std::ptrdiff_t>(offset + len));
  }

  // Hermitian accessors.
  static Vec oct_a(const Vec& x) { return block(x, 3, 8); }
  static Vec oct_b(const Vec& x) { return block(x, 11, 8); }
  static Vec oct_c(const Vec& x) { return block(x, 19, 8); }
  // Tits accessors.
  static Vec part(const Vec& x, std::size_t i) { return block(x, 9 * i, 9); }

  Vec sample(Sampler& sampler, long long bound = 5) const {
    Vec x;
    for (std::size_t i = 0; i < kAlbertDim; ++i) x.push_back(sampler.scalar(field_, bound));
    return x;
  }

  void check(const Vec& x) const {
    if (x.size() != kAlbertDim) fail(ErrorCode::AlgebraMismatch, "Albert elements have 27 coordinates");
    for (const auto& c : x) {
      if (!(c.field() == field_)) fail(ErrorCode::AlgebraMismatch, "Albert element over a different field");
    }
  }

  // --- structure ----------------------------------------------------------

  Vec jmul(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    return apply_table(jordan_, field_, kAlbertDim, x, y);
  }

  Vec square(const Vec& x) const { return jmul(x, x); }

  Scalar trace(const Vec& x) const {
    check(x);
    Scalar s = Scalar::zero(field_);
    for (std::size_t i = 0; i < kAlbertDim; ++i) {
      if (!trace_vec_[i].is_zero() && !x[i].is_zero()) s += trace_vec_[i] * x[i];
    }
    return s;
  }

  Scalar trform(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    Scalar s = Scalar::zero(field_);
    for (std::size_t i = 0; i < kAlbertDim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < kAlbertDim; ++j) {
        if (!y[j].is_zero() && !gram_(i, j).is_zero()) s += x[i] * gram_(i, j) * y[j];
      }
    }
    return s;
  }

  /// Gram matrix of Tr(x, y) in the coordinate basis.
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }

  Vec cross(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    return apply_table(cross_, field_, kAlbertDim, x, y);
  }

  Vec sharp(const Vec& x) const {
    if (!is_hermitian()) return tits_sharp(x);
    return half_ * cross(x, x);
  }

  Scalar sr(const Vec& x) const {
    Scalar t = trace(x);
    return half_ * (t * t - trform(x, x));
  }

  Scalar sr(const Vec& x, const Vec& y) const { return trace(x) * trace(y) - trform(x, y); }

  Scalar norm(const Vec& x) const {
    check(x);
    if (!is_hermitian()) return tits_norm(x);
    return third_ * trform(sharp(x), x);
  }

  Matrix lmul(const Vec& x) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < kAlbertDim; ++j) cols.push_back(jmul(x, basis(j)));
    return Matrix::from_columns(field_, kAlbertDim, cols);
  }

  /// U_x y = Tr(x, y) x - x^# # y.
  Vec uapply(const Vec& x, const Vec& y) const { return trform(x, y) * x - cross(sharp(x), y); }

  Matrix uop(const Vec& x) const {
    Vec xs = sharp(x);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < kAlbertDim; ++j) {
      Vec ej = basis(j);
      cols.push_back(trform(x, ej) * x - cross(xs, ej));
    }
    return Matrix::from_columns(field_, kAlbertDim, cols);
  }

  /// U_x = 2 L_x^2 - L_{x^2}.
  Matrix uop_via_lmul(const Vec& x) const {
    Matrix l = lmul(x);
    return Scalar(field_, 2) * (l * l) - lmul(square(x));
  }

  Vec jinverse(const Vec& x) const {
    Scalar n = norm(x);
    if (n.is_zero()) fail(ErrorCode::SingularElement, "N(x) = 0");
    return n.inverse() * sharp(x);
  }

  /// {x, z, y} = (x.z).y + (y.z).x - (x.y).z
  Vec triple(const Vec& x, const Vec& z, const Vec& y) const {
    return jmul(jmul(x, z), y) + jmul(jmul(y, z), x) - jmul(jmul(x, y), z);
  }

  Vec isotope_mul(const Vec& x, const Vec& u, const Vec& y) const {
    if (norm(u).is_zero()) fail(ErrorCode::SingularElement, "isotope by an element with N(u) = 0");
    return triple(x, u, y);
  }

  // --- distinguished maps ---------------------------------------------------

  /// phi_lambda: h(xi1, xi2, xi3; a, b, c) -> h(l xi1, l xi2, l^-1 xi3; a, b, l c), multiplier l.
  Matrix phi_lambda(const Scalar& lambda) const {
    require(AlbertModel::Hermitian, "phi_lambda");
    if (lambda.is_zero()) fail(ErrorCode::ZeroMultiplier, "phi_lambda needs lambda != 0");
    Vec d(kAlbertDim, Scalar::one(field_));
    d[0] = lambda;
    d[1] = lambda;
    d[2] = lambda.inverse();
    for (std::size_t i = 19; i < 27; ++i) d[i] = lambda;
    return diagonal_map(d);
  }

  /// nu_g scales (xi1, xi2, xi3, a, b, c) by (g^-4, g^2, g^2, g^2, g^-1, g^-1).
  Matrix nu_g(const Scalar& g) const {
    require(AlbertModel::Hermitian, "nu_g");
    if (!gamma_is_identity()) fail(ErrorCode::ModelMismatch, "nu_g is defined for gamma = id");
    if (g.is_zero()) fail(ErrorCode::ZeroMultiplier, "nu_g needs g != 0");
    Scalar g2 = g * g, gi = g.inverse();
    Vec d(kAlbertDim, g2);
    d[0] = gi.pow(4);
    for (std::size_t i = 11; i < 27; ++i) d[i] = gi;
    return diagonal_map(d);
  }

  Matrix diagonal_map(const Vec& d) const {
    Matrix m(field_, kAlbertDim, kAlbertDim);
    for (std::size_t i = 0; i < kAlbertDim; ++i) m(i, i) = d[i];
    return m;
  }

  /// Basis of u k + (e - u) k + E0 with u = diag(1,0,0) and E0 = ker L_u cap e^perp.
  std::vector<Vec> beth_basis() const {
    require(AlbertModel::Hermitian, "beth");
    Vec u = diag(1, 0, 0);
    std::vector<Vec> out{u, unit_ - u};
    // ker L_u stacked with the trace functional.
    Matrix lu = lmul(u);
    Matrix sys(field_, kAlbertDim + 1, kAlbertDim);
    for (std::size_t i = 0; i < kAlbertDim; ++i)
      for (std::size_t j = 0; j < kAlbertDim; ++j) sys(i, j) = lu(i, j);
    for (std::size_t j = 0; j < kAlbertDim; ++j) sys(kAlbertDim, j) = trace_vec_[j];
    for (auto& v : sys.kernel()) out.push_back(std::move(v));
    return out;
  }

  /// phi(u, v, w)(a0, a1, a2) = (u a0 v^-1, v a1 w^-1, w a2 u^-1) for det u = det v = det w = 1.
  Vec tits_phi(const Vec& u, const Vec& v, const Vec& w, const Vec& x) const {
    require(AlbertModel::Tits, "phi(u, v, w)");
    check_unimodular(u);
    check_unimodular(v);
    check_unimodular(w);
    return tits_elem(mat3::mul(mat3::mul(u, part(x, 0)), mat3::inverse(v)),
                     mat3::mul(mat3::mul(v, part(x, 1)), mat3::inverse(w)),
                     mat3::mul(mat3::mul(w, part(x, 2)), mat3::inverse(u)));
  }

  Matrix tits_phi_map(const Vec& u, const Vec& v, const Vec& w) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < kAlbertDim; ++j) cols.push_back(tits_phi(u, v, w, basis(j)));
    return Matrix::from_columns(field_, kAlbertDim, cols);
  }

  void check_unimodular(const Vec& m) const {
    if (m.size() != 9) fail(ErrorCode::InvalidArgument, "expected a 3x3 matrix");
    if (!mat3::det(m).is_one()) fail(ErrorCode::NotUnimodular, "det must be 1");
  }

  /// X -> T X T^t for a 3x3 scalar matrix T. With gamma = id and T orthogonal
  /// this is an automorphism.
  Matrix scalar_congruence(const Vec& T) const {
    require(AlbertModel::Hermitian, "scalar congruence");
    if (T.size() != 9) fail(ErrorCode::InvalidArgument, "expected a 3x3 matrix");
    return map_matrix([&](const Vec& x) {
      OctMatrix m = to_matrix(x), tm, out;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Vec s = octonions_->zero();
          for (int k = 0; k < 3; ++k) axpy(s, T[3 * i + k], m[3 * k + j]);
          tm[3 * i + j] = std::move(s);
        }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Vec s = octonions_->zero();
          for (int k = 0; k < 3; ++k) axpy(s, T[3 * j + k], tm[3 * i + k]);
          out[3 * i + j] = std::move(s);
        }
      return from_matrix(out);
    });
  }

  /// Matrix of a map given by its action on vectors.
  template <typename F>
  Matrix map_matrix(F&& f) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < kAlbertDim; ++j) cols.push_back(f(basis(j)));
    return Matrix::from_columns(field_, kAlbertDim, cols);
  }

 private:
  using OctMatrix = std::array<Vec, 9>;

  AlbertAlgebra(const CDAlgebra& octonions, std::array<Scalar, 3> gamma)
      : model_(AlbertModel::Hermitian),
        field_(octonions.field()),
        octonions_(std::make_shared<CDAlgebra>(octonions)),
        gamma_(std::move(gamma)),
        varsigma_(Scalar::one(octonions.field())) {
    if (octonions.dim() != 8) fail(ErrorCode::AlgebraMismatch, "Hermitian model needs an octonion algebra");
    for (const auto& g : gamma_) {
      if (!(g.field() == field_)) fail(ErrorCode::MixedFields, "gamma field");
      if (g.is_zero()) fail(ErrorCode::InvalidArgument, "gamma entries must be nonzero");
    }
    init_constants();
    unit_ = diag(1, 1, 1);
    jordan_ = tabulate(kAlbertDim, field_, [this](const Vec& x, const Vec& y) {
      OctMatrix X = to_matrix(x), Y = to_matrix(y);
      OctMatrix XY = mat_mul(X, Y), YX = mat_mul(Y, X);
      OctMatrix S;
      for (int i = 0; i < 9; ++i) S[i] = half_ * (XY[i] + YX[i]);
      return from_matrix(S);
    });
    finish_tables();
    // Cross product from the generic identity x#y = 2x.y - T(x)y - T(y)x + S(x,y)e.
    cross_ = tabulate(kAlbertDim, field_, [this](const Vec& x, const Vec& y) {
      Vec j = jmul(x, y);
      return Scalar(field_, 2) * j - trace(x) * y - trace(y) * x + sr(x, y) * unit_;
    });
  }

  AlbertAlgebra(const FieldSpec& field, const Scalar& varsigma)
      : model_(AlbertModel::Tits), field_(field), varsigma_(varsigma) {
    if (!field.is_arithmetic()) fail(ErrorCode::NonArithmeticField, "Albert algebra over " + field.to_string());
    if (varsigma.is_zero()) fail(ErrorCode::InvalidArgument, "varsigma must be nonzero");
    if (!(varsigma.field() == field)) fail(ErrorCode::MixedFields, "varsigma field");
    init_constants();
    unit_ = zero();
    unit_[0] = unit_[4] = unit_[8] = Scalar::one(field_);
    for (std::size_t i = 0; i < kAlbertDim; ++i) trace_vec_.push_back(i == 0 || i == 4 || i == 8 ? Scalar::one(field_) : Scalar::zero(field_));
    gram_ = Matrix(field_, kAlbertDim, kAlbertDim);
    for (std::size_t i = 0; i < kAlbertDim; ++i)
      for (std::size_t j = 0; j < kAlbertDim; ++j) gram_(i, j) = tits_trform(basis(i), basis(j));
    gram_inv_ = gram_.inverse();
    cross_ = tabulate(kAlbertDim, field_, [this](const Vec& x, const Vec& y) {
      return tits_sharp(x + y) - tits_sharp(x) - tits_sharp(y);
    });
    // x.y = 1/2 (x#y + T(x)y + T(y)x - S(x,y)1)
    jordan_ = tabulate(kAlbertDim, field_, [this](const Vec& x, const Vec& y) {
      return half_ * (cross(x, y) + trace(x) * y + trace(y) * x - sr(x, y) * unit_);
    });
  }

  void init_constants() {
    half_ = Scalar(field_, 2).inverse();
    third_ = Scalar(field_, 3).inverse();
  }

  void finish_tables() {
    trace_vec_.clear();
    for (std::size_t i = 0; i < kAlbertDim; ++i) trace_vec_.push_back(i < 3 ? Scalar::one(field_) : Scalar::zero(field_));
    gram_ = Matrix(field_, kAlbertDim, kAlbertDim);
    for (std::size_t i = 0; i < kAlbertDim; ++i)
      for (std::size_t j = 0; j < kAlbertDim; ++j) gram_(i, j) = trace(jmul(basis(i), basis(j)));
    gram_inv_ = gram_.inverse();
  }

  void require(AlbertModel m, const char* what) const {
    if (model_ != m) fail(ErrorCode::ModelMismatch, std::string(what) + " is not available in this model");
  }

  OctMatrix to_matrix(const Vec& x) const {
    const CDAlgebra& C = *octonions_;
    Vec a = oct_a(x), b = oct_b(x), c = oct_c(x);
    const auto& g = gamma_;
    OctMatrix m;
    m[0] = x[0] * C.unit();
    m[1] = c;
    m[2] = (g[0].inverse() * g[2]) * C.conj(b);
    m[3] = (g[1].inverse() * g[0]) * C.conj(c);
    m[4] = x[1] * C.unit();
    m[5] = a;
    m[6] = b;
    m[7] = (g[2].inverse() * g[1]) * C.conj(a);
    m[8] = x[2] * C.unit();
    return m;
  }

  Scalar scalar_part(const Vec& z) const {
    const CDAlgebra& C = *octonions_;
    Scalar s = half_ * C.trace(z);
    if (!(s * C.unit() == z)) fail(ErrorCode::Internal, "diagonal entry is not a scalar");
    return s;
  }

  Vec from_matrix(const OctMatrix& m) const {
    return her(scalar_part(m[0]), scalar_part(m[4]), scalar_part(m[8]), m[5], m[6], m[1]);
  }

  OctMatrix mat_mul(const OctMatrix& x, const OctMatrix& y) const {
    const CDAlgebra& C = *octonions_;
    OctMatrix z;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec s = C.zero();
        for (int k = 0; k < 3; ++k) {
          if (is_zero(x[3 * i + k]) || is_zero(y[3 * k + j])) continue;
          s = s + C.mul(x[3 * i + k], y[3 * k + j]);
        }
        z[3 * i + j] = std::move(s);
      }
    return z;
  }

  Scalar tits_trform(const Vec& x, const Vec& y) const {
    return mat3::trace(mat3::mul(part(x, 0), part(y, 0))) + mat3::trace(mat3::mul(part(x, 1), part(y, 2))) +
           mat3::trace(mat3::mul(part(x, 2), part(y, 1)));
  }

  Vec tits_sharp(const Vec& x) const {
    check(x);
    Vec a0 = part(x, 0), a1 = part(x, 1), a2 = part(x, 2);
    return tits_elem(mat3::adj(a0) - mat3::mul(a1, a2), varsigma_.inverse() * mat3::adj(a2) - mat3::mul(a0, a1),
                     varsigma_ * mat3::adj(a1) - mat3::mul(a2, a0));
  }

  Scalar tits_norm(const Vec& x) const {
    Vec a0 = part(x, 0), a1 = part(x, 1), a2 = part(x, 2);
    return mat3::det(a0) + varsigma_ * mat3::det(a1) + varsigma_.inverse() * mat3::det(a2) -
           mat3::trace(mat3::mul(mat3::mul(a0, a1), a2));
  }

  AlbertModel model_;
  FieldSpec field_;
  std::shared_ptr<const CDAlgebra> octonions_;
  std::array<Scalar, 3> gamma_;
  Scalar varsigma_;
  Scalar half_, third_;
  Vec unit_;
  Vec trace_vec_;
  ProductTable jordan_;
  ProductTable cross_;
  Matrix gram_;
  Matrix gram_inv_;
};

using AlbertPtr = std::shared_ptr<const AlbertAlgebra>;

}  // namespace e6kit
