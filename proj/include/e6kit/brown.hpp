#pragma once

// The 56-dimensional Brown algebra B(J x J, k x k, zeta).
// Coordinates: (alpha, beta, j[27], l[27]).

#include <memory>
#include <vector>

#include "e6kit/albert.hpp"
#include "e6kit/error.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/linmap.hpp"

namespace e6kit {

inline constexpr std::size_t kBrownDim = 56;

enum class BrownType { Type1, Type2 };

class BrownAlgebra {
 public:
  explicit BrownAlgebra(AlbertPtr J) : BrownAlgebra(J, Scalar::one(J->field())) {}

  BrownAlgebra(AlbertPtr J, const Scalar& zeta) : J_(std::move(J)), zeta_(zeta) {
    if (zeta_.is_zero()) fail(ErrorCode::InvalidArgument, "zeta must be nonzero");
    if (!(zeta_.field() == J_->field())) fail(ErrorCode::MixedFields, "zeta field");
  }

  const AlbertAlgebra& albert() const { return *J_; }
  const AlbertPtr& albert_ptr() const { return J_; }
  const Scalar& zeta() const { return zeta_; }
  const FieldSpec& field() const { return J_->field(); }
  std::size_t dim() const { return kBrownDim; }

  Vec elem(const Scalar& alpha, const Scalar& beta, const Vec& j, const Vec& l) const {
    J_->check(j);
    J_->check(l);
    Vec x{alpha, beta};
    x.insert(x.end(), j.begin(), j.end());
    x.insert(x.end(), l.begin(), l.end());
    return x;
  }

  static const Scalar& alpha(const Vec& x) { return x[0]; }
  static const Scalar& beta(const Vec& x) { return x[1]; }
  static Vec jpart(const Vec& x) { return AlbertAlgebra::block(x, 2, kAlbertDim); }
  static Vec lpart(const Vec& x) { return AlbertAlgebra::block(x, 2 + kAlbertDim, kAlbertDim); }

  Vec zero() const { return zero_vec(field(), kBrownDim); }
  Vec unit() const { return elem(Scalar::one(field()), Scalar::one(field()), J_->zero(), J_->zero()); }
  Vec s0() const { return elem(Scalar::one(field()), -Scalar::one(field()), J_->zero(), J_->zero()); }
  Vec basis(std::size_t i) const { return unit_vec(field(), kBrownDim, i); }

  Vec sample(Sampler& sampler, long long bound = 5) const {
    Vec x;
    for (std::size_t i = 0; i < kBrownDim; ++i) x.push_back(sampler.scalar(field(), bound));
    return x;
  }

  void check(const Vec& x) const {
    if (x.size() != kBrownDim) fail(ErrorCode::AlgebraMismatch, "Brown elements have 56 coordinates");
    for (const auto& c : x) {
      if (!(c.field() == field())) fail(ErrorCode::AlgebraMismatch, "Brown element over a different field");
    }
  }

  Vec mul(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    const Scalar &a1 = alpha(x), &b1 = beta(x), &a2 = alpha(y), &b2 = beta(y);
    Vec j1 = jpart(x), l1 = lpart(x), j2 = jpart(y), l2 = lpart(y);
    return elem(a1 * a2 + zeta_ * J_->trform(j1, l2), b1 * b2 + zeta_ * J_->trform(j2, l1),
                a1 * j2 + b2 * j1 + zeta_ * J_->cross(l1, l2), b1 * l2 + a2 * l1 + J_->cross(j1, j2));
  }

  Vec binv(const Vec& x) const {
    check(x);
    Vec y = x;
    std::swap(y[0], y[1]);
    return y;
  }

  LinMap binv_map() const {
    Matrix m = Matrix::identity(field(), kBrownDim);
    m(0, 0) = m(1, 1) = Scalar::zero(field());
    m(0, 1) = m(1, 0) = Scalar::one(field());
    return {m, Carrier::Brown};
  }

  /// Basis of {x : binv(x) = -x}.
  std::vector<Vec> skew_basis() const {
    return (binv_map().m + Matrix::identity(field(), kBrownDim)).kernel();
  }

  /// Type 1 when s0^2 is a nonzero square. s0^2 = 1 for this construction.
  BrownType type() const {
    auto skew = skew_basis();
    if (skew.size() != 1) fail(ErrorCode::Internal, "skew space is not one dimensional");
    Vec sq = mul(skew[0], skew[0]);
    Vec u = unit();
    // sq must be a multiple of the unit.
    Scalar c = sq[0];
    if (!(c * u == sq) || c.is_zero()) fail(ErrorCode::Internal, "s0^2 is not an invertible scalar");
    return c.is_square() ? BrownType::Type1 : BrownType::Type2;
  }

  /// (alpha, beta, j, l) -> (alpha, beta, pj(j), pl(l)).
  LinMap lift_blocks(const LinMap& pj, const LinMap& pl) const {
    pj.require(Carrier::Albert);
    pl.require(Carrier::Albert);
    Matrix m(field(), kBrownDim, kBrownDim);
    m(0, 0) = m(1, 1) = Scalar::one(field());
    for (std::size_t i = 0; i < kAlbertDim; ++i)
      for (std::size_t k = 0; k < kAlbertDim; ++k) {
        m(2 + i, 2 + k) = pj.m(i, k);
        m(2 + kAlbertDim + i, 2 + kAlbertDim + k) = pl.m(i, k);
      }
    return {m, Carrier::Brown};
  }

  LinMap lift_aut(const LinMap& phi) const {
    if (!is_aut_member(*J_, phi)) fail(ErrorCode::NotAutomorphism, "lift_aut needs phi in Aut(J)");
    return lift_blocks(phi, phi);
  }

  LinMap lift_inv(const LinMap& phi) const {
    if (!norm_preserved_on_samples(*J_, phi, 8, 0x11f7)) fail(ErrorCode::NotNormPreserving, "lift_inv needs phi in Inv(J)");
    return lift_blocks(phi, dagger(*J_, phi, false));
  }

  /// (alpha, beta, j, l) -> (beta, alpha, l, j)
  LinMap varpi() const {
    Matrix m(field(), kBrownDim, kBrownDim);
    m(0, 1) = m(1, 0) = Scalar::one(field());
    for (std::size_t i = 0; i < kAlbertDim; ++i) {
      m(2 + i, 2 + kAlbertDim + i) = Scalar::one(field());
      m(2 + kAlbertDim + i, 2 + i) = Scalar::one(field());
    }
    return {m, Carrier::Brown};
  }

  /// phi(x y) = phi(x) phi(y) on all basis pairs and phi commutes with binv.
  bool is_automorphism(const LinMap& phi) const {
    phi.require(Carrier::Brown);
    if (!(phi.m * binv_map().m == binv_map().m * phi.m)) return false;
    std::vector<Vec> images = phi.m.columns();
    for (std::size_t i = 0; i < kBrownDim; ++i)
      for (std::size_t j = 0; j < kBrownDim; ++j) {
        if (!(phi(mul(basis(i), basis(j))) == mul(images[i], images[j]))) return false;
      }
    return true;
  }

  /// Same check on sampled pairs, cheaper for large suites.
  bool preserves_product_on_samples(const LinMap& phi, std::size_t samples, std::uint64_t seed) const {
    phi.require(Carrier::Brown);
    Sampler sampler(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      Vec x = sample(sampler), y = sample(sampler);
      if (!(phi(mul(x, y)) == mul(phi(x), phi(y)))) return false;
      if (!(phi(binv(x)) == binv(phi(x)))) return false;
    }
    return true;
  }

  /// Basis of {(a, a, phi1 j, phi2 j)} for commuting order-2 automorphisms phi1, phi2.
  std::vector<Vec> commuting_pair_subalgebra(const LinMap& phi1, const LinMap& phi2) const {
    if (!phi1.squares_to_identity() || !phi2.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "phi1^2 = phi2^2 = id required");
    if (!(phi1 * phi2 == phi2 * phi1)) fail(ErrorCode::NotCommuting, "phi1 and phi2 must commute");
    if (!is_aut_member(*J_, phi1) || !is_aut_member(*J_, phi2)) fail(ErrorCode::NotAutomorphism, "phi1, phi2 must lie in Aut(J)");
    std::vector<Vec> out{unit()};
    for (std::size_t i = 0; i < kAlbertDim; ++i) {
      Vec e = J_->basis(i);
      out.push_back(elem(Scalar::zero(field()), Scalar::zero(field()), phi1(e), phi2(e)));
    }
    return out;
  }

  /// Closure of span(basis) under the product and binv.
  bool is_subalgebra(const std::vector<Vec>& basis_vectors) const {
    SpanChecker span(field(), kBrownDim, basis_vectors);
    for (std::size_t i = 0; i < basis_vectors.size(); ++i) {
      if (!span.contains(binv(basis_vectors[i]))) return false;
      for (std::size_t j = 0; j < basis_vectors.size(); ++j) {
        if (!span.contains(mul(basis_vectors[i], basis_vectors[j]))) return false;
      }
    }
    return true;
  }

 private:
  AlbertPtr J_;
  Scalar zeta_;
};

}  // namespace e6kit
