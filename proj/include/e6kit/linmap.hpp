#pragma once

// Linear maps tagged with their carrier space, and the norm/product
// membership tests and dagger on the Albert algebra.

#include <string>
#include <utility>

#include "e6kit/albert.hpp"
#include "e6kit/error.hpp"
#include "e6kit/linalg.hpp"

namespace e6kit {

enum class Carrier { Octonion = 8, Albert = 27, Brown = 56 };

inline std::string to_string(Carrier c) {
  switch (c) {
    case Carrier::Octonion: return "C";
    case Carrier::Albert: return "J";
    case Carrier::Brown: return "B";
  }
  return "?";
}

struct LinMap {
  Matrix m;
  Carrier carrier = Carrier::Albert;
  std::string basis_tag = "default";

  LinMap() = default;
  LinMap(Matrix matrix, Carrier c, std::string tag = "default") : m(std::move(matrix)), carrier(c), basis_tag(std::move(tag)) {
    if (!m.is_square() || m.rows() != dim()) {
      fail(ErrorCode::CarrierMismatch, "matrix does not match carrier " + to_string(c));
    }
  }

  static LinMap identity(const FieldSpec& field, Carrier c) { return {Matrix::identity(field, static_cast<std::size_t>(c)), c}; }

  std::size_t dim() const { return static_cast<std::size_t>(carrier); }
  const FieldSpec& field() const { return m.field(); }

  Vec operator()(const Vec& x) const { return m.apply(x); }

  friend LinMap operator*(const LinMap& a, const LinMap& b) {
    a.require(b.carrier);
    return {a.m * b.m, a.carrier, a.basis_tag};
  }

  friend bool operator==(const LinMap& a, const LinMap& b) { return a.carrier == b.carrier && a.m == b.m; }

  LinMap inverse() const { return {m.inverse(), carrier, basis_tag}; }
  bool is_identity() const { return m.is_identity(); }
  bool is_order_two() const { return !is_identity() && (m * m).is_identity(); }
  /// phi^2 = id, allowing phi = id.
  bool squares_to_identity() const { return (m * m).is_identity(); }

  void require(Carrier c) const {
    if (carrier != c) fail(ErrorCode::CarrierMismatch, "expected a map on " + to_string(c) + ", got " + to_string(carrier));
  }

  /// Basis of the +1 eigenspace.
  std::vector<Vec> fixed_basis() const { return (m - Matrix::identity(field(), dim())).kernel(); }
  std::vector<Vec> anti_basis() const { return (m + Matrix::identity(field(), dim())).kernel(); }
};

inline LinMap albert_map(const Matrix& m) { return {m, Carrier::Albert}; }

/// phi(e) = e and phi(e_i . e_j) = phi(e_i) . phi(e_j) on all basis pairs.
inline bool is_aut_member(const AlbertAlgebra& J, const LinMap& phi) {
  phi.require(Carrier::Albert);
  if (!(phi(J.unit()) == J.unit())) return false;
  std::vector<Vec> images = phi.m.columns();
  for (std::size_t i = 0; i < kAlbertDim; ++i) {
    for (std::size_t j = i; j < kAlbertDim; ++j) {
      if (!(phi(J.jmul(J.basis(i), J.basis(j))) == J.jmul(images[i], images[j]))) return false;
    }
  }
  return true;
}

/// Randomized necessary condition N(phi x) = N(x) on `samples` points.
inline bool norm_preserved_on_samples(const AlbertAlgebra& J, const LinMap& phi, std::size_t samples, std::uint64_t seed) {
  phi.require(Carrier::Albert);
  Sampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = J.sample(sampler);
    if (!(J.norm(phi(x)) == J.norm(x))) return false;
  }
  return true;
}

/// Exact test for phi in Inv(J). N is recovered from the symmetric trilinear
/// form Tr(x # y, z) since 2 and 3 are invertible, so comparing that form on
/// basis triples decides N(phi x) = N(x) as a polynomial identity. `samples`
/// random points are tried first as a cheap rejection.
inline bool is_inv_member(const AlbertAlgebra& J, const LinMap& phi, std::size_t samples = 8, std::uint64_t seed = 0) {
  phi.require(Carrier::Albert);
  if (!norm_preserved_on_samples(J, phi, samples, seed)) return false;
  if (phi.m.rank() != kAlbertDim) return false;
  std::vector<Vec> images = phi.m.columns();
  // Tr(phi e_i # phi e_j, phi e_k) = (phi^T G (phi e_i # phi e_j))_k
  Matrix pg = phi.m.transpose() * J.gram();
  for (std::size_t i = 0; i < kAlbertDim; ++i) {
    for (std::size_t j = i; j < kAlbertDim; ++j) {
      Vec lhs = pg.apply(J.cross(images[i], images[j]));
      Vec rhs = J.gram().apply(J.cross(J.basis(i), J.basis(j)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

/// phi^dagger = G^-1 phi^-T G, the map with Tr(phi x, phi^dagger y) = Tr(x, y).
/// With `verify` set, phi is first checked against the norm on a few samples.
inline LinMap dagger(const AlbertAlgebra& J, const LinMap& phi, bool verify = true) {
  phi.require(Carrier::Albert);
  if (verify && !norm_preserved_on_samples(J, phi, 6, 0x5eed)) {
    fail(ErrorCode::NotNormPreserving, "dagger is defined on Inv(J)");
  }
  Matrix inv_t = phi.m.inverse().transpose();
  return {J.gram_inverse() * inv_t * J.gram(), Carrier::Albert, phi.basis_tag};
}

}  // namespace e6kit
