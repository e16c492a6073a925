#pragma once

// Order-2 automorphisms of C, J and B: the catalog (t, t*, torus elements, s,
// varpi and composites), fixed subalgebras, gradings, conjugacy transport,
// the U_V bridge and the outer-fixed / isotope criteria.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "e6kit/albert.hpp"
#include "e6kit/brown.hpp"
#include "e6kit/cda.hpp"
#include "e6kit/error.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/linmap.hpp"

namespace e6kit {

// --- octonion level -----------------------------------------------------------

inline bool is_octonion_automorphism(const CDAlgebra& C, const LinMap& t) {
  t.require(Carrier::Octonion);
  if (C.dim() != 8) fail(ErrorCode::AlgebraMismatch, "expected an octonion algebra");
  if (!(t(C.unit()) == C.unit())) return false;
  std::vector<Vec> images = t.m.columns();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (!(t(C.mul(C.basis(i), C.basis(j))) == C.mul(images[i], images[j]))) return false;
    }
  return true;
}

/// The quaternion algebra D inside C = D + D l (the first doubling component).
inline CDAlgebra quaternion_base(const CDAlgebra& C) {
  if (C.dim() != 8) fail(ErrorCode::AlgebraMismatch, "expected an octonion algebra");
  std::vector<Scalar> kappas(C.kappas().begin(), C.kappas().end() - 1);
  return CDAlgebra(C.field(), kappas, C.matrix_base());
}

/// f_p(a1, a2) = (a1, p a2) for p in D with q(p) = 1.
inline LinMap make_t(const CDAlgebra& C, const Vec& p) {
  CDAlgebra D = quaternion_base(C);
  D.check(p);
  if (!D.qnorm(p).is_one()) fail(ErrorCode::NotUnitNorm, "f_p needs q(p) = 1");
  Matrix m(C.field(), 8, 8);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = Scalar::one(C.field());
  for (std::size_t j = 0; j < 4; ++j) {
    Vec col = D.mul(p, D.basis(j));
    for (std::size_t i = 0; i < 4; ++i) m(4 + i, 4 + j) = col[i];
  }
  return {m, Carrier::Octonion};
}

/// The canonical t = f_{-e}, negating the second doubling component.
inline LinMap make_t(const CDAlgebra& C) { return make_t(C, -quaternion_base(C).unit()); }

/// (a1, a2) -> (g a1 g^-1, g a2 g^-1) for invertible g in D.
inline LinMap make_inner_g2(const CDAlgebra& C, const Vec& g) {
  CDAlgebra D = quaternion_base(C);
  Scalar n = D.qnorm(g);
  if (n.is_zero()) fail(ErrorCode::SingularElement, "g must be invertible");
  Vec ginv = n.inverse() * D.conj(g);
  Matrix m(C.field(), 8, 8);
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec col = D.mul(D.mul(g, D.basis(j)), ginv);
      for (std::size_t i = 0; i < 4; ++i) m(4 * half + i, 4 * half + j) = col[i];
    }
  return {m, Carrier::Octonion};
}

/// Split torus element t_(eta, nu) = f_p o c_g with g = diag(eta, 1), p = diag(nu, nu^-1).
inline LinMap make_g2_torus(const CDAlgebra& C, const Scalar& eta, const Scalar& nu) {
  if (!C.matrix_base()) fail(ErrorCode::ModelMismatch, "the G2 torus uses the matrix base");
  if (eta.is_zero() || nu.is_zero()) fail(ErrorCode::ZeroParameter, "torus parameters must be nonzero");
  const FieldSpec& f = C.field();
  Vec g{eta, Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
  Vec p{nu, Scalar::zero(f), Scalar::zero(f), nu.inverse()};
  return make_t(C, p) * make_inner_g2(C, g);
}

/// Within-block basis permutations applied to a candidate map: P^-1 M P.
inline Matrix permute_blocks(const Matrix& m, const std::array<int, 4>& p1, const std::array<int, 4>& p2) {
  std::array<int, 8> perm{};
  for (int i = 0; i < 4; ++i) {
    perm[i] = p1[i];
    perm[4 + i] = 4 + p2[i];
  }
  Matrix out(m.field(), 8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out(perm[i], perm[j]) = m(i, j);
  return out;
}

/// t_*: anti-diagonal 4x4 blocks. If the candidate is not an automorphism in
/// the default basis, within-block permutations are searched in lexicographic
/// order and the winning one is recorded in basis_tag.
inline LinMap make_t_star(const CDAlgebra& C) {
  if (C.dim() != 8) fail(ErrorCode::AlgebraMismatch, "t_* acts on octonions");
  Matrix anti(C.field(), 8, 8);
  for (int i = 0; i < 4; ++i) {
    anti(i, 3 - i) = Scalar::one(C.field());
    anti(4 + i, 7 - i) = Scalar::one(C.field());
  }
  LinMap candidate(anti, Carrier::Octonion, "default");
  if (is_octonion_automorphism(C, candidate)) return candidate;
  std::array<int, 4> p1{0, 1, 2, 3};
  std::ostringstream log;
  do {
    std::array<int, 4> p2{0, 1, 2, 3};
    do {
      LinMap trial(permute_blocks(anti, p1, p2), Carrier::Octonion);
      if (is_octonion_automorphism(C, trial)) {
        std::ostringstream tag;
        tag << "perm(" << p1[0] << p1[1] << p1[2] << p1[3] << "|" << p2[0] << p2[1] << p2[2] << p2[3] << ")";
        trial.basis_tag = tag.str();
        return trial;
      }
      log << p1[0] << p1[1] << p1[2] << p1[3] << "|" << p2[0] << p2[1] << p2[2] << p2[3] << " ";
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  fail(ErrorCode::NoValidOrdering, "no block permutation makes t_* an automorphism; tried " + log.str());
}

// --- Albert level -------------------------------------------------------------

/// t^(xi; a, b, c) = (xi; t a, t b, t c)
inline LinMap lift_c_to_j(const AlbertAlgebra& J, const LinMap& t) {
  t.require(Carrier::Octonion);
  if (!J.is_hermitian()) fail(ErrorCode::ModelMismatch, "lift from C needs the Hermitian model");
  if (!is_octonion_automorphism(J.octonions(), t)) fail(ErrorCode::NotAutomorphism, "t must be an automorphism of C");
  Matrix m(J.field(), kAlbertDim, kAlbertDim);
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = Scalar::one(J.field());
  for (std::size_t blk = 0; blk < 3; ++blk)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) m(3 + 8 * blk + i, 3 + 8 * blk + j) = t.m(i, j);
  return {m, Carrier::Albert, t.basis_tag};
}

/// s = U_{diag(1,-1,-1)}: (xi; a, b, c) -> (xi; a, -b, -c).
inline LinMap make_s(const AlbertAlgebra& J) {
  if (!J.is_hermitian()) fail(ErrorCode::ModelMismatch, "s is defined on the Hermitian model");
  Vec d(kAlbertDim, Scalar::one(J.field()));
  for (std::size_t i = 11; i < kAlbertDim; ++i) d[i] = -d[i];
  return {J.diagonal_map(d), Carrier::Albert};
}

/// theta(a0, a1, a2) = (a0^t, a2^t, a1^t) on J(M_3(k), 1).
inline LinMap make_theta_tits(const AlbertAlgebra& J) {
  if (J.is_hermitian()) fail(ErrorCode::ModelMismatch, "theta is defined on the Tits model");
  if (!J.varsigma().is_one()) fail(ErrorCode::ModelMismatch, "theta needs varsigma = 1");
  return {J.map_matrix([&](const Vec& x) {
            return J.tits_elem(mat3::transpose(AlbertAlgebra::part(x, 0)), mat3::transpose(AlbertAlgebra::part(x, 2)),
                               mat3::transpose(AlbertAlgebra::part(x, 1)));
          }),
          Carrier::Albert};
}

enum class TorusLevel { G2, F4, E6 };

inline std::size_t torus_arity(TorusLevel level) {
  switch (level) {
    case TorusLevel::G2: return 2;
    case TorusLevel::F4: return 4;
    case TorusLevel::E6: return 6;
  }
  return 0;
}

/// diag(x, y, (xy)^-1)
inline Vec unimodular_diag(const Scalar& x, const Scalar& y) { return mat3::diag(x, y, (x * y).inverse()); }

/// F4: phi(u, u, v); E6: phi(u, v, w) with u = diag(u1, u2, (u1 u2)^-1) and so on.
inline LinMap make_torus_element(const AlbertAlgebra& tits, const std::vector<Scalar>& params, TorusLevel level) {
  if (level == TorusLevel::G2) fail(ErrorCode::ModelMismatch, "G2 torus elements act on C; use make_g2_torus");
  if (tits.is_hermitian()) fail(ErrorCode::ModelMismatch, "torus elements are realized in the Tits model");
  if (params.size() != torus_arity(level)) {
    fail(ErrorCode::ArityMismatch, "expected " + std::to_string(torus_arity(level)) + " parameters");
  }
  for (const auto& p : params) {
    if (p.is_zero()) fail(ErrorCode::ZeroParameter, "torus parameters must be nonzero");
  }
  Vec u = unimodular_diag(params[0], params[1]);
  Vec v = level == TorusLevel::F4 ? u : unimodular_diag(params[2], params[3]);
  Vec w = level == TorusLevel::F4 ? unimodular_diag(params[2], params[3]) : unimodular_diag(params[4], params[5]);
  return {tits.tits_phi_map(u, v, w), Carrier::Albert};
}

/// Order-2 (or identity) test used for descriptor validation.
inline bool order_divides_two(const LinMap& phi) { return phi.squares_to_identity(); }

// --- fixed subalgebras and gradings ---------------------------------------------

struct FixedReport {
  std::size_t dimension = 0;
  std::vector<Vec> basis;
  bool closed = false;
  bool binv_closed = true;
};

inline bool closed_under(const FieldSpec& field, std::size_t n, const std::vector<Vec>& basis,
                         const std::function<Vec(const Vec&, const Vec&)>& product) {
  SpanChecker span(field, n, basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (!span.contains(product(basis[i], basis[j]))) return false;
    }
  return true;
}

inline FixedReport fixed_subalgebra(const AlbertAlgebra& J, const LinMap& phi) {
  phi.require(Carrier::Albert);
  if (!phi.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "phi^2 != id");
  FixedReport r;
  r.basis = phi.fixed_basis();
  r.dimension = r.basis.size();
  r.closed = closed_under(J.field(), kAlbertDim, r.basis, [&](const Vec& x, const Vec& y) { return J.jmul(x, y); });
  return r;
}

inline FixedReport fixed_subalgebra(const BrownAlgebra& B, const LinMap& phi) {
  phi.require(Carrier::Brown);
  if (!phi.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "phi^2 != id");
  FixedReport r;
  r.basis = phi.fixed_basis();
  r.dimension = r.basis.size();
  SpanChecker span(B.field(), kBrownDim, r.basis);
  r.closed = true;
  for (std::size_t i = 0; i < r.basis.size() && r.closed; ++i) {
    if (!span.contains(B.binv(r.basis[i]))) r.binv_closed = false;
    for (std::size_t j = 0; j < r.basis.size(); ++j) {
      if (!span.contains(B.mul(r.basis[i], r.basis[j]))) {
        r.closed = false;
        break;
      }
    }
  }
  return r;
}

struct Grading {
  std::vector<Vec> plus;
  std::vector<Vec> minus;
  bool law_holds = false;
};

/// A = D + D^perp with D the +1 and D^perp the -1 eigenspace; checks
/// D.D in D, D.D^perp in D^perp, D^perp.D^perp in D on all basis pairs.
inline Grading grade_decompose(const LinMap& phi, const Matrix& form,
                               const std::function<Vec(const Vec&, const Vec&)>& product) {
  if (!phi.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "phi^2 != id");
  if (!(phi.m.transpose() * form * phi.m == form)) fail(ErrorCode::FormNotInvariant, "form is not phi-invariant");
  Grading g;
  g.plus = phi.fixed_basis();
  g.minus = phi.anti_basis();
  const std::size_t n = phi.dim();
  SpanChecker plus(phi.field(), n, g.plus), minus(phi.field(), n, g.minus);
  g.law_holds = g.plus.size() + g.minus.size() == n;
  for (std::size_t i = 0; i < g.plus.size() && g.law_holds; ++i) {
    for (std::size_t j = i; j < g.plus.size(); ++j) g.law_holds = g.law_holds && plus.contains(product(g.plus[i], g.plus[j]));
    for (const auto& m : g.minus) g.law_holds = g.law_holds && minus.contains(product(g.plus[i], m));
  }
  for (std::size_t i = 0; i < g.minus.size() && g.law_holds; ++i)
    for (std::size_t j = i; j < g.minus.size(); ++j)
      g.law_holds = g.law_holds && plus.contains(product(g.minus[i], g.minus[j]));
  return g;
}

inline Grading grade_decompose(const AlbertAlgebra& J, const LinMap& phi) {
  phi.require(Carrier::Albert);
  return grade_decompose(phi, J.gram(), [&](const Vec& x, const Vec& y) { return J.jmul(x, y); });
}

// --- conjugacy --------------------------------------------------------------------

inline LinMap conjugate_involution(const AlbertAlgebra& J, const LinMap& g, const LinMap& t) {
  if (!t.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "t^2 != id");
  if (!is_aut_member(J, g)) fail(ErrorCode::NotAutomorphism, "g must lie in Aut(J)");
  return g * t * g.inverse();
}

/// g maps fix(t) onto fix(t') exactly.
inline bool verify_conjugacy_transport(const LinMap& g, const LinMap& t, const LinMap& t2) {
  if (!t.squares_to_identity() || !t2.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "t, t' must square to id");
  std::vector<Vec> image;
  for (const auto& v : t.fixed_basis()) image.push_back(g(v));
  return same_span(g.field(), g.dim(), image, t2.fixed_basis());
}

// --- outer automorphism criteria --------------------------------------------------

/// phi delta phi = delta^dagger
inline bool outer_fixed_condition(const AlbertAlgebra& J, const LinMap& delta, const LinMap& phi) {
  if (!phi.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "phi^2 != id");
  return phi * delta * phi == dagger(J, delta);
}

/// First v in {-1,0,1}^8 (lexicographic) with q(v) = -1 and <v, e> = 0, so v^2 = e.
inline Vec find_bridge_vector(const CDAlgebra& C) {
  const FieldSpec& f = C.field();
  std::array<int, 8> digits{};
  digits.fill(-1);
  for (;;) {
    Vec v;
    for (int d : digits) v.emplace_back(f, d);
    if (C.qnorm(v) == -Scalar::one(f) && C.trace(v).is_zero()) return v;
    int i = 7;
    while (i >= 0 && digits[i] == 1) digits[i--] = -1;
    if (i < 0) break;
    ++digits[i];
  }
  fail(ErrorCode::NoSuchV, "no v with q(v) = -1 and trace 0 among small vectors");
}

/// V = h(1, 0, 0; v, 0, 0), so V^2 = diag(1, -1, -1) and U_V^2 = s.
inline Vec bridge_element(const AlbertAlgebra& J) {
  if (!J.gamma_is_identity()) fail(ErrorCode::ModelMismatch, "the U_V bridge uses Her3(C, id)");
  const CDAlgebra& C = J.octonions();
  Vec v = find_bridge_vector(C);
  const FieldSpec& f = J.field();
  return J.her(Scalar::one(f), Scalar::zero(f), Scalar::zero(f), v, C.zero(), C.zero());
}

inline LinMap make_uv_bridge(const AlbertAlgebra& J) { return {J.uop(bridge_element(J)), Carrier::Albert}; }

/// U_x U_y is an automorphism of the isotope J^<y>: multiplicative for {., y, .}
/// on basis pairs and fixing e^<y> = y^-1.
inline bool isotope_automorphism_check(const AlbertAlgebra& J, const Vec& x, const Vec& y) {
  if ((J.norm(x) * J.norm(y)).is_zero()) fail(ErrorCode::SingularElement, "N(x) N(y) = 0");
  Matrix m = J.uop(x) * J.uop(y);
  if (!(m * m).is_identity()) fail(ErrorCode::NotOrderTwo, "(U_x U_y)^2 != id");
  Vec yinv = J.jinverse(y);
  if (!(m.apply(yinv) == yinv)) return false;
  std::vector<Vec> images = m.columns();
  for (std::size_t i = 0; i < kAlbertDim; ++i)
    for (std::size_t j = i; j < kAlbertDim; ++j) {
      if (!(m.apply(J.triple(J.basis(i), y, J.basis(j))) == J.triple(images[i], y, images[j]))) return false;
    }
  return true;
}

// --- descriptors ----------------------------------------------------------------

enum class Space { J, B };

struct DescriptorToken {
  std::string name;             // s, t, t*, varpi, id, tpar
  std::vector<Scalar> params;   // for tpar
};

/// Tokens of "a.b.c", composed as a o b o c. Parameters after "t:" are comma separated.
inline std::vector<DescriptorToken> parse_descriptor(const FieldSpec& field, std::string_view text) {
  std::vector<DescriptorToken> out;
  if (text.empty()) fail(ErrorCode::ParseError, "empty descriptor");
  std::size_t start = 0;
  for (;;) {
    auto dot = text.find('.', start);
    std::string_view tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (tok == "s" || tok == "t" || tok == "t*" || tok == "varpi" || tok == "id") {
      out.push_back({std::string(tok), {}});
    } else if (tok.substr(0, 2) == "t:") {
      DescriptorToken t{"tpar", {}};
      std::string_view list = tok.substr(2);
      std::size_t s = 0;
      for (;;) {
        auto comma = list.find(',', s);
        std::string_view item = list.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
        t.params.push_back(Scalar::parse(field, item));
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
      if (t.params.size() != 4 && t.params.size() != 6) fail(ErrorCode::ArityMismatch, "t: takes 4 (F4) or 6 (E6) parameters");
      out.push_back(std::move(t));
    } else {
      fail(ErrorCode::ParseError, "unknown descriptor token '" + std::string(tok) + "'");
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

/// Realizes descriptors over one field. The Hermitian model hosts s, t, t*;
/// parameterized torus elements live in the Tits model, so the two cannot mix.
class InvolutionCatalog {
 public:
  explicit InvolutionCatalog(const FieldSpec& field) : field_(field) {}

  const FieldSpec& field() const { return field_; }

  const AlbertAlgebra& hermitian() const {
    if (!her_) her_ = AlbertAlgebra::split_hermitian(field_);
    return *her_;
  }
  const AlbertAlgebra& tits() const {
    if (!tits_) tits_ = AlbertAlgebra::tits(field_, Scalar::one(field_));
    return *tits_;
  }
  const BrownAlgebra& brown(bool tits_model) const {
    auto& slot = tits_model ? brown_tits_ : brown_her_;
    if (!slot) {
      hermitian_or_tits(tits_model);
      slot = std::make_shared<BrownAlgebra>(tits_model ? tits_ : her_);
    }
    return *slot;
  }

  /// Whether a descriptor uses the Tits model.
  bool uses_tits(const std::vector<DescriptorToken>& toks) const {
    bool tits_tok = false, her_tok = false;
    for (const auto& t : toks) {
      if (t.name == "tpar") tits_tok = true;
      if (t.name == "s" || t.name == "t" || t.name == "t*") her_tok = true;
    }
    if (tits_tok && her_tok) fail(ErrorCode::ModelMismatch, "t:params (Tits model) cannot be composed with s, t, t*");
    return tits_tok;
  }

  LinMap realize(std::string_view descriptor, Space space) const {
    auto toks = parse_descriptor(field_, descriptor);
    bool tits_model = uses_tits(toks);
    LinMap result = LinMap::identity(field_, space == Space::J ? Carrier::Albert : Carrier::Brown);
    for (const auto& tok : toks) result = result * realize_token(tok, space, tits_model);
    return result;
  }

  LinMap realize_token(const DescriptorToken& tok, Space space, bool tits_model) const {
    if (tok.name == "varpi") {
      if (space == Space::J) fail(ErrorCode::InvalidArgument, "varpi acts on B only");
      return brown(tits_model).varpi();
    }
    LinMap on_j = albert_token(tok);
    if (space == Space::J) return on_j;
    const BrownAlgebra& B = brown(tits_model);
    return B.lift_blocks(on_j, dagger(B.albert(), on_j, false));
  }

  LinMap albert_token(const DescriptorToken& tok) const {
    if (tok.name == "id") return LinMap::identity(field_, Carrier::Albert);
    if (tok.name == "s") return make_s(hermitian());
    if (tok.name == "t") return lift_c_to_j(hermitian(), make_t(hermitian().octonions()));
    if (tok.name == "t*") return lift_c_to_j(hermitian(), make_t_star(hermitian().octonions()));
    if (tok.name == "tpar") {
      return make_torus_element(tits(), tok.params, tok.params.size() == 4 ? TorusLevel::F4 : TorusLevel::E6);
    }
    fail(ErrorCode::ParseError, "unknown token " + tok.name);
  }

 private:
  void hermitian_or_tits(bool tits_model) const {
    if (tits_model) {
      tits();
    } else {
      hermitian();
    }
  }

  FieldSpec field_;
  mutable AlbertPtr her_;
  mutable AlbertPtr tits_;
  mutable std::shared_ptr<BrownAlgebra> brown_her_;
  mutable std::shared_ptr<BrownAlgebra> brown_tits_;
};

/// Which of the fixed-subalgebra shapes B^s, B^t, B^varpi, B^{s varpi},
/// B^{t varpi} a fixed space on B has, judged from its coordinates.
inline std::string brown_fixed_shape(const BrownAlgebra& B, const std::vector<Vec>& fixed) {
  const FieldSpec& f = B.field();
  // Projection onto (alpha, beta).
  std::vector<Vec> ab;
  for (const auto& v : fixed) ab.push_back({v[0], v[1]});
  std::size_t ab_rank = span_rank(f, 2, ab);
  if (ab_rank == 2) {
    // Split form: fixed = k + k + (J' in j) + (J' in l).
    std::vector<Vec> jparts;
    for (const auto& v : fixed) jparts.push_back(BrownAlgebra::jpart(v));
    std::size_t d = span_rank(f, kAlbertDim, jparts);
    if (fixed.size() != 2 + 2 * d) return "other";
    if (d == kAlbertDim) return "B";
    if (d == 11) return "B^s";
    if (d == 15) return "B^t";
    return "other";
  }
  if (ab_rank != 1 || fixed.size() != 28) return "other";
  // Graph form (alpha, alpha, j, psi(j)); recover psi and classify it by its fixed dimension.
  std::vector<Vec> jparts, lparts;
  for (const auto& v : fixed) {
    if (!(v[0] == v[1])) return "other";
    jparts.push_back(BrownAlgebra::jpart(v));
    lparts.push_back(BrownAlgebra::lpart(v));
  }
  // Pick 27 fixed vectors whose j-parts are independent; psi = L J^-1 on them.
  Matrix probe = Matrix::from_columns(f, kAlbertDim, jparts);
  auto cols = probe.rref();
  if (cols.size() != kAlbertDim) return "other";
  std::vector<Vec> jsel, lsel;
  for (auto c : cols) {
    jsel.push_back(jparts[c]);
    lsel.push_back(lparts[c]);
  }
  Matrix psi = Matrix::from_columns(f, kAlbertDim, lsel) * Matrix::from_columns(f, kAlbertDim, jsel).inverse();
  if (!(psi * psi).is_identity()) return "other";
  std::size_t d = (psi - Matrix::identity(f, kAlbertDim)).kernel().size();
  if (d == kAlbertDim) return "B^varpi";
  if (d == 11) return "B^{s varpi}";
  if (d == 15) return "B^{t varpi}";
  return "other";
}

}  // namespace e6kit
