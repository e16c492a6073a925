#pragma once

// Randomized and exhaustive invariant suites over one field. Every check is
// exact; a failing check carries the first counterexample found.

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "e6kit/brown.hpp"
#include "e6kit/invol.hpp"
#include "e6kit/serialize.hpp"

namespace e6kit {

struct SuiteConfig {
  FieldSpec field = FieldSpec::prime_field(7);
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  Json counterexample;  // null when passing
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::string field;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j{{"name", c.name}, {"pass", c.pass}, {"trials", c.trials}, {"seconds", c.seconds}};
      if (!c.pass) j["counterexample"] = c.counterexample;
      if (!c.detail.empty()) j["detail"] = c.detail;
      arr.push_back(std::move(j));
    }
    return Json{{"suite", suite}, {"field", field}, {"seed", seed}, {"pass", pass()}, {"checks", arr}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "suite " << suite << " over " << field << " (seed " << seed << ")\n";
    for (const auto& c : checks) {
      out << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " [" << c.trials << "]";
      if (!c.detail.empty()) out << " " << c.detail;
      out << "\n";
      if (!c.pass && !c.counterexample.is_null()) out << "    counterexample: " << c.counterexample.dump() << "\n";
    }
    return out.str();
  }
};

/// Collects check results. A trial returns nullopt on success and a
/// counterexample otherwise; errors raised inside a check count as failures.
class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void trials(const std::string& name, std::size_t n, const std::function<std::optional<Json>(std::size_t)>& trial) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      for (std::size_t i = 0; i < n; ++i) {
        ++r.trials;
        if (auto cx = trial(i)) {
          r.pass = false;
          r.counterexample = std::move(*cx);
          break;
        }
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(r));
  }

  void single(const std::string& name, const std::function<std::optional<Json>()>& body) {
    trials(name, 1, [&](std::size_t) { return body(); });
  }

 private:
  SuiteReport& report_;
};

inline std::optional<Json> unless(bool ok, Json cx) { return ok ? std::nullopt : std::optional<Json>(std::move(cx)); }

// --- sampling helpers -------------------------------------------------------------

/// Random element with nonzero norm.
inline Vec sample_invertible(const AlbertAlgebra& J, Sampler& rng) {
  for (;;) {
    Vec x = J.sample(rng);
    if (!J.norm(x).is_zero()) return x;
  }
}

/// Random element of norm 1, obtained by rescaling with phi_lambda.
inline Vec sample_unit_norm(const AlbertAlgebra& J, Sampler& rng) {
  Vec x = sample_invertible(J, rng);
  return J.phi_lambda(J.norm(x).inverse()).apply(x);
}

/// Random 3x3 matrix of determinant 1.
inline Vec sample_sl3(const FieldSpec& f, Sampler& rng) {
  for (;;) {
    Vec m;
    for (int i = 0; i < 9; ++i) m.push_back(rng.scalar(f));
    Scalar d = mat3::det(m);
    if (d.is_zero()) continue;
    Scalar di = d.inverse();
    for (int j = 0; j < 3; ++j) m[j] = m[j] * di;
    return m;
  }
}

/// Cayley transform (I - A)(I + A)^-1 of a random skew matrix A; orthogonal.
inline Vec sample_orthogonal3(const FieldSpec& f, Sampler& rng) {
  for (;;) {
    Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
    Scalar z = Scalar::zero(f);
    Vec skew{z, a, b, -a, z, c, -b, -c, z};
    Vec id = mat3::identity(f);
    Vec plus(9, z), minus(9, z);
    for (int i = 0; i < 9; ++i) {
      plus[i] = id[i] + skew[i];
      minus[i] = id[i] - skew[i];
    }
    if (mat3::det(plus).is_zero()) continue;
    return mat3::mul(minus, mat3::inverse(plus));
  }
}

/// Random automorphism of Her3(C, id): a congruence by an orthogonal matrix
/// composed with lifted octonion automorphisms.
inline LinMap sample_automorphism(const AlbertAlgebra& J, Sampler& rng) {
  const FieldSpec& f = J.field();
  const CDAlgebra& C = J.octonions();
  CDAlgebra D = quaternion_base(C);
  Vec g;
  do {
    g = D.sample(rng);
  } while (D.qnorm(g).is_zero());
  LinMap inner = lift_c_to_j(J, make_inner_g2(C, g));
  LinMap torus = lift_c_to_j(J, make_g2_torus(C, rng.nonzero(f), rng.nonzero(f)));
  LinMap cong{J.scalar_congruence(sample_orthogonal3(f, rng)), Carrier::Albert};
  return cong * torus * inner;
}

// --- suites -------------------------------------------------------------------------

inline SuiteReport verify_composition(const SuiteConfig& cfg) {
  SuiteReport rep{"composition", cfg.field.to_string(), cfg.seed, {}};
  Recorder rec(rep);
  Sampler rng(cfg.seed);
  const FieldSpec& f = cfg.field;
  const Scalar m1 = -Scalar::one(f);
  std::vector<std::pair<std::string, CDAlgebra>> algebras{
      {"split octonions", CDAlgebra::split_octonions(f)},
      {"split quaternions", CDAlgebra::split_quaternions(f)},
      {"octonions (-1,-1,-1)", CDAlgebra(f, {m1, m1, m1})},
      {"k(sqrt -1)", CDAlgebra(f, {m1})},
  };
  for (const auto& [label, C] : algebras) {
    const std::string tag = "[" + label + "] ";
    rec.single(tag + "q(e) = 1", [&]() { return unless(C.qnorm(C.unit()).is_one(), Json()); });
    rec.single(tag + "norm form nondegenerate", [&]() {
      std::size_t r = C.gram().rank();
      return unless(r == C.dim(), Json{{"rank", r}});
    });
    rec.trials(tag + "q(xy) = q(x)q(y)", cfg.samples, [&](std::size_t) {
      Vec x = C.sample(rng), y = C.sample(rng);
      return unless(C.qnorm(C.mul(x, y)) == C.qnorm(x) * C.qnorm(y), Json{{"x", to_json(x)}, {"y", to_json(y)}});
    });
    rec.trials(tag + "x conj(x) = q(x)e", cfg.samples, [&](std::size_t) {
      Vec x = C.sample(rng);
      return unless(C.mul(x, C.conj(x)) == C.qnorm(x) * C.unit(), Json{{"x", to_json(x)}});
    });
    rec.trials(tag + "conj(xy) = conj(y)conj(x)", cfg.samples, [&](std::size_t) {
      Vec x = C.sample(rng), y = C.sample(rng);
      return unless(C.conj(C.mul(x, y)) == C.mul(C.conj(y), C.conj(x)), Json{{"x", to_json(x)}, {"y", to_json(y)}});
    });
    rec.trials(tag + "x(xy) = (xx)y", cfg.samples, [&](std::size_t) {
      Vec x = C.sample(rng), y = C.sample(rng);
      return unless(C.mul(x, C.mul(x, y)) == C.mul(C.mul(x, x), y), Json{{"x", to_json(x)}, {"y", to_json(y)}});
    });
  }
  return rep;
}

inline std::vector<std::pair<std::string, AlbertPtr>> suite_albert_models(const FieldSpec& f) {
  const Scalar one = Scalar::one(f);
  return {
      {"Her3(C, id)", AlbertAlgebra::split_hermitian(f)},
      {"Her3(C, (1,-1,2))", AlbertAlgebra::hermitian(CDAlgebra::split_octonions(f), {one, -one, Scalar(f, 2)})},
      {"J(M3, 1)", AlbertAlgebra::tits(f, one)},
      {"J(M3, 2)", AlbertAlgebra::tits(f, Scalar(f, 2))},
  };
}

inline SuiteReport verify_albert(const SuiteConfig& cfg) {
  SuiteReport rep{"albert", cfg.field.to_string(), cfg.seed, {}};
  Recorder rec(rep);
  Sampler rng(cfg.seed);
  const FieldSpec& f = cfg.field;
  const std::size_t n = cfg.samples;
  const std::size_t heavy = std::max<std::size_t>(1, n / 4);
  const Scalar two(f, 2), three(f, 3);
  for (const auto& [label, ptr] : suite_albert_models(f)) {
    const AlbertAlgebra& J = *ptr;
    const std::string tag = "[" + label + "] ";
    auto cx1 = [&](const Vec& x) { return Json{{"x", albert_to_json(J, x)}}; };
    auto cx2 = [&](const Vec& x, const Vec& y) { return Json{{"x", albert_to_json(J, x)}, {"y", albert_to_json(J, y)}}; };

    rec.single(tag + "trace form nondegenerate", [&]() {
      std::size_t r = J.gram().rank();
      return unless(r == kAlbertDim, Json{{"rank", r}});
    });
    rec.trials(tag + "e.x = x", n, [&](std::size_t) {
      Vec x = J.sample(rng);
      return unless(J.jmul(J.unit(), x) == x, cx1(x));
    });
    rec.trials(tag + "x.y = y.x", n, [&](std::size_t) {
      Vec x = J.sample(rng), y = J.sample(rng);
      return unless(J.jmul(x, y) == J.jmul(y, x), cx2(x, y));
    });
    rec.trials(tag + "(x^2.y).x = x^2.(y.x)", n, [&](std::size_t) {
      Vec x = J.sample(rng), y = J.sample(rng);
      Vec x2 = J.square(x);
      return unless(J.jmul(J.jmul(x2, y), x) == J.jmul(x2, J.jmul(y, x)), cx2(x, y));
    });
    rec.trials(tag + "Tr(x^#, y) = N(x; y)", n, [&](std::size_t) {
      Vec x = J.sample(rng), y = J.sample(rng);
      // N(x + y) - N(x - y) = 2 N(x; y) + 2 N(y)
      Scalar lhs = J.norm(x + y) - J.norm(x - y);
      return unless(lhs == two * (J.trform(J.sharp(x), y) + J.norm(y)), cx2(x, y));
    });
    rec.trials(tag + "(x^#)^# = N(x)x", n, [&](std::size_t) {
      Vec x = J.sample(rng);
      return unless(J.sharp(J.sharp(x)) == J.norm(x) * x, cx1(x));
    });
    rec.trials(tag + "e # x = Tr(x)e - x", n, [&](std::size_t) {
      Vec x = J.sample(rng);
      return unless(J.cross(J.unit(), x) == J.trace(x) * J.unit() - x, cx1(x));
    });
    rec.trials(tag + "Tr(x^#, x) = 3N(x)", n, [&](std::size_t) {
      Vec x = J.sample(rng);
      return unless(J.trform(J.sharp(x), x) == three * J.norm(x), cx1(x));
    });
    rec.trials(tag + "x^3 - Tr(x)x^2 + S(x)x - N(x)e = 0", n, [&](std::size_t) {
      Vec x = J.sample(rng);
      Vec x2 = J.square(x);
      Vec lhs = J.jmul(x2, x) - J.trace(x) * x2 + J.sr(x) * x - J.norm(x) * J.unit();
      return unless(is_zero(lhs), cx1(x));
    });
    rec.trials(tag + "U_x = 2L_x^2 - L_{x^2}", heavy, [&](std::size_t) {
      Vec x = J.sample(rng);
      return unless(J.uop(x) == J.uop_via_lmul(x), cx1(x));
    });
    rec.trials(tag + "N(U_x y) = N(x)^2 N(y)", n, [&](std::size_t) {
      Vec x = J.sample(rng), y = J.sample(rng);
      Scalar nx = J.norm(x);
      return unless(J.norm(J.uapply(x, y)) == nx * nx * J.norm(y), cx2(x, y));
    });
    rec.trials(tag + "U_x x^-1 = x", n, [&](std::size_t) {
      Vec x = sample_invertible(J, rng);
      return unless(J.uapply(x, J.jinverse(x)) == x, cx1(x));
    });
    rec.trials(tag + "isotope unit e<u> = u^-1", n, [&](std::size_t) {
      Vec u = sample_invertible(J, rng), y = J.sample(rng);
      return unless(J.isotope_mul(J.jinverse(u), u, y) == y, cx2(u, y));
    });
    rec.trials(tag + "U<y>_x = U_x U_y", std::max<std::size_t>(1, heavy / 4), [&](std::size_t) {
      Vec x = J.sample(rng), y = sample_invertible(J, rng);
      auto ly = [&](const Vec& a) { return J.map_matrix([&](const Vec& z) { return J.triple(a, y, z); }); };
      Matrix l = ly(x);
      Matrix u_iso = two * (l * l) - ly(J.triple(x, y, x));
      return unless(u_iso == J.uop(x) * J.uop(y), cx2(x, y));
    });
    rec.trials(tag + "(J<y>)<z> = J<U_y z>", heavy, [&](std::size_t) {
      Vec y = sample_invertible(J, rng), z = sample_invertible(J, rng);
      Vec a = J.sample(rng), b = J.sample(rng);
      auto my = [&](const Vec& p, const Vec& q) { return J.triple(p, y, q); };
      // triple product of J<y>, evaluated at (a, z, b)
      Vec lhs = my(my(a, z), b) + my(my(b, z), a) - my(my(a, b), z);
      Vec rhs = J.triple(a, J.uapply(y, z), b);
      return unless(lhs == rhs, Json{{"y", albert_to_json(J, y)}, {"z", albert_to_json(J, z)}, {"a", albert_to_json(J, a)},
                                     {"b", albert_to_json(J, b)}});
    });

    if (J.is_hermitian()) {
      rec.trials(tag + "N(phi_l x) = l N(x)", n, [&](std::size_t) {
        Vec x = J.sample(rng);
        Scalar l = rng.nonzero(f);
        return unless(J.norm(J.phi_lambda(l).apply(x)) == l * J.norm(x), cx1(x));
      });
      rec.single(tag + "beth: 11-dim subalgebra", [&]() {
        auto basis = J.beth_basis();
        bool closed = closed_under(f, kAlbertDim, basis, [&](const Vec& x, const Vec& y) { return J.jmul(x, y); });
        return unless(basis.size() == 11 && closed && span_rank(f, kAlbertDim, basis) == 11,
                      Json{{"dimension", basis.size()}, {"closed", closed}});
      });
    }
    if (J.gamma_is_identity()) {
      const CDAlgebra& C = J.octonions();
      rec.trials(tag + "N = x1x2x3 - x1q(a) - x2q(b) - x3q(c) + t(abc)", n, [&](std::size_t) {
        Vec x = J.sample(rng);
        Vec a = AlbertAlgebra::oct_a(x), b = AlbertAlgebra::oct_b(x), c = AlbertAlgebra::oct_c(x);
        Scalar closed = x[0] * x[1] * x[2] - x[0] * C.qnorm(a) - x[1] * C.qnorm(b) - x[2] * C.qnorm(c) +
                        C.trace(C.mul(C.mul(a, b), c));
        return unless(J.norm(x) == closed, cx1(x));
      });
      rec.trials(tag + "N(nu_g x) = N(x)", n, [&](std::size_t) {
        Vec x = J.sample(rng);
        return unless(J.norm(J.nu_g(rng.nonzero(f)).apply(x)) == J.norm(x), cx1(x));
      });
      rec.trials(tag + "phi U_x = U_phi(x) phi", std::max<std::size_t>(1, heavy / 4), [&](std::size_t) {
        LinMap phi = sample_automorphism(J, rng);
        Vec x = J.sample(rng);
        return unless(phi.m * J.uop(x) == J.uop(phi(x)) * phi.m, cx1(x));
      });
    }
    if (!J.is_hermitian()) {
      rec.trials(tag + "N(phi(u,v,w) x) = N(x)", n, [&](std::size_t) {
        Vec u = sample_sl3(f, rng), v = sample_sl3(f, rng), w = sample_sl3(f, rng);
        Vec x = J.sample(rng);
        return unless(J.norm(J.tits_phi(u, v, w, x)) == J.norm(x),
                      Json{{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}, {"x", albert_to_json(J, x)}});
      });
    }
  }
  return rep;
}

inline SuiteReport verify_brown(const SuiteConfig& cfg) {
  SuiteReport rep{"brown", cfg.field.to_string(), cfg.seed, {}};
  Recorder rec(rep);
  Sampler rng(cfg.seed);
  const FieldSpec& f = cfg.field;
  const std::size_t n = cfg.samples;
  const std::size_t heavy = std::max<std::size_t>(1, n / 20);
  AlbertPtr J = AlbertAlgebra::split_hermitian(f);
  BrownAlgebra B(J);
  auto cx1 = [&](const Vec& x) { return Json{{"x", brown_to_json(B, x)}}; };
  auto cx2 = [&](const Vec& x, const Vec& y) { return Json{{"x", brown_to_json(B, x)}, {"y", brown_to_json(B, y)}}; };

  rec.trials("1x = x = x1", n, [&](std::size_t) {
    Vec x = B.sample(rng);
    return unless(B.mul(B.unit(), x) == x && B.mul(x, B.unit()) == x, cx1(x));
  });
  rec.trials("binv(xy) = binv(y)binv(x)", n, [&](std::size_t) {
    Vec x = B.sample(rng), y = B.sample(rng);
    return unless(B.binv(B.mul(x, y)) == B.mul(B.binv(y), B.binv(x)), cx2(x, y));
  });
  rec.trials("binv(binv(x)) = x", n, [&](std::size_t) {
    Vec x = B.sample(rng);
    return unless(B.binv(B.binv(x)) == x, cx1(x));
  });
  rec.single("skew elements span s0 k", [&]() {
    auto skew = B.skew_basis();
    return unless(skew.size() == 1 && same_span(f, kBrownDim, skew, {B.s0()}), Json{{"dimension", skew.size()}});
  });
  rec.single("s0^2 is a nonzero square: type 1", [&]() { return unless(B.type() == BrownType::Type1, Json()); });

  const LinMap s = make_s(*J);
  const LinMap t = lift_c_to_j(*J, make_t(J->octonions()));
  rec.trials("lift(s) preserves the product", 1, [&](std::size_t) {
    return unless(B.preserves_product_on_samples(B.lift_aut(s), n, cfg.seed), Json());
  });
  rec.trials("lift(t) preserves the product", 1, [&](std::size_t) {
    return unless(B.preserves_product_on_samples(B.lift_aut(t), n, cfg.seed + 1), Json());
  });
  rec.trials("varpi preserves the product", 1, [&](std::size_t) {
    return unless(B.preserves_product_on_samples(B.varpi(), n, cfg.seed + 2), Json());
  });
  rec.trials("lift(U_x) preserves the product, N(x) = 1", heavy, [&](std::size_t) {
    Vec x = sample_unit_norm(*J, rng);
    LinMap ux{J->uop(x), Carrier::Albert};
    return unless(B.preserves_product_on_samples(B.lift_inv(ux), 4, rng.below(1u << 30)), Json{{"x", albert_to_json(*J, x)}});
  });
  rec.trials("varpi phi^ varpi = (phi^dagger)^", heavy, [&](std::size_t) {
    Vec x = sample_unit_norm(*J, rng);
    LinMap ux{J->uop(x), Carrier::Albert};
    LinMap lhs = B.varpi() * B.lift_inv(ux) * B.varpi();
    return unless(lhs == B.lift_inv(dagger(*J, ux)), Json{{"x", albert_to_json(*J, x)}});
  });
  rec.single("commuting pair (s, t): 28-dim subalgebra", [&]() {
    auto basis = B.commuting_pair_subalgebra(s, t);
    std::size_t r = span_rank(f, kBrownDim, basis);
    return unless(r == 28 && B.is_subalgebra(basis), Json{{"rank", r}});
  });
  return rep;
}

inline SuiteReport verify_involutions(const SuiteConfig& cfg) {
  SuiteReport rep{"involutions", cfg.field.to_string(), cfg.seed, {}};
  Recorder rec(rep);
  Sampler rng(cfg.seed);
  const FieldSpec& f = cfg.field;
  const std::size_t n = cfg.samples;
  const std::size_t heavy = std::max<std::size_t>(1, n / 10);
  InvolutionCatalog cat(f);
  const AlbertAlgebra& J = cat.hermitian();
  const CDAlgebra& C = J.octonions();
  const LinMap s = make_s(J);
  const LinMap t = lift_c_to_j(J, make_t(C));

  rec.single("t is an order-2 automorphism of C", [&]() {
    LinMap tc = make_t(C);
    return unless(tc.is_order_two() && is_octonion_automorphism(C, tc), Json());
  });
  rec.single("t* is an order-2 automorphism of C", [&]() {
    LinMap ts = make_t_star(C);
    return unless(ts.is_order_two() && is_octonion_automorphism(C, ts), Json{{"basis", ts.basis_tag}});
  });
  rec.trials("G2 torus element is an automorphism of C", heavy, [&](std::size_t) {
    Scalar eta = rng.nonzero(f), nu = rng.nonzero(f);
    return unless(is_octonion_automorphism(C, make_g2_torus(C, eta, nu)), Json{{"eta", to_json(eta)}, {"nu", to_json(nu)}});
  });
  rec.single("s, t lie in Aut(J) with order 2", [&]() {
    return unless(is_aut_member(J, s) && is_aut_member(J, t) && s.is_order_two() && t.is_order_two(), Json());
  });
  rec.single("s = U_diag(1,-1,-1)", [&]() { return unless(s.m == J.uop(J.diag(1, -1, -1)), Json()); });
  rec.trials("dagger(U_x) = U_{x^-1}, N(x) = 1", heavy, [&](std::size_t) {
    Vec x = sample_unit_norm(J, rng);
    LinMap ux{J.uop(x), Carrier::Albert};
    return unless(dagger(J, ux).m == J.uop(J.jinverse(x)), Json{{"x", albert_to_json(J, x)}});
  });
  rec.single("dagger(t) = t, dagger(s) = s", [&]() { return unless(dagger(J, t) == t && dagger(J, s) == s, Json()); });
  rec.trials("dagger(phi psi) = dagger(phi) dagger(psi)", std::max<std::size_t>(1, heavy / 4), [&](std::size_t) {
    Vec x = sample_unit_norm(J, rng), y = sample_unit_norm(J, rng);
    LinMap ux{J.uop(x), Carrier::Albert}, uy{J.uop(y), Carrier::Albert};
    return unless(dagger(J, ux * uy) == dagger(J, ux) * dagger(J, uy) && dagger(J, dagger(J, ux)) == ux,
                  Json{{"x", albert_to_json(J, x)}, {"y", albert_to_json(J, y)}});
  });
  rec.trials("phi(x) # phi(y) = dagger(phi)(x # y)", heavy, [&](std::size_t) {
    Vec u = sample_unit_norm(J, rng), x = J.sample(rng), y = J.sample(rng);
    LinMap phi{J.uop(u), Carrier::Albert};
    return unless(J.cross(phi(x), phi(y)) == dagger(J, phi)(J.cross(x, y)), Json{{"u", albert_to_json(J, u)}});
  });

  auto dims = [&](const std::string& desc, Space space, std::size_t expect, const std::string& shape) {
    std::string label = (space == Space::J ? "J^" : "B^") + desc + " = " + std::to_string(expect);
    rec.single(label, [&]() {
      LinMap phi = cat.realize(desc, space);
      if (space == Space::J) {
        FixedReport r = fixed_subalgebra(J, phi);
        return unless(r.dimension == expect && r.closed, Json{{"dimension", r.dimension}, {"closed", r.closed}});
      }
      const BrownAlgebra& B = cat.brown(false);
      FixedReport r = fixed_subalgebra(B, phi);
      std::string got = brown_fixed_shape(B, r.basis);
      return unless(r.dimension == expect && r.closed && r.binv_closed && got == shape,
                    Json{{"dimension", r.dimension}, {"closed", r.closed}, {"shape", got}});
    });
  };
  dims("s", Space::J, 11, "");
  dims("t", Space::J, 15, "");
  dims("s", Space::B, 24, "B^s");
  dims("t", Space::B, 32, "B^t");
  dims("varpi", Space::B, 28, "B^varpi");
  dims("t.varpi", Space::B, 28, "B^{t varpi}");
  dims("s.varpi", Space::B, 28, "B^{s varpi}");

  rec.single("U_V^2 = s, dagger(U_V) = U_V^-1", [&]() {
    LinMap uv = make_uv_bridge(J);
    return unless(uv * uv == s && dagger(J, uv) == uv.inverse(), Json{{"V", albert_to_json(J, bridge_element(J))}});
  });
  rec.single("lift(U_V) maps B^varpi onto B^{s varpi}", [&]() {
    const BrownAlgebra& B = cat.brown(false);
    LinMap g = B.lift_inv(make_uv_bridge(J));
    std::vector<Vec> image;
    for (const auto& v : B.varpi().fixed_basis()) image.push_back(g(v));
    LinMap svarpi = B.lift_aut(s) * B.varpi();
    return unless(same_span(f, kBrownDim, image, svarpi.fixed_basis()), Json());
  });

  const AlbertAlgebra& T = cat.tits();
  const LinMap theta = make_theta_tits(T);
  rec.single("theta lies in Aut(J(M3, 1)) with order 2", [&]() {
    return unless(theta.is_order_two() && is_aut_member(T, theta), Json());
  });
  rec.trials("theta dagger(phi) theta = phi^-1 on the torus", heavy, [&](std::size_t) {
    std::vector<Scalar> p;
    for (int i = 0; i < 6; ++i) p.push_back(rng.nonzero(f));
    LinMap phi = make_torus_element(T, p, TorusLevel::E6);
    return unless(theta * dagger(T, phi) * theta == phi.inverse(), Json{{"params", to_json(p)}});
  });
  rec.trials("dagger(phi(u,v,w)) = phi(v,u,w)", heavy, [&](std::size_t) {
    Vec u = sample_sl3(f, rng), v = sample_sl3(f, rng), w = sample_sl3(f, rng);
    LinMap lhs = dagger(T, LinMap{T.tits_phi_map(u, v, w), Carrier::Albert});
    return unless(lhs.m == T.tits_phi_map(v, u, w), Json{{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}});
  });

  rec.trials("g fix(t) = fix(g t g^-1)", std::max<std::size_t>(1, heavy / 2), [&](std::size_t i) {
    LinMap g = sample_automorphism(J, rng);
    const LinMap& base = i % 2 ? t : s;
    LinMap conj = conjugate_involution(J, g, base);
    return unless(verify_conjugacy_transport(g, base, conj), Json{{"involution", i % 2 ? "t" : "s"}});
  });
  rec.single("grading laws for s and t", [&]() {
    Grading gs = grade_decompose(J, s), gt = grade_decompose(J, t);
    return unless(gs.law_holds && gt.law_holds && gs.plus.size() == 11 && gt.plus.size() == 15,
                  Json{{"s", gs.plus.size()}, {"t", gt.plus.size()}});
  });
  rec.single("U_x U_y is an automorphism of J<y>", [&]() {
    Scalar two(f, 2), three(f, 3), one = Scalar::one(f);
    Vec y = J.diag(two, three, -one);
    Vec x = J.diag(two.inverse(), -three.inverse(), one);
    return unless(isotope_automorphism_check(J, x, y), Json{{"x", albert_to_json(J, x)}, {"y", albert_to_json(J, y)}});
  });
  return rep;
}

inline std::vector<std::string> suite_names() { return {"composition", "albert", "brown", "involutions"}; }

inline std::vector<SuiteReport> run_suites(const std::string& which, const SuiteConfig& cfg) {
  if (!cfg.field.is_arithmetic()) fail(ErrorCode::NonArithmeticField, "suites need Q or F_p, got " + cfg.field.to_string());
  std::vector<SuiteReport> out;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  const auto names = suite_names();
  if (which != "all" && std::find(names.begin(), names.end(), which) == names.end()) {
    fail(ErrorCode::InvalidArgument, "unknown suite '" + which + "'");
  }
  if (want("composition")) out.push_back(verify_composition(cfg));
  if (want("albert")) out.push_back(verify_albert(cfg));
  if (want("brown")) out.push_back(verify_brown(cfg));
  if (want("involutions")) out.push_back(verify_involutions(cfg));
  return out;
}

}  // namespace e6kit
