#pragma once

// JSON forms of scalars, algebra elements, Kac data and class reports.

#include <string>
#include <vector>

#include "json.hpp"

#include "e6kit/albert.hpp"
#include "e6kit/brown.hpp"
#include "e6kit/kac.hpp"
#include "e6kit/qclass.hpp"

namespace e6kit {

using Json = nlohmann::json;

inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const FieldSpec& field, const Json& j) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(field, j.get<long long>());
  fail(ErrorCode::ParseError, "scalars are strings or integers");
}

inline Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(to_json(s));
  return arr;
}

inline Vec vec_from_json(const FieldSpec& field, const Json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    fail(ErrorCode::ParseError, "expected an array of " + std::to_string(expected) + " scalars");
  }
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(field, x));
  return v;
}

inline Json albert_to_json(const AlbertAlgebra& J, const Vec& x) {
  J.check(x);
  if (J.is_hermitian()) {
    const auto& g = J.gamma();
    return Json{{"model", "her"},
                {"gamma", Json::array({to_json(g[0]), to_json(g[1]), to_json(g[2])})},
                {"xi", Json::array({to_json(x[0]), to_json(x[1]), to_json(x[2])})},
                {"a", to_json(AlbertAlgebra::oct_a(x))},
                {"b", to_json(AlbertAlgebra::oct_b(x))},
                {"c", to_json(AlbertAlgebra::oct_c(x))}};
  }
  return Json{{"model", "tits"},
              {"parts", Json::array({to_json(AlbertAlgebra::part(x, 0)), to_json(AlbertAlgebra::part(x, 1)),
                                     to_json(AlbertAlgebra::part(x, 2))})},
              {"varsigma", to_json(J.varsigma())}};
}

/// Reads an element of J; the stored gamma or varsigma must match J.
inline Vec albert_from_json(const AlbertAlgebra& J, const Json& j) {
  const FieldSpec& f = J.field();
  std::string model = j.value("model", j.contains("parts") ? "tits" : "her");
  if (J.is_hermitian()) {
    if (model != "her") fail(ErrorCode::ModelMismatch, "expected a Hermitian element");
    if (j.contains("gamma") && !(vec_from_json(f, j.at("gamma"), 3) == Vec(J.gamma().begin(), J.gamma().end()))) {
      fail(ErrorCode::ModelMismatch, "gamma differs from the algebra's");
    }
    Vec xi = vec_from_json(f, j.at("xi"), 3);
    return J.her(xi[0], xi[1], xi[2], vec_from_json(f, j.at("a"), 8), vec_from_json(f, j.at("b"), 8),
                 vec_from_json(f, j.at("c"), 8));
  }
  if (model != "tits") fail(ErrorCode::ModelMismatch, "expected a Tits element");
  if (j.contains("varsigma") && !(scalar_from_json(f, j.at("varsigma")) == J.varsigma())) {
    fail(ErrorCode::ModelMismatch, "varsigma differs from the algebra's");
  }
  const Json& parts = j.at("parts");
  if (!parts.is_array() || parts.size() != 3) fail(ErrorCode::ParseError, "parts must hold three 3x3 matrices");
  return J.tits_elem(vec_from_json(f, parts[0], 9), vec_from_json(f, parts[1], 9), vec_from_json(f, parts[2], 9));
}

inline Json brown_to_json(const BrownAlgebra& B, const Vec& x) {
  B.check(x);
  return Json{{"alpha", to_json(BrownAlgebra::alpha(x))},
              {"beta", to_json(BrownAlgebra::beta(x))},
              {"j", albert_to_json(B.albert(), BrownAlgebra::jpart(x))},
              {"l", albert_to_json(B.albert(), BrownAlgebra::lpart(x))},
              {"zeta", to_json(B.zeta())}};
}

inline Vec brown_from_json(const BrownAlgebra& B, const Json& j) {
  const FieldSpec& f = B.field();
  if (j.contains("zeta") && !(scalar_from_json(f, j.at("zeta")) == B.zeta())) {
    fail(ErrorCode::AlgebraMismatch, "zeta differs from the algebra's");
  }
  return B.elem(scalar_from_json(f, j.at("alpha")), scalar_from_json(f, j.at("beta")),
                albert_from_json(B.albert(), j.at("j")), albert_from_json(B.albert(), j.at("l")));
}

inline Json to_json(const Cardinal& c) { return c.is_infinite() ? Json("infinite") : Json(*c.value); }

inline Json to_json(const ClassReport& r) {
  Json classes = Json::object();
  for (const auto& [k, c] : r.classes) classes[k] = to_json(c);
  Json out{{"field", r.field.to_string()},
           {"level", to_string(r.level)},
           {"classes", classes},
           {"total", to_json(r.total)},
           {"representatives", r.representatives}};
  if (!r.family.empty()) out["family"] = r.family;
  return out;
}

inline Json to_json(const KacSolution& s) {
  Json comps = Json::array();
  for (const auto& c : s.residual) comps.push_back(Json{{"type", c.type}, {"nodes", c.nodes}});
  return Json{{"s", s.s}, {"m", s.m}, {"gcd_one", s.gcd_one}, {"residual", s.residual_type()}, {"components", comps}};
}

inline Json to_json(const MarkedDiagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back(Json::array({e.i, e.j, e.mult}));
  Json folding = Json::array();
  for (const auto& [a, b] : d.folding) folding.push_back(Json::array({a, b}));
  return Json{{"name", d.name}, {"nodes", d.nodes}, {"marks", d.marks}, {"edges", edges}, {"folding", folding}};
}

/// {nodes, marks, edges: [[i, j, mult]], folding: [[i, j]]}
inline MarkedDiagram diagram_from_json(const Json& j) {
  MarkedDiagram d;
  try {
    d.name = j.value("name", std::string("custom"));
    d.nodes = j.at("nodes").get<std::vector<std::string>>();
    d.marks = j.at("marks").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) fail(ErrorCode::ParseError, "edges are [i, j] or [i, j, mult]");
      d.edges.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<int>() : 1});
    }
    if (j.contains("folding")) {
      for (const auto& p : j.at("folding")) d.folding.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    }
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("diagram: ") + ex.what());
  }
  d.validate();
  return d;
}

}  // namespace e6kit
