#pragma once

// Kac coordinates on marked affine diagrams and recognition of the residual
// (centralizer) Dynkin diagram.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "e6kit/error.hpp"

namespace e6kit {

/// Edge i - j. For mult > 1 node i is the long root.
struct DiagramEdge {
  int i = 0;
  int j = 0;
  int mult = 1;
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct MarkedDiagram {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<int> marks;
  std::vector<DiagramEdge> edges;
  std::vector<std::pair<int, int>> folding;

  std::size_t size() const { return nodes.size(); }

  void validate() const {
    if (nodes.empty()) fail(ErrorCode::InvalidArgument, "diagram has no nodes");
    if (marks.size() != nodes.size()) fail(ErrorCode::InvalidArgument, "one mark per node");
    for (int m : marks) {
      if (m < 1) fail(ErrorCode::InvalidArgument, "marks must be positive");
    }
    auto in_range = [&](int k) { return k >= 0 && static_cast<std::size_t>(k) < nodes.size(); };
    for (const auto& e : edges) {
      if (!in_range(e.i) || !in_range(e.j) || e.i == e.j) fail(ErrorCode::InvalidArgument, "bad edge");
      if (e.mult < 1 || e.mult > 3) fail(ErrorCode::InvalidArgument, "edge multiplicity must be 1..3");
    }
    for (const auto& [a, b] : folding) {
      if (!in_range(a) || !in_range(b) || a == b) fail(ErrorCode::InvalidArgument, "bad folding pair");
      if (marks[a] != marks[b]) fail(ErrorCode::InvalidArgument, "folded nodes must share a mark");
    }
  }
};

/// Extended E6: marks (1,1,2,3,2,2,1), chain 1-2-3-5-6 with branch 3-4-0.
inline MarkedDiagram e6_affine() {
  return {"e6~",
          {"rho0", "rho1", "rho2", "rho3", "rho4", "rho5", "rho6"},
          {1, 1, 2, 3, 2, 2, 1},
          {{1, 2, 1}, {2, 3, 1}, {3, 5, 1}, {5, 6, 1}, {3, 4, 1}, {4, 0, 1}},
          {}};
}

/// The same diagram folded by rho1 ~ rho6, rho2 ~ rho5.
inline MarkedDiagram e6_twisted() {
  MarkedDiagram d = e6_affine();
  d.name = "e6~2";
  d.folding = {{1, 6}, {2, 5}};
  return d;
}

inline MarkedDiagram builtin_diagram(const std::string& name) {
  if (name == "e6~") return e6_affine();
  if (name == "e6~2") return e6_twisted();
  fail(ErrorCode::InvalidArgument, "unknown built-in diagram '" + name + "'");
}

struct DynkinComponent {
  std::string type;  // e.g. "D5"
  std::vector<int> nodes;
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

struct KacSolution {
  std::vector<int> s;
  int m = 0;
  bool gcd_one = false;
  bool folded = false;
  std::vector<DynkinComponent> residual;

  std::string residual_type() const {
    if (residual.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      if (i) out += "x";
      out += residual[i].type;
    }
    return out;
  }
};

/// Undirected graph with optional long/short information on multiple edges.
struct SimpleDiagram {
  std::vector<int> labels;  // original node ids (or orbit representatives)
  std::vector<DiagramEdge> edges;  // indices into labels
};

namespace detail {

inline std::string classify_component(const std::vector<int>& comp, const std::vector<DiagramEdge>& edges) {
  const int n = static_cast<int>(comp.size());
  std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (neighbour, edge index)
  for (int v : comp) adj[v];
  int multi = 0;
  int edge_count = 0;
  const DiagramEdge* multi_edge = nullptr;
  for (const auto& e : edges) {
    if (!adj.count(e.i) || !adj.count(e.j)) continue;
    adj[e.i].push_back({e.j, e.mult});
    adj[e.j].push_back({e.i, e.mult});
    ++edge_count;
    if (e.mult > 1) {
      ++multi;
      multi_edge = &e;
    }
  }
  if (edge_count != n - 1) fail(ErrorCode::UnrecognizedType, "component contains a cycle");
  std::vector<int> degree3;
  for (const auto& [v, nb] : adj) {
    if (nb.size() > 3) fail(ErrorCode::UnrecognizedType, "node of degree > 3");
    if (nb.size() == 3) degree3.push_back(v);
  }
  if (n == 1) return "A1";
  if (multi == 0) {
    if (degree3.empty()) return "A" + std::to_string(n);
    if (degree3.size() > 1) fail(ErrorCode::UnrecognizedType, "more than one branch node");
    int centre = degree3[0];
    std::vector<int> arms;
    for (const auto& [start, mult] : adj[centre]) {
      (void)mult;
      int len = 1, prev = centre, cur = start;
      while (adj[cur].size() == 2) {
        int next = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    if (arms == std::vector<int>{1, 2, 2}) return "E6";
    if (arms == std::vector<int>{1, 2, 3}) return "E7";
    if (arms == std::vector<int>{1, 2, 4}) return "E8";
    fail(ErrorCode::UnrecognizedType, "unsupported branched diagram");
  }
  if (multi > 1 || !degree3.empty()) fail(ErrorCode::UnrecognizedType, "unsupported non-simply-laced diagram");
  if (multi_edge->mult == 3) {
    if (n == 2) return "G2";
    fail(ErrorCode::UnrecognizedType, "triple edge outside G2");
  }
  if (n == 2) return "B2";
  const int long_node = multi_edge->i, short_node = multi_edge->j;
  const bool long_end = adj[long_node].size() == 1, short_end = adj[short_node].size() == 1;
  if (short_end) return "B" + std::to_string(n);
  if (long_end) return "C" + std::to_string(n);
  if (n == 4) return "F4";
  fail(ErrorCode::UnrecognizedType, "double edge in the interior of a long chain");
}

}  // namespace detail

/// Connected components of the diagram induced on `keep`, each typed.
inline std::vector<DynkinComponent> classify_diagram(const std::vector<int>& keep, const std::vector<DiagramEdge>& edges) {
  std::set<int> kept(keep.begin(), keep.end());
  std::vector<DiagramEdge> induced;
  for (const auto& e : edges) {
    if (kept.count(e.i) && kept.count(e.j)) induced.push_back(e);
  }
  std::map<int, int> parent;
  for (int v : kept) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : induced) parent[find(e.i)] = find(e.j);
  std::map<int, std::vector<int>> groups;
  for (int v : kept) groups[find(v)].push_back(v);
  std::vector<DynkinComponent> out;
  for (auto& [root, comp] : groups) {
    (void)root;
    out.push_back({detail::classify_component(comp, induced), comp});
  }
  std::sort(out.begin(), out.end(), [](const DynkinComponent& a, const DynkinComponent& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return a.type < b.type;
  });
  return out;
}

/// Orbit representatives (smallest node of each orbit) and the folded edges.
/// An orbit of size 2 joined to a fixed node by two edges gives a double edge
/// with the orbit as the long end.
inline SimpleDiagram fold(const MarkedDiagram& d) {
  std::vector<int> rep(d.size());
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& [a, b] : d.folding) rep[std::max(a, b)] = std::min(a, b);
  std::map<int, int> orbit_size;
  for (std::size_t v = 0; v < d.size(); ++v) ++orbit_size[rep[v]];
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : d.edges) {
    int a = rep[e.i], b = rep[e.j];
    if (a == b) fail(ErrorCode::UnrecognizedType, "folding identifies adjacent nodes");
    ++count[{std::min(a, b), std::max(a, b)}];
  }
  SimpleDiagram out;
  for (const auto& [r, sz] : orbit_size) {
    (void)sz;
    out.labels.push_back(r);
  }
  for (const auto& [key, c] : count) {
    auto [a, b] = key;
    int sa = orbit_size[a], sb = orbit_size[b];
    if (sa == sb) {
      out.edges.push_back({a, b, 1});
    } else {
      int big = sa > sb ? a : b, small = sa > sb ? b : a;
      int mult = c == std::max(sa, sb) ? std::max(sa, sb) / std::min(sa, sb) : 1;
      out.edges.push_back({big, small, mult});
    }
  }
  return out;
}

inline std::vector<DynkinComponent> residual_diagram(const MarkedDiagram& d, const std::vector<int>& s, bool folded) {
  if (s.size() != d.size()) fail(ErrorCode::InvalidArgument, "Kac tuple length must match the diagram");
  if (!folded) {
    std::vector<int> keep;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) keep.push_back(static_cast<int>(i));
    }
    return classify_diagram(keep, d.edges);
  }
  SimpleDiagram f = fold(d);
  std::vector<int> keep;
  for (int r : f.labels) {
    if (s[r] == 0) keep.push_back(r);
  }
  return classify_diagram(keep, f.edges);
}

/// Node permutations preserving marks and edges (with multiplicity and direction).
inline std::vector<std::vector<int>> diagram_automorphisms(const MarkedDiagram& d) {
  std::set<std::tuple<int, int, int>> edge_set;
  for (const auto& e : d.edges) {
    edge_set.insert({e.i, e.j, e.mult});
    if (e.mult == 1) edge_set.insert({e.j, e.i, 1});
  }
  std::vector<int> perm(d.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t v = 0; v < d.size() && ok; ++v) ok = d.marks[perm[v]] == d.marks[v];
    for (const auto& e : d.edges) {
      if (!ok) break;
      ok = edge_set.count({perm[e.i], perm[e.j], e.mult}) > 0;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Keeps the lexicographically largest tuple of each orbit under the diagram
/// automorphisms (order of `solutions` is preserved).
inline std::vector<KacSolution> reduce_by_symmetry(const MarkedDiagram& d, const std::vector<KacSolution>& solutions) {
  auto autos = diagram_automorphisms(d);
  std::vector<KacSolution> out;
  std::set<std::vector<int>> seen;
  for (const auto& sol : solutions) {
    std::vector<int> best = sol.s;
    for (const auto& p : autos) {
      std::vector<int> img(sol.s.size());
      for (std::size_t v = 0; v < sol.s.size(); ++v) img[p[v]] = sol.s[v];
      best = std::max(best, img);
    }
    if (seen.insert(best).second) out.push_back(sol);
  }
  return out;
}

/// All s >= 0 with sum n_i s_i = m, in descending lexicographic order.
/// Folded mode keeps tuples constant on folding orbits whose fixed-node
/// coordinates are even.
inline std::vector<KacSolution> enumerate(const MarkedDiagram& d, int m, bool gcd_filter, bool folded) {
  d.validate();
  if (m < 1) fail(ErrorCode::InvalidArgument, "order m must be >= 1");
  if (folded && d.folding.empty()) fail(ErrorCode::InvalidArgument, "diagram has no folding");
  std::vector<bool> moved(d.size(), false);
  for (const auto& [a, b] : d.folding) moved[a] = moved[b] = true;
  std::vector<KacSolution> out;
  std::vector<int> s(d.size(), 0);
  // Depth-first over coordinates, largest value first.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == d.size()) {
      if (remaining != 0) return;
      if (folded) {
        for (const auto& [a, b] : d.folding) {
          if (s[a] != s[b]) return;
        }
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (!moved[k] && s[k] % 2 != 0) return;
        }
      }
      int g = 0;
      for (int v : s) g = std::gcd(g, v);
      if (gcd_filter && g != 1) return;
      KacSolution sol;
      sol.s = s;
      sol.m = m;
      sol.gcd_one = g == 1;
      sol.folded = folded;
      sol.residual = residual_diagram(d, s, folded);
      out.push_back(std::move(sol));
      return;
    }
    for (int v = remaining / d.marks[i]; v >= 0; --v) {
      s[i] = v;
      self(self, i + 1, remaining - v * d.marks[i]);
    }
    s[i] = 0;
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace e6kit
