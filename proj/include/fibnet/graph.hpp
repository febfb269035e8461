#pragma once

// Trivalent string-net graphs: layouts with edge-qubit maps, branching-rule
// validation, valid-bitstring enumeration, isomorphism classes of excited
// subgraphs, and planar dual construction.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "statevec.hpp"

namespace fibnet {

struct TrivalentGraph {
  struct Edge {
    int id, u, v;  // endpoints; tails have one real end and v = -1
  };
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::set<int> tails;                  // edge ids of dangling edges
  std::vector<std::vector<int>> faces;  // edge-id cycles, outer face included

  const Edge& edge(int id) const {
    for (const auto& e : edges)
      if (e.id == id) return e;
    throw std::out_of_range("edge id");
  }
};

struct LatticeLayout {
  TrivalentGraph graph;
  std::map<int, int> qubit_of_edge;  // edge id -> qubit index
  std::string name;

  int n_qubits() const {
    int n = 0;
    for (auto& [e, q] : qubit_of_edge) n = std::max(n, q + 1);
    return n;
  }
  int qubit(int edge_id) const { return qubit_of_edge.at(edge_id); }
};

//! Undirected multigraph used for excited subgraphs and duals. Self-loops
//! are stored as (u, u).
struct Multigraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_self_loop() const {
    for (auto& [u, v] : edges)
      if (u == v) return true;
    return false;
  }
};

namespace detail {

inline std::vector<int> excited_edges(const LatticeLayout& lay,
                                      const std::string& bits) {
  std::vector<int> out;
  for (const auto& e : lay.graph.edges) {
    const int q = lay.qubit(e.id);
    if (bits[static_cast<std::size_t>(q)] == '1') out.push_back(e.id);
  }
  return out;
}

// degree of each vertex in the excited subgraph (tails contribute to their
// anchored end only)
inline std::map<int, int> excited_degrees(const LatticeLayout& lay,
                                          const std::string& bits) {
  std::map<int, int> deg;
  for (int v : lay.graph.vertices) deg[v] = 0;
  for (int id : excited_edges(lay, bits)) {
    const auto& e = lay.graph.edge(id);
    deg[e.u] += 1;
    if (e.v >= 0) deg[e.v] += (e.v == e.u ? 1 : 1);
    if (e.v == e.u) deg[e.u] += 1;  // self-loop counts twice
  }
  return deg;
}

// true if every excited edge of the component containing it lies on a cycle
// (no excited bridges; excited tails are exempt, they terminate at anyons)
inline bool excited_bridgeless(const LatticeLayout& lay,
                               const std::string& bits) {
  std::vector<int> ids;
  for (int id : excited_edges(lay, bits))
    if (!lay.graph.tails.count(id)) ids.push_back(id);
  // adjacency over excited non-tail edges
  std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (other, edge)
  for (int id : ids) {
    const auto& e = lay.graph.edge(id);
    if (e.u == e.v) continue;  // self-loop, never a bridge
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  for (int skip : ids) {
    const auto& e = lay.graph.edge(skip);
    if (e.u == e.v) continue;
    // reachability u -> v without `skip`
    std::set<int> seen{e.u};
    std::vector<int> stack{e.u};
    bool found = false;
    while (!stack.empty() && !found) {
      const int x = stack.back();
      stack.pop_back();
      for (auto& [y, id] : adj[x]) {
        if (id == skip) continue;
        if (y == e.v) { found = true; break; }
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

//! A bitstring is a valid string-net configuration iff every vertex sees
//! 0, 2 or 3 excited edges, no string terminates at a non-tail free end and
//! every excited non-tail edge lies on a closed string (no broken nets).
inline bool validate_branching(const LatticeLayout& lay,
                               const std::string& bits) {
  if (static_cast<int>(bits.size()) != lay.n_qubits())
    throw std::invalid_argument("bitstring length mismatch");
  const auto deg = detail::excited_degrees(lay, bits);
  // full-graph vertex degrees, to recognize internal vs boundary vertices
  std::map<int, int> full;
  for (int v : lay.graph.vertices) full[v] = 0;
  for (const auto& e : lay.graph.edges) {
    full[e.u] += 1;
    if (e.v >= 0) full[e.v] += 1;
    if (e.v == e.u) full[e.u] += 1;
  }
  for (int v : lay.graph.vertices) {
    int d = deg.at(v);
    // tails anchored here may legally carry a string into the vertex
    if (full.at(v) <= 1) {
      // free-standing stub vertex: only vacuum allowed
      if (d != 0) return false;
      continue;
    }
    if (d == 1) return false;
    if (d > 3) return false;
  }
  return detail::excited_bridgeless(lay, bits);
}

//! All branching-valid bitstrings, lexicographically ordered as text.
inline std::vector<std::string> enumerate_valid(const LatticeLayout& lay) {
  const int n = lay.n_qubits();
  if (n > 20) throw capacity_error("enumerate_valid: > 20 qubits");
  std::vector<std::string> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const std::string s = bits_to_string(b, n);
    if (validate_branching(lay, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Topological classification of excited subgraphs
// ---------------------------------------------------------------------------

//! Excited subgraph of a configuration as a multigraph over the layout's
//! vertices (tails in state 1 become pendant edges to a fresh vertex).
inline Multigraph excited_subgraph(const LatticeLayout& lay,
                                   const std::string& bits) {
  std::map<int, int> vid;
  Multigraph g;
  auto vert = [&](int v) {
    auto it = vid.find(v);
    if (it != vid.end()) return it->second;
    vid[v] = g.n_vertices;
    return g.n_vertices++;
  };
  for (int id : detail::excited_edges(lay, bits)) {
    const auto& e = lay.graph.edge(id);
    const int a = vert(e.u);
    const int b = (e.v >= 0) ? vert(e.v) : g.n_vertices++;
    g.edges.push_back({a, b});
  }
  return g;
}

namespace detail {

// suppress degree-2 vertices: homeomorphism-invariant multigraph, plus the
// count of free circles (components that smooth away entirely)
struct Smoothed {
  Multigraph g;
  int circles = 0;
};

inline Smoothed smooth(const Multigraph& in) {
  // adjacency with edge multiplicity via incidence lists
  std::vector<std::vector<std::pair<int, int>>> inc(in.n_vertices);
  for (std::size_t i = 0; i < in.edges.size(); ++i) {
    auto [u, v] = in.edges[i];
    inc[u].push_back({static_cast<int>(i), v});
    if (v != u) inc[v].push_back({static_cast<int>(i), u});
    else inc[u].push_back({static_cast<int>(i), u});
  }
  std::vector<int> deg(in.n_vertices, 0);
  for (int v = 0; v < in.n_vertices; ++v) deg[v] = static_cast<int>(inc[v].size());

  Smoothed out;
  std::vector<int> keep_id(in.n_vertices, -1);
  for (int v = 0; v < in.n_vertices; ++v)
    if (deg[v] != 2 && deg[v] != 0) keep_id[v] = out.g.n_vertices++;

  std::vector<bool> used(in.edges.size(), false);
  // walk arcs between kept vertices
  for (int v = 0; v < in.n_vertices; ++v) {
    if (keep_id[v] < 0) continue;
    for (auto& [eid, nxt] : inc[v]) {
      if (used[eid]) continue;
      used[eid] = true;
      int prev = v, cur = nxt;
      while (cur != -1 && keep_id[cur] < 0) {
        // degree-2 vertex: continue along the other edge
        int next_edge = -1, next_v = -1;
        for (auto& [e2, w] : inc[cur]) {
          if (used[e2]) continue;
          next_edge = e2;
          next_v = w;
          break;
        }
        if (next_edge < 0) break;  // closed back on itself
        used[next_edge] = true;
        prev = cur;
        cur = next_v;
      }
      (void)prev;
      if (cur != -1 && keep_id[cur] >= 0)
        out.g.edges.push_back({keep_id[v], keep_id[cur]});
      else if (cur == v)
        out.g.edges.push_back({keep_id[v], keep_id[v]});
    }
  }
  // components made purely of degree-2 vertices are circles
  std::vector<int> comp(in.n_vertices, -1);
  int nc = 0;
  for (int v = 0; v < in.n_vertices; ++v) {
    if (comp[v] >= 0 || deg[v] == 0) continue;
    std::vector<int> stack{v};
    comp[v] = nc;
    bool all2 = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (deg[x] != 2) all2 = false;
      for (auto& [eid, w] : inc[x])
        if (w != -1 && comp[w] < 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    if (all2) out.circles += 1;
    ++nc;
  }
  return out;
}

inline std::vector<std::vector<int>> adjacency_counts(const Multigraph& g) {
  std::vector<std::vector<int>> a(g.n_vertices,
                                  std::vector<int>(g.n_vertices, 0));
  for (auto& [u, v] : g.edges) {
    if (u == v) a[u][u] += 1;
    else {
      a[u][v] += 1;
      a[v][u] += 1;
    }
  }
  return a;
}

inline bool multigraph_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n_vertices != b.n_vertices || a.edges.size() != b.edges.size())
    return false;
  const auto A = adjacency_counts(a), B = adjacency_counts(b);
  auto degs = [](const std::vector<std::vector<int>>& m) {
    std::vector<int> d;
    for (auto& row : m) d.push_back(std::accumulate(row.begin(), row.end(), 0));
    return d;
  };
  auto da = degs(A), db = degs(B);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> perm(static_cast<std::size_t>(a.n_vertices));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n_vertices && ok; ++i) {
      if (da[i] != db[perm[static_cast<std::size_t>(i)]]) { ok = false; break; }
      for (int j = 0; j < a.n_vertices; ++j)
        if (A[i][j] != B[perm[static_cast<std::size_t>(i)]]
                        [perm[static_cast<std::size_t>(j)]]) {
          ok = false;
          break;
        }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace detail

//! Exact topological equivalence of two excited subgraphs: isomorphism of the
//! degree-2-smoothed multigraphs plus matching free-circle counts.
inline bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n_vertices > 12 || b.n_vertices > 12)
    throw capacity_error("is_isomorphic: > 12 vertices");
  const auto sa = detail::smooth(a);
  const auto sb = detail::smooth(b);
  if (sa.circles != sb.circles) return false;
  return detail::multigraph_isomorphic(sa.g, sb.g);
}

struct IsoClass {
  std::string class_id;
  std::string representative;        // member bitstring
  std::vector<std::string> members;  // all bitstrings in the class
  int multiplicity = 0;
};

//! Planar dual: one vertex per face (outer included), one dual edge per
//! primal edge joining its two adjacent faces. Loops and multi-edges are kept.
inline Multigraph dual_graph(const TrivalentGraph& g) {
  if (g.faces.empty()) throw std::invalid_argument("dual_graph: no face data");
  Multigraph d;
  d.n_vertices = static_cast<int>(g.faces.size());
  std::map<int, std::vector<int>> face_of_edge;
  for (std::size_t f = 0; f < g.faces.size(); ++f)
    for (int e : g.faces[f]) face_of_edge[e].push_back(static_cast<int>(f));
  for (const auto& e : g.edges) {
    if (g.tails.count(e.id)) continue;  // tails separate nothing
    auto it = face_of_edge.find(e.id);
    if (it == face_of_edge.end() || it->second.size() != 2)
      throw std::invalid_argument("dual_graph: edge not on exactly two faces");
    d.edges.push_back({it->second[0], it->second[1]});
  }
  return d;
}

//! Dual of the excited subgraph of a configuration, on the sphere: faces of
//! the subgraph are unions of lattice faces merged across unexcited edges.
inline Multigraph config_dual(const LatticeLayout& lay,
                              const std::string& bits) {
  const auto& g = lay.graph;
  const int nf = static_cast<int>(g.faces.size());
  std::vector<int> parent(static_cast<std::size_t>(nf));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::map<int, std::vector<int>> face_of_edge;
  for (int f = 0; f < nf; ++f)
    for (int e : g.faces[static_cast<std::size_t>(f)])
      face_of_edge[e].push_back(f);
  for (const auto& e : g.edges) {
    if (g.tails.count(e.id)) continue;
    const int q = lay.qubit(e.id);
    if (bits[static_cast<std::size_t>(q)] == '1') continue;
    auto& fs = face_of_edge.at(e.id);
    parent[static_cast<std::size_t>(find(fs[0]))] = find(fs[1]);
  }
  std::map<int, int> vid;
  Multigraph d;
  for (int f = 0; f < nf; ++f) {
    const int r = find(f);
    if (!vid.count(r)) vid[r] = d.n_vertices++;
  }
  for (const auto& e : g.edges) {
    if (g.tails.count(e.id)) continue;
    const int q = lay.qubit(e.id);
    if (bits[static_cast<std::size_t>(q)] != '1') continue;
    auto& fs = face_of_edge.at(e.id);
    d.edges.push_back({vid.at(find(fs[0])), vid.at(find(fs[1]))});
  }
  return d;
}

//! Partition of enumerate_valid by excited-subgraph topology. Class ids:
//! G0 for the vacuum, then G<n>[letter] where n is the number of independent
//! cycles and the letter orders classes of equal n.
inline std::vector<IsoClass> iso_classes(const LatticeLayout& lay);

namespace detail {

inline int cyclomatic(const Multigraph& g) {
  // E - V + C over non-isolated vertices
  std::vector<int> parent(static_cast<std::size_t>(g.n_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<bool> present(static_cast<std::size_t>(g.n_vertices), false);
  for (auto& [u, v] : g.edges) {
    present[static_cast<std::size_t>(u)] = present[static_cast<std::size_t>(v)] = true;
    parent[static_cast<std::size_t>(find(u))] = find(v);
  }
  int nv = 0;
  std::set<int> comps;
  for (int v = 0; v < g.n_vertices; ++v)
    if (present[static_cast<std::size_t>(v)]) {
      ++nv;
      comps.insert(find(v));
    }
  return static_cast<int>(g.edges.size()) - nv + static_cast<int>(comps.size());
}

}  // namespace detail

inline std::vector<IsoClass> iso_classes(const LatticeLayout& lay) {
  const auto valid = enumerate_valid(lay);
  std::vector<IsoClass> classes;
  std::vector<Multigraph> reps;
  for (const auto& w : valid) {
    const Multigraph sub = excited_subgraph(lay, w);
    bool placed = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (is_isomorphic(sub, reps[c])) {
        classes[c].members.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) {
      IsoClass cl;
      cl.representative = w;
      cl.members = {w};
      classes.push_back(cl);
      reps.push_back(sub);
    }
  }
  // name classes: G0 vacuum, then G<n><letter> ordered by cyclomatic number
  // and by the subgraph-dual chromatic value (ascending) within equal n;
  // the value ordering is applied by the caller via `exact` fields, here we
  // order by (cyclomatic, edge count, members) which is refined further in
  // chromatic.hpp when exact values are attached.
  struct Key {
    int cyc;
    std::size_t idx;
  };
  std::vector<Key> keys;
  for (std::size_t c = 0; c < classes.size(); ++c)
    keys.push_back({detail::cyclomatic(reps[c]), c});
  std::stable_sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    if (a.cyc != b.cyc) return a.cyc < b.cyc;
    return reps[a.idx].edges.size() < reps[b.idx].edges.size();
  });
  std::vector<IsoClass> out;
  int prev_cyc = -1;
  int letter = 0;
  // count classes per cyclomatic number to decide whether letters are needed
  std::map<int, int> per_cyc;
  for (auto& k : keys) per_cyc[k.cyc] += 1;
  for (auto& k : keys) {
    IsoClass cl = classes[k.idx];
    if (k.cyc == prev_cyc) ++letter;
    else letter = 0;
    prev_cyc = k.cyc;
    if (k.cyc == 0 && cl.members.size() == 1 && cl.representative.find('1') ==
                                                    std::string::npos)
      cl.class_id = "G0";
    else if (per_cyc[k.cyc] == 1)
      cl.class_id = "G" + std::to_string(k.cyc);
    else
      cl.class_id = "G" + std::to_string(k.cyc) +
                    std::string(1, static_cast<char>('A' + letter));
    cl.multiplicity = static_cast<int>(cl.members.size());
    out.push_back(std::move(cl));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in layouts
// ---------------------------------------------------------------------------

//! Theta graph: two vertices joined by three edges; the minimal two-plaquette
//! string-net (3 qubits).
inline LatticeLayout layout_min3() {
  LatticeLayout lay;
  lay.name = "min3";
  lay.graph.vertices = {0, 1};
  lay.graph.edges = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};
  lay.graph.faces = {{0, 1}, {1, 2}, {0, 2}};  // left, right, outer
  lay.qubit_of_edge = {{0, 0}, {1, 1}, {2, 2}};
  return lay;
}

//! Theta graph with the middle edge subdivided (4 qubits): the two-plaquette
//! substrate of the anyon experiments. Edge 1 (Q2) and edge 3 (Q4) form the
//! shared middle path.
inline LatticeLayout layout_two_plaquette() {
  LatticeLayout lay;
  lay.name = "two_plaquette";
  lay.graph.vertices = {0, 1, 2};
  lay.graph.edges = {{0, 0, 1}, {1, 0, 2}, {2, 0, 1}, {3, 2, 1}};
  lay.graph.faces = {{0, 1, 3}, {2, 1, 3}, {0, 2}};
  lay.qubit_of_edge = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  return lay;
}

//! One free loop (a bead): a single edge closing on one vertex.
inline LatticeLayout layout_single_loop() {
  LatticeLayout lay;
  lay.name = "single_loop";
  lay.graph.vertices = {0};
  lay.graph.edges = {{0, 0, 0}};
  lay.graph.faces = {{0}, {0}};  // inside, outside
  lay.qubit_of_edge = {{0, 0}};
  return lay;
}

//! The 2x2 plaquette lattice (9 qubits): four plaquettes with the face
//! adjacency of a triangular prism, qubits numbered along the DSNP strand
//! that prepares it (see dsnp builders).
inline LatticeLayout layout_lattice2x2() {
  LatticeLayout lay;
  lay.name = "lattice2x2";
  lay.graph.vertices = {0, 1, 2, 3, 4, 5};
  lay.graph.edges = {
      {0, 0, 5}, {1, 0, 4}, {2, 4, 5}, {3, 0, 2}, {4, 3, 4},
      {5, 5, 1}, {6, 2, 3}, {7, 3, 1}, {8, 1, 2},
  };
  lay.graph.faces = {
      {0, 1, 2},     // triangle plaquette
      {0, 5, 8, 3},  // quad plaquettes
      {1, 3, 6, 4},
      {2, 4, 7, 5},
      {6, 8, 7},     // outer triangle
  };
  for (int e = 0; e < 9; ++e) lay.qubit_of_edge[e] = e;
  return lay;
}

}  // namespace fibnet
