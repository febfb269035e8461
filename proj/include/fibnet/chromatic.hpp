#pragma once

// Exact chromatic polynomials by deletion-contraction, evaluation at phi+2,
// a brute-force coloring oracle, and the estimators that turn sampled counts
// into chromatic-polynomial estimates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fib.hpp"
#include "graph.hpp"

namespace fibnet {

//! chi(G, k) = sum_i coeffs[i] k^i with integer coefficients.
struct ChromPoly {
  std::vector<long long> coeffs;

  static ChromPoly zero() { return {}; }
  static ChromPoly monomial(int power) {
    ChromPoly p;
    p.coeffs.assign(static_cast<std::size_t>(power) + 1, 0);
    p.coeffs.back() = 1;
    return p;
  }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  ChromPoly& operator-=(const ChromPoly& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    trim();
    return *this;
  }
  bool operator==(const ChromPoly& o) const { return coeffs == o.coeffs; }
};

//! Horner evaluation in double precision.
inline double eval_poly(const ChromPoly& p, double k) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;)
    acc = acc * k + static_cast<double>(p.coeffs[i]);
  return acc;
}

inline long long eval_poly_int(const ChromPoly& p, long long k) {
  long long acc = 0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;)
    acc = acc * k + p.coeffs[i];
  return acc;
}

namespace detail {

// normalized edge list with self-loop flag and parallel edges collapsed
struct Reduced {
  int n = 0;
  bool self_loop = false;
  std::vector<std::pair<int, int>> edges;
};

inline Reduced reduce(int n, const std::vector<std::pair<int, int>>& edges) {
  Reduced r;
  r.n = n;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) {
      r.self_loop = true;
      continue;
    }
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) r.edges.push_back({u, v});
  }
  return r;
}

inline ChromPoly chrom_rec(int n, std::vector<std::pair<int, int>> edges) {
  const Reduced r = reduce(n, edges);
  if (r.self_loop) return ChromPoly::zero();
  if (r.edges.empty()) return ChromPoly::monomial(n);

  // product over connected components keeps the recursion shallow
  {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      comp[static_cast<std::size_t>(s)] = nc;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto& [u, v] : r.edges) {
          int y = -1;
          if (u == x) y = v;
          else if (v == x) y = u;
          if (y >= 0 && comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = nc;
            stack.push_back(y);
          }
        }
      }
      ++nc;
    }
    if (nc > 1) {
      // chi(G1 u G2) = chi(G1) chi(G2)
      ChromPoly acc = ChromPoly::monomial(0);
      for (int c = 0; c < nc; ++c) {
        std::map<int, int> remap;
        for (int v = 0; v < n; ++v)
          if (comp[static_cast<std::size_t>(v)] == c) {
            const int id = static_cast<int>(remap.size());
            remap[v] = id;
          }
        std::vector<std::pair<int, int>> sub;
        for (auto& [u, v] : r.edges)
          if (comp[static_cast<std::size_t>(u)] == c)
            sub.push_back({remap.at(u), remap.at(v)});
        const ChromPoly pc = chrom_rec(static_cast<int>(remap.size()), sub);
        // multiply acc by pc
        ChromPoly prod;
        prod.coeffs.assign(acc.coeffs.size() + pc.coeffs.size(), 0);
        for (std::size_t i = 0; i < acc.coeffs.size(); ++i)
          for (std::size_t j = 0; j < pc.coeffs.size(); ++j)
            prod.coeffs[i + j] += acc.coeffs[i] * pc.coeffs[j];
        prod.trim();
        acc = std::move(prod);
      }
      return acc;
    }
  }

  // pick the edge at the highest-degree endpoint; disconnects fastest
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto& [u, v] : r.edges) {
    deg[static_cast<std::size_t>(u)]++;
    deg[static_cast<std::size_t>(v)]++;
  }
  std::size_t best = 0;
  int best_key = -1;
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    const int key = std::max(deg[static_cast<std::size_t>(r.edges[i].first)],
                             deg[static_cast<std::size_t>(r.edges[i].second)]);
    if (key > best_key) {
      best_key = key;
      best = i;
    }
  }
  const auto [u, v] = r.edges[best];

  // deletion
  std::vector<std::pair<int, int>> del = r.edges;
  del.erase(del.begin() + static_cast<std::ptrdiff_t>(best));
  ChromPoly res = chrom_rec(n, del);

  // contraction: merge v into u, move the last vertex id into v's slot
  const auto remap = [u = u, v = v, n](int w) {
    if (w == v) return u;
    if (w == n - 1) return v;  // only reachable when v != n-1
    return w;
  };
  std::vector<std::pair<int, int>> con;
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    if (i == best) continue;
    con.push_back({remap(r.edges[i].first), remap(r.edges[i].second)});
  }
  res -= chrom_rec(n - 1, con);
  return res;
}

}  // namespace detail

//! Exact chromatic polynomial via deletion-contraction. Self-loop gives the
//! zero polynomial; parallel edges collapse; edgeless graph gives k^{|V|}.
inline ChromPoly chromatic_poly(const Multigraph& g) {
  if (g.n_vertices > 14) throw capacity_error("chromatic_poly: > 14 vertices");
  return detail::chrom_rec(g.n_vertices, g.edges);
}

//! Brute-force proper-coloring count with k colors.
inline long long coloring_oracle(const Multigraph& g, int k) {
  if (g.n_vertices > 9) throw capacity_error("coloring_oracle: > 9 vertices");
  if (g.has_self_loop()) return 0;
  long long count = 0;
  std::vector<int> color(static_cast<std::size_t>(g.n_vertices), 0);
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i < g.n_vertices; ++i) t *= k;
    return t;
  }();
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int v = 0; v < g.n_vertices; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(c % k);
      c /= k;
    }
    bool ok = true;
    for (auto& [u, v] : g.edges)
      if (color[static_cast<std::size_t>(u)] ==
          color[static_cast<std::size_t>(v)]) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Estimators
// ---------------------------------------------------------------------------

struct ChromEstimate {
  std::string class_id;
  double mean = 0.0;
  double stderr_ = 0.0;
  int multiplicity = 0;
  double exact = 0.0;  // theory value of chi(dual, phi+2)
};

struct FilteredCounts {
  SampleCounts counts;   // valid words only, ancillas marginalized out
  double invalid_mass = 0.0;
  long long total = 0;   // retained shots
};

//! Drop branching-invalid words; ancilla bits are traced out first.
inline FilteredCounts filter_invalid(const SampleCounts& counts,
                                     const LatticeLayout& lay,
                                     const std::vector<int>& ancillas = {}) {
  const int n = lay.n_qubits();
  FilteredCounts out;
  long long kept = 0, dropped = 0;
  std::set<int> anc(ancillas.begin(), ancillas.end());
  for (const auto& [word, c] : counts) {
    std::string w;
    w.reserve(static_cast<std::size_t>(n));
    for (std::size_t q = 0; q < word.size(); ++q)
      if (!anc.count(static_cast<int>(q))) w.push_back(word[q]);
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("filter_invalid: word length mismatch");
    if (validate_branching(lay, w)) {
      out.counts[w] += c;
      kept += c;
    } else {
      dropped += c;
    }
  }
  out.total = kept;
  out.invalid_mass =
      (kept + dropped) ? static_cast<double>(dropped) / (kept + dropped) : 0.0;
  return out;
}

namespace detail {

struct ClassView {
  std::vector<IsoClass> classes;
  std::vector<double> exact;  // chi(dual, phi+2) per class
};

inline ClassView classes_with_exact(const LatticeLayout& lay) {
  ClassView v;
  v.classes = iso_classes(lay);
  for (const auto& cl : v.classes) {
    const Multigraph dual = config_dual(lay, cl.representative);
    v.exact.push_back(eval_poly(chromatic_poly(dual), golden_ratio() + 2.0));
  }
  // refine A/B letters so classes of equal cycle count are ordered by exact
  // value (the convention the class polynomials are listed in)
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < v.classes.size(); ++i) {
    std::string base = v.classes[i].class_id;
    while (!base.empty() && base.back() >= 'A' && base.back() <= 'Z')
      base.pop_back();
    groups[base].push_back(i);
  }
  for (auto& [base, idx] : groups) {
    if (idx.size() < 2) continue;
    std::vector<std::size_t> order = idx;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return v.exact[a] < v.exact[b];
    });
    for (std::size_t r = 0; r < order.size(); ++r)
      v.classes[order[r]].class_id =
          base + std::string(1, static_cast<char>('A' + r));
  }
  return v;
}

struct ClassCounts {
  std::vector<double> per_member_mean;  // C-bar([G])
  std::vector<double> stderr_counts;    // sd of member counts / sqrt(m)
  std::vector<std::vector<long long>> member_counts;
};

inline ClassCounts tally(const ClassView& view, const SampleCounts& counts) {
  ClassCounts t;
  for (const auto& cl : view.classes) {
    std::vector<long long> mc;
    for (const auto& w : cl.members) {
      auto it = counts.find(w);
      mc.push_back(it == counts.end() ? 0 : it->second);
    }
    const double m = static_cast<double>(mc.size());
    double mean = 0.0;
    for (long long c : mc) mean += static_cast<double>(c);
    mean /= m;
    double var = 0.0;
    if (mc.size() > 1) {
      for (long long c : mc) var += (c - mean) * (c - mean);
      var /= (m - 1.0);  // Bessel
    }
    t.per_member_mean.push_back(mean);
    t.stderr_counts.push_back(mc.size() > 1 ? std::sqrt(var / m) : 0.0);
    t.member_counts.push_back(std::move(mc));
  }
  return t;
}

// classes with m = 1 borrow the mean uncertainty of the two 3-cycle classes
inline void fill_singleton_stderr(const ClassView& view,
                                  std::vector<ChromEstimate>& est) {
  double acc = 0.0;
  int n3 = 0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    if (view.classes[i].class_id.rfind("G3", 0) == 0 && est[i].multiplicity > 1) {
      acc += est[i].stderr_;
      ++n3;
    }
  }
  if (n3 == 0) return;
  for (auto& e : est)
    if (e.multiplicity == 1 && e.class_id != "G0") e.stderr_ = acc / n3;
}

}  // namespace detail

//! Vacuum-reference estimator: chi-hat([G]) = (phi+2) C-bar([G]) / C(vac).
inline std::vector<ChromEstimate> estimate_vacuum_ref(
    const SampleCounts& counts, const LatticeLayout& lay) {
  const auto view = detail::classes_with_exact(lay);
  const auto tal = detail::tally(view, counts);
  const double k = golden_ratio() + 2.0;
  double c_vac = -1.0;
  for (std::size_t i = 0; i < view.classes.size(); ++i)
    if (view.classes[i].class_id == "G0") c_vac = tal.per_member_mean[i];
  if (c_vac <= 0.0)
    throw std::runtime_error("estimator undefined: zero vacuum count");
  std::vector<ChromEstimate> est;
  for (std::size_t i = 0; i < view.classes.size(); ++i) {
    ChromEstimate e;
    e.class_id = view.classes[i].class_id;
    e.multiplicity = view.classes[i].multiplicity;
    e.exact = view.exact[i];
    e.mean = k * tal.per_member_mean[i] / c_vac;
    e.stderr_ = k * tal.stderr_counts[i] / c_vac;
    est.push_back(e);
  }
  detail::fill_singleton_stderr(view, est);
  return est;
}

//! Loop-reference estimator: chi-hat([G]) =
//! phi^2 (phi+2) C-bar([G]) / C-bar([loop class]).
inline std::vector<ChromEstimate> estimate_loop_ref(const SampleCounts& counts,
                                                    const LatticeLayout& lay) {
  const auto view = detail::classes_with_exact(lay);
  const auto tal = detail::tally(view, counts);
  const double phi = golden_ratio();
  const double k = phi + 2.0;
  double c_loop = -1.0;
  for (std::size_t i = 0; i < view.classes.size(); ++i)
    if (view.classes[i].class_id == "G1") c_loop = tal.per_member_mean[i];
  if (c_loop <= 0.0)
    throw std::runtime_error("estimator undefined: zero loop-class count");
  std::vector<ChromEstimate> est;
  for (std::size_t i = 0; i < view.classes.size(); ++i) {
    ChromEstimate e;
    e.class_id = view.classes[i].class_id;
    e.multiplicity = view.classes[i].multiplicity;
    e.exact = view.exact[i];
    e.mean = phi * phi * k * tal.per_member_mean[i] / c_loop;
    e.stderr_ = phi * phi * k * tal.stderr_counts[i] / c_loop;
    est.push_back(e);
  }
  detail::fill_singleton_stderr(view, est);
  return est;
}

}  // namespace fibnet
