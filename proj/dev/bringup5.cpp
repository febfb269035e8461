// Braid bring-up, staged: channel block on (11,12), fusion walk for (10,11).
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <vector>

#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/statevec.hpp"

using namespace fibnet;

struct Move {
  int kind;  // 0 fmove, 1 flip, 2 flip*
  int edge;
  int tail;
};

static void apply_move(NetBuilder& b, const Move& m) {
  if (m.kind == 0) b.fmove(m.edge);
  else b.tail_flip(m.tail, m.edge, m.kind == 2);
}

static NetBuilder make_pairs() {
  NetBuilder b(14, "braid");
  const auto [w0, w1] = b.bead2(0, 1);
  const auto xs = b.bead_cycle({3, 4, 5, 6});
  const auto [y0, y1] = b.bead2(8, 9);
  b.tail(10, w0, 1, true);
  b.connector(2, w1, 2, xs[0], 1);
  b.tail(11, xs[1], 2, true);
  b.tail(12, xs[2], 1, true);
  b.connector(7, xs[3], 2, y0, 1);
  b.tail(13, y1, 2, true);
  b.excite(2);
  b.excite(7);
  b.excite(1); b.fmove(1); b.rmove(0, 1, true);
  b.excite(3); b.fmove(3); b.rmove(4, 3, true);
  b.excite(5); b.fmove(5); b.rmove(4, 5, true);
  b.excite(9); b.fmove(9); b.rmove(8, 9, true);
  return b;
}

struct Found {
  std::vector<Move> seq;
  int root = -1;
  double p1 = -1;
};

// iterative-deepening DFS; simulate only when the tails meet
static bool find_fusion(const NetBuilder& start, int ta, int tb, int max_depth,
                        const std::function<bool(double)>& pred, Found* out,
                        long long* visited) {
  struct Frame {
    NetBuilder b;
    std::vector<Move> seq;
  };
  std::function<bool(const Frame&, int)> dfs = [&](const Frame& f,
                                                   int left) -> bool {
    ++*visited;
    int root = -1;
    if (f.b.tails_share_vertex(ta, tb, &root)) {
      StateVector sv = run(f.b.circuit());
      const double p1 = prob_one(sv, root);
      if (pred(p1)) {
        out->seq = f.seq;
        out->root = root;
        out->p1 = p1;
        return true;
      }
    }
    if (left == 0) return false;
    std::vector<Move> cands;
    for (int t : {ta, tb})
      for (int e : f.b.edges_at_anchor(t)) {
        bool dup = false;
        for (auto& c : cands)
          if (c.kind == 0 && c.edge == e) dup = true;
        if (!dup) cands.push_back({0, e, -1});
        cands.push_back({1, e, t});
        cands.push_back({2, e, t});
      }
    for (const Move& m : cands) {
      if (!f.seq.empty()) {
        const Move& p = f.seq.back();
        if (m.kind == 0 && p.kind == 0 && p.edge == m.edge) continue;
        if (m.kind >= 1 && p.kind >= 1 && p.tail == m.tail && p.edge == m.edge)
          continue;
      }
      Frame next{f.b, f.seq};
      try {
        apply_move(next.b, m);
      } catch (...) {
        continue;
      }
      next.seq.push_back(m);
      if (dfs(next, left - 1)) return true;
    }
    return false;
  };
  for (int d = 1; d <= max_depth; ++d) {
    Frame f{start, {}};
    if (dfs(f, d)) return true;
  }
  return false;
}

static void print_seq(const char* tag, const Found& f) {
  std::printf("%s (root %d, p1=%.9f):", tag, f.root, f.p1);
  for (auto& m : f.seq)
    std::printf(" %s%d%s",
                m.kind == 0 ? "F" : (std::string("flip") +
                                     std::to_string(m.tail) + "@").c_str(),
                m.edge, m.kind == 2 ? "*" : "");
  std::printf("\n");
}

int main() {
  const double phi = golden_ratio();
  NetBuilder base = make_pairs();
  long long visited = 0;

  // channel block (tails 11, 12): any meet is fine, phases checked later
  Found chan;
  if (!find_fusion(base, 11, 12, 3, [](double) { return true; }, &chan,
                   &visited)) {
    std::printf("channel search failed\n");
    return 1;
  }
  print_seq("channel", chan);

  // fusion walk (tails 10, 11): own pair must fuse to vacuum exactly
  Found fuse;
  if (!find_fusion(base, 10, 11, 7, [](double p1) { return p1 < 1e-10; },
                   &fuse, &visited)) {
    std::printf("fusion search failed (visited %lld)\n", visited);
    return 1;
  }
  print_seq("fusion", fuse);
  std::printf("visited %lld\n", visited);

  // full braid
  for (bool conj : {false, true}) {
    NetBuilder b = make_pairs();
    for (auto& m : chan.seq) apply_move(b, m);
    b.rphase(chan.root, conj);
    for (auto it = chan.seq.rbegin(); it != chan.seq.rend(); ++it) {
      Move inv = *it;
      if (inv.kind == 1) inv.kind = 2;
      else if (inv.kind == 2) inv.kind = 1;
      apply_move(b, inv);
    }
    for (auto& m : fuse.seq) apply_move(b, m);
    StateVector sv = run(b.circuit());
    const double p1 = prob_one(sv, fuse.root);
    const double ratio = p1 / (1 - p1);
    std::printf("braid conj=%d: p1(root)=%.9f ratio=%.9f  [phi=%.9f 1/phi=%.9f]\n",
                conj, p1, ratio, phi, 1 / phi);
  }
  return 0;
}
