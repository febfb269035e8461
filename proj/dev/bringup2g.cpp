// Exhaustive interleaved F/R move search for the charge circuit.
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <vector>

#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/statevec.hpp"

using namespace fibnet;

static std::vector<cplx> tube(bool tau1) {
  const double pi = std::acos(-1.0);
  const double phi = golden_ratio();
  const double D = std::sqrt(1 + phi * phi);
  const double s = tau1 ? -1.0 : 1.0;
  return {0.0, cplx{1.0, 0.0} / D, std::polar(1.0 / D, s * 4 * pi / 5),
          std::polar(std::sqrt(phi) / D, -s * 3 * pi / 5)};
}

struct Roles { int bridge, a1, b1, a2, b2; };

struct Sparse {
  std::uint64_t idx[9];
  cplx amp[9];
};

static Sparse make_oracle(bool tau1, const Roles& r) {
  Sparse o;
  const auto t = tube(tau1);
  int n = 0;
  for (int x = 1; x < 4; ++x)
    for (int y = 1; y < 4; ++y) {
      std::uint64_t idx = (1ull << 4) | (1ull << 6) |
                          (1ull << static_cast<unsigned>(r.bridge));
      if (x & 2) idx |= 1ull << r.a1;
      if (x & 1) idx |= 1ull << r.b1;
      if (y & 2) idx |= 1ull << r.a2;
      if (y & 1) idx |= 1ull << r.b2;
      o.idx[n] = idx;
      o.amp[n] = t[static_cast<std::size_t>(x)] * t[static_cast<std::size_t>(y)];
      ++n;
    }
  return o;
}

static double fid(const StateVector& sv, const Sparse& o) {
  cplx acc = 0;
  for (int i = 0; i < 9; ++i) acc += std::conj(o.amp[i]) * sv.amps[o.idx[i]];
  return std::norm(acc);
}

// move encoding: 0..4 -> fmove on {0,1,2,3,5}; 5..12 -> CR / CR* (ctrl 0..3)
struct SearchCtx {
  std::vector<std::pair<Sparse, Sparse>> oracles;
  std::vector<Roles> roles;
  double best = 0;
  long long nodes = 0;
  std::vector<int> best_seq;
  int best_role = -1;
  bool done = false;
};

static const int kFTargets[5] = {0, 1, 2, 3, 5};

static void dfs(SearchCtx& ctx, const NetBuilder& b1, const NetBuilder& b2,
                std::vector<int>& seq, int depth, int r_used) {
  StateVector s1 = run(b1.circuit());
  StateVector s2 = run(b2.circuit());
  ++ctx.nodes;
  for (std::size_t ri = 0; ri < ctx.oracles.size(); ++ri) {
    const double f1 = fid(s1, ctx.oracles[ri].first);
    if (f1 < ctx.best - 1e-9) continue;
    const double f2 = fid(s2, ctx.oracles[ri].second);
    const double f = std::min(f1, f2);
    if (f > ctx.best + 1e-12) {
      ctx.best = f;
      ctx.best_seq = seq;
      ctx.best_role = static_cast<int>(ri);
      std::printf("best %.9f role(br=%d %d%d|%d%d) seq=[", f,
                  ctx.roles[ri].bridge, ctx.roles[ri].a1, ctx.roles[ri].b1,
                  ctx.roles[ri].a2, ctx.roles[ri].b2);
      for (int m : seq) std::printf("%d ", m);
      std::printf("]\n");
      std::fflush(stdout);
      if (f > 1 - 1e-9) ctx.done = true;
    }
  }
  if (ctx.done || depth == 0) return;
  for (int mv = 0; mv < 13; ++mv) {
    if (mv < 5) {
      if (!seq.empty() && seq.back() == mv) continue;  // F self-inverse
    } else if (r_used >= 2) {
      continue;
    }
    NetBuilder n1 = b1, n2 = b2;
    try {
      if (mv < 5) {
        n1.fmove(kFTargets[mv]);
        n2.fmove(kFTargets[mv]);
      } else {
        const int ctrl = (mv - 5) % 4;
        const bool conj = (mv - 5) / 4 != 0;
        n1.rmove(ctrl, 5, conj);
        n2.rmove(ctrl, 5, !conj);
      }
    } catch (...) {
      continue;
    }
    seq.push_back(mv);
    dfs(ctx, n1, n2, seq, depth - 1, r_used + (mv >= 5));
    seq.pop_back();
    if (ctx.done) return;
  }
}

int main(int argc, char** argv) {
  const int depth = argc > 1 ? std::atoi(argv[1]) : 5;
  SearchCtx ctx;
  const int qs[] = {0, 1, 2, 3, 5};
  for (int bi = 0; bi < 5; ++bi) {
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i)
      if (i != bi) rest.push_back(qs[i]);
    const int parts[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (auto& p : parts)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
          Roles r{qs[bi], rest[static_cast<std::size_t>(s1 ? p[1] : p[0])],
                  rest[static_cast<std::size_t>(s1 ? p[0] : p[1])],
                  rest[static_cast<std::size_t>(s2 ? p[3] : p[2])],
                  rest[static_cast<std::size_t>(s2 ? p[2] : p[3])]};
          ctx.roles.push_back(r);
          ctx.oracles.push_back({make_oracle(true, r), make_oracle(false, r)});
        }
  }

  for (int w_slot : {1, 2})
    for (int r_slot : {1, 2}) {
      NetBuilder b(7, "t");
      const int va = b.bead1(0);
      const int vb = b.bead1(2);
      b.connector(1, va, 2, vb, 0);
      b.fmove(1);
      const int w = b.subdivide(1, 3);
      const int r = b.new_vertex();
      b.tail(4, r, 0, true);
      b.tail(6, r, 1, true);
      b.connector(5, w, w_slot, r, r_slot);
      std::printf("== start w_slot=%d r_slot=%d\n", w_slot, r_slot);
      std::vector<int> seq;
      dfs(ctx, b, b, seq, depth, 0);
      if (ctx.done) {
        std::printf("HIT at w=%d rs=%d nodes=%lld\n", w_slot, r_slot, ctx.nodes);
        return 0;
      }
    }
  std::printf("no hit depth=%d nodes=%lld best=%.9f\n", depth, ctx.nodes,
              ctx.best);
  return 1;
}
