// Charge-schedule search with free role assignment (bridge + tube pairs).
#include <cmath>
#include <complex>
#include <cstdio>
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

struct Roles {
  int bridge, a1, b1, a2, b2;
};

static StateVector oracle_2d(bool tau1, const Roles& r) {
  StateVector sv = StateVector::zero(7);
  sv.amps[0] = 0;
  const auto t = tube(tau1);
  for (int x = 1; x < 4; ++x)
    for (int y = 1; y < 4; ++y) {
      std::uint64_t idx = (1ull << 4) | (1ull << 6) |
                          (1ull << static_cast<unsigned>(r.bridge));
      if (x & 2) idx |= 1ull << r.a1;
      if (x & 1) idx |= 1ull << r.b1;
      if (y & 2) idx |= 1ull << r.a2;
      if (y & 1) idx |= 1ull << r.b2;
      sv.amps[idx] = t[static_cast<std::size_t>(x)] * t[static_cast<std::size_t>(y)];
    }
  return sv;
}

int main() {
  std::vector<Roles> roles;
  const int qs[] = {0, 1, 2, 3, 5};
  for (int bi = 0; bi < 5; ++bi) {
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i)
      if (i != bi) rest.push_back(qs[i]);
    const int parts[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (auto& p : parts)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
          Roles r;
          r.bridge = qs[bi];
          r.a1 = rest[static_cast<std::size_t>(s1 ? p[1] : p[0])];
          r.b1 = rest[static_cast<std::size_t>(s1 ? p[0] : p[1])];
          r.a2 = rest[static_cast<std::size_t>(s2 ? p[3] : p[2])];
          r.b2 = rest[static_cast<std::size_t>(s2 ? p[2] : p[3])];
          roles.push_back(r);
        }
  }

  const int targets[] = {0, 1, 2, 3, 5};
  std::vector<std::vector<int>> seqs;
  seqs.push_back({});
  std::size_t lo = 0;
  for (int d = 0; d < 4; ++d) {
    const std::size_t hi = seqs.size();
    for (std::size_t s = lo; s < hi; ++s)
      for (int t : targets) {
        if (!seqs[s].empty() && seqs[s].back() == t) continue;
        auto s2 = seqs[s];
        s2.push_back(t);
        seqs.push_back(s2);
      }
    lo = hi;
  }
  std::printf("seqs %zu roles %zu\n", seqs.size(), roles.size());

  int hits = 0;
  double best = 0;
  for (int w_slot : {1, 2})
    for (int r_slot : {1, 2})
      for (auto& seq : seqs)
        for (int r_ctrl : {0, 1, 2, 3})
          for (int conj = 0; conj < 2; ++conj) {
            StateVector st[2];
            bool ok = true;
            for (int k = 0; k < 2 && ok; ++k) {
              try {
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
                b.fmove(5);
                b.rmove(r_ctrl, 5, (k == 0) ? (conj != 0) : (conj == 0));
                for (int t : seq) b.fmove(t);
                st[k] = run(b.circuit());
              } catch (...) {
                ok = false;
              }
            }
            if (!ok) continue;
            for (auto& a : roles) {
              const double f1 = fidelity(st[0], oracle_2d(true, a));
              if (f1 < 0.9) continue;
              const double f2 = fidelity(st[1], oracle_2d(false, a));
              const double f = std::min(f1, f2);
              if (f > best) {
                best = f;
                std::printf("best %.9f w=%d rs=%d ctrl=%d conj=%d bridge=%d "
                            "tubes(%d%d|%d%d) seq=[",
                            best, w_slot, r_slot, r_ctrl, conj, a.bridge, a.a1,
                            a.b1, a.a2, a.b2);
                for (int t : seq) std::printf("%d ", t);
                std::printf("]\n");
              }
              if (f > 1 - 1e-9) ++hits;
            }
          }
  std::printf("hits %d best %.9f\n", hits, best);
  return hits ? 0 : 1;
}
