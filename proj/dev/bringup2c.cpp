// Search deformation F-move sequences reaching the two-tube dumbbell and the
// exact tube-product state.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <set>
#include <vector>

#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/statevec.hpp"

using namespace fibnet;

static NetBuilder creation(int w_slot, int r_slot, int r_ctrl, bool conj,
                           bool with_r) {
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
  if (with_r) b.rmove(r_ctrl, 5, conj);
  return b;
}

static int dumbbell_kind(const LatticeLayout& lay) {
  // any bigon partition of {0,1,2,3}: returns 1: {03|12}, 2: {01|23},
  // 3: {02|13}, 0: none
  std::set<std::set<int>> fs;
  for (auto& f : lay.graph.faces) fs.insert(std::set<int>(f.begin(), f.end()));
  if (fs.count({0, 3}) && fs.count({1, 2})) return 1;
  if (fs.count({0, 1}) && fs.count({2, 3})) return 2;
  if (fs.count({0, 2}) && fs.count({1, 3})) return 3;
  return 0;
}

static std::vector<cplx> tube(bool tau1) {
  const double pi = std::acos(-1.0);
  const double phi = golden_ratio();
  const double D = std::sqrt(1 + phi * phi);
  const double s = tau1 ? -1.0 : 1.0;
  return {0.0, cplx{1.0, 0.0} / D, std::polar(1.0 / D, s * 4 * pi / 5),
          std::polar(std::sqrt(phi) / D, -s * 3 * pi / 5)};
}

static StateVector oracle_2d(bool tau1, int pairing, int kind) {
  StateVector sv = StateVector::zero(7);
  sv.amps[0] = 0;
  const auto t = tube(tau1);
  int pa, pb, pc, pd;  // tube1 = (pa,pb), tube2 = (pc,pd)
  if (kind == 1) { pa = 3; pb = 0; pc = 1; pd = 2; }
  else if (kind == 2) { pa = 0; pb = 1; pc = 2; pd = 3; }
  else { pa = 0; pb = 2; pc = 1; pd = 3; }
  const int a1 = (pairing & 1) ? pb : pa, b1 = (pairing & 1) ? pa : pb;
  const int a2 = (pairing & 2) ? pd : pc, b2 = (pairing & 2) ? pc : pd;
  for (int x = 1; x < 4; ++x)
    for (int y = 1; y < 4; ++y) {
      std::uint64_t idx = (1ull << 4) | (1ull << 5) | (1ull << 6);
      if (x & 2) idx |= 1ull << a1;
      if (x & 1) idx |= 1ull << b1;
      if (y & 2) idx |= 1ull << a2;
      if (y & 1) idx |= 1ull << b2;
      sv.amps[idx] = t[static_cast<std::size_t>(x)] * t[static_cast<std::size_t>(y)];
    }
  return sv;
}

int main() {
  const int targets[] = {0, 1, 2, 3, 5};
  std::vector<std::vector<int>> seqs;
  seqs.push_back({});
  for (int d = 0; d < 4; ++d) {
    std::vector<std::vector<int>> next;
    for (auto& s : seqs)
      if (static_cast<int>(s.size()) == d)
        for (int t : targets) {
          auto s2 = s;
          s2.push_back(t);
          next.push_back(s2);
        }
    for (auto& s : next) seqs.push_back(s);
  }
  std::printf("sequences: %zu\n", seqs.size());

  int graph_hits = 0, full_hits = 0;
  for (int w_slot : {1, 2})
    for (int r_slot : {1, 2})
      for (auto& seq : seqs) {
        // graph shape first (state-independent)
        int shape = 0;
        try {
          NetBuilder b = creation(w_slot, r_slot, 0, false, false);
          for (int t : seq) b.fmove(t);
          shape = dumbbell_kind(b.layout("t"));
        } catch (...) {
          continue;
        }
        if (!shape) continue;
        ++graph_hits;
        if (graph_hits < 12) {
          std::printf("shape %d via w=%d rs=%d seq=[", shape, w_slot, r_slot);
          for (int t : seq) std::printf("%d ", t);
          std::printf("]\n");
        }
        for (int r_ctrl : {0, 1, 2, 3})
          for (int conj : {0, 1}) {
            bool ok = true;
            StateVector s1, s2;
            try {
              NetBuilder b1 = creation(w_slot, r_slot, r_ctrl, conj != 0, true);
              for (int t : seq) b1.fmove(t);
              s1 = run(b1.circuit());
              NetBuilder b2 = creation(w_slot, r_slot, r_ctrl, conj == 0, true);
              for (int t : seq) b2.fmove(t);
              s2 = run(b2.circuit());
            } catch (...) {
              ok = false;
            }
            if (!ok) continue;
            for (int pairing = 0; pairing < 4; ++pairing) {
              const double f1 = fidelity(s1, oracle_2d(true, pairing, shape));
              const double f2 = fidelity(s2, oracle_2d(false, pairing, shape));
              if (f1 > 1 - 1e-9 && f2 > 1 - 1e-9) {
                std::printf("HIT w=%d rs=%d seq=[", w_slot, r_slot);
                for (int t : seq) std::printf("%d ", t);
                std::printf("] ctrl=%d conj_t1=%d pairing=%d\n", r_ctrl, conj,
                            pairing);
                ++full_hits;
              }
            }
          }
      }
  std::printf("graph hits %d, full hits %d\n", graph_hits, full_hits);
  return full_hits ? 0 : 1;
}
