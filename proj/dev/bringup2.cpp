// Bring-up: pin down the anyon-pair creation and charge-deformation schedule
// against the exact tube-state oracle.
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/statevec.hpp"

using namespace fibnet;

struct Params {
  int w_slot;        // bridge insertion slot at the lattice midpoint: 1 or 2
  int r_order;       // string vertex cyclic order: 0 -> (4,5,6), 1 -> (4,6,5)
  int r_ctrl;        // R-move control qubit
  bool conj_tau1;    // conjugate flag for the Tau1 pair
  int deform_order;  // 0: fmove 1,3,5   1: fmove 3,1,5
  int pairing;       // bit0: tube1 (q3,q0) vs (q0,q3); bit1: tube2 (q1,q2) vs (q2,q1)
};

static NetBuilder make_pair(const Params& p, bool tau1) {
  NetBuilder b(7, "anyon_pair");
  const int va = b.bead1(0);
  const int vb = b.bead1(2);
  b.connector(1, va, 2, vb, 0);
  b.fmove(1);
  const int w = b.subdivide(1, 3);
  const int r = b.new_vertex();
  if (p.r_order == 0) {
    b.tail(4, r, 0, true);
    b.tail(6, r, 1, true);
    b.connector(5, w, p.w_slot, r, 1);
  } else {
    b.tail(4, r, 0, true);
    b.tail(6, r, 1, true);
    b.connector(5, w, p.w_slot, r, 2);
  }
  b.fmove(5);
  b.rmove(p.r_ctrl, 5, tau1 ? p.conj_tau1 : !p.conj_tau1);
  return b;
}

static StateVector charge2d(const Params& p, bool tau1, bool* ok) {
  *ok = false;
  try {
    NetBuilder b = make_pair(p, tau1);
    if (p.deform_order == 0) {
      b.fmove(1);
      b.fmove(3);
    } else {
      b.fmove(3);
      b.fmove(1);
    }
    b.fmove(5);
    *ok = true;
    return run(b.circuit());
  } catch (...) {
    return StateVector::zero(1);
  }
}

// tube vector in (alpha, beta) amplitudes over basis (00,01,10,11)
static std::vector<cplx> tube(bool tau1) {
  const double pi = std::acos(-1.0);
  const double phi = golden_ratio();
  const double D = std::sqrt(1 + phi * phi);
  const double s = tau1 ? -1.0 : 1.0;
  return {0.0, cplx{1.0, 0.0} / D, std::polar(1.0 / D, s * 4 * pi / 5),
          std::polar(std::sqrt(phi) / D, -s * 3 * pi / 5)};
}

static StateVector oracle_2d(bool tau1, int pairing) {
  StateVector sv = StateVector::zero(7);
  sv.amps[0] = 0;
  const auto t = tube(tau1);
  const int a1 = (pairing & 1) ? 0 : 3, b1 = (pairing & 1) ? 3 : 0;
  const int a2 = (pairing & 2) ? 2 : 1, b2 = (pairing & 2) ? 1 : 2;
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
  int found = 0;
  for (int w_slot : {1, 2})
    for (int r_order : {0, 1})
      for (int r_ctrl : {0, 1, 2, 3, 4, 6})
        for (int conj : {0, 1})
          for (int dorder : {0, 1}) {
            Params p{w_slot, r_order, r_ctrl, conj != 0, dorder, 0};
            bool ok1 = false, ok2 = false;
            StateVector s1 = charge2d(p, true, &ok1);
            StateVector s2 = charge2d(p, false, &ok2);
            if (!ok1 || !ok2) continue;
            for (int pairing = 0; pairing < 4; ++pairing) {
              const double f1 = fidelity(s1, oracle_2d(true, pairing));
              const double f2 = fidelity(s2, oracle_2d(false, pairing));
              if (f1 > 1.0 - 1e-9 && f2 > 1.0 - 1e-9) {
                std::printf(
                    "HIT w_slot=%d r_order=%d r_ctrl=%d conj_tau1=%d "
                    "deform=%d pairing=%d\n",
                    p.w_slot, p.r_order, p.r_ctrl, (int)p.conj_tau1,
                    p.deform_order, pairing);
                ++found;
              } else if (f1 > 0.97 && f2 > 0.97) {
                std::printf(
                    "near w=%d ro=%d rc=%d cj=%d do=%d pr=%d f=(%.6f, %.6f)\n",
                    p.w_slot, p.r_order, p.r_ctrl, (int)p.conj_tau1,
                    p.deform_order, pairing, f1, f2);
              }
            }
          }
  std::printf("total hits: %d\n", found);
  return found ? 0 : 1;
}
