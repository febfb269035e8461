// Diagnose the charge-deformation state structure.
#include <cmath>
#include <complex>
#include <cstdio>

#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/statevec.hpp"

using namespace fibnet;

static void dump_state(const char* tag, const StateVector& sv) {
  std::printf("-- %s\n", tag);
  for (std::uint64_t i = 0; i < sv.amps.size(); ++i) {
    const double p = std::norm(sv.amps[i]);
    if (p > 1e-12)
      std::printf("  %s  |a|=%.6f  arg=%+.4f pi\n",
                  bits_to_string(i, sv.n_qubits).c_str(), std::abs(sv.amps[i]),
                  std::arg(sv.amps[i]) / std::acos(-1.0));
  }
}

static void dump_graph(const char* tag, const LatticeLayout& lay) {
  std::printf("-- graph %s: edges", tag);
  for (auto& e : lay.graph.edges) std::printf(" %d:(%d,%d)", e.id, e.u, e.v);
  std::printf("  faces:");
  for (auto& f : lay.graph.faces) {
    std::printf(" {");
    for (int e : f) std::printf("%d ", e);
    std::printf("}");
  }
  std::printf("\n");
}

int main() {
  // creation with w_slot=1, r_order=0, no R-move yet
  NetBuilder b(7, "t");
  const int va = b.bead1(0);
  const int vb = b.bead1(2);
  b.connector(1, va, 2, vb, 0);
  b.fmove(1);
  const int w = b.subdivide(1, 3);
  const int r = b.new_vertex();
  b.tail(4, r, 0, true);
  b.tail(6, r, 1, true);
  b.connector(5, w, 1, r, 1);
  b.fmove(5);
  dump_graph("after creation F", b.layout("t"));
  {
    StateVector sv = run(b.circuit());
    std::printf("tails p1: q4=%.4f q6=%.4f\n", prob_one(sv, 4), prob_one(sv, 6));
    dump_state("after creation F (no R)", sv);
  }
  b.fmove(1);
  dump_graph("after deform fmove(1)", b.layout("t"));
  b.fmove(3);
  dump_graph("after deform fmove(3)", b.layout("t"));
  b.fmove(5);
  dump_graph("after deform fmove(5)", b.layout("t"));
  {
    StateVector sv = run(b.circuit());
    dump_state("final (no R)", sv);
  }
  // oracle moduli
  const double phi = golden_ratio();
  const double D2 = 1 + phi * phi;
  std::printf("oracle |a|^2 entries: 1/D^2=%.6f sqrt(phi)/D^2=%.6f phi/D^2=%.6f\n",
              1 / D2, std::sqrt(phi) / D2, phi / D2);
  return 0;
}
