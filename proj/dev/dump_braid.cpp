#include <cstdio>
#include "fibnet/dsnp.hpp"
#include "fibnet/statevec.hpp"
using namespace fibnet;

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

int main() {
  NetBuilder b = make_pairs();
  auto lay = b.layout("braid");
  std::printf("edges:");
  for (auto& e : lay.graph.edges) std::printf(" %d:(%d,%d)", e.id, e.u, e.v);
  std::printf("\nfaces:");
  for (auto& f : lay.graph.faces) {
    std::printf(" {");
    for (int e : f) std::printf("%d ", e);
    std::printf("}");
  }
  std::printf("\ntails at:");
  for (int t : {10, 11, 12, 13}) {
    std::printf(" t%d->[", t);
    for (int e : b.edges_at_anchor(t)) std::printf("%d ", e);
    std::printf("]");
  }
  std::printf("\n");
  return 0;
}
