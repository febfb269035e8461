#include <cstdio>

#include "fibnet/dsnp.hpp"

using namespace fibnet;

static void dump(const LatticeLayout& lay) {
  std::printf("name %s\nvertices:", lay.name.c_str());
  for (int v : lay.graph.vertices) std::printf(" %d", v);
  std::printf("\nedges:\n");
  for (auto& e : lay.graph.edges)
    std::printf("  {%d, %d, %d},\n", e.id, e.u, e.v);
  std::printf("faces:\n");
  for (auto& f : lay.graph.faces) {
    std::printf("  {");
    for (std::size_t i = 0; i < f.size(); ++i)
      std::printf("%s%d", i ? ", " : "", f[i]);
    std::printf("},\n");
  }
}

int main() {
  dump(build_lattice2x2().layout);
  dump(build_strip(3).layout);
  dump(build_min_snc().layout);
  return 0;
}
