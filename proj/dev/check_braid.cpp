#include <cmath>
#include <cstdio>
#include "fibnet/dsnp.hpp"
#include "fibnet/statevec.hpp"
using namespace fibnet;
int main() {
  for (auto [ctrl, inc] : {std::pair{false,true},{true,true},{false,false}}) {
    auto spec = build_braid(ctrl, inc);
    StateVector sv = run(spec.circuit);
    const int root = std::stoi(spec.meta.at("root_qubit"));
    const double p1 = prob_one(sv, root);
    printf("%s include=%d: root=%d p1=%.9f ratio=%.9f expect=%.6f, ops=%zu\n",
           spec.name.c_str(), (int)inc, root, p1, p1/(1-p1), spec.expected["ratio"],
           spec.circuit.ops.size());
  }
  return 0;
}
