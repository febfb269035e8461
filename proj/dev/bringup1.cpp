// Bring-up: verify min_snc, strip(n), lattice2x2 against the exact
// string-net oracles (valid-word support + chromatic correspondence).
#include <cmath>
#include <cstdio>

#include "fibnet/chromatic.hpp"
#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/graph.hpp"
#include "fibnet/statevec.hpp"

using namespace fibnet;

static int check_correspondence(const ExperimentSpec& spec, bool verbose) {
  StateVector sv = run(spec.circuit);
  const auto& lay = spec.layout;
  const int n = lay.n_qubits();
  const double phi = golden_ratio();
  const double k = phi + 2.0;

  // P(G0)
  double p0 = std::norm(sv.amps[0]);
  double leaked = 0.0;
  int checked = 0, failed = 0;
  for (std::uint64_t bidx = 0; bidx < sv.amps.size(); ++bidx) {
    const double p = std::norm(sv.amps[bidx]);
    const std::string w = bits_to_string(bidx, n);
    const bool valid = validate_branching(lay, w);
    if (!valid) {
      leaked += p;
      if (p > 1e-12 && verbose)
        std::printf("  INVALID-support %s p=%.3e\n", w.c_str(), p);
      continue;
    }
    const Multigraph dual = config_dual(lay, w);
    const double chi = eval_poly(chromatic_poly(dual), k);
    const double expect = chi / k * p0;
    ++checked;
    if (std::abs(p - expect) > 1e-9) {
      ++failed;
      if (verbose)
        std::printf("  MISMATCH %s p=%.6e expect=%.6e chi=%.4f\n", w.c_str(),
                    p, expect, chi);
    }
  }
  std::printf("%s: n=%d valid_checked=%d failed=%d leaked=%.3e p0=%.6f\n",
              spec.name.c_str(), n, checked, failed, leaked, p0);
  return failed + (leaked > 1e-10 ? 1 : 0);
}

int main() {
  int bad = 0;

  // min_snc: exact probabilities
  {
    auto spec = build_min_snc();
    StateVector sv = run(spec.circuit);
    const double phi = golden_ratio();
    const double denom = 5.0 * phi * phi;
    struct Case { const char* w; double p; };
    const Case cases[] = {{"000", 1.0 / denom},
                          {"110", phi * phi / denom},
                          {"011", phi * phi / denom},
                          {"101", phi * phi / denom},
                          {"111", phi * phi * phi / denom}};
    for (auto& c : cases) {
      const double p = std::norm(sv.amps[string_to_bits(c.w)]);
      if (std::abs(p - c.p) > 1e-12) {
        std::printf("min_snc FAIL %s: %.8f vs %.8f\n", c.w, p, c.p);
        ++bad;
      }
    }
    std::printf("min_snc probabilities ok, P(111)=%.6f\n",
                std::norm(sv.amps[string_to_bits("111")]));
    bad += check_correspondence(spec, true);
  }

  for (int n = 2; n <= 6; ++n) bad += check_correspondence(build_strip(n), false);

  {
    auto spec = build_lattice2x2();
    bad += check_correspondence(spec, true);
    const auto valid = enumerate_valid(spec.layout);
    std::printf("lattice2x2 valid words: %zu\n", valid.size());
    const auto classes = iso_classes(spec.layout);
    std::printf("lattice2x2 classes: %zu\n", classes.size());
    for (const auto& c : classes) {
      const Multigraph dual = config_dual(spec.layout, c.representative);
      const double chi =
          eval_poly(chromatic_poly(dual), golden_ratio() + 2.0);
      std::printf("  %s m=%d chi=%.4f rep=%s\n", c.class_id.c_str(),
                  c.multiplicity, chi, c.representative.c_str());
    }
    // compare against the static prism layout
    const auto stat = layout_lattice2x2();
    const auto sv = enumerate_valid(stat);
    std::printf("static prism valid words: %zu (builder %zu)\n", sv.size(),
                valid.size());
    if (sv != valid) { std::printf("LAYOUT MISMATCH static vs builder\n"); ++bad; }
  }

  std::printf(bad ? "BRINGUP1: %d problems\n" : "BRINGUP1: all good\n", bad);
  return bad ? 1 : 0;
}
