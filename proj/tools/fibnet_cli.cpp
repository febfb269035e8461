// fibnet command-line tool: prepares string-net circuits, samples them under
// configurable noise, estimates chromatic polynomials from counts, and runs
// the charge / braiding experiments with the mitigation pipeline.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibnet/anyon.hpp"
#include "fibnet/chromatic.hpp"
#include "fibnet/dsnp.hpp"
#include "fibnet/fib.hpp"
#include "fibnet/graph.hpp"
#include "fibnet/io.hpp"
#include "fibnet/noise.hpp"
#include "fibnet/statevec.hpp"

namespace {

using namespace fibnet;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitCapacity = 4;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FIBNET_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 1234;
}

ExperimentSpec spec_for_layout(const std::string& name) {
  if (name == "min3") return build_min_snc();
  if (name == "two_plaquette") {
    // minimal condensate grown by one CNOT, the anyon-experiment substrate
    ExperimentSpec spec = build_min_snc();
    Circuit c;
    c.n_qubits = 4;
    c.name = "two_plaquette";
    for (const auto& op : spec.circuit.ops) c.push(op);
    std::vector<cplx> x = {0, 1, 1, 0};
    c.push(make_controlled1(1, 3, x, 1.0, "CX"));
    spec.circuit = c;
    spec.layout = layout_two_plaquette();
    spec.name = "two_plaquette";
    spec.readout.push_back({3, "string-net"});
    return spec;
  }
  if (name == "lattice2x2") return build_lattice2x2();
  if (name.rfind("strip:", 0) == 0)
    return build_strip(std::stoi(name.substr(6)));
  throw std::invalid_argument("unknown layout: " + name);
}

void write_or_print(const std::optional<std::string>& path,
                    const std::string& text) {
  if (path) save_text(*path, text);
  else std::cout << text << "\n";
}

NoiseModel load_noise(const std::optional<std::string>& path,
                      std::uint64_t seed) {
  NoiseModel m;
  if (path) m = noise_model_from_json(load_json_file(*path));
  if (m.seed == 0) m.seed = seed;
  return m;
}

std::vector<double> parse_lambdas(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// per-qubit <Z> vs lambda, readout-mitigated, extrapolated to lambda = 0
ZNEResult zne_for_qubit(const Circuit& circuit, const NoiseModel& model,
                        const std::vector<double>& lambdas, long long shots,
                        bool twirl, int qubit, double noise_floor) {
  std::vector<ZNEPoint> pts;
  for (double lam : lambdas) {
    NoisyRun run = run_noisy(circuit, model, lam, shots, twirl);
    double z = run.z_value(qubit);
    if (!model.ideal_readout() &&
        static_cast<std::size_t>(qubit) < model.readout.size())
      z = mitigate_readout_z(z, model.readout[static_cast<std::size_t>(qubit)]);
    const double p1 = (1.0 - z) / 2.0;
    const double sd =
        2.0 * std::sqrt(std::max(1e-12, p1 * (1.0 - p1)) /
                        static_cast<double>(shots));
    pts.push_back({lam, z, sd});
  }
  return zne_extrapolate(pts, noise_floor);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fibnet;
  CLI::App app{"Fibonacci string-net sampling and braiding toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "global RNG seed (default FIBNET_SEED or 1234)");

  // prepare
  auto* prep = app.add_subcommand("prepare", "build a layout's circuit");
  std::string prep_layout;
  std::optional<std::string> prep_out;
  prep->add_option("--layout", prep_layout, "min3|two_plaquette|strip:N|lattice2x2")
      ->required();
  prep->add_option("--out", prep_out, "output JSON path");

  // sample
  auto* smp = app.add_subcommand("sample", "sample a layout's distribution");
  std::string smp_layout;
  long long smp_shots = 100000;
  std::optional<std::string> smp_noise, smp_out;
  double smp_lambda = 1.0;
  bool smp_twirl = false;
  smp->add_option("--layout", smp_layout)->required();
  smp->add_option("--shots", smp_shots);
  smp->add_option("--noise", smp_noise, "noise model JSON");
  smp->add_option("--lambda", smp_lambda, "noise stretch factor");
  smp->add_flag("--twirl", smp_twirl);
  smp->add_option("--out", smp_out);

  // estimate
  auto* est = app.add_subcommand("estimate", "chromatic estimates from counts");
  std::string est_counts, est_layout, est_method = "vacuum", est_format = "csv";
  std::optional<std::string> est_out;
  est->add_option("--counts", est_counts, "counts JSON")->required();
  est->add_option("--layout", est_layout)->required();
  est->add_option("--method", est_method, "vacuum|loop");
  est->add_option("--format", est_format, "csv|json");
  est->add_option("--out", est_out);

  // charge
  auto* chg = app.add_subcommand("charge", "anyon charge certification");
  std::string chg_anyon = "tau1", chg_graph = "2d", chg_lambdas;
  std::optional<std::string> chg_noise, chg_out;
  long long chg_shots = 200000;
  bool chg_twirl = false;
  chg->add_option("--anyon", chg_anyon, "tau1|1tau");
  chg->add_option("--graph", chg_graph, "2d|3d");
  chg->add_option("--noise", chg_noise);
  chg->add_option("--shots", chg_shots);
  chg->add_option("--lambdas", chg_lambdas, "comma-separated stretch factors");
  chg->add_flag("--twirl", chg_twirl);
  chg->add_option("--out", chg_out);

  // braid
  auto* brd = app.add_subcommand("braid", "braiding golden-ratio experiment");
  bool brd_control = false, brd_twirl = false;
  std::string brd_lambdas;
  std::optional<std::string> brd_noise, brd_out;
  long long brd_shots = 200000;
  int brd_bootstrap = 0;
  double brd_floor = 0.0;
  brd->add_flag("--control", brd_control, "error-seeded control circuit");
  brd->add_option("--noise", brd_noise);
  brd->add_option("--shots", brd_shots);
  brd->add_option("--lambdas", brd_lambdas);
  brd->add_flag("--twirl", brd_twirl);
  brd->add_option("--bootstrap", brd_bootstrap, "bootstrap resamples");
  brd->add_option("--noise-floor", brd_floor, "exclude |z| below this");
  brd->add_option("--out", brd_out);

  // chromatic / oracle
  auto* chr = app.add_subcommand("chromatic", "deletion-contraction polynomial");
  std::string chr_graph, chr_k = "golden";
  chr->add_option("--graph", chr_graph, "multigraph JSON {n, edges}")->required();
  chr->add_option("--k", chr_k, "numeric value or 'golden' (= phi + 2)");
  auto* orc = app.add_subcommand("oracle", "brute-force coloring count");
  std::string orc_graph;
  int orc_k = 3;
  orc->add_option("--graph", orc_graph)->required();
  orc->add_option("--k-int", orc_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (*prep) {
      const ExperimentSpec spec = spec_for_layout(prep_layout);
      json j = {{"name", spec.name},
                {"circuit", circuit_to_json(spec.circuit)},
                {"layout", layout_to_json(spec.layout)},
                {"meta", spec.meta}};
      if (spec.circuit.n_qubits <= 14) {
        StateVector sv = run(spec.circuit);
        j["state"] = state_to_json(sv);
      }
      write_or_print(prep_out, j.dump(2));
    } else if (*smp) {
      const ExperimentSpec spec = spec_for_layout(smp_layout);
      const NoiseModel model = load_noise(smp_noise, seed);
      SampleCounts counts;
      if (!smp_noise && smp_lambda == 1.0) {
        StateVector sv = run(spec.circuit);
        counts = sample(sv, smp_shots, seed);
      } else {
        counts = run_noisy(spec.circuit, model, smp_lambda, smp_shots,
                           smp_twirl).counts;
      }
      const auto filtered = filter_invalid(counts, spec.layout);
      json j = counts_to_json(counts, spec.circuit.n_qubits);
      j["invalid_mass"] = filtered.invalid_mass;
      j["seed"] = seed;
      write_or_print(smp_out, j.dump(2));
    } else if (*est) {
      const ExperimentSpec spec = spec_for_layout(est_layout);
      const SampleCounts raw = counts_from_json(load_json_file(est_counts));
      const auto filtered = filter_invalid(raw, spec.layout);
      const auto rows = est_method == "loop"
                            ? estimate_loop_ref(filtered.counts, spec.layout)
                            : estimate_vacuum_ref(filtered.counts, spec.layout);
      if (est_format == "json") {
        json j = {{"method", est_method},
                  {"invalid_mass", filtered.invalid_mass},
                  {"estimates", estimates_to_json(rows)}};
        write_or_print(est_out, j.dump(2));
      } else {
        write_or_print(est_out, estimates_to_csv(rows));
      }
    } else if (*chg) {
      const AnyonType type =
          chg_anyon == "tau1" ? AnyonType::Tau1 : AnyonType::OneTau;
      const ChargeGraph g =
          chg_graph == "3d" ? ChargeGraph::ThreeD : ChargeGraph::TwoD;
      const ExperimentSpec spec = build_charge_measure(type, g);
      json out = {{"name", spec.name}};
      if (!chg_noise && chg_lambdas.empty()) {
        StateVector sv = run(spec.circuit);
        json probs = json::object();
        for (auto& [q, role] : spec.readout)
          probs[role] = prob_one(sv, q);
        out["prob_one"] = probs;
        out["noiseless"] = true;
      } else {
        NoiseModel model = load_noise(chg_noise, seed);
        std::vector<double> lambdas = chg_lambdas.empty()
                                          ? std::vector<double>{1, 1.5, 2, 2.5,
                                                                3, 3.5, 4, 4.5,
                                                                5, 5.5, 6}
                                          : parse_lambdas(chg_lambdas);
        json probs = json::object();
        json fits = json::object();
        for (auto& [q, role] : spec.readout) {
          const ZNEResult r = zne_for_qubit(spec.circuit, model, lambdas,
                                            chg_shots, chg_twirl, q, 0.0);
          probs[role] = (1.0 - r.extrapolated) / 2.0;
          fits[role] = zne_to_json(r);
        }
        out["prob_one"] = probs;
        out["zne"] = fits;
      }
      json theory = json::object();
      for (auto& [role, v] :
           charge_prediction(type == AnyonType::Tau1, g == ChargeGraph::ThreeD))
        theory[role] = v;
      out["theory"] = theory;
      write_or_print(chg_out, out.dump(2));
    } else if (*brd) {
      const ExperimentSpec spec = build_braid(brd_control);
      const int root = std::stoi(spec.meta.at("root_qubit"));
      json out = {{"name", spec.name}, {"root_qubit", root},
                  {"theory_ratio", spec.expected.at("ratio")}};
      if (!brd_noise && brd_lambdas.empty()) {
        StateVector sv = run(spec.circuit);
        const double p1 = prob_one(sv, root);
        out["ratio"] = p1 / (1.0 - p1);
        out["noiseless"] = true;
      } else {
        NoiseModel model = load_noise(brd_noise, seed);
        std::vector<double> lambdas =
            brd_lambdas.empty()
                ? std::vector<double>{1, 1.5, 2, 2.5, 3, 3.5, 4, 4.5}
                : parse_lambdas(brd_lambdas);
        std::vector<ZNEPoint> pts;
        for (double lam : lambdas) {
          NoisyRun nr = run_noisy(spec.circuit, model, lam, brd_shots, brd_twirl);
          double z = nr.z_value(root);
          if (!model.ideal_readout() &&
              static_cast<std::size_t>(root) < model.readout.size())
            z = mitigate_readout_z(z,
                                   model.readout[static_cast<std::size_t>(root)]);
          const double p1 = (1.0 - z) / 2.0;
          const double sd = 2.0 * std::sqrt(std::max(1e-12, p1 * (1 - p1)) /
                                            static_cast<double>(brd_shots));
          pts.push_back({lam, z, sd});
        }
        ZNEResult fit = zne_extrapolate(pts, brd_floor);
        const auto [ratio, dr] = propagate_ratio_error(
            fit.extrapolated, pts.front().stderr_);
        out["ratio"] = ratio;
        out["ratio_stderr"] = dr;
        if (brd_bootstrap > 0) {
          auto [dist, sd] = bootstrap_zne(
              pts, brd_bootstrap, seed + 17,
              [](double z) { return (1.0 - z) / (1.0 + z); }, brd_floor);
          fit.bootstrap = dist;
          fit.bootstrap_std = sd;
          out["bootstrap_std"] = sd;
          out["bootstrap_skewness"] = skewness(dist);
        }
        out["zne"] = zne_to_json(fit);
      }
      write_or_print(brd_out, out.dump(2));
    } else if (*chr) {
      const Multigraph g = multigraph_from_json(load_json_file(chr_graph));
      const ChromPoly p = chromatic_poly(g);
      const double k =
          chr_k == "golden" ? golden_ratio() + 2.0 : std::stod(chr_k);
      json j = {{"coeffs", p.coeffs}, {"k", k}, {"value", eval_poly(p, k)}};
      std::cout << j.dump(2) << "\n";
    } else if (*orc) {
      const Multigraph g = multigraph_from_json(load_json_file(orc_graph));
      json j = {{"k", orc_k}, {"count", coloring_oracle(g, orc_k)}};
      std::cout << j.dump(2) << "\n";
    }
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
