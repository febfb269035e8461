#pragma once

// Monte Carlo noise injection, channel twirling, readout-error modelling and
// mitigation, zero-noise extrapolation with exponential fitting, bootstrap
// confidence intervals, and ratio error propagation.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "statevec.hpp"

namespace fibnet {

struct ReadoutError {
  double eps0 = 0.0;  // p(1|0)
  double eps1 = 0.0;  // p(0|1)
};

struct NoiseModel {
  double p_1q = 0.0;          // per-1q-op Pauli error probability
  double p_kq = 0.0;          // per-multi-qubit-op probability
  double coherent_eps = 0.0;  // Z over-rotation angle on first target
  std::vector<ReadoutError> readout;  // per qubit; empty = ideal readout
  std::uint64_t seed = 0;

  bool ideal_readout() const {
    for (const auto& r : readout)
      if (r.eps0 != 0.0 || r.eps1 != 0.0) return false;
    return true;
  }
};

namespace detail_noise {

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

inline void apply_pauli(StateVector& sv, int q, int p) {
  const std::uint64_t bit = 1ull << q;
  switch (p) {
    case 1:  // X
      for (std::uint64_t i = 0; i < sv.amps.size(); ++i)
        if (!(i & bit)) std::swap(sv.amps[i], sv.amps[i | bit]);
      return;
    case 2:  // Y
      for (std::uint64_t i = 0; i < sv.amps.size(); ++i)
        if (!(i & bit)) {
          const cplx a0 = sv.amps[i];
          sv.amps[i] = cplx{0, -1} * sv.amps[i | bit];
          sv.amps[i | bit] = cplx{0, 1} * a0;
        }
      return;
    case 3:  // Z
      for (std::uint64_t i = 0; i < sv.amps.size(); ++i)
        if (i & bit) sv.amps[i] = -sv.amps[i];
      return;
    default:
      return;
  }
}

inline void apply_pauli_word(StateVector& sv, const std::vector<int>& qs,
                             std::uint64_t word) {
  for (std::size_t i = 0; i < qs.size(); ++i)
    apply_pauli(sv, qs[i], static_cast<int>((word >> (2 * i)) & 3u));
}

inline void apply_rz(StateVector& sv, int q, double angle) {
  const cplx lo = std::polar(1.0, -angle / 2);
  const cplx hi = std::polar(1.0, angle / 2);
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t i = 0; i < sv.amps.size(); ++i)
    sv.amps[i] *= (i & bit) ? hi : lo;
}

// forward readout model applied to a probability vector, in place
inline void apply_confusion(std::vector<double>& p, int n_qubits,
                            const std::vector<ReadoutError>& ro,
                            bool inverse) {
  for (int q = 0; q < n_qubits; ++q) {
    if (static_cast<std::size_t>(q) >= ro.size()) continue;
    const double e0 = ro[static_cast<std::size_t>(q)].eps0;
    const double e1 = ro[static_cast<std::size_t>(q)].eps1;
    if (e0 == 0.0 && e1 == 0.0) continue;
    double m00, m01, m10, m11;
    if (!inverse) {
      m00 = 1 - e0; m01 = e1; m10 = e0; m11 = 1 - e1;
    } else {
      const double det = 1 - e0 - e1;
      if (det <= 0.05)
        throw std::runtime_error("readout mitigation: ill-conditioned");
      m00 = (1 - e1) / det; m01 = -e1 / det;
      m10 = -e0 / det; m11 = (1 - e0) / det;
    }
    const std::uint64_t bit = 1ull << q;
    for (std::uint64_t i = 0; i < p.size(); ++i) {
      if (i & bit) continue;
      const double p0 = p[i], p1 = p[i | bit];
      p[i] = m00 * p0 + m01 * p1;
      p[i | bit] = m10 * p0 + m11 * p1;
    }
  }
}

}  // namespace detail_noise

struct NoisyRun {
  SampleCounts counts;
  long long shots = 0;
  int n_qubits = 0;

  double prob_one(int q) const {
    long long acc = 0;
    for (const auto& [w, c] : counts)
      if (w[static_cast<std::size_t>(q)] == '1') acc += c;
    return static_cast<double>(acc) / static_cast<double>(shots);
  }
  double z_value(int q) const { return 1.0 - 2.0 * prob_one(q); }
};

//! Monte Carlo trajectory simulation: after each op with noise_weight > 0,
//! with probability min(1, lambda p) a uniformly random non-identity Pauli
//! word hits the op's support, plus a coherent Z(lambda eps) over-rotation on
//! the first target. With `twirl`, every insertion point is conjugated by an
//! independent random Pauli word. Readout errors are applied to the sampled
//! distribution. Deterministic for a fixed model seed.
inline NoisyRun run_noisy(const Circuit& circuit, const NoiseModel& model,
                          double lambda, long long shots, bool twirl,
                          int n_trajectories = 0, int n_threads = 0) {
  if (lambda < 1.0) throw std::invalid_argument("run_noisy: lambda < 1");
  if (shots < 1) throw std::invalid_argument("run_noisy: shots < 1");
  const bool noiseless = model.p_1q == 0.0 && model.p_kq == 0.0 &&
                         model.coherent_eps == 0.0;
  int traj = n_trajectories > 0 ? n_trajectories
                                : static_cast<int>(std::min<long long>(
                                      shots, noiseless ? 1 : 1024));
  if (noiseless) traj = 1;
  const std::uint64_t lam_bits = static_cast<std::uint64_t>(lambda * 4096.0);

  std::vector<SampleCounts> partial(static_cast<std::size_t>(traj));
  auto run_traj = [&](int t) {
    std::mt19937_64 rng(detail_noise::mix(model.seed ^ lam_bits,
                                          static_cast<std::uint64_t>(t)));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    StateVector sv = StateVector::zero(circuit.n_qubits);
    for (const GateOp& op : circuit.ops) {
      apply(sv, op);
      if (op.kind == OpKind::NoiseMarker || op.noise_weight <= 0.0) continue;
      std::vector<int> support = op.targets;
      for (auto& [c, bval] : op.controls) support.push_back(c);
      const int k = static_cast<int>(support.size());
      const double p_base = (k == 1 ? model.p_1q : model.p_kq);
      std::uint64_t tw = 0;
      if (twirl) {
        tw = rng() & ((1ull << (2 * k)) - 1);
        detail_noise::apply_pauli_word(sv, support, tw);
      }
      if (model.coherent_eps != 0.0)
        detail_noise::apply_rz(sv, op.targets[0],
                               lambda * model.coherent_eps * op.noise_weight);
      const double p_err = std::min(1.0, lambda * p_base * op.noise_weight);
      if (p_err > 0.0 && uni(rng) < p_err) {
        const std::uint64_t n_words = (1ull << (2 * k)) - 1;
        const std::uint64_t w = 1 + static_cast<std::uint64_t>(
                                        uni(rng) * static_cast<double>(n_words));
        detail_noise::apply_pauli_word(sv, support, std::min(w, n_words));
      }
      if (twirl) detail_noise::apply_pauli_word(sv, support, tw);
    }
    // measurement distribution with readout errors
    std::vector<double> p(sv.amps.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(sv.amps[i]);
    if (!model.ideal_readout())
      detail_noise::apply_confusion(p, circuit.n_qubits, model.readout, false);
    const long long lo = shots * t / traj;
    const long long hi = shots * (t + 1) / traj;
    const long long my_shots = hi - lo;
    if (my_shots <= 0) return;
    std::vector<double> cdf(p.size());
    double acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      cdf[i] = acc;
    }
    std::uniform_real_distribution<double> pick(0.0, acc);
    auto& mine = partial[static_cast<std::size_t>(t)];
    for (long long s = 0; s < my_shots; ++s) {
      const double u = pick(rng);
      const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
      mine[bits_to_string(static_cast<std::uint64_t>(it - cdf.begin()),
                          circuit.n_qubits)] += 1;
    }
  };

  int workers = n_threads > 0
                    ? n_threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, traj));
  if (workers == 1) {
    for (int t = 0; t < traj; ++t) run_traj(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int t = next++; t < traj; t = next++) run_traj(t);
      });
    for (auto& th : pool) th.join();
  }

  NoisyRun out;
  out.shots = shots;
  out.n_qubits = circuit.n_qubits;
  for (auto& part : partial)
    for (auto& [w, c] : part) out.counts[w] += c;
  return out;
}

//! Scalar readout mitigation: invert the single-qubit confusion model on a
//! measured <Z>.
inline double mitigate_readout_z(double z_measured, const ReadoutError& ro) {
  const double det = 1.0 - ro.eps0 - ro.eps1;
  if (det <= 0.05)
    throw std::runtime_error("readout mitigation: ill-conditioned");
  return (z_measured - (ro.eps1 - ro.eps0)) / det;
}

//! Distribution-level mitigation: tensor-product confusion inverse, negative
//! entries clipped and renormalized.
inline std::vector<double> mitigate_readout_distribution(
    std::vector<double> probs, int n_qubits,
    const std::vector<ReadoutError>& ro) {
  detail_noise::apply_confusion(probs, n_qubits, ro, true);
  double total = 0.0;
  for (double& v : probs) {
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (total > 0.0)
    for (double& v : probs) v /= total;
  return probs;
}

// ---------------------------------------------------------------------------
// Zero-noise extrapolation
// ---------------------------------------------------------------------------

struct ZNEPoint {
  double lambda = 1.0;
  double value = 0.0;
  double stderr_ = 0.0;
};

struct ZNEResult {
  std::vector<ZNEPoint> points;   // points used by the fit
  double A = 0.0, k = 0.0, B = 0.0;
  double extrapolated = 0.0;      // A + B
  double r_squared = 0.0;
  bool degenerate = false;        // flat-data branch
  bool unmitigated = false;       // fit failed; raw lambda=1 value reported
  std::vector<double> bootstrap;  // extrapolated values per resample
  double bootstrap_std = 0.0;
};

namespace detail_noise {

struct FitOut {
  double A, k, B, sse;
  bool ok;
};

inline FitOut fit_exponential(const std::vector<ZNEPoint>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> w(n, 1.0);
  bool weighted = true;
  for (auto& p : pts)
    if (p.stderr_ <= 0.0) weighted = false;
  if (weighted)
    for (std::size_t i = 0; i < n; ++i)
      w[i] = 1.0 / (pts[i].stderr_ * pts[i].stderr_);

  // initialization: B from the tail, k from a two-point log slope
  double B = 0.0;
  {
    const std::size_t tail = std::max<std::size_t>(1, n / 4);
    for (std::size_t i = n - tail; i < n; ++i) B += pts[i].value;
    B /= static_cast<double>(tail);
  }
  double k = 0.5;
  {
    const double d0 = pts[0].value - B;
    const double d1 = pts[n / 2].value - B;
    if (d0 * d1 > 0.0 && std::abs(d0) > std::abs(d1)) {
      k = std::log(std::abs(d0) / std::abs(d1)) /
          (pts[n / 2].lambda - pts[0].lambda);
    }
  }
  double A = (pts[0].value - B) * std::exp(k * pts[0].lambda);

  auto sse_of = [&](double a, double kk, double b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = pts[i].value - (a * std::exp(-kk * pts[i].lambda) + b);
      s += w[i] * r * r;
    }
    return s;
  };
  double sse = sse_of(A, k, B);
  for (int iter = 0; iter < 200; ++iter) {
    // Gauss-Newton normal equations over (A, k, B)
    double J[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double g[3] = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::exp(-k * pts[i].lambda);
      const double r = pts[i].value - (A * e + B);
      const double d[3] = {e, -A * pts[i].lambda * e, 1.0};
      for (int a = 0; a < 3; ++a) {
        g[a] += w[i] * d[a] * r;
        for (int b = 0; b < 3; ++b) J[a][b] += w[i] * d[a] * d[b];
      }
    }
    // solve J dx = g (3x3 Gaussian elimination with tiny ridge)
    for (int a = 0; a < 3; ++a) J[a][a] += 1e-14;
    double M[3][4];
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) M[a][b] = J[a][b];
      M[a][3] = g[a];
    }
    bool singular = false;
    for (int c = 0; c < 3; ++c) {
      int piv = c;
      for (int rr = c + 1; rr < 3; ++rr)
        if (std::abs(M[rr][c]) > std::abs(M[piv][c])) piv = rr;
      if (std::abs(M[piv][c]) < 1e-300) {
        singular = true;
        break;
      }
      std::swap(M[c], M[piv]);
      for (int rr = 0; rr < 3; ++rr) {
        if (rr == c) continue;
        const double f = M[rr][c] / M[c][c];
        for (int cc = c; cc < 4; ++cc) M[rr][cc] -= f * M[c][cc];
      }
    }
    if (singular) return {A, k, B, sse, false};
    double dx[3];
    for (int a = 0; a < 3; ++a) dx[a] = M[a][3] / M[a][a];
    // backtracking line search
    double step = 1.0;
    double nA = A, nk = k, nB = B, nsse = sse;
    for (int bt = 0; bt < 30; ++bt) {
      const double tA = A + step * dx[0];
      const double tk = k + step * dx[1];
      const double tB = B + step * dx[2];
      const double s = sse_of(tA, tk, tB);
      if (s <= sse) {
        nA = tA; nk = tk; nB = tB; nsse = s;
        break;
      }
      step *= 0.5;
    }
    const double rel = std::abs(nsse - sse) / std::max(1e-30, sse);
    A = nA; k = nk; B = nB;
    const bool conv = rel < 1e-10;
    sse = nsse;
    if (conv) break;
  }
  if (!std::isfinite(A) || !std::isfinite(k) || !std::isfinite(B))
    return {A, k, B, sse, false};
  return {A, k, B, sse, true};
}

}  // namespace detail_noise

//! Nonlinear least squares for y = A exp(-k lambda) + B, Gauss-Newton with
//! the documented initialization. Points with |value| below `noise_floor`
//! are excluded. Flat data takes the degenerate mean branch; a diverged fit
//! reports the raw lambda = 1 value flagged unmitigated.
inline ZNEResult zne_extrapolate(std::vector<ZNEPoint> points,
                                 double noise_floor = 0.0) {
  std::sort(points.begin(), points.end(),
            [](const ZNEPoint& a, const ZNEPoint& b) {
              return a.lambda < b.lambda;
            });
  ZNEResult res;
  std::vector<ZNEPoint> used;
  for (const auto& p : points)
    if (noise_floor <= 0.0 || std::abs(p.value) >= noise_floor)
      used.push_back(p);
  if (used.size() < 4) used = points;
  if (used.size() < 4)
    throw std::invalid_argument("zne_extrapolate: need >= 4 lambda points");
  res.points = used;

  double mean = 0.0, var = 0.0;
  for (auto& p : used) mean += p.value;
  mean /= static_cast<double>(used.size());
  for (auto& p : used) var += (p.value - mean) * (p.value - mean);

  const auto fit = detail_noise::fit_exponential(used);
  const bool flat = var < 1e-24 || (fit.ok && std::abs(fit.k) < 1e-9);
  if (flat) {
    res.degenerate = true;
    res.A = 0.0;
    res.k = 0.0;
    res.B = mean;
    res.extrapolated = mean;
    res.r_squared = var < 1e-24 ? 1.0 : 0.0;
    return res;
  }
  if (!fit.ok) {
    res.unmitigated = true;
    res.extrapolated = used.front().value;
    return res;
  }
  res.A = fit.A;
  res.k = fit.k;
  res.B = fit.B;
  res.extrapolated = fit.A + fit.B;
  double ss_res = 0.0;
  for (auto& p : used) {
    const double r = p.value - (fit.A * std::exp(-fit.k * p.lambda) + fit.B);
    ss_res += r * r;
  }
  res.r_squared = var > 0.0 ? std::max(0.0, 1.0 - ss_res / var) : 1.0;
  return res;
}

//! Bootstrap: resample every point from a normal with its empirical stderr,
//! refit, and collect the transformed extrapolated values.
template <typename Transform>
inline std::pair<std::vector<double>, double> bootstrap_zne(
    const std::vector<ZNEPoint>& points, int n_resamples, std::uint64_t seed,
    Transform&& transform, double noise_floor = 0.0) {
  if (n_resamples < 100)
    throw std::invalid_argument("bootstrap: need >= 100 resamples");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> dist;
  dist.reserve(static_cast<std::size_t>(n_resamples));
  for (int r = 0; r < n_resamples; ++r) {
    std::vector<ZNEPoint> pts = points;
    for (auto& p : pts) p.value += p.stderr_ * gauss(rng);
    try {
      const ZNEResult fit = zne_extrapolate(pts, noise_floor);
      dist.push_back(transform(fit.extrapolated));
    } catch (...) {
      continue;
    }
  }
  double mean = 0.0;
  for (double v : dist) mean += v;
  mean /= std::max<std::size_t>(1, dist.size());
  double var = 0.0;
  for (double v : dist) var += (v - mean) * (v - mean);
  const double sd =
      dist.size() > 1 ? std::sqrt(var / (static_cast<double>(dist.size()) - 1))
                      : 0.0;
  return {dist, sd};
}

//! r = (1 - z)/(1 + z) with first-order error propagation.
inline std::pair<double, double> propagate_ratio_error(double z, double dz) {
  if (std::abs(1.0 + z) < 1e-12)
    throw std::domain_error("ratio undefined at z = -1");
  const double r = (1.0 - z) / (1.0 + z);
  const double dr = 2.0 * dz / ((1.0 + z) * (1.0 + z));
  return {r, dr};
}

inline double skewness(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double m = 0.0;
  for (double x : xs) m += x;
  m /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double x : xs) {
    m2 += (x - m) * (x - m);
    m3 += (x - m) * (x - m) * (x - m);
  }
  m2 /= n;
  m3 /= n;
  return m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
}

}  // namespace fibnet
