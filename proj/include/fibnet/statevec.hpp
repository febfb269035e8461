#pragma once

// Dense statevector engine: state allocation, gate application, projective
// expectation values and bitstring sampling.
//
// Conventions: qubit 0 is the least significant bit of the basis index.
// Textual bitstrings render qubit 0 leftmost.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibnet {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 26;  // memory guard, 2^26 amplitudes

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Format a basis index as text, qubit 0 leftmost.
inline std::string bits_to_string(std::uint64_t basis, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    if ((basis >> q) & 1u) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

inline std::uint64_t string_to_bits(const std::string& s) {
  std::uint64_t b = 0;
  for (std::size_t q = 0; q < s.size(); ++q)
    if (s[q] == '1') b |= (1ull << q);
  return b;
}

enum class OpKind { Unitary1, ControlledUnitary1, UnitaryK, NoiseMarker };

//! One gate application. `matrix` is row-major, dimension 2^k x 2^k for k
//! targets. Controls are (qubit, required-bit) pairs.
struct GateOp {
  OpKind kind = OpKind::Unitary1;
  std::vector<int> targets;
  std::vector<std::pair<int, int>> controls;
  std::vector<cplx> matrix;
  double noise_weight = 0.0;  // per-op error scale; 0 = noiseless
  std::string label;

  int n_targets() const { return static_cast<int>(targets.size()); }
  std::size_t dim() const { return std::size_t{1} << targets.size(); }
};

//! max-norm of M^dagger M - I for a row-major d x d matrix.
inline double unitarity_defect(const std::vector<cplx>& m, std::size_t d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        acc += std::conj(m[k * d + i]) * m[k * d + j];
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  return worst;
}

inline GateOp make_unitary1(int target, const std::vector<cplx>& m,
                            double noise_weight = 0.0, std::string label = {}) {
  if (m.size() != 4) throw std::invalid_argument("1q matrix must be 2x2");
  if (unitarity_defect(m, 2) > 1e-10)
    throw std::invalid_argument("non-unitary 1q matrix");
  GateOp op;
  op.kind = OpKind::Unitary1;
  op.targets = {target};
  op.matrix = m;
  op.noise_weight = noise_weight;
  op.label = std::move(label);
  return op;
}

inline GateOp make_controlled1(int control, int target,
                               const std::vector<cplx>& m,
                               double noise_weight = 0.0,
                               std::string label = {}) {
  if (control == target)
    throw std::invalid_argument("control overlaps target");
  if (unitarity_defect(m, 2) > 1e-10)
    throw std::invalid_argument("non-unitary controlled matrix");
  GateOp op;
  op.kind = OpKind::ControlledUnitary1;
  op.targets = {target};
  op.controls = {{control, 1}};
  op.matrix = m;
  op.noise_weight = noise_weight;
  op.label = std::move(label);
  return op;
}

inline GateOp make_unitary_k(std::vector<int> targets,
                             const std::vector<cplx>& m,
                             double noise_weight = 0.0,
                             std::string label = {}) {
  const std::size_t d = std::size_t{1} << targets.size();
  if (targets.size() > 5) throw std::invalid_argument("k-qubit gate with k > 5");
  if (m.size() != d * d) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw std::invalid_argument("duplicate target qubit");
  if (unitarity_defect(m, d) > 1e-10)
    throw std::invalid_argument("non-unitary k-qubit matrix");
  GateOp op;
  op.kind = OpKind::UnitaryK;
  op.targets = std::move(targets);
  op.matrix = m;
  op.noise_weight = noise_weight;
  op.label = std::move(label);
  return op;
}

struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> ops;
  std::string name;
  std::vector<std::pair<int, std::string>> qubit_roles;

  void push(GateOp op) {
    for (int t : op.targets)
      if (t < 0 || t >= n_qubits) throw std::out_of_range("qubit index");
    for (auto& [c, b] : op.controls)
      if (c < 0 || c >= n_qubits) throw std::out_of_range("control index");
    ops.push_back(std::move(op));
  }
};

struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amps;

  static StateVector zero(int n) {
    if (n < 1 || n > kMaxQubits)
      throw capacity_error("qubit count out of range [1, 26]");
    StateVector sv;
    sv.n_qubits = n;
    sv.amps.assign(std::size_t{1} << n, cplx{0.0, 0.0});
    sv.amps[0] = 1.0;
    return sv;
  }

  double norm2() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
  }
};

namespace detail {

inline void apply_1q(StateVector& sv, int q, const cplx* m) {
  const std::uint64_t bit = 1ull << q;
  const std::uint64_t dim = sv.amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const cplx a0 = sv.amps[i], a1 = sv.amps[i | bit];
    sv.amps[i] = m[0] * a0 + m[1] * a1;
    sv.amps[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

inline bool controls_satisfied(std::uint64_t basis,
                               const std::vector<std::pair<int, int>>& ctrl) {
  for (auto& [q, b] : ctrl)
    if (static_cast<int>((basis >> q) & 1u) != b) return false;
  return true;
}

}  // namespace detail

//! state <- U_op * state with op embedded on its targets/controls.
inline void apply(StateVector& sv, const GateOp& op) {
  for (int t : op.targets)
    if (t < 0 || t >= sv.n_qubits) throw std::out_of_range("qubit index");
  for (auto& [c, b] : op.controls)
    if (c < 0 || c >= sv.n_qubits) throw std::out_of_range("control index");

  switch (op.kind) {
    case OpKind::NoiseMarker:
      return;
    case OpKind::Unitary1:
      detail::apply_1q(sv, op.targets[0], op.matrix.data());
      return;
    case OpKind::ControlledUnitary1: {
      const std::uint64_t bit = 1ull << op.targets[0];
      const std::uint64_t dim = sv.amps.size();
      const cplx* m = op.matrix.data();
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        if (!detail::controls_satisfied(i, op.controls)) continue;
        const cplx a0 = sv.amps[i], a1 = sv.amps[i | bit];
        sv.amps[i] = m[0] * a0 + m[1] * a1;
        sv.amps[i | bit] = m[2] * a0 + m[3] * a1;
      }
      return;
    }
    case OpKind::UnitaryK: {
      const int k = op.n_targets();
      const std::size_t d = op.dim();
      const std::uint64_t dim = sv.amps.size();
      std::uint64_t tmask = 0;
      for (int t : op.targets) tmask |= 1ull << t;
      std::vector<cplx> in(d), out(d);
      // iterate over all assignments of the non-target qubits
      for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & tmask) continue;
        if (!detail::controls_satisfied(base, op.controls)) continue;
        for (std::size_t r = 0; r < d; ++r) {
          std::uint64_t idx = base;
          for (int b = 0; b < k; ++b)
            if ((r >> b) & 1u) idx |= 1ull << op.targets[b];
          in[r] = sv.amps[idx];
        }
        for (std::size_t r = 0; r < d; ++r) {
          cplx acc = 0.0;
          const cplx* row = op.matrix.data() + r * d;
          for (std::size_t c = 0; c < d; ++c) acc += row[c] * in[c];
          out[r] = acc;
        }
        for (std::size_t r = 0; r < d; ++r) {
          std::uint64_t idx = base;
          for (int b = 0; b < k; ++b)
            if ((r >> b) & 1u) idx |= 1ull << op.targets[b];
          sv.amps[idx] = out[r];
        }
      }
      return;
    }
  }
}

inline void apply(StateVector& sv, const Circuit& c) {
  if (c.n_qubits != sv.n_qubits)
    throw std::invalid_argument("circuit/state qubit count mismatch");
  for (const GateOp& op : c.ops) apply(sv, op);
}

inline StateVector run(const Circuit& c) {
  StateVector sv = StateVector::zero(c.n_qubits);
  apply(sv, c);
  return sv;
}

//! P(qubit q = 1).
inline double prob_one(const StateVector& sv, int q) {
  if (q < 0 || q >= sv.n_qubits) throw std::out_of_range("qubit index");
  const std::uint64_t bit = 1ull << q;
  double p = 0.0;
  for (std::uint64_t i = 0; i < sv.amps.size(); ++i)
    if (i & bit) p += std::norm(sv.amps[i]);
  return p;
}

using SampleCounts = std::map<std::string, long long>;

//! Multinomial draw from |amps|^2; deterministic for a fixed seed.
inline SampleCounts sample(const StateVector& sv, long long shots,
                           std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::vector<double> cdf(sv.amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < sv.amps.size(); ++i) {
    acc += std::norm(sv.amps[i]);
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, acc);
  std::map<std::uint64_t, long long> raw;
  for (long long s = 0; s < shots; ++s) {
    const double u = uni(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    raw[static_cast<std::uint64_t>(it - cdf.begin())] += 1;
  }
  SampleCounts counts;
  for (auto& [basis, c] : raw) counts[bits_to_string(basis, sv.n_qubits)] = c;
  return counts;
}

//! |<a|b>|^2.
inline double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("fidelity: dimension mismatch");
  cplx ov = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    ov += std::conj(a.amps[i]) * b.amps[i];
  return std::norm(ov);
}

}  // namespace fibnet
