#pragma once

// Fibonacci category data and named gate matrices: quantum dimensions,
// F-symbols, R-symbols, the modular-S gate, the anyon-charge unitary U,
// the logical braid matrices sigma_1 / sigma_2, and assembly of F-move and
// R-move unitaries as GateOps.
//
// String labels are binary: 0 = vacuum, 1 = tau.

#include <array>
#include <cmath>
#include <stdexcept>

#include "statevec.hpp"

namespace fibnet {

struct FibConstants {
  double phi;          // golden ratio
  double D;            // total quantum dimension sqrt(1 + phi^2)
  double theta;        // arctan(sqrt(phi))
  double theta_prime;  // 2 arctan(phi)
  std::array<double, 2> d;  // quantum dimensions d_0 = 1, d_1 = phi

  static const FibConstants& get() {
    static const FibConstants k = [] {
      FibConstants c;
      c.phi = (1.0 + std::sqrt(5.0)) / 2.0;
      c.D = std::sqrt(1.0 + c.phi * c.phi);
      c.theta = std::atan(std::sqrt(c.phi));
      c.theta_prime = 2.0 * std::atan(c.phi);
      c.d = {1.0, c.phi};
      return c;
    }();
    return k;
  }
};

inline double golden_ratio() { return FibConstants::get().phi; }

//! Fusion rule delta_{ijk}: 0 iff exactly one of the three labels is tau.
inline bool branching_ok(int i, int j, int k) { return i + j + k != 1; }

//! Fibonacci F-symbol F^{ijm}_{kln}. Zero whenever either side violates the
//! branching rule. The only non-trivial block is all-tau outer legs:
//! [[1/phi, 1/sqrt(phi)], [1/sqrt(phi), -1/phi]] over (m, n).
inline double f_symbol(int i, int j, int m, int k, int l, int n) {
  if (!branching_ok(i, j, m) || !branching_ok(k, l, m)) return 0.0;
  if (!branching_ok(j, k, n) || !branching_ok(l, i, n)) return 0.0;
  const double phi = golden_ratio();
  if (i == 1 && j == 1 && k == 1 && l == 1) {
    if (m == 0 && n == 0) return 1.0 / phi;
    if (m == 1 && n == 1) return -1.0 / phi;
    return 1.0 / std::sqrt(phi);
  }
  return 1.0;
}

//! R-symbol R^{ij}_k: e^{4 pi i/5} for tau-tau -> vacuum, e^{-3 pi i/5} for
//! tau-tau -> tau, and 1 when either strand is the vacuum.
inline cplx r_symbol(int i, int j, int k) {
  if (!branching_ok(i, j, k))
    throw std::domain_error("r_symbol: branching-invalid triple");
  if (i != 1 || j != 1) return cplx{1.0, 0.0};
  const double pi = std::acos(-1.0);
  if (k == 0) return std::polar(1.0, 4.0 * pi / 5.0);
  return std::polar(1.0, -3.0 * pi / 5.0);
}

inline cplx r_symbol_star(int i, int j, int k) {
  return std::conj(r_symbol(i, j, k));
}

//! Modular S gate (1/D) [[1, phi], [phi, -1]]; equals R_y(theta') Z.
inline std::vector<cplx> modular_s() {
  const auto& c = FibConstants::get();
  const double inv = 1.0 / c.D;
  return {inv, c.phi * inv, c.phi * inv, -inv};
}

//! 2x2 reduced R-move phase gate diag(e^{4 pi i/5}, e^{-3 pi i/5}).
inline std::vector<cplx> r_phase(bool conjugate = false) {
  cplx r0 = r_symbol(1, 1, 0), r1 = r_symbol(1, 1, 1);
  if (conjugate) {
    r0 = std::conj(r0);
    r1 = std::conj(r1);
  }
  return {r0, cplx{0, 0}, cplx{0, 0}, r1};
}

//! Anyon-charge basis-change unitary U on a qubit pair (alpha, beta):
//! maps the tube states to computational words,
//!   |~tau 1>   -> |10>,  |~1 tau>  -> |01>,
//!   |~tautau_tau> -> |11>,  |00>   -> |00>,
//! and acts as the identity outside the string-net space.
//! Row-major over basis (00, 01, 10, 11) with alpha the first qubit.
inline std::vector<cplx> charge_unitary() {
  const auto& c = FibConstants::get();
  const double pi = std::acos(-1.0);
  const double invD = 1.0 / c.D;
  const double sp = std::sqrt(c.phi);
  const cplx e4 = std::polar(1.0, 4.0 * pi / 5.0);
  const cplx e3 = std::polar(1.0, 3.0 * pi / 5.0);
  // rows are conjugated tube vectors: <00|, <~1tau|, <~tau1|, <~tautau_tau|
  std::vector<cplx> u(16, cplx{0, 0});
  u[0] = 1.0;
  u[4 * 1 + 1] = invD;
  u[4 * 1 + 2] = std::conj(e4) * invD;
  u[4 * 1 + 3] = sp * e3 * invD;
  u[4 * 2 + 1] = invD;
  u[4 * 2 + 2] = e4 * invD;
  u[4 * 2 + 3] = sp * std::conj(e3) * invD;
  u[4 * 3 + 1] = sp * invD;
  u[4 * 3 + 2] = sp * invD;
  u[4 * 3 + 3] = (1.0 / c.phi) * invD;
  return u;
}

//! Logical braid matrices (sigma_1, sigma_2) for a triplet of tau-1 anyons.
inline std::pair<std::vector<cplx>, std::vector<cplx>> braid_matrices() {
  const double pi = std::acos(-1.0);
  const double phi = golden_ratio();
  const cplx e4 = std::polar(1.0, 4.0 * pi / 5.0);
  const cplx e3m = std::polar(1.0, -3.0 * pi / 5.0);
  std::vector<cplx> s1 = {std::conj(e4), 0.0, 0.0, std::conj(e3m)};
  std::vector<cplx> s2 = {e4 / phi, e3m / std::sqrt(phi),
                          e3m / std::sqrt(phi), cplx{-1.0 / phi, 0.0}};
  return {s1, s2};
}

enum class FMoveVariant { F5q, F4q, F4qTau, F3q };

namespace detail {

// F-move unitary blocks, per assignment of the four outer legs (i,j,k,l):
// the target-qubit map |m> -> sum_n F^{ijm}_{kln} |n> on the branching-valid
// subspace. Where the valid label moves (single-entry block with m0 != n0)
// the orthogonal complement moves along with it; elsewhere the
// branching-violating subspace is left untouched.
inline void fmove_block(int i, int j, int k, int l, cplx* block2x2) {
  bool vm[2], vn[2];
  for (int m = 0; m < 2; ++m)
    vm[m] = branching_ok(i, j, m) && branching_ok(k, l, m);
  for (int n = 0; n < 2; ++n)
    vn[n] = branching_ok(j, k, n) && branching_ok(l, i, n);
  auto at = [&](int n, int m) -> cplx& { return block2x2[2 * n + m]; };
  at(0, 0) = at(0, 1) = at(1, 0) = at(1, 1) = 0.0;
  if (vm[0] && vm[1]) {
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) at(n, m) = f_symbol(i, j, m, k, l, n);
  } else if (vm[0] || vm[1]) {
    const int m0 = vm[0] ? 0 : 1;
    const int n0 = vn[0] ? 0 : 1;
    at(n0, m0) = f_symbol(i, j, m0, k, l, n0);
    at(1 - n0, 1 - m0) = 1.0;  // invalid partner follows
  } else {
    at(0, 0) = at(1, 1) = 1.0;
  }
}

}  // namespace detail

//! Assemble an F-move as a dense GateOp. `outer` holds the distinct outer-leg
//! qubits in cyclic order; `target` is the internal edge being flipped.
//!   F5q:    outer = {i, j, k, l}
//!   F4q:    outer = {i, j, k}, with l identified with i
//!   F4qTau: outer = {i, j, k}, with l fixed to 1 (an excited leg)
//!   F3q:    outer = {i, k}, with j = i and l = k
inline GateOp fmove_op(const std::vector<int>& outer, int target,
                       FMoveVariant variant = FMoveVariant::F5q,
                       double noise_weight = 0.0, std::string label = {}) {
  std::size_t need = 0;
  switch (variant) {
    case FMoveVariant::F5q: need = 4; break;
    case FMoveVariant::F4q:
    case FMoveVariant::F4qTau: need = 3; break;
    case FMoveVariant::F3q: need = 2; break;
  }
  if (outer.size() != need)
    throw std::invalid_argument("fmove_op: wrong outer leg count");

  const int n_out = static_cast<int>(outer.size());
  const int k_tot = n_out + 1;
  const std::size_t d = std::size_t{1} << k_tot;
  std::vector<cplx> mat(d * d, cplx{0, 0});
  // target is qubit 0 of the gate-local ordering; outer legs follow.
  for (std::size_t row_out = 0; row_out < (std::size_t{1} << n_out);
       ++row_out) {
    auto leg = [&](int p) { return static_cast<int>((row_out >> p) & 1u); };
    int i = 0, j = 0, k = 0, l = 0;
    switch (variant) {
      case FMoveVariant::F5q:
        i = leg(0); j = leg(1); k = leg(2); l = leg(3);
        break;
      case FMoveVariant::F4q:
        i = leg(0); j = leg(1); k = leg(2); l = i;
        break;
      case FMoveVariant::F4qTau:
        i = leg(0); j = leg(1); k = leg(2); l = 1;
        break;
      case FMoveVariant::F3q:
        i = leg(0); j = i; k = leg(1); l = k;
        break;
    }
    cplx block[4];
    detail::fmove_block(i, j, k, l, block);
    for (int n = 0; n < 2; ++n)
      for (int m = 0; m < 2; ++m) {
        const std::size_t r = (row_out << 1) | static_cast<std::size_t>(n);
        const std::size_t c = (row_out << 1) | static_cast<std::size_t>(m);
        mat[r * d + c] = block[2 * n + m];
      }
  }
  std::vector<int> qubits;
  qubits.push_back(target);
  qubits.insert(qubits.end(), outer.begin(), outer.end());
  if (label.empty()) label = "Fmove";
  return make_unitary_k(std::move(qubits), mat, noise_weight, std::move(label));
}

//! Reduced R-move: controlled phase diag(e^{4 pi i/5}, e^{-3 pi i/5}) on the
//! target when the control strand is excited.
inline GateOp rmove_op(int control, int target, bool conjugate = false,
                       double noise_weight = 0.0) {
  if (control == target) throw std::invalid_argument("rmove_op: duplicate qubit");
  return make_controlled1(control, target, r_phase(conjugate), noise_weight,
                          conjugate ? "Rmove*" : "Rmove");
}

}  // namespace fibnet
