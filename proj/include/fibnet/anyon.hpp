#pragma once

// Analytical oracle for anyonic states: the tube (anyonic fusion) basis on a
// two-punctured surface, predicted charge-measurement statistics, and the
// logical braid action, all independent of any circuit path.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fib.hpp"

namespace fibnet {

enum class TubeLabel { OneOne, Tau1, OneTau, TauTau1, TauTauTau, TauTau1T, TauTauT1 };

struct TubeState {
  TubeLabel label;
  std::array<cplx, 4> vector;  // amplitudes over (alpha,beta) = 00,01,10,11
  int pinned_k = 0, pinned_l = 0;  // the (k, l) edge factor
};

//! Normalized tube-basis vectors; the five anyonic states plus the two
//! nilpotent product words.
inline TubeState tube_state(TubeLabel label) {
  const double pi = std::acos(-1.0);
  const double phi = golden_ratio();
  const double D = std::sqrt(1.0 + phi * phi);
  const double sp = std::sqrt(phi);
  TubeState t;
  t.label = label;
  t.vector = {cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}};
  switch (label) {
    case TubeLabel::OneOne:  // (|00> + phi|11>)/D, pinned (0,0)
      t.vector[0] = 1.0 / D;
      t.vector[3] = phi / D;
      t.pinned_k = t.pinned_l = 0;
      break;
    case TubeLabel::Tau1:
      t.vector[1] = 1.0 / D;
      t.vector[2] = std::polar(1.0 / D, -4 * pi / 5);
      t.vector[3] = std::polar(sp / D, 3 * pi / 5);
      t.pinned_k = t.pinned_l = 1;
      break;
    case TubeLabel::OneTau:
      t.vector[1] = 1.0 / D;
      t.vector[2] = std::polar(1.0 / D, 4 * pi / 5);
      t.vector[3] = std::polar(sp / D, -3 * pi / 5);
      t.pinned_k = t.pinned_l = 1;
      break;
    case TubeLabel::TauTau1:  // (phi|00> - |11>)/D, pinned (0,0)
      t.vector[0] = phi / D;
      t.vector[3] = -1.0 / D;
      t.pinned_k = t.pinned_l = 0;
      break;
    case TubeLabel::TauTauTau:
      t.vector[1] = sp / D;
      t.vector[2] = sp / D;
      t.vector[3] = (1.0 / phi) / D;
      t.pinned_k = t.pinned_l = 1;
      break;
    case TubeLabel::TauTau1T:  // |1011>: (k,l) = (1,0), (alpha,beta) = 11
      t.vector[3] = 1.0;
      t.pinned_k = 1;
      t.pinned_l = 0;
      break;
    case TubeLabel::TauTauT1:  // |0111>
      t.vector[3] = 1.0;
      t.pinned_k = 0;
      t.pinned_l = 1;
      break;
  }
  return t;
}

inline TubeState tube_state(const std::string& name) {
  static const std::map<std::string, TubeLabel> names = {
      {"11", TubeLabel::OneOne},     {"t1", TubeLabel::Tau1},
      {"1t", TubeLabel::OneTau},     {"tt_1", TubeLabel::TauTau1},
      {"tt_t", TubeLabel::TauTauTau}, {"tt_1t", TubeLabel::TauTau1T},
      {"tt_t1", TubeLabel::TauTauT1}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown tube label");
  return tube_state(it->second);
}

//! Fig. 2j theory bars: per-qubit P(1) for the charge experiment, keyed by
//! role name Q1..Q7.
inline std::map<std::string, double> charge_prediction(bool tau1,
                                                       bool three_d) {
  const double phi = golden_ratio();
  const double p = phi * phi / (phi * phi + 1.0);
  std::map<std::string, double> out;
  out["Q5"] = out["Q6"] = out["Q7"] = 1.0;
  if (!three_d) {
    out["Q1"] = out["Q2"] = out["Q3"] = out["Q4"] = p;
  } else {
    out["Q4"] = out["Q2"] = tau1 ? 1.0 : 0.0;
    out["Q1"] = out["Q3"] = tau1 ? 0.0 : 1.0;
  }
  return out;
}

struct BraidPrediction {
  cplx amp0, amp1;
  double ratio;  // |amp1|^2 / |amp0|^2
};

//! Logical action of sigma_1 / sigma_2 on a logical basis state.
inline BraidPrediction braid_prediction(int gate_index, int initial_bit) {
  const auto [s1, s2] = braid_matrices();
  const auto& m = gate_index == 1 ? s1 : s2;
  BraidPrediction p;
  p.amp0 = m[initial_bit == 0 ? 0 : 1];
  p.amp1 = m[initial_bit == 0 ? 2 : 3];
  const double n0 = std::norm(p.amp0);
  p.ratio = n0 > 0 ? std::norm(p.amp1) / n0
                   : std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace fibnet
