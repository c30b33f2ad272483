// Copyright 2026 The diraccat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Lorentz boost along the field axis. Solutions of the p_z = 0 frame are
// carried to the frame with longitudinal momentum p_z by the spinor matrix
// exp((eta/2) alpha_z) = cosh(eta/2) (1 + tanh(eta/2) alpha_z).

#pragma once

#include <cmath>

#include "diraccat/hamiltonian.hpp"
#include "diraccat/model.hpp"

namespace diraccat {

struct BoostParams {
  double rapidity = 0.0;
  double cosh_half = 1.0;
  double tanh_half = 0.0;

  double sinh_half() const { return cosh_half * tanh_half; }
};

inline BoostParams boost_from_rapidity(double eta) {
  return {eta, std::cosh(0.5 * eta), std::tanh(0.5 * eta)};
}

/// sign * sqrt(1 + p_z^2 + 4 xi (n_r + 1)).
inline double boosted_energy(const ModelParams& p, int n_r, Sign sign) {
  return sign_value(sign) * std::sqrt(1.0 + p.pz * p.pz + 4.0 * p.xi * (n_r + 1));
}

/// Boost taking the level (n_r, sign) from p_z = 0 to p.pz.
///
/// With E' the p_z = 0 energy and E the boosted one (both signed):
///   cosh(eta/2) = sqrt((E + E') / 2E'),   tanh(eta/2) = p_z / (E + E'),
/// hence cosh(eta) = E/E' and tanh(eta) = p_z/E. For the positive branch
/// eta has the sign of p_z; the negative branch needs the opposite rapidity.
inline BoostParams rapidity(const ModelParams& p, int n_r, Sign sign = Sign::plus) {
  const double e_frame = landau_energy(p, n_r, sign);
  const double e_boost = boosted_energy(p, n_r, sign);
  const double t = p.pz / (e_boost + e_frame);
  return {2.0 * std::atanh(t), std::sqrt((e_boost + e_frame) / (2.0 * e_frame)), t};
}

/// alpha_z restricted to spinor space.
inline Eigen::Matrix4d spinor_alpha_z() {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 2) = m(2, 0) = 1.0;
  m(1, 3) = m(3, 1) = -1.0;
  return m;
}

inline Eigen::Matrix4d boost_matrix(const BoostParams& b) {
  return b.cosh_half * (Eigen::Matrix4d::Identity() + b.tanh_half * spinor_alpha_z());
}

/// Applies a 4x4 spinor matrix to every Fock level of `psi`.
template <typename Derived>
DiracState apply_spinor(const Eigen::MatrixBase<Derived>& m, const DiracState& psi) {
  DiracState out(psi.cutoff());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex mij = m(i, j);
      if (mij != Complex{}) out.block(i) += mij * psi.block(j);
    }
  }
  return out;
}

struct BoostedEigenstate {
  DiracState state;         ///< unit norm
  double raw_squared_norm;  ///< norm^2 before renormalization, equals cosh(eta)
  BoostParams boost;
};

/// Landau eigenstate carried to the frame with momentum p.pz. Spinor
/// boosts are not unitary; the state is renormalized and the raw norm kept.
inline BoostedEigenstate boosted_eigenstate(const ModelParams& p, int n_r, EnergyBranch b) {
  const BoostParams boost = rapidity(p, n_r, b.sign);
  DiracState raw = apply_spinor(boost_matrix(boost), landau_eigenstate(p, n_r, b));
  const double sq = raw.squared_norm();
  return {raw.normalized(), sq, boost};
}

}  // namespace diraccat
