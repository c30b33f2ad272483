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

// Dirac Hamiltonian of an electron in a uniform field along z (axial gauge,
// p_z = 0 frame) written with the right-handed chiral ladder operator:
//
//        | 1          0          0          -i c a |
//   H =  | 0          1          i c a^+    0      |      c = 2 sqrt(xi)
//        | 0          -i c a     -1         0      |
//        | i c a^+    0          0          -1     |
//
// Components {1,4} form a detuned Jaynes-Cummings pair and {2,3} an
// anti-Jaynes-Cummings pair. Both conserve
//   N_inv = a^+ a + P_1 + P_3,
// so the space splits into the dark states |2,0>, |4,0> and the quadruples
// H_n = span{|1,n>, |4,n+1>, |2,n+1>, |3,n>}. With a cutoff N the last
// complete quadruple is n = N-1; |1,N> and |3,N> are left uncoupled.

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "diraccat/fock.hpp"
#include "diraccat/model.hpp"

namespace diraccat {

/// Full 4(N+1)-dimensional Hamiltonian matrix in DiracState ordering.
inline OperatorMatrix build_hamiltonian(const ModelParams& p) {
  const int N = p.cutoff;
  const int d = N + 1;
  const OperatorMatrix a = ladder_matrix(N, Ladder::lower);
  const OperatorMatrix ad = a.adjoint();
  const Complex c = p.coupling();

  OperatorMatrix h = OperatorMatrix::Zero(4 * d, 4 * d);
  for (int j = 0; j < 4; ++j) {
    h.block(j * d, j * d, d, d).diagonal().setConstant(j < 2 ? 1.0 : -1.0);
  }
  h.block(0 * d, 3 * d, d, d) = -kI * c * a;
  h.block(1 * d, 2 * d, d, d) = kI * c * ad;
  h.block(2 * d, 1 * d, d, d) = -kI * c * a;
  h.block(3 * d, 0 * d, d, d) = kI * c * ad;
  return h;
}

/// Dirac matrix alpha_z (x) identity. Off-diagonal sigma_z blocks.
inline OperatorMatrix alpha_z_matrix(int cutoff) {
  const int d = cutoff + 1;
  OperatorMatrix m = OperatorMatrix::Zero(4 * d, 4 * d);
  m.block(0 * d, 2 * d, d, d).diagonal().setConstant(1.0);
  m.block(2 * d, 0 * d, d, d).diagonal().setConstant(1.0);
  m.block(1 * d, 3 * d, d, d).diagonal().setConstant(-1.0);
  m.block(3 * d, 1 * d, d, d).diagonal().setConstant(-1.0);
  return m;
}

/// Hamiltonian in the frame where the particle carries longitudinal
/// momentum p.pz: H + pz * alpha_z.
inline OperatorMatrix build_hamiltonian_with_pz(const ModelParams& p) {
  return build_hamiltonian(p) + p.pz * alpha_z_matrix(p.cutoff);
}

/// H|psi> in O(N) without building the dense matrix.
inline DiracState apply_hamiltonian(const ModelParams& p, const DiracState& psi) {
  const int N = psi.cutoff();
  const Complex c = p.coupling();
  DiracState out(N);
  auto up1 = psi.block(0), dn1 = psi.block(1), up2 = psi.block(2), dn2 = psi.block(3);
  for (int n = 0; n <= N; ++n) {
    const double sq_up = std::sqrt(static_cast<double>(n + 1));  // <n|a|n+1>
    const double sq_dn = std::sqrt(static_cast<double>(n));      // <n|a^+|n-1>
    Complex a_dn2 = n < N ? sq_up * dn2[n + 1] : Complex{};
    Complex a_dn1 = n < N ? sq_up * dn1[n + 1] : Complex{};
    Complex ad_up2 = n > 0 ? sq_dn * up2[n - 1] : Complex{};
    Complex ad_up1 = n > 0 ? sq_dn * up1[n - 1] : Complex{};
    out.block(0)[n] = up1[n] - kI * c * a_dn2;
    out.block(1)[n] = dn1[n] + kI * c * ad_up2;
    out.block(2)[n] = -up2[n] - kI * c * a_dn1;
    out.block(3)[n] = -dn2[n] + kI * c * ad_up1;
  }
  return out;
}

inline double energy_expectation(const ModelParams& p, const DiracState& psi) {
  return inner_product(psi, apply_hamiltonian(p, psi)).real();
}

struct Eigenpair {
  DiracState state;
  double energy;
};

/// |2,0> with energy +1 and |4,0> with energy -1. They exchange no chiral
/// quanta and are exact eigenstates for every xi.
inline std::array<Eigenpair, 2> dark_states(int cutoff) {
  return {{{DiracState::basis(Component::down1, 0, cutoff), 1.0},
           {DiracState::basis(Component::down2, 0, cutoff), -1.0}}};
}

struct BasisState {
  Component component;
  int n;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

using SubspaceBasis = std::array<BasisState, 4>;

inline void require_complete_block(int n_r, int cutoff) {
  if (n_r < 0) throw DimensionError("negative subspace index " + std::to_string(n_r));
  if (n_r + 1 > cutoff) {
    throw TruncationError("subspace n_r=" + std::to_string(n_r) + " needs cutoff >= " +
                              std::to_string(n_r + 1) + ", got " + std::to_string(cutoff),
                          n_r + 1);
  }
}

/// Ordered basis (|1,n>, |4,n+1>, |2,n+1>, |3,n>) of the invariant
/// subspace H_n.
inline SubspaceBasis subspace_basis(int n_r, int cutoff) {
  require_complete_block(n_r, cutoff);
  return {{{Component::up1, n_r},
           {Component::down2, n_r + 1},
           {Component::down1, n_r + 1},
           {Component::up2, n_r}}};
}

/// Restriction of H to H_n. With g = i c the JC pair reads
/// [[1, -g s], [-g* s, -1]] and the AJC pair [[1, g s], [g* s, -1]],
/// s = sqrt(n+1).
inline Eigen::Matrix4cd block_matrix(const ModelParams& p, int n_r) {
  require_complete_block(n_r, p.cutoff);
  const Complex g = kI * p.coupling();
  const double s = std::sqrt(static_cast<double>(n_r + 1));
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 0) = 1.0;
  h(0, 1) = -g * s;
  h(1, 0) = -std::conj(g) * s;
  h(1, 1) = -1.0;
  h(2, 2) = 1.0;
  h(2, 3) = g * s;
  h(3, 2) = std::conj(g) * s;
  h(3, 3) = -1.0;
  return h;
}

/// Relativistic Landau level sign * sqrt(1 + 4 xi (n_r + 1)) at p_z = 0.
inline double landau_energy(const ModelParams& p, int n_r, Sign sign) {
  return sign_value(sign) * std::sqrt(1.0 + 4.0 * p.xi * (n_r + 1));
}

/// Mixing amplitudes alpha^{+-} = sqrt((E +- 1) / 2E) for E >= 1.
struct MixingAmplitudes {
  double plus;
  double minus;
};

inline MixingAmplitudes mixing_amplitudes(double energy) {
  return {std::sqrt((energy + 1.0) / (2.0 * energy)), std::sqrt((energy - 1.0) / (2.0 * energy))};
}

/// Eigenvectors of the two 2x2 pairs of H_n in closed form. Columns are
/// (+E, -E); rows follow the pair order (|1,n>,|4,n+1>) resp.
/// (|2,n+1>,|3,n>).
struct PairEigenvectors {
  Eigen::Matrix2cd jc;
  Eigen::Matrix2cd ajc;
};

inline PairEigenvectors pair_eigenvectors(double energy) {
  const auto [ap, am] = mixing_amplitudes(energy);
  PairEigenvectors v;
  v.jc << ap, am, kI * am, -kI * ap;
  v.ajc << ap, am, -kI * am, kI * ap;
  return v;
}

/// Landau eigenstate |sign E_n, branch> (unit norm).
///   branch 1:  alpha^{+-} |n> chi_{1 up}   +- i alpha^{-+} |n+1> chi_{2 down}
///   branch 2:  alpha^{+-} |n+1> chi_{1 down} -+ i alpha^{-+} |n> chi_{2 up}
inline DiracState landau_eigenstate(const ModelParams& p, int n_r, EnergyBranch b) {
  require_complete_block(n_r, p.cutoff);
  if (b.branch != 1 && b.branch != 2) {
    throw std::invalid_argument("energy branch must be 1 or 2");
  }
  const auto vecs = pair_eigenvectors(landau_energy(p, n_r, Sign::plus));
  const int col = b.sign == Sign::plus ? 0 : 1;
  DiracState s(p.cutoff);
  if (b.branch == 1) {
    s.at(Component::up1, n_r) = vecs.jc(0, col);
    s.at(Component::down2, n_r + 1) = vecs.jc(1, col);
  } else {
    s.at(Component::down1, n_r + 1) = vecs.ajc(0, col);
    s.at(Component::up2, n_r) = vecs.ajc(1, col);
  }
  return s;
}

/// N_inv = a^+ a + P_1 + P_3 as a full-space diagonal matrix.
inline OperatorMatrix excitation_matrix(int cutoff) {
  const int d = cutoff + 1;
  OperatorMatrix m = OperatorMatrix::Zero(4 * d, 4 * d);
  for (int j = 0; j < 4; ++j) {
    const double shift = (j == 0 || j == 2) ? 1.0 : 0.0;
    for (int n = 0; n < d; ++n) m(j * d + n, j * d + n) = n + shift;
  }
  return m;
}

/// <N_inv> for a normalized state.
inline double conserved_excitation(const DiracState& psi) {
  double acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    const double shift = (j == 0 || j == 2) ? 1.0 : 0.0;
    auto blk = psi.block(j);
    for (int n = 0; n < psi.fock_dim(); ++n) acc += (n + shift) * std::norm(blk[n]);
  }
  return acc;
}

}  // namespace diraccat
