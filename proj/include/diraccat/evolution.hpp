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

// Exact time evolution. H never mixes invariant subspaces, so U(t) is a
// direct sum of 2x2 unitaries (one JC and one AJC pair per subspace) and
// four phases for the states without a partner. No time stepping.

#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "diraccat/hamiltonian.hpp"
#include "diraccat/model.hpp"
#include "diraccat/parallel.hpp"

namespace diraccat {

class EvolutionPlan {
 public:
  struct Block {
    double energy;  // positive level E_n; the pair spectrum is {+E_n, -E_n}
    PairEigenvectors vectors;
  };

  explicit EvolutionPlan(const ModelParams& params) : params_(params) {
    if (params.cutoff < 1) throw DimensionError("EvolutionPlan needs cutoff >= 1");
    blocks_.reserve(params.cutoff);
    for (int n = 0; n < params.cutoff; ++n) {
      const double e = landau_energy(params, n, Sign::plus);
      blocks_.push_back({e, pair_eigenvectors(e)});
    }
  }

  const ModelParams& params() const noexcept { return params_; }
  int cutoff() const noexcept { return params_.cutoff; }
  std::span<const Block> blocks() const noexcept { return blocks_; }

  /// max over blocks of |sum of eigenprojectors - 1|.
  double projector_defect() const {
    double worst = 0.0;
    for (const auto& b : blocks_) {
      for (const auto* v : {&b.vectors.jc, &b.vectors.ajc}) {
        const Eigen::Matrix2cd sum = *v * v->adjoint();
        worst = std::max(worst, (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
      }
    }
    return worst;
  }

 private:
  ModelParams params_;
  std::vector<Block> blocks_;
};

namespace detail {

inline Eigen::Vector2cd propagate_pair(const Eigen::Matrix2cd& v, double energy, double t,
                                       const Eigen::Vector2cd& x) {
  const Eigen::Vector2cd phases(std::polar(1.0, -energy * t), std::polar(1.0, energy * t));
  return v * phases.asDiagonal() * (v.adjoint() * x);
}

}  // namespace detail

/// U(t)|psi>, t in units of hbar/mc^2.
inline DiracState evolve(const DiracState& psi, const EvolutionPlan& plan, double t) {
  const int N = plan.cutoff();
  if (psi.cutoff() != N) {
    throw DimensionError("evolve: state cutoff " + std::to_string(psi.cutoff()) +
                         " does not match plan cutoff " + std::to_string(N));
  }
  DiracState out(N);
  const auto blocks = plan.blocks();
  for (int n = 0; n < N; ++n) {
    const auto& b = blocks[n];
    const Eigen::Vector2cd jc = detail::propagate_pair(
        b.vectors.jc, b.energy, t,
        Eigen::Vector2cd(psi.at(Component::up1, n), psi.at(Component::down2, n + 1)));
    out.at(Component::up1, n) = jc[0];
    out.at(Component::down2, n + 1) = jc[1];

    const Eigen::Vector2cd ajc = detail::propagate_pair(
        b.vectors.ajc, b.energy, t,
        Eigen::Vector2cd(psi.at(Component::down1, n + 1), psi.at(Component::up2, n)));
    out.at(Component::down1, n + 1) = ajc[0];
    out.at(Component::up2, n) = ajc[1];
  }
  const Complex forward = std::polar(1.0, -t);
  const Complex backward = std::polar(1.0, t);
  // dark states
  out.at(Component::down1, 0) = forward * psi.at(Component::down1, 0);
  out.at(Component::down2, 0) = backward * psi.at(Component::down2, 0);
  // truncation boundary: partners |4,N+1>, |2,N+1> are outside the space
  out.at(Component::up1, N) = forward * psi.at(Component::up1, N);
  out.at(Component::up2, N) = backward * psi.at(Component::up2, N);
  return out;
}

/// evolve over a list of times; entries are computed independently.
inline std::vector<DiracState> evolve_grid(const DiracState& psi, const EvolutionPlan& plan,
                                           std::span<const double> times) {
  std::vector<DiracState> out(times.size(), DiracState(plan.cutoff()));
  parallel_for(times.size(), [&](std::size_t i) { out[i] = evolve(psi, plan, times[i]); });
  return out;
}

/// Vacuum Rabi frequency sqrt(1 + 4 xi).
inline double vacuum_rabi_frequency(const ModelParams& p) { return std::sqrt(1.0 + 4.0 * p.xi); }

/// Closed-form evolution of |0> chi_{1 up}:
///   (cos w t - i sin(w t)/sqrt(1+4xi)) |0> chi_{1 up}
///     + sqrt(4xi/(1+4xi)) sin(w t) |1> chi_{2 down}.
inline DiracState vacuum_rabi_state(const ModelParams& p, double t) {
  if (p.cutoff < 2) throw DimensionError("vacuum_rabi_state needs cutoff >= 2");
  const double w = vacuum_rabi_frequency(p);
  DiracState s(p.cutoff);
  s.at(Component::up1, 0) = Complex(std::cos(w * t), -std::sin(w * t) / w);
  s.at(Component::down2, 1) = std::sqrt(4.0 * p.xi) / w * std::sin(w * t);
  return s;
}

/// Semiclassical energy sqrt(1 + 4 xi nbar), nbar = |z|^2.
inline double semiclassical_energy(const ModelParams& p, double n_bar) {
  return std::sqrt(1.0 + 4.0 * p.xi * n_bar);
}

/// chi_{1 up} evolved under the JC pair with a -> z:
///   H_sc = [[1, -i c z], [i c z*, -1]],   c = 2 sqrt(xi).
/// For z = -i|z| this is exactly
///   (cos Et - i sin(Et)/E) chi_{1 up} + i (c|z|/E) sin(Et) chi_{2 down};
/// other phases of z rotate the chi_{2 down} coefficient by the same phase.
inline Eigen::Vector4cd semiclassical_state(const ModelParams& p, Complex z, double t) {
  const double e = semiclassical_energy(p, std::norm(z));
  const double c = p.coupling();
  Eigen::Vector4cd s = Eigen::Vector4cd::Zero();
  s[index_of(Component::up1)] = Complex(std::cos(e * t), -std::sin(e * t) / e);
  s[index_of(Component::down2)] = c * std::conj(z) * std::sin(e * t) / e;
  return s;
}

/// Same as above with the standard start amplitude z = i sqrt(nbar).
inline Eigen::Vector4cd semiclassical_state(const ModelParams& p, double n_bar, double t) {
  return semiclassical_state(p, start_amplitude(std::sqrt(n_bar)), t);
}

/// Largest chi_{2 down} population reached by the semiclassical solution.
inline double semiclassical_max_flip(const ModelParams& p, double n_bar) {
  const double x = 4.0 * p.xi * n_bar;
  return x / (1.0 + x);
}

/// Squared norm of each spinor component.
inline std::array<double, 4> spin_populations(const DiracState& psi) {
  return {psi.block(0).squaredNorm(), psi.block(1).squaredNorm(), psi.block(2).squaredNorm(),
          psi.block(3).squaredNorm()};
}

}  // namespace diraccat
