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

// Model parameters and the Fock (x) spinor state type.
//
// Units: hbar = m = c = 1. Energies are in units of the rest energy, times
// in hbar/mc^2, lengths in the oscillator width 1/sqrt(xi). Only the
// right-handed mode is represented; the left-handed occupation is fixed to
// zero, so every level listed here is one member of an n_l-degenerate family.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "diraccat/errors.hpp"
#include "diraccat/fock.hpp"

namespace diraccat {

struct ModelParams {
  double xi = 0.0;  ///< hbar*omega / mc^2, omega = half the cyclotron frequency
  double pz = 0.0;  ///< longitudinal momentum in units of mc
  int cutoff = 1;   ///< Fock truncation N

  /// Magnitude of the JC/AJC coupling |g| = 2 sqrt(xi).
  double coupling() const { return 2.0 * std::sqrt(xi); }
  double cyclotron() const { return 2.0 * xi; }
  /// Oscillator ground-state width in units of hbar/mc.
  double width() const { return 1.0 / std::sqrt(xi); }
};

/// Rejects xi <= 0 and cutoff < 1. Test fixtures may build a zero-field
/// ModelParams directly; user-facing paths go through here.
inline void validate(const ModelParams& p) {
  if (!(p.xi > 0.0) || !std::isfinite(p.xi)) {
    throw ConfigError("xi", "xi must be a positive finite number");
  }
  if (!std::isfinite(p.pz)) throw ConfigError("pz", "pz must be finite");
  if (p.cutoff < 1) throw ConfigError("cutoff", "cutoff must be >= 1");
}

/// Coherent amplitude used for every run that starts from |z> chi_{1 up}:
/// z = i |z|. This puts the semiclassical coupling on sigma_x.
inline Complex start_amplitude(double z_abs) { return kI * z_abs; }

/// Point in the transverse plane, in units of the oscillator width.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

enum class Sign { plus, minus };

inline constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Label of one of the four Landau eigenstates of a subspace: energy sign
/// and the degeneracy index (1: components {1,4}, 2: components {2,3}).
struct EnergyBranch {
  Sign sign = Sign::plus;
  int branch = 1;

  friend bool operator==(const EnergyBranch&, const EnergyBranch&) = default;
};

inline constexpr std::array<EnergyBranch, 4> kAllBranches{{
    {Sign::plus, 1}, {Sign::minus, 1}, {Sign::plus, 2}, {Sign::minus, 2}}};

/// Standard-representation spinor components: chi_{1 up}, chi_{1 down},
/// chi_{2 up}, chi_{2 down}.
enum class Component : int { up1 = 0, down1 = 1, up2 = 2, down2 = 3 };

inline constexpr int index_of(Component c) { return static_cast<int>(c); }

/// Four-component spinor with Fock content. Storage is component-major:
/// amplitude of |j, n> sits at j*(N+1) + n, which is also the row order of
/// the full Hamiltonian matrix.
class DiracState {
 public:
  explicit DiracState(int cutoff) : cutoff_(cutoff), amplitudes_(Eigen::VectorXcd::Zero(4 * (cutoff + 1))) {
    if (cutoff < 0) throw DimensionError("negative Fock cutoff");
  }

  DiracState(int cutoff, Eigen::VectorXcd flat) : cutoff_(cutoff), amplitudes_(std::move(flat)) {
    if (amplitudes_.size() != 4 * (cutoff + 1)) {
      throw DimensionError("flat DiracState of size " + std::to_string(amplitudes_.size()) +
                           " does not match cutoff " + std::to_string(cutoff));
    }
  }

  /// |component> (x) |n>.
  static DiracState basis(Component c, int n, int cutoff) {
    DiracState s(cutoff);
    s.at(c, n) = 1.0;
    return s;
  }

  /// spinor (x) orbital for a 4-spinor.
  static DiracState product(const Eigen::Vector4cd& spinor, const FockVector& orbital) {
    DiracState s(orbital.cutoff());
    for (int j = 0; j < 4; ++j) s.block(j) = spinor[j] * orbital.amplitudes();
    return s;
  }

  int cutoff() const noexcept { return cutoff_; }
  int fock_dim() const noexcept { return cutoff_ + 1; }
  Eigen::Index size() const noexcept { return amplitudes_.size(); }

  Complex& at(Component c, int n) { return amplitudes_[flat_index(c, n)]; }
  Complex at(Component c, int n) const { return amplitudes_[flat_index(c, n)]; }

  Eigen::Index flat_index(Component c, int n) const {
    return static_cast<Eigen::Index>(index_of(c)) * fock_dim() + n;
  }

  Eigen::VectorBlock<Eigen::VectorXcd> block(int j) {
    return amplitudes_.segment(static_cast<Eigen::Index>(j) * fock_dim(), fock_dim());
  }
  Eigen::VectorBlock<const Eigen::VectorXcd> block(int j) const {
    return amplitudes_.segment(static_cast<Eigen::Index>(j) * fock_dim(), fock_dim());
  }

  FockVector component(Component c) const {
    return FockVector(Eigen::VectorXcd(block(index_of(c))));
  }

  const Eigen::VectorXcd& flat() const noexcept { return amplitudes_; }
  Eigen::VectorXcd& flat() noexcept { return amplitudes_; }

  double squared_norm() const { return amplitudes_.squaredNorm(); }

  DiracState normalized() const { return DiracState(cutoff_, amplitudes_ / amplitudes_.norm()); }

  DiracState operator*(Complex s) const { return DiracState(cutoff_, amplitudes_ * s); }
  DiracState operator+(const DiracState& o) const {
    require_same_dim(o);
    return DiracState(cutoff_, amplitudes_ + o.amplitudes_);
  }
  DiracState operator-(const DiracState& o) const {
    require_same_dim(o);
    return DiracState(cutoff_, amplitudes_ - o.amplitudes_);
  }

  void require_same_dim(const DiracState& o) const {
    if (o.cutoff_ != cutoff_) {
      throw DimensionError("DiracState cutoff mismatch: " + std::to_string(cutoff_) + " vs " +
                           std::to_string(o.cutoff_));
    }
  }

 private:
  int cutoff_;
  Eigen::VectorXcd amplitudes_;
};

inline Complex inner_product(const DiracState& a, const DiracState& b) {
  a.require_same_dim(b);
  return a.flat().dot(b.flat());
}

}  // namespace diraccat
