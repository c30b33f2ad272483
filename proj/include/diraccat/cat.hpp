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

// Mesoscopic regime of the JC sector: the initial state |z> chi_{1 up}
// splits into two factorized branches
//
//   |Psi(t)> ~ a+ |Phi_sp^+(t)>|Phi_orb^+(t)> + a- |Phi_sp^-(t)>|Phi_orb^-(t)>
//
// whose orbital parts counter-rotate at Omega_rot = |g|^2 / 2E. At half the
// revival time the orbital parts are antipodal coherent states, and when
// the two spinors nearly coincide (xi nbar >> 1) the orbital reduces to a
// cat state. Spinors in this file are 2-vectors over (chi_{1 up},
// chi_{2 down}).

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "diraccat/evolution.hpp"
#include "diraccat/fock.hpp"
#include "diraccat/model.hpp"

namespace diraccat {

using Spinor2 = Eigen::Vector2cd;

/// Lifts a (chi_{1 up}, chi_{2 down}) spinor into the four-component space.
inline Eigen::Vector4cd embed_jc(const Spinor2& s) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v[index_of(Component::up1)] = s[0];
  v[index_of(Component::down2)] = s[1];
  return v;
}

/// JC pair with the ladder operator replaced by the c-number z.
inline Eigen::Matrix2cd semiclassical_hamiltonian(const ModelParams& p, Complex z) {
  const double c = p.coupling();
  Eigen::Matrix2cd h;
  h << 1.0, -kI * c * z, kI * c * std::conj(z), -1.0;
  return h;
}

struct SemiclassicalSpinors {
  double energy;   ///< E_z = sqrt(1 + 4 xi |z|^2)
  double alpha_plus;
  double alpha_minus;
  Spinor2 plus;    ///< eigenvalue +E_z
  Spinor2 minus;   ///< eigenvalue -E_z
};

/// Eigenspinors of semiclassical_hamiltonian(p, z):
///   |+E> = a+ chi_{1 up} + e^{i phi} a- chi_{2 down}
///   |-E> = a- chi_{1 up} - e^{i phi} a+ chi_{2 down},   e^{i phi} = i z*/|z|.
/// For real z this is the familiar a+- chi_{1 up} +- i a-+ chi_{2 down}.
inline SemiclassicalSpinors semiclassical_eigenspinors(const ModelParams& p, Complex z) {
  const double e = semiclassical_energy(p, std::norm(z));
  const auto [ap, am] = mixing_amplitudes(e);
  const Complex phase = std::abs(z) > 0.0 ? kI * std::conj(z) / std::abs(z) : kI;
  return {e, ap, am, Spinor2(ap, phase * am), Spinor2(am, -phase * ap)};
}

inline SemiclassicalSpinors semiclassical_eigenspinors(const ModelParams& p, double n_bar) {
  return semiclassical_eigenspinors(p, start_amplitude(std::sqrt(n_bar)));
}

/// Omega_rot = |g|^2 / 2E_z = 2 xi / E_z.
inline double rotation_frequency(const ModelParams& p, double n_bar) {
  return 2.0 * p.xi / semiclassical_energy(p, n_bar);
}

/// Orbital part of an asymptotic branch.
///  - rotated_coherent: the short-time form, a coherent state at z e^{-+i Omega t}
///    times a global phase. Valid for t << t_R.
///  - number_phase: exp(-+i Theta t)|z> with Theta = sqrt(1 + |g|^2 n)
///    applied per number state. Keeps the dispersion of Theta and stays
///    accurate up to the cat time.
enum class OrbitalForm { rotated_coherent, number_phase };

struct AsymptoticState {
  Spinor2 spinor;
  FockVector orbital;
  Complex global_phase{1.0, 0.0};

  DiracState to_dirac_state() const {
    return DiracState::product(embed_jc(spinor) * global_phase, orbital);
  }
};

/// Spinor of the branch started in |sign E_z>: the chi_{1 up} entry picks
/// up exp(-+i Omega_rot t), the chi_{2 down} entry is frozen.
inline Spinor2 branch_spinor(const SemiclassicalSpinors& sc, Sign sign, double omega_rot, double t) {
  const double s = sign_value(sign);
  const Spinor2& base = sign == Sign::plus ? sc.plus : sc.minus;
  return Spinor2(base[0] * std::polar(1.0, -s * omega_rot * t), base[1]);
}

/// Asymptotic evolution of |sign E_z>|z>.
inline AsymptoticState asymptotic_state(const ModelParams& p, Complex z, Sign sign, double t,
                                        OrbitalForm form = OrbitalForm::rotated_coherent) {
  if (t < 0.0) throw std::invalid_argument("asymptotic_state needs t >= 0");
  const double n_bar = std::norm(z);
  const auto sc = semiclassical_eigenspinors(p, z);
  const double omega = rotation_frequency(p, n_bar);
  const double s = sign_value(sign);
  const Spinor2 spinor = branch_spinor(sc, sign, omega, t);

  if (form == OrbitalForm::rotated_coherent) {
    FockVector orbital = coherent_vector(z * std::polar(1.0, -s * omega * t), p.cutoff);
    const Complex phase = std::polar(1.0, -s * t * (sc.energy - omega * n_bar));
    return {spinor, std::move(orbital), phase};
  }
  FockVector orbital = coherent_vector(z, p.cutoff);
  for (int n = 0; n <= p.cutoff; ++n) {
    const double theta = std::sqrt(1.0 + 4.0 * p.xi * n);
    orbital.amplitudes()[n] *= std::polar(1.0, -s * theta * t);
  }
  return {spinor, std::move(orbital), Complex(1.0, 0.0)};
}

/// Two-branch asymptotic state grown from |z> chi_{1 up}, renormalized:
/// while the orbital parts still overlap the two branches interfere and
/// the bare sum is not of unit norm.
inline DiracState mesoscopic_composite(const ModelParams& p, Complex z, double t,
                                       OrbitalForm form = OrbitalForm::rotated_coherent) {
  const auto sc = semiclassical_eigenspinors(p, z);
  return (asymptotic_state(p, z, Sign::plus, t, form).to_dirac_state() * sc.alpha_plus +
          asymptotic_state(p, z, Sign::minus, t, form).to_dirac_state() * sc.alpha_minus)
      .normalized();
}

struct CatSchedule {
  double t_R;        ///< revival time 2 pi E_z / |g|^2
  double t_d;        ///< cat time t_R / 2
  double omega_rot;  ///< |g|^2 / 2E_z
  double delta;      ///< arg <Phi_sp^-(t_d)|Phi_sp^+(t_d)>
};

/// The two branch spinors at t.
inline std::pair<Spinor2, Spinor2> branch_spinors(const ModelParams& p, Complex z, double t) {
  const auto sc = semiclassical_eigenspinors(p, z);
  const double omega = rotation_frequency(p, std::norm(z));
  return {branch_spinor(sc, Sign::plus, omega, t), branch_spinor(sc, Sign::minus, omega, t)};
}

inline CatSchedule cat_schedule(const ModelParams& p, Complex z) {
  const double n_bar = std::norm(z);
  const double e = semiclassical_energy(p, n_bar);
  const double t_r = std::numbers::pi * e / (2.0 * p.xi);
  const double t_d = 0.5 * t_r;
  const auto [plus, minus] = branch_spinors(p, z, t_d);
  return {t_r, t_d, rotation_frequency(p, n_bar), std::arg(minus.dot(plus))};
}

inline CatSchedule cat_schedule(const ModelParams& p, double n_bar) {
  return cat_schedule(p, start_amplitude(std::sqrt(n_bar)));
}

/// Circle traced by branch `sign` started at (0, |z|), in units of the
/// oscillator width: |z| (-+ sin Omega_rot t, cos Omega_rot t). The plus
/// branch turns counterclockwise. With the position operators of
/// position_expectation this corresponds to the start amplitude z = -i|z|.
inline PlanePoint trajectory(const ModelParams& p, double z_abs, Sign sign, double t) {
  const double w = rotation_frequency(p, z_abs * z_abs) * t;
  return {-sign_value(sign) * z_abs * std::sin(w), z_abs * std::cos(w)};
}

/// Centre of the rotated coherent orbital for an arbitrary start amplitude:
/// (Re w, -Im w) with w = z exp(-+i Omega_rot t).
inline PlanePoint trajectory(const ModelParams& p, Complex z, Sign sign, double t) {
  const double s = sign_value(sign);
  const Complex w = z * std::polar(1.0, -s * rotation_frequency(p, std::norm(z)) * t);
  return {w.real(), -w.imag()};
}

/// |<Phi_sp^+(t_d)|Phi_sp^-(t_d)>| = sqrt(4 xi nbar / (1 + 4 xi nbar)).
inline double spinor_overlap_at_cat_time(const ModelParams& p, double n_bar) {
  const double x = 4.0 * p.xi * n_bar;
  return std::sqrt(x / (1.0 + x));
}

/// Leading small-xi behaviour of the overlap, 2 sqrt(xi nbar).
inline double spinor_overlap_nonrelativistic(const ModelParams& p, double n_bar) {
  return 2.0 * std::sqrt(p.xi * n_bar);
}

/// Overlap evaluated from the branch spinors themselves.
inline double measured_spinor_overlap(const ModelParams& p, Complex z) {
  const auto sched = cat_schedule(p, z);
  const auto [plus, minus] = branch_spinors(p, z, sched.t_d);
  return std::abs(plus.dot(minus));
}

enum class Regime { microscopic, mesoscopic, macroscopic };

/// nbar < 10 microscopic, 10 <= nbar <= 100 mesoscopic, above macroscopic.
inline Regime classify_regime(double n_bar) {
  if (n_bar < 10.0) return Regime::microscopic;
  if (n_bar <= 100.0) return Regime::mesoscopic;
  return Regime::macroscopic;
}

inline std::string_view regime_label(Regime r) {
  switch (r) {
    case Regime::microscopic: return "microscopic";
    case Regime::mesoscopic: return "mesoscopic";
    case Regime::macroscopic: return "macroscopic";
  }
  return "unknown";
}

/// Cat time is reached with nearly coinciding spinors only when
/// 4 xi |z|^2 >= 10.
inline bool is_ultra_relativistic(const ModelParams& p, double n_bar) {
  return 4.0 * p.xi * n_bar >= 10.0;
}

struct DiracCat {
  Spinor2 spinor;            ///< Phi_sp^+(t_d), the common spinor
  FockVector orbital_cat;    ///< normalized a+ |o+> + e^{-i delta} a- |o->
  FockVector plus_component; ///< Phi_orb^+(t_d)
  FockVector minus_component;
  double plus_weight;        ///< a+^2
  double minus_weight;       ///< a-^2
  double delta;
  double t_d;
  bool ultra_relativistic;   ///< false: spinors stay distinguishable, coherence is lost
};

/// Orbital cat obtained by projecting the two-branch state at t_d onto
/// Phi_sp^+(t_d). With Phi_sp^+ = e^{i delta} Phi_sp^- the projection is
/// a+ |o+> + e^{-i delta} a- |o->.
inline DiracCat dirac_cat(const ModelParams& p, Complex z) {
  const double n_bar = std::norm(z);
  const auto sc = semiclassical_eigenspinors(p, z);
  const auto sched = cat_schedule(p, z);
  auto plus = asymptotic_state(p, z, Sign::plus, sched.t_d);
  auto minus = asymptotic_state(p, z, Sign::minus, sched.t_d);

  FockVector o_plus = plus.orbital * plus.global_phase;
  FockVector o_minus = minus.orbital * minus.global_phase;
  FockVector cat = o_plus * sc.alpha_plus + o_minus * (sc.alpha_minus * std::polar(1.0, -sched.delta));
  cat.amplitudes() /= norm(cat);

  return {plus.spinor,
          std::move(cat),
          std::move(o_plus),
          std::move(o_minus),
          sc.alpha_plus * sc.alpha_plus,
          sc.alpha_minus * sc.alpha_minus,
          sched.delta,
          sched.t_d,
          is_ultra_relativistic(p, n_bar)};
}

}  // namespace diraccat
