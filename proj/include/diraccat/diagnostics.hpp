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

#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "diraccat/fock.hpp"
#include "diraccat/model.hpp"
#include "diraccat/parallel.hpp"

namespace diraccat {

enum class Subsystem { spinor, orbital };

struct DensityMatrix {
  Eigen::MatrixXcd entries;
  Subsystem subsystem;

  Eigen::Index dim() const { return entries.rows(); }
  Complex trace() const { return entries.trace(); }
};

/// Partial trace of |psi><psi| over the complementary subsystem.
inline DensityMatrix reduced_density(const DiracState& psi, Subsystem keep) {
  // columns are the four spinor components, rows the Fock levels
  const Eigen::Map<const Eigen::MatrixXcd> m(psi.flat().data(), psi.fock_dim(), 4);
  if (keep == Subsystem::spinor) {
    return {(m.adjoint() * m).transpose(), keep};
  }
  return {m * m.adjoint(), keep};
}

/// tr(rho^2).
inline double purity(const DensityMatrix& rho) { return rho.entries.cwiseAbs2().sum(); }

/// Trace one, Hermitian, and no eigenvalue below -tol.
inline bool is_valid_density(const DensityMatrix& rho, double tol = 1e-12) {
  if (std::abs(rho.trace() - 1.0) > tol) return false;
  if ((rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff() > 1e-13) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

/// |<a|b>|.
inline double fidelity(const DiracState& a, const DiracState& b) {
  return std::abs(inner_product(a, b));
}

/// (<X>, <Y>) in units of the oscillator width for a state with no
/// left-handed quanta. With X = (a + a^+)/2 and Y = i (a - a^+)/2 this is
/// (Re <a>, -Im <a>).
inline PlanePoint position_expectation(const DiracState& psi) {
  Complex a = 0.0;
  for (int j = 0; j < 4; ++j) a += lowering_expectation(psi.block(j));
  return {a.real(), -a.imag()};
}

struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  int nx = 201;
  int ny = 201;

  double dx() const { return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0; }
  double dy() const { return ny > 1 ? (y_max - y_min) / (ny - 1) : 0.0; }
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dy(); }
};

/// Square grid of half-width |z| + 4 centred on the origin.
inline GridSpec default_grid(double z_abs, int resolution = 201) {
  const double half = z_abs + 4.0;
  return {-half, half, -half, half, resolution, resolution};
}

struct PhaseSpaceGrid {
  GridSpec spec;
  std::vector<double> values;  ///< row-major, row j holds y(j)
  double integral = 0.0;       ///< Riemann sum of Q over the grid
  bool normalized = false;     ///< |integral - 1| <= normalization_tolerance

  static constexpr double normalization_tolerance = 0.01;

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * spec.nx + ix]; }
};

/// Husimi function Q(beta) = <beta|rho|beta>/pi of an orbital density, with
/// beta = x + i y. The untruncated coherent state is projected onto the
/// cutoff so grid points far outside the support stay well defined.
inline PhaseSpaceGrid husimi_q(const DensityMatrix& rho, const GridSpec& spec) {
  if (rho.subsystem != Subsystem::orbital) {
    throw std::invalid_argument("husimi_q needs an orbital density matrix");
  }
  if (spec.nx < 2 || spec.ny < 2) throw std::invalid_argument("husimi grid needs >= 2 points per axis");
  const int cutoff = static_cast<int>(rho.dim()) - 1;
  PhaseSpaceGrid grid{spec, std::vector<double>(static_cast<std::size_t>(spec.nx) * spec.ny)};
  parallel_for(static_cast<std::size_t>(spec.ny), [&](std::size_t row) {
    const double y = spec.y(static_cast<int>(row));
    for (int ix = 0; ix < spec.nx; ++ix) {
      const Eigen::VectorXcd beta = coherent_amplitudes(Complex(spec.x(ix), y), cutoff);
      const double q = beta.dot(rho.entries * beta).real() / std::numbers::pi;
      grid.values[row * spec.nx + ix] = q;
    }
  });
  double sum = 0.0;
  for (double q : grid.values) sum += q;
  grid.integral = sum * spec.dx() * spec.dy();
  grid.normalized = std::abs(grid.integral - 1.0) <= PhaseSpaceGrid::normalization_tolerance;
  return grid;
}

/// Weight of Q inside the rectangle, by the same Riemann rule as the
/// normalization integral.
inline double husimi_weight(const PhaseSpaceGrid& g, double x_lo, double x_hi, double y_lo, double y_hi) {
  double sum = 0.0;
  for (int iy = 0; iy < g.spec.ny; ++iy) {
    const double y = g.spec.y(iy);
    if (y < y_lo || y > y_hi) continue;
    for (int ix = 0; ix < g.spec.nx; ++ix) {
      const double x = g.spec.x(ix);
      if (x < x_lo || x > x_hi) continue;
      // points on the boundary are shared between adjacent rectangles
      double w = 1.0;
      if (x == x_lo || x == x_hi) w *= 0.5;
      if (y == y_lo || y == y_hi) w *= 0.5;
      sum += w * g.at(ix, iy);
    }
  }
  return sum * g.spec.dx() * g.spec.dy();
}

inline std::string format_scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

/// Plain-text grid: three header lines (x_range, y_range, resolution),
/// then one line per y row with nx values.
inline void write_grid(std::ostream& os, const PhaseSpaceGrid& g) {
  os << "x_range " << format_scientific(g.spec.x_min) << ' ' << format_scientific(g.spec.x_max) << '\n';
  os << "y_range " << format_scientific(g.spec.y_min) << ' ' << format_scientific(g.spec.y_max) << '\n';
  os << "resolution " << g.spec.nx << ' ' << g.spec.ny << '\n';
  for (int iy = 0; iy < g.spec.ny; ++iy) {
    for (int ix = 0; ix < g.spec.nx; ++ix) {
      if (ix) os << ' ';
      os << format_scientific(g.at(ix, iy));
    }
    os << '\n';
  }
}

/// |<o+| rho_orb |o->| for the orbital reduction of psi.
inline double coherence_magnitude(const DiracState& psi, const FockVector& o_plus, const FockVector& o_minus) {
  if (o_plus.cutoff() != psi.cutoff() || o_minus.cutoff() != psi.cutoff()) {
    throw DimensionError("coherence_magnitude: branch states do not match the state cutoff");
  }
  Complex acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    acc += o_plus.amplitudes().dot(psi.block(j)) * psi.block(j).dot(o_minus.amplitudes());
  }
  return std::abs(acc);
}

}  // namespace diraccat
