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

// Truncated single-mode Fock space: number states |0>..|N>, ladder
// operators with hard truncation, and coherent states.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "diraccat/errors.hpp"

namespace diraccat {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Amplitudes over the number states |0>..|cutoff>.
class FockVector {
 public:
  explicit FockVector(int cutoff)
      : amplitudes_(Eigen::VectorXcd::Zero(checked_dim(cutoff))) {}

  explicit FockVector(Eigen::VectorXcd amplitudes)
      : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
      throw DimensionError("FockVector needs at least one amplitude");
    }
  }

  /// Number state |n> in a space truncated at `cutoff`.
  static FockVector basis(int n, int cutoff) {
    if (n < 0 || n > cutoff) {
      throw DimensionError("number state " + std::to_string(n) +
                           " outside cutoff " + std::to_string(cutoff));
    }
    FockVector v(cutoff);
    v.amplitudes_[n] = 1.0;
    return v;
  }

  int cutoff() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }

  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() noexcept { return amplitudes_; }

  Complex operator[](int n) const { return amplitudes_[n]; }

  double squared_norm() const { return amplitudes_.squaredNorm(); }

  /// Mean occupation sum_n n |c_n|^2 (unnormalized).
  double mean_occupation() const {
    double acc = 0.0;
    for (int n = 0; n < dim(); ++n) acc += n * std::norm(amplitudes_[n]);
    return acc;
  }

  FockVector operator*(Complex s) const { return FockVector(Eigen::VectorXcd(amplitudes_ * s)); }
  FockVector operator+(const FockVector& o) const {
    require_same_dim(o);
    return FockVector(Eigen::VectorXcd(amplitudes_ + o.amplitudes_));
  }

 private:
  static Eigen::Index checked_dim(int cutoff) {
    if (cutoff < 0) throw DimensionError("negative Fock cutoff");
    return cutoff + 1;
  }
  void require_same_dim(const FockVector& o) const {
    if (o.dim() != dim()) {
      throw DimensionError("Fock dimension mismatch: " + std::to_string(dim()) +
                           " vs " + std::to_string(o.dim()));
    }
  }

  Eigen::VectorXcd amplitudes_;
};

enum class Ladder { lower, raise };

/// Matrix of a (lower) or a^dagger (raise) on |0>..|cutoff>. Matrix
/// elements that would leave the space are dropped.
inline OperatorMatrix ladder_matrix(int cutoff, Ladder kind) {
  if (cutoff < 1) {
    throw DimensionError("ladder_matrix needs cutoff >= 1, got " + std::to_string(cutoff));
  }
  OperatorMatrix a = OperatorMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  if (kind == Ladder::raise) return a.adjoint();
  return a;
}

/// Number operator a^dagger a, diagonal 0..cutoff.
inline OperatorMatrix number_matrix(int cutoff) {
  OperatorMatrix num = OperatorMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) num(n, n) = static_cast<double>(n);
  return num;
}

/// Smallest cutoff satisfying the tail guard N >= |z|^2 + 6|z|.
inline int coherent_required_cutoff(Complex z) {
  const double r = std::abs(z);
  return static_cast<int>(std::ceil(r * r + 6.0 * r));
}

/// Raw projection of the untruncated coherent state onto |0>..|cutoff>:
/// c_n = exp(-|z|^2/2) z^n / sqrt(n!), no renormalization and no guard.
/// Husimi sampling needs exactly this projection.
inline Eigen::VectorXcd coherent_amplitudes(Complex z, int cutoff) {
  Eigen::VectorXcd c(cutoff + 1);
  c[0] = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n <= cutoff; ++n) c[n] = c[n - 1] * z / std::sqrt(static_cast<double>(n));
  return c;
}

/// Normalized coherent state |z> truncated at `cutoff`. Throws
/// TruncationError when the cutoff cannot hold the Poisson tail.
inline FockVector coherent_vector(Complex z, int cutoff) {
  const int required = coherent_required_cutoff(z);
  if (cutoff < required) {
    throw TruncationError("coherent state |z|=" + std::to_string(std::abs(z)) +
                              " needs cutoff >= " + std::to_string(required) + ", got " +
                              std::to_string(cutoff),
                          required);
  }
  Eigen::VectorXcd c = coherent_amplitudes(z, cutoff);
  c /= c.norm();
  return FockVector(std::move(c));
}

inline Complex inner_product(const FockVector& a, const FockVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner_product: dimension " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

inline double norm(const FockVector& v) { return v.amplitudes().norm(); }

/// <v| a |v> without materializing the ladder matrix.
inline Complex lowering_expectation(const Eigen::Ref<const Eigen::VectorXcd>& v) {
  Complex acc = 0.0;
  for (Eigen::Index n = 1; n < v.size(); ++n) {
    acc += std::conj(v[n - 1]) * std::sqrt(static_cast<double>(n)) * v[n];
  }
  return acc;
}

}  // namespace diraccat
