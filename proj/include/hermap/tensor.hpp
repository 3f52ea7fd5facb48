// Copyright 2026 The hermap Authors
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

// Dense complex-matrix algebra shared by every other module.
//
// Index convention: tensor products are ordered so that for A ∈ M_p and
// B ∈ M_r, entry ((a, b), (c, d)) of A ⊗ B lives at (a*r + b, c*r + d).
// vec() stacks columns, so (M ⊗ N) vec(C) = vec(N C Mᵀ). All indices in
// this library are zero-based.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "hermap/errors.hpp"

namespace hermap {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

template <typename Real>
using ComplexMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// Numerical thresholds. When `scale_by_norm` is set, each threshold is
/// multiplied by a norm of the matrix under test (see the accessors), so the
/// same config is usable for maps of very different magnitudes.
struct ToleranceConfig {
  double eig_zero = 1e-9;
  double psd_slack = 1e-9;
  double recon = 1e-9;
  bool scale_by_norm = true;

  /// All three thresholds set to `value`, applied as absolute numbers.
  static ToleranceConfig uniform(double value) { return {value, value, value, false}; }

  void validate() const {
    if (!(eig_zero >= 0.0) || !(psd_slack >= 0.0) || !(recon >= 0.0)) {
      throw ArgumentError("tolerances must be non-negative");
    }
  }

  double eig_threshold(double norm) const { return scale_by_norm ? eig_zero * std::max(1.0, norm) : eig_zero; }
  double psd_threshold(double norm) const { return scale_by_norm ? psd_slack * (1.0 + norm) : psd_slack; }
  double recon_threshold(double norm) const { return scale_by_norm ? recon * std::max(1.0, norm) : recon; }
};

/// Descending eigenvalues and matching orthonormal eigenvectors (columns).
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
  double zero_tol = 0.0;

  Index size() const { return eigenvalues.size(); }
  double lambda_min() const { return eigenvalues(size() - 1); }
  double lambda_max() const { return eigenvalues(0); }

  /// Number of eigenvalues with magnitude above zero_tol.
  Index rank() const { return (eigenvalues.array().abs() > zero_tol).count(); }
  Index positive_count() const { return (eigenvalues.array() > zero_tol).count(); }
  Index negative_count() const { return (eigenvalues.array() < -zero_tol).count(); }

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

template <typename Real = double>
ComplexMatrixT<Real> matrix_unit(Index d, Index i, Index j) {
  if (d < 1 || i < 0 || j < 0 || i >= d || j >= d) {
    throw ArgumentError("matrix_unit: index (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") out of range for dimension " + std::to_string(d));
  }
  ComplexMatrixT<Real> e = ComplexMatrixT<Real>::Zero(d, d);
  e(i, j) = Real(1);
  return e;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(const Eigen::MatrixBase<DerivedA>& a,
                                                                              const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Index r = b.rows();
  const Index s = b.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * r, a.cols() * s);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * r, j * s, r, s) = a(i, j) * b.template cast<Scalar>();
    }
  }
  return out;
}

/// Column-stacking vectorization: entry j*rows + i holds a(i, j).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> vec(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense = a;
  return Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(dense.data(), dense.size());
}

/// Inverse of vec(): reshapes a length rows*cols vector into rows x cols.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> unvec(const Eigen::MatrixBase<Derived>& v,
                                                                              Index rows, Index cols) {
  using Scalar = typename Derived::Scalar;
  if (rows < 1 || cols < 1 || v.size() != rows * cols) {
    throw ArgumentError("unvec: vector of length " + std::to_string(v.size()) + " cannot be reshaped to " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dense = v;
  return Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>(dense.data(), rows, cols);
}

namespace detail {
template <typename Derived>
void require_bipartite(const Eigen::MatrixBase<Derived>& x, Index m, Index n, const char* what) {
  if (m < 1 || n < 1 || x.rows() != m * n || x.cols() != m * n) {
    throw ArgumentError(std::string(what) + ": expected a square matrix of side " + std::to_string(m) + "*" +
                        std::to_string(n) + ", got " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}
}  // namespace detail

/// tr₁ on M_m ⊗ M_n: result(k, l) = Σ_j x(j*n + k, j*n + l).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace_first(
    const Eigen::MatrixBase<Derived>& x, Index m, Index n) {
  detail::require_bipartite(x, m, n, "partial_trace_first");
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Index j = 0; j < m; ++j) out += x.block(j * n, j * n, n, n);
  return out;
}

/// tr₂ on M_m ⊗ M_n: result(i, j) = Σ_k x(i*n + k, j*n + k).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace_second(
    const Eigen::MatrixBase<Derived>& x, Index m, Index n) {
  detail::require_bipartite(x, m, n, "partial_trace_second");
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) out(i, j) = x.block(i * n, j * n, n, n).trace();
  }
  return out;
}

template <typename Derived>
typename Derived::RealScalar hs_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

/// Largest entry magnitude; the norm used by every reconstruction check.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? typename Derived::RealScalar(0) : a.cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Derived::RealScalar max_asymmetry(const Eigen::MatrixBase<Derived>& a) {
  return max_abs(a - a.adjoint());
}

/// Cheap upper bound on the spectral norm (max absolute row sum).
template <typename Derived>
typename Derived::RealScalar norm_estimate(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? typename Derived::RealScalar(0) : a.cwiseAbs().rowwise().sum().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (H + H*)/2 first. Throws DomainError if the asymmetry exceeds the
/// reconstruction tolerance and NumericError if the solver fails.
SpectralDecomposition hermitian_eig(const ComplexMatrix& h, const ToleranceConfig& tol = {});

}  // namespace hermap
