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

// Seeded generators and independent oracles shared by the test binaries.
// The oracles are written from definitions with explicit index loops and
// never call the library routine they are used to check.

#pragma once

#include <random>
#include <vector>

#include "hermap/choi.hpp"

namespace hermap::testing {

inline ComplexMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix x(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) x(i, j) = Complex(normal(rng), normal(rng));
  return x;
}

inline ComplexMatrix random_hermitian(Index d, std::mt19937_64& rng) {
  const ComplexMatrix a = random_complex(d, d, rng);
  return (a + a.adjoint()) / 2.0;
}

/// R*R with R of shape rank x d.
inline ComplexMatrix random_psd(Index d, Index rank, std::mt19937_64& rng) {
  const ComplexMatrix r = random_complex(rank, d, rng);
  return r.adjoint() * r;
}

inline Index pick(std::vector<Index> choices, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> u(0, choices.size() - 1);
  return choices[u(rng)];
}

/// Σ w_t A_t X A_t* with signed real weights; the number of terms varies so
/// that both full-rank and rank-deficient Choi matrices occur.
struct RandomKrausMap {
  Index m, n;
  std::vector<double> weights;
  std::vector<ComplexMatrix> ops;

  ComplexMatrix operator()(const ComplexMatrix& x) const {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t t = 0; t < ops.size(); ++t) out += weights[t] * ops[t] * x * ops[t].adjoint();
    return out;
  }
};

inline RandomKrausMap random_kraus_map(Index m, Index n, std::mt19937_64& rng, bool signed_weights = true,
                                       Index max_terms = 0) {
  const Index cap = max_terms > 0 ? max_terms : m * n;
  std::uniform_int_distribution<Index> count(1, cap);
  std::uniform_real_distribution<double> w(signed_weights ? -2.0 : 0.1, 2.0);
  RandomKrausMap map{m, n, {}, {}};
  const Index terms = count(rng);
  for (Index t = 0; t < terms; ++t) {
    map.weights.push_back(w(rng));
    map.ops.push_back(random_complex(n, m, rng));
  }
  return map;
}

inline MapSpec random_hermitian_spec(Index m, Index n, std::mt19937_64& rng) {
  const auto map = random_kraus_map(m, n, rng);
  return choi_from_action(MapAction::from_function(m, n, map));
}

namespace oracle {

/// out(i*r + k, j*s + l) = a(i, j) b(k, l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Component (j*n + i) of (M ⊗ N) vec(C), expanded as Σ_{a,b} M(j,b) N(i,a) C(a,b).
inline ComplexVector kron_times_vec(const ComplexMatrix& mm, const ComplexMatrix& nn, const ComplexMatrix& c) {
  ComplexVector out = ComplexVector::Zero(nn.rows() * mm.rows());
  for (Index j = 0; j < mm.rows(); ++j)
    for (Index i = 0; i < nn.rows(); ++i)
      for (Index b = 0; b < mm.cols(); ++b)
        for (Index a = 0; a < nn.cols(); ++a) out(j * nn.rows() + i) += mm(j, b) * nn(i, a) * c(a, b);
  return out;
}

inline ComplexMatrix trace_first(const ComplexMatrix& x, Index m, Index n) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l)
      for (Index j = 0; j < m; ++j) out(k, l) += x(j * n + k, j * n + l);
  return out;
}

inline ComplexMatrix trace_second(const ComplexMatrix& x, Index m, Index n) {
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k) out(i, j) += x(i * n + k, j * n + k);
  return out;
}

/// Φ(X) = Σ_{j,k} X(j,k) Φ(E_jk), from the images alone.
inline ComplexMatrix act_by_linearity(const MapAction& action, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(action.n, action.n);
  for (Index j = 0; j < action.m; ++j)
    for (Index k = 0; k < action.m; ++k) out += x(j, k) * action.image(j, k);
  return out;
}

/// Choi matrix assembled entry by entry: C(i*n + k, j*n + l) = Φ(E_ij)(k, l).
inline ComplexMatrix choi_entrywise(const MapAction& action) {
  const Index m = action.m, n = action.n;
  ComplexMatrix c(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) c(i * n + k, j * n + l) = action.image(i, j)(k, l);
  return c;
}

/// Smallest eigenvalue by a route independent of the library's eigensolver
/// wrapper: Eigen's complex Schur form of the matrix.
inline double lambda_min_schur(const ComplexMatrix& h) {
  Eigen::ComplexSchur<ComplexMatrix> schur(h);
  return schur.matrixT().diagonal().real().minCoeff();
}

}  // namespace oracle

}  // namespace hermap::testing
