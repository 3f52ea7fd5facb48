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

#include <catch2/catch_amalgamated.hpp>

#include "hermap/builtins.hpp"
#include "hermap/extend.hpp"
#include "support.hpp"

using namespace hermap;
namespace oracle = hermap::testing::oracle;
using Catch::Approx;

namespace {

ComplexMatrix diag_q(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

// Projector u u* onto span of a unit-norm operator, phase-free.
ComplexMatrix projector(const ComplexMatrix& op) {
  const ComplexVector u = vec(op);
  return u * u.adjoint();
}

}  // namespace

TEST_CASE("Kraus terms of the hermitize map", "[extend]") {
  const auto terms = kraus_terms(hermitize_spec(2));
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].weight == Approx(3.0));
  CHECK(terms[1].weight == Approx(1.0));
  CHECK(terms[2].weight == Approx(1.0));
  CHECK(terms[3].weight == Approx(-1.0));
  for (const auto& t : terms) CHECK(hs_norm(t.op) == Approx(1.0));

  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix a1(2, 2), a2(2, 2), a3(2, 2), a4(2, 2);
  a1 << r, 0, 0, r;
  a2 << r, 0, 0, -r;
  a3 << 0, r, r, 0;
  a4 << 0, r, -r, 0;
  // Non-degenerate eigenvalues fix the operator up to phase.
  CHECK(max_abs(projector(terms[0].op) - projector(a1)) < 1e-12);
  CHECK(max_abs(projector(terms[3].op) - projector(a4)) < 1e-12);
  // The degenerate pair spans the same two-dimensional space.
  CHECK(max_abs(projector(terms[1].op) + projector(terms[2].op) - projector(a2) - projector(a3)) < 1e-12);
}

TEST_CASE("Kraus terms of the transpose map", "[extend]") {
  const auto spec = transpose_spec(2);
  const auto terms = kraus_terms(spec);
  REQUIRE(terms.size() == 4);
  CHECK(terms.back().weight == Approx(-1.0));
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix x = testing::random_complex(2, 2, rng);
    CHECK(max_abs(apply_kraus(terms, x) - x.transpose()) < 1e-12);
  }
  CHECK(kraus_terms(MapSpec(2, 3, ComplexMatrix::Zero(6, 6))).empty());
}

TEST_CASE("Kraus completeness on random maps", "[extend][property]") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Index m = testing::pick({2, 3, 4}, rng), n = testing::pick({2, 3, 4}, rng);
    const auto spec = testing::random_hermitian_spec(m, n, rng);
    const auto terms = kraus_terms(spec);
    CHECK(static_cast<Index>(terms.size()) == hermitian_eig(spec.choi()).rank());
    const ComplexMatrix x = testing::random_complex(m, m, rng);
    const ComplexMatrix h = testing::random_hermitian(m, rng);
    CHECK(max_abs(apply_kraus(terms, x) - apply_via_choi(spec, x)) < 1e-9);
    CHECK(max_abs(apply_kraus(terms, h) - apply_via_choi(spec, h)) < 1e-9);
  }
}

TEST_CASE("extension of the hermitize map", "[extend]") {
  const auto ext = build_extension(hermitize_spec(2));
  CHECK(ext.k == 4);
  CHECK(ext.q == diag_q({1, 1, 1, -1}));
  CHECK(sign_consistent(ext));
  const ComplexMatrix img = apply_extension(ext, matrix_unit(2, 0, 1));
  CHECK(max_abs(img - matrix_unit(2, 0, 1) - matrix_unit(2, 1, 0)) < 1e-12);
}

TEST_CASE("extension of CP and negative maps", "[extend]") {
  std::mt19937_64 rng(67);
  const ComplexMatrix v = testing::random_complex(3, 2, rng);
  const auto single =
      choi_from_action(MapAction::from_function(2, 3, [&](const ComplexMatrix& x) -> ComplexMatrix { return v * x * v.adjoint(); }));
  const auto ext = build_extension(single);
  CHECK(ext.k == 1);
  CHECK(ext.q == diag_q({1}));
  const ComplexMatrix x = testing::random_complex(2, 2, rng);
  CHECK(max_abs(apply_extension(ext, x) - v * x * v.adjoint()) < 1e-10);

  const auto cp = choi_from_action(
      MapAction::from_function(3, 2, testing::random_kraus_map(3, 2, rng, false, 3)));
  const auto cp_ext = build_extension(cp);
  CHECK(cp_ext.q == ComplexMatrix::Identity(cp_ext.k, cp_ext.k));

  const auto neg = build_extension(scaled_trace_spec(-1.0, 2));
  CHECK(neg.k == 4);
  CHECK(neg.q == ComplexMatrix(-1.0 * ComplexMatrix::Identity(4, 4)));
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix y = testing::random_complex(2, 2, rng);
    CHECK(max_abs(apply_extension(neg, y) + y.trace() * ComplexMatrix::Identity(2, 2)) < 1e-12);
  }

  CHECK_THROWS_AS(build_extension(MapSpec(2, 2, ComplexMatrix::Zero(4, 4))), DomainError);
  CHECK_THROWS_AS(apply_extension(neg, ComplexMatrix::Zero(3, 3)), ArgumentError);
}

TEST_CASE("extension fidelity on random maps", "[extend][property]") {
  std::mt19937_64 rng(71);
  int dilations_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index m = testing::pick({2, 3, 4}, rng), n = testing::pick({2, 3, 4}, rng);
    const auto map = testing::random_kraus_map(m, n, rng, true, trial % 2 == 0 ? 2 : 0);
    const auto spec = choi_from_action(MapAction::from_function(m, n, map));
    const auto ext = build_extension(spec);
    CHECK(sign_consistent(ext));
    const ComplexMatrix x = testing::random_complex(m, m, rng);
    const ComplexMatrix literal = apply_extension(ext, x);
    CHECK(max_abs(literal - apply_via_choi(spec, x)) < 1e-9);
    CHECK(max_abs(literal - apply_extension_fast(ext, x)) < 1e-9);

    if (m * n * ext.k * ext.k <= 256) {
      ++dilations_checked;
      CHECK(oracle::lambda_min_schur(dilation_choi(ext).choi()) >= -1e-8);
    }
  }
  CHECK(dilations_checked > 10);
}

TEST_CASE("sign consistency detects bad sign matrices", "[extend]") {
  auto ext = build_extension(hermitize_spec(2));
  REQUIRE(sign_consistent(ext));
  ext.q(0, 0) = 2.0;
  CHECK_FALSE(sign_consistent(ext));
  ext.q(0, 0) = -1.0;
  CHECK_FALSE(sign_consistent(ext));
  ext.q(0, 0) = 1.0;
  ext.q(0, 1) = 0.5;
  CHECK_FALSE(sign_consistent(ext));
}

TEST_CASE("block reduction of the two-block example", "[extend]") {
  const auto spec = block_example_spec();
  const BlockPartition partition{{2, 2}, {2, 2}};
  CHECK(hermitian_eig(spec.choi()).rank() == 6);
  CHECK(hermitian_eig(sub_choi(spec, partition, 0).choi()).rank() == 4);
  CHECK(hermitian_eig(sub_choi(spec, partition, 1).choi()).rank() == 2);
  CHECK(sub_choi(spec, partition, 0).choi() == hermitize_spec(2).choi());

  const auto ext = block_reduce(spec, partition);
  CHECK(ext.k == 4);
  CHECK(ext.q == diag_q({1, 1, 1, -1}));
  CHECK(sign_consistent(ext));
  CHECK(ext.terms.size() == 6);

  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix x = testing::random_complex(4, 4, rng);
    CHECK(max_abs(apply_extension(ext, x) - apply_via_choi(spec, x)) < 1e-10);
  }
}

TEST_CASE("shared auxiliary indices with summed signs break reconstruction", "[extend]") {
  const auto spec = block_example_spec();
  const auto naive = shared_index_extension(spec, {{2, 2}, {2, 2}});
  CHECK(naive.k == 4);
  CHECK(naive.q == diag_q({2, 0, 1, -1}));
  CHECK_FALSE(sign_consistent(naive));
  ComplexMatrix x = ComplexMatrix::Zero(4, 4);
  x(0, 0) = 1.0;
  CHECK(max_abs(apply_extension(naive, x) - apply_via_choi(spec, x)) >= 1.0 - 1e-10);
}

TEST_CASE("single-block reduction equals the plain extension", "[extend]") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = testing::random_hermitian_spec(2, 3, rng);
    const auto plain = build_extension(spec);
    const auto reduced = block_reduce(spec, {{2}, {3}});
    REQUIRE(plain.k == reduced.k);
    CHECK(plain.q == reduced.q);
    REQUIRE(plain.terms.size() == reduced.terms.size());
    for (std::size_t t = 0; t < plain.terms.size(); ++t) {
      CHECK(plain.terms[t].aux == reduced.terms[t].aux);
      CHECK(plain.terms[t].sign == reduced.terms[t].sign);
      CHECK(plain.terms[t].magnitude == reduced.terms[t].magnitude);
      CHECK(plain.terms[t].op == reduced.terms[t].op);
    }
  }
}

TEST_CASE("block reduction of random block-diagonal maps", "[extend][property]") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m1 = testing::pick({1, 2}, rng), m2 = testing::pick({1, 2}, rng);
    const Index n1 = testing::pick({1, 2}, rng), n2 = testing::pick({1, 2}, rng);
    const bool cp_only = trial % 5 == 0;
    const auto f1 = testing::random_kraus_map(m1, n1, rng, !cp_only);
    const auto f2 = testing::random_kraus_map(m2, n2, rng, !cp_only);
    const Index m = m1 + m2, n = n1 + n2;
    const auto spec = choi_from_action(MapAction::from_function(m, n, [&](const ComplexMatrix& x) {
      ComplexMatrix out = ComplexMatrix::Zero(n, n);
      out.topLeftCorner(n1, n1) = f1(x.topLeftCorner(m1, m1));
      out.bottomRightCorner(n2, n2) = f2(x.bottomRightCorner(m2, m2));
      return out;
    }));
    const BlockPartition partition{{m1, m2}, {n1, n2}};
    const auto ext = block_reduce(spec, partition);
    CHECK(sign_consistent(ext));
    CHECK(ext.k <= hermitian_eig(spec.choi()).rank());
    if (cp_only) CHECK(ext.q == ComplexMatrix::Identity(ext.k, ext.k));
    const ComplexMatrix x = testing::random_complex(m, m, rng);
    CHECK(max_abs(apply_extension(ext, x) - apply_via_choi(spec, x)) < 1e-9);
    CHECK(max_abs(apply_extension(ext, x) - apply_extension(build_extension(spec), x)) < 1e-9);
    if (m * n * ext.k * ext.k <= 256) CHECK(oracle::lambda_min_schur(dilation_choi(ext).choi()) >= -1e-8);

    const auto detected = detect_block_partition(spec);
    CHECK(detected.blocks() >= 1);
    CHECK_NOTHROW(block_reduce(spec, detected));
  }
}

TEST_CASE("block reduction input validation", "[extend]") {
  const auto spec = transpose_spec(2);
  CHECK_THROWS_AS(block_reduce(spec, {{1, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(block_reduce(spec, {{1, 2}, {1, 1}}), ArgumentError);
  CHECK_THROWS_AS(block_reduce(spec, {{2}, {1, 1}}), ArgumentError);
  CHECK_THROWS_AS(block_reduce(spec, {{2, 0}, {1, 1}}), ArgumentError);
  try {
    block_reduce(spec, {{1, 1}, {1, 1}});
  } catch (const DomainError& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("input block"));
  }
}

TEST_CASE("block partition detection", "[extend]") {
  CHECK(detect_block_partition(block_example_spec()) == BlockPartition{{2, 2}, {2, 2}});
  CHECK(detect_block_partition(transpose_spec(2)) == BlockPartition{{2}, {2}});
  CHECK(detect_block_partition(MapSpec(2, 2, ComplexMatrix::Zero(4, 4))) == BlockPartition{{1, 1}, {1, 1}});
  CHECK(detect_block_partition(MapSpec(3, 3, ComplexMatrix::Zero(9, 9))) == BlockPartition{{1, 1, 1}, {1, 1, 1}});

  const auto uneven = detect_block_partition(MapSpec(2, 3, ComplexMatrix::Zero(6, 6)));
  CHECK(uneven.blocks() == 2);

  // Diagonal map X -> diag(X): every input index only reaches its own output.
  const auto diag = choi_from_action(MapAction::from_function(3, 3, [](const ComplexMatrix& x) -> ComplexMatrix {
    return x.diagonal().asDiagonal();
  }));
  CHECK(detect_block_partition(diag) == BlockPartition{{1, 1, 1}, {1, 1, 1}});
}
