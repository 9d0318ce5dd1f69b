// Copyright 2026 The horizon-channels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "horizon/closed_forms.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "horizon/errors.hpp"
#include "horizon/su2.hpp"
#include "test_util.hpp"

namespace horizon {
namespace {

Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

// Universal 1 -> l cloner written on l qubits: (2/(l+1)) S (rho (x) I) S,
// expressed in the Dicke basis (k ones <-> index k).
Matrix symmetric_cloner(int ell, const Matrix& rho) {
  const Index dim = Index{1} << ell;
  Matrix w = Matrix::Zero(dim, ell + 1);
  for (Index s = 0; s < dim; ++s) {
    int ones = 0;
    for (int b = 0; b < ell; ++b) ones += (s >> b) & 1;
    w(s, ones) = 1.0;
  }
  for (Index k = 0; k <= ell; ++k) w.col(k).normalize();
  Matrix rest = Matrix::Identity(dim / 2, dim / 2);
  return (2.0 / (ell + 1.0)) * w.adjoint() * kron(rho, rest) * w;
}

TEST(Cloning, LevelOneIsIdentity) {
  std::mt19937_64 rng(51);
  const DensityMatrix rho = testing::random_density(rng, 2);
  EXPECT_LT(max_abs(cloning_apply(1, rho).matrix() - rho.matrix()), 1e-15);
}

TEST(Cloning, LevelTwoOnZero) {
  const DensityMatrix out = cloning_apply(2, DualRailQubit(1.0, 0.0).density());
  EXPECT_LT(max_abs(out.matrix() - diag({2.0 / 3.0, 1.0 / 3.0, 0.0})), 1e-15);
}

TEST(Cloning, MaximallyMixedInput) {
  for (int ell = 1; ell <= 6; ++ell) {
    const DensityMatrix out = cloning_apply(ell, DensityMatrix::maximally_mixed(2));
    EXPECT_LT(max_abs(out.matrix() - Matrix::Identity(ell + 1, ell + 1) / (ell + 1.0)), 1e-15);
  }
}

TEST(Cloning, MatchesSymmetricProjectorConstruction) {
  std::mt19937_64 rng(52);
  for (int ell = 1; ell <= 6; ++ell) {
    for (int k = 0; k < 3; ++k) {
      const DensityMatrix rho = testing::random_density(rng, 2);
      EXPECT_LT(max_abs(cloning_apply(ell, rho).matrix() - symmetric_cloner(ell, rho.matrix())), 1e-13)
          << "l=" << ell;
    }
  }
}

TEST(Cloning, RejectsLevelZero) {
  EXPECT_THROW(cloning_apply(0, DensityMatrix::maximally_mixed(2)), ParameterError);
  EXPECT_THROW(cloning_complement_apply(0, DensityMatrix::maximally_mixed(2)), ParameterError);
}

TEST(Cloning, CovariantUnderSpinRotations) {
  std::mt19937_64 rng(53);
  const double theta = 1e-4;
  const SpinGenerators j2 = su2_generators(2);
  for (int ell = 1; ell <= 6; ++ell) {
    const SpinGenerators jl = su2_generators(ell + 1);
    const Matrix rho = testing::random_density(rng, 2).matrix();
    const Matrix base = cloning_apply(ell, rho);
    for (int axis = 0; axis < 3; ++axis) {
      const Matrix in = rho + Complex(0.0, theta) * (rho * j2[axis] - j2[axis] * rho);
      const Matrix expected =
          base + Complex(0.0, theta) * (base * jl[axis] - jl[axis] * base);
      EXPECT_LE(max_abs(cloning_apply(ell, in) - expected), 1e-6);
    }
  }
}

TEST(CloningComplement, Examples) {
  const Matrix one = cloning_complement_apply(1, DualRailQubit(0.6, 0.8).density()).matrix();
  ASSERT_EQ(one.rows(), 1);
  EXPECT_NEAR(one(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(operator_entropy(one), 0.0, 1e-15);
  const DensityMatrix two = cloning_complement_apply(2, DualRailQubit(1.0, 0.0).density());
  EXPECT_LT(max_abs(two.matrix() - diag({2.0 / 3.0, 1.0 / 3.0})), 1e-15);
  for (int ell = 1; ell <= 6; ++ell) {
    const DensityMatrix out = cloning_complement_apply(ell, DensityMatrix::maximally_mixed(2));
    EXPECT_LT(max_abs(out.matrix() - Matrix::Identity(ell, ell) / double(ell)), 1e-15);
  }
}

TEST(CloningComplement, SpectrumMatchesKrausComplement) {
  std::mt19937_64 rng(54);
  for (int ell = 1; ell <= 6; ++ell) {
    const LinearChannel kraus_comp = cloning_map(ell).minimal_complement();
    for (int k = 0; k < 3; ++k) {
      const DensityMatrix rho = testing::random_density(rng, 2);
      RealVector a = hermitian_eigenvalues(cloning_complement_apply(ell, rho).matrix());
      RealVector b = hermitian_eigenvalues(kraus_comp.apply(rho.matrix()));
      const Index n = std::max(a.size(), b.size());
      a.conservativeResizeLike(RealVector::Zero(n));
      b.conservativeResizeLike(RealVector::Zero(n));
      EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12) << "l=" << ell;
    }
  }
}

TEST(Depolarizing, Examples) {
  std::mt19937_64 rng(55);
  const DensityMatrix rho = testing::random_density(rng, 2);
  EXPECT_LT(max_abs(depolarizing_apply(0.0, rho).matrix() - rho.matrix()), 1e-15);
  EXPECT_LT(max_abs(depolarizing_apply(1.0, DualRailQubit(0.6, 0.8).density()).matrix() -
                    0.5 * Matrix::Identity(2, 2)),
            1e-15);
  EXPECT_LT(max_abs(depolarizing_apply(2.0 / 3.0, DualRailQubit(1.0, 0.0).density()).matrix() -
                    diag({2.0 / 3.0, 1.0 / 3.0})),
            1e-15);
  EXPECT_THROW(depolarizing_apply(1.5, rho), ParameterError);
  EXPECT_THROW(depolarizing_apply(-0.1, rho), ParameterError);
}

TEST(BlockDepolarizing, LevelOneContractsWithOppositeSign) {
  std::mt19937_64 rng(56);
  for (double q : {0.7, 0.9, 1.0, 4.0 / 3.0}) {
    const DensityMatrix rho = testing::random_density(rng, 2);
    EXPECT_LT(max_abs(block_depolarizing_apply(1, q, rho).matrix() -
                      depolarizing_apply(2.0 - q, rho).matrix()),
              1e-12);
  }
}

TEST(BlockDepolarizing, UnitParameterIsFullyMixing) {
  std::mt19937_64 rng(57);
  for (int ell = 1; ell <= 5; ++ell) {
    const DensityMatrix out = block_depolarizing_apply(ell, 1.0, testing::random_density(rng, 2));
    EXPECT_LT(max_abs(out.matrix() - Matrix::Identity(ell + 1, ell + 1) / (ell + 1.0)), 1e-15);
  }
}

TEST(BlockDepolarizing, LevelTwoOnZero) {
  const DensityMatrix out = block_depolarizing_apply(2, 2.0 / 3.0, DualRailQubit(1.0, 0.0).density());
  EXPECT_LT(max_abs(out.matrix() - diag({2.0 / 9.0, 3.0 / 9.0, 4.0 / 9.0})), 1e-15);
}

TEST(BlockWeights, Examples) {
  const BlockWeights cold = block_weights(0.0, 5);
  EXPECT_EQ(cold.p[0], 1.0);
  for (std::size_t k = 1; k < cold.p.size(); ++k) EXPECT_EQ(cold.p[k], 0.0);
  EXPECT_EQ(cold.tail_mass, 0.0);
  EXPECT_NEAR(block_weights(0.5, 1).p[0], 0.125, 1e-16);
  EXPECT_THROW(block_weights(1.0, 3), ParameterError);
  EXPECT_THROW(block_weights(0.5, 0), ParameterError);
}

TEST(BlockWeights, SumToOneWithTail) {
  for (double z : {0.1, 0.5, 0.9}) {
    for (int ell_max : {1, 5, 40}) {
      const BlockWeights w = block_weights(z, ell_max);
      double sum = w.tail_mass;
      for (double p : w.p) sum += p;
      EXPECT_NEAR(sum, 1.0, 1e-12) << z << " " << ell_max;
    }
  }
  const int ell_max = block_count_for_tail(0.9, 1e-8);
  EXPECT_LE(block_weights(0.9, ell_max).tail_mass, 1e-8);
  EXPECT_GT(block_weights(0.9, ell_max - 1).tail_mass, 1e-8);
}

}  // namespace
}  // namespace horizon
