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

// Entropic quantities and capacities: coherent information and its
// optimisation over qubit inputs, closed-form cloner and reflecting-channel
// capacities, PPT and symmetric-channel tests, the direct-sum capacity
// identity and clone fidelities.

#ifndef HORIZON_CAPACITY_HPP
#define HORIZON_CAPACITY_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "horizon/block_channel.hpp"
#include "horizon/channel.hpp"
#include "horizon/linalg.hpp"
#include "horizon/stinespring.hpp"
#include "horizon/su2.hpp"

namespace horizon {

/// Entropy of a block-diagonal operator, blocks assumed mutually orthogonal.
double block_entropy(const BlockDiagonal& blocks);

/// H(N(rho)) - H(N^c(rho)) in bits.
double coherent_information(const Channel& channel, const DensityMatrix& rho);

/// H(Tr_E V rho V^dagger) - H(Tr_B V rho V^dagger), both marginals of the
/// same purified output.
double coherent_information(const StinespringIsometry& v, const DensityMatrix& rho);

struct OptimizerOptions {
  /// Fibonacci-lattice directions per shell.
  int directions = 64;
  /// Shells at radii k / radii, k = 1..radii, plus the centre.
  int radii = 8;
  /// First pattern-search step in Bloch coordinates.
  double initial_step = 0.125;
  /// Cap on refinement evaluations.
  int max_evaluations = 20000;
};

struct CapacityResult {
  double value = 0.0;
  DensityMatrix optimizer_input = DensityMatrix::maximally_mixed(1);
  std::array<double, 3> bloch{0.0, 0.0, 0.0};
  /// Objective evaluations, grid included.
  int iterations = 0;
  /// Final pattern-search step; below the requested tolerance iff converged.
  double residual = 0.0;
  bool converged = true;
  int n_max = 0;
  int ell_max = 0;
  double tail_bound = 0.0;
};

/// Maximises the coherent information over the Bloch ball: a deterministic
/// grid (centre plus radii x directions) followed by compass pattern search
/// whose step halves until it drops below `tol`. One-dimensional inputs are
/// evaluated once. Inputs of dimension above 2 throw ParameterError.
CapacityResult optimize_coherent_information(const Channel& channel, double tol = 1e-7,
                                             const OptimizerOptions& opts = {});

/// The grid used by the optimiser, as Bloch vectors.
std::vector<std::array<double, 3>> bloch_grid(const OptimizerOptions& opts = {});

/// log2((l + 1) / l).
double capacity_cloner(int ell);

struct SeriesCapacity {
  double value = 0.0;
  /// Bound on the omitted terms, from log2((l+1)/l) <= 1 / (l ln 2).
  double tail_bound = 0.0;
  int terms = 0;
};

/// ((1-z)^3 / 2) sum_{l>L} (l+1) z^(l-1) / ln 2.
double unruh_capacity_tail_bound(double z, int terms);
/// Smallest L with unruh_capacity_tail_bound(z, L) < tol.
int unruh_terms_for_tolerance(double z, double tol);
/// ((1-z)^3 / 2) sum_{l=1}^{L} l (l+1) z^(l-1) log2((l+1)/l).
SeriesCapacity unruh_capacity(double z, double tol);

struct ReflectingNumericOptions {
  /// Tail tolerance that fixes the number of blocks.
  double tail_tol = 1e-5;
  /// Largest admissible Unruh column deficit when choosing the cutoff.
  double deficit_tol = 1e-12;
  /// Optimiser step tolerance.
  double optimizer_tol = 1e-7;
  std::optional<int> cutoff;
  std::optional<int> ell_max;
};

struct ReflectingChannel {
  DualRailChannel dual_rail;
  /// Largest block label kept.
  int ell_max = 0;
};

/// Reflecting dual-rail channel from the Unruh isometry with the block count
/// and cutoff chosen as in reflecting_capacity_numeric.
ReflectingChannel reflecting_dual_rail_channel(double z, const ReflectingNumericOptions& opts = {});

/// Builds the reflecting dual-rail channel from the Unruh isometry and
/// maximises its coherent information. tail_bound reports the bound on the
/// omitted blocks.
CapacityResult reflecting_capacity_numeric(double z, const ReflectingNumericOptions& opts = {});

struct PptResult {
  bool is_ppt = false;
  double min_pt_eigenvalue = 0.0;
};

/// Partial transpose of the input factor; PPT iff min eigenvalue >= -tol.
PptResult ppt_check(const ChoiMatrix& c, double tol);

/// True iff B and E have the same factor dimensions and Tr_E, Tr_B of
/// V rho V^dagger agree within tol for |0><0| and five seeded random inputs.
bool symmetric_channel_check(const StinespringIsometry& v, double tol);

struct DirectSumReport {
  double direct_sum_value = 0.0;
  double weighted_sum = 0.0;
  double difference = 0.0;
  std::vector<double> component_values;
  bool passed = false;
};

/// Optimised coherent information of direct_sum_channel(channels, probs)
/// against sum_i p_i times that of each channel.
DirectSumReport verify_direct_sum_lemma(std::span<const StinespringIsometry> channels,
                                        std::span<const double> probs, double tol);

/// Symmetric embedding of the (l+1)-dimensional spin space into l qubits:
/// basis index k goes to the normalised Dicke state with k ones.
Matrix dicke_embedding(int ell);

/// <phi| rho_1 |phi>, rho_1 the one-qubit marginal of the Dicke-embedded
/// Cl_l(phi). Requires 2 <= l <= 6.
double clone_fidelity(int ell, const DualRailQubit& phi);

}  // namespace horizon

#endif  // HORIZON_CAPACITY_HPP
