/*
 * Copyright 2026 The mrdlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "mrdlab/distribution.hpp"

namespace mrdlab {

/// Left/right homogeneous weight of a rank-r matrix in GF(q)^{m x n}:
///   left:  1 - (-1)^r / ((q^m - 1)(q^{m-1} - 1) ... (q^{m-r+1} - 1))
///   right: same with n in place of m (transpose symmetry).
/// The value depends only on the rank; rank 0 gives 0.
Rational hom_weight_by_rank(Side side, int m, int n, unsigned q, int r);

Rational hom_weight(Side side, const Mat& x);

/// Total homogeneous weight of GF(q)^{m x n} by the closed form
/// c_mn = q^{mn} - (-1)^m q^{m(m+1)/2} [n-1 choose m]_q (left; transposed
/// for right). Cross-checked against the brute-force sum over the whole
/// space whenever q^{mn} fits under the cap.
Rational total_weight(Side side, int m, int n, unsigned q);

/// Brute-force total: enumerate the space and sum hom_weight.
Rational brute_total_weight(Side side, const Field& f, int m, int n,
                            std::uint64_t cap = kDefaultEnumCap);

/// The normalized weight as a probability distribution; the zero matrix
/// is excluded from the support since its weight is 0.
MatrixDistribution normalized_hom_distribution(Side side, const Field& f, int m, int n,
                                               std::uint64_t cap = kDefaultEnumCap);

/// One coset of a submodule, with the exact distribution mass on it and
/// its rank census.
struct CosetSum {
    Mat rep; // canonical minimum of the coset
    Rational sum;
    std::map<int, std::uint64_t> rank_census;
};

/// Sweeps the cosets of the submodule of GF(q)^{m x n} given by a
/// direction subspace V: right submodules {X : colspace(X) ⊆ V} for V a
/// subspace of GF(q)^m (basis rows in `direction`), left submodules
/// {X : rowspace(X) ⊆ V} for V ⊆ GF(q)^n. Sums are taken under `d`.
std::vector<CosetSum> coset_weight_sums(const MatrixDistribution& d, Side module_side,
                                        const Mat& direction,
                                        std::uint64_t cap = kDefaultEnumCap);

/// A left submodule of GF(q)^{m x n} indexed by a subspace W of GF(q)^n is
/// cyclic iff dim W <= m (right submodules: W ⊆ GF(q)^m, dim W <= n).
bool submodule_cyclic(Side module_side, int m, int n, int dim_w);

} // namespace mrdlab
