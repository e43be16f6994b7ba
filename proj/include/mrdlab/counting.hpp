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

#include "mrdlab/matrix.hpp"
#include "mrdlab/rational.hpp"

namespace mrdlab {

/// Gaussian binomial [n choose m]_q; 0 when m < 0 or m > n, empty
/// product = 1. All counts are exact arbitrary-precision integers.
Int gaussian_binomial(int n, int m, unsigned q);

/// Number of l-dimensional subspaces L of GF(q)^n with dim(L ∩ M) = k,
/// for a fixed m-dimensional M:  q^{(l-k)(m-k)} [m k]_q [n-m l-k]_q.
Int anzahl_intersecting_subspaces(int k, int l, int m, int n, unsigned q);

/// Number of full-rank M in GF(q)^{m x n} with rank(M N^T) = k, for a
/// fixed m x n matrix N of rank l (requires k <= l <= m <= n and
/// k + n >= l + m):  q^{k(n-l-m+k)} [l k]_q [n-l m-k]_q prod_i (q^m - q^i).
Int anzahl_rank_k_products(int k, int l, int m, int n, unsigned q);

/// Number of distinct codes of the form F_m * A over all full-rank m x n
/// matrices A (m >= n):  prod_{i=1}^{n-1} (q^m - q^i).
Int mrd_orbit_count(int m, int n, unsigned q);

/// Number of rank-r matrices in GF(q)^{m x n}:
/// [m r]_q [n r]_q prod_{i=0}^{r-1} (q^r - q^i).
Int rank_count(int m, int n, unsigned q, int r);

/// Number of full-rank m x n matrices: prod_{i=0}^{min-1} (q^{max} - q^i).
Int full_rank_count(int m, int n, unsigned q);

/// All m-dimensional subspaces of GF(q)^n, one canonical RREF basis
/// matrix (m x n) per subspace, in a fixed deterministic order (pivot
/// column sets lexicographically, then free entries row-major ascending).
class SubspaceIterator {
  public:
    SubspaceIterator(Field f, int ambient, int dim);
    /// Next canonical basis, or nullopt when exhausted.
    std::optional<Mat> next();

  private:
    Field f_;
    int n_, m_;
    bool done_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_pos_;
    std::vector<felem> free_val_;
    bool advance_pivots();
    void reset_free();
};

std::vector<Mat> subspaces(const Field& f, int ambient, int dim);

/// Canonical label of a subspace: the RREF of any basis (rows spanning it).
Mat subspace_canonical(const Mat& basis);

// Independent brute-force oracles for the closed forms above. They count
// by direct enumeration and share no code with the formulas.

Int brute_count_intersecting_subspaces(int k, int l, int m, int n, const Field& f);
Int brute_count_rank_k_products(int k, int l, int m, int n, const Field& f,
                                std::uint64_t cap = kDefaultEnumCap);

/// One enumeration pass over GF(q)^{m x n} binning every full-rank M by
/// rank of its first l columns, for all l at once: result[l][k] = number
/// of full-rank M with rank(M N_l^T) = k for the canonical rank-l N_l.
std::vector<std::vector<Int>> brute_rank_product_profile(int m, int n, const Field& f,
                                                         std::uint64_t cap = kDefaultEnumCap);
Int brute_count_rank(int m, int n, const Field& f, int r, std::uint64_t cap = kDefaultEnumCap);
Int brute_count_full_rank(int m, int n, const Field& f, std::uint64_t cap = kDefaultEnumCap);
Int brute_count_subspaces(int ambient, int dim, const Field& f,
                          std::uint64_t cap = kDefaultEnumCap);
Int brute_mrd_orbit_count(int m, int n, const Field& f, std::uint64_t cap = kDefaultEnumCap);

} // namespace mrdlab
