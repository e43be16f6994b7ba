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

#include <map>

#include "mrdlab/codes.hpp"
#include "mrdlab/rational.hpp"

namespace mrdlab {

/// A finitely supported probability distribution on GF(q)^{m x n} with
/// exact rational weights. The support is exactly the stored keys (all
/// weights > 0) and the weights sum to exactly 1. Keys are packed matrix
/// indices, so iteration order is the canonical matrix order.
class MatrixDistribution {
  public:
    MatrixDistribution(Field f, int m, int n, std::map<std::uint64_t, Rational> weights);

    const Field& field() const { return f_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<std::uint64_t, Rational>& weights() const { return w_; }
    size_t support_size() const { return w_.size(); }

    Rational prob(const Mat& a) const;
    Mat support_mat(std::uint64_t key) const { return Mat::unpack(f_, m_, n_, key); }

    bool operator==(const MatrixDistribution& o) const {
        return f_ == o.f_ && m_ == o.m_ && n_ == o.n_ && w_ == o.w_;
    }

  private:
    Field f_;
    int m_, n_;
    std::map<std::uint64_t, Rational> w_;
};

MatrixDistribution uniform_over(const Field& f, int m, int n, const std::vector<Mat>& support);
MatrixDistribution uniform_over(const MatrixCode& c);
MatrixDistribution point_mass(const Mat& a);
MatrixDistribution uniform_over_space(const Field& f, int m, int n,
                                      std::uint64_t cap = kDefaultEnumCap);

struct GoodnessWitness {
    Mat M; // full-rank k x m
    Mat K; // k x n value
    Rational prob;
};

struct GoodnessResult {
    bool good = false;
    std::optional<GoodnessWitness> witness; // canonically first violation
};

/// Exact k-goodness check: for every full-rank M in GF(q)^{k x m} and
/// every K in GF(q)^{k x n}, P{M A = K} = q^{-kn}.
GoodnessResult is_k_good(const MatrixDistribution& d, int k, std::uint64_t cap = kDefaultEnumCap);

/// Pushforward under transposition.
MatrixDistribution transpose_dist(const MatrixDistribution& d);

/// One atom of the joint law of (P, Q, B) for compose().
struct PqbAtom {
    Mat P, Q, B;
    Rational w;
};

/// Exact pushforward of (P, A, Q, B) -> P A Q + B where A ~ `a` is
/// independent of (P, Q, B) ~ `joint`. P must be supported on full-rank
/// s x m matrices and Q on full-rank n x t matrices.
MatrixDistribution compose(const MatrixDistribution& a, const std::vector<PqbAtom>& joint);

struct MinSupportReport {
    bool k_good = false;
    std::uint64_t support_size = 0;
    bool is_minimum = false;  // support size == q^{k max(m,n)}
    bool mrd_support = false; // support is an (m,n,k) MRD code
};

/// Classification against the minimum-support theorem: when the check is
/// k-good and the support size is minimal, the support must be an MRD code
/// with uniform weights (and conversely); violations raise Internal.
MinSupportReport classify_min_support(const MatrixDistribution& d, int k,
                                      std::uint64_t cap = kDefaultEnumCap);

/// Exact probability mass on full-rank matrices.
Rational full_rank_probability(const MatrixDistribution& d);

} // namespace mrdlab
