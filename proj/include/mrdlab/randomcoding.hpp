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

/// A family F of subsets of GF(q)^k. Members are stored as sorted lists
/// of packed k-tuples (base-q, first component most significant).
struct PatternFamily {
    unsigned q = 2;
    int k = 2;
    std::vector<std::vector<std::uint64_t>> sets;
};

/// {{v} : v in GF(q)^k} — F-sets for this family are k-independent sets.
PatternFamily singleton_family(unsigned q, int k);

/// The binary (2,1)-separating system family:
/// {{001,110}, {010,101}, {100,011}} as subsets of GF(2)^3.
PatternFamily separating_2_1();

enum class VectorSetProperty {
    AnyKIndependent, // any k of the vectors are linearly independent
    CapCondition,    // no k+1 of them lie on a (k-1)-flat of AG(m,q)
};

/// A set of vectors in GF(q)^m whose declared property is verified at
/// construction (throws PropertyNotVerified otherwise).
class VectorSet {
  public:
    VectorSet(Field f, int m, std::vector<Mat> vectors, VectorSetProperty prop, int k);

    const Field& field() const { return f_; }
    int m() const { return m_; }
    int k() const { return k_; }
    VectorSetProperty property() const { return prop_; }
    const std::vector<Mat>& vectors() const { return vecs_; }

  private:
    Field f_;
    int m_, k_;
    VectorSetProperty prop_;
    std::vector<Mat> vecs_; // 1 x m rows, in the given order
};

enum class JointLawMode { Linear, Affine };

struct JointLawWitness {
    std::vector<int> indices;
    std::vector<Mat> values;
    Rational prob;
};

struct JointLawResult {
    bool ok = false;
    std::optional<JointLawWitness> witness;
};

/// Exact verification of the joint codeword laws: in linear mode every
/// k-tuple u_{i_1},...,u_{i_k} (i_1 < ... < i_k) and every value tuple has
/// P{u_{i_j} A = v_j for all j} = q^{-kn}; in affine mode tuples have
/// length k+1, an independent uniform translate is adjoined, and the
/// target is q^{-(k+1)n}. D must be k-good and U's property must match.
JointLawResult joint_law_check(const MatrixDistribution& d, const VectorSet& u, JointLawMode mode,
                               int k, std::uint64_t cap = kDefaultEnumCap);

/// Every k-tuple of linearly independent codewords of the row-space code
/// generated by `gen` has a coordinate where all entries are nonzero.
bool is_k_wise_intersecting(const Mat& gen, int k, std::uint64_t cap = kDefaultEnumCap);

/// (1 - (1-1/q)^k)^n * prod_{i<k} (q^m - q^i), the union bound on the
/// probability that the code of a k-good random matrix fails to be
/// k-wise intersecting.
Rational intersecting_failure_bound(int m, int n, unsigned q, int k);

/// Exact P{row-space code of A is not k-wise intersecting} under d.
Rational intersecting_failure_exact(const MatrixDistribution& d, int k,
                                    std::uint64_t cap = kDefaultEnumCap);

/// Monte Carlo frequency over `trials` draws from d (seeded, reproducible).
Rational intersecting_failure_estimate(const MatrixDistribution& d, int k, std::uint64_t trials,
                                       std::uint64_t seed);

struct FSetExtraction {
    std::vector<Mat> kept;
    size_t removed = 0;
};

/// Removes every component of C that appears in an undesirable k-tuple
/// (a tuple of distinct positions whose column-pattern set misses some
/// member of F) or in a duplicate pair, then verifies the result is an
/// F-set.
FSetExtraction f_set_extract(const std::vector<Mat>& c, const PatternFamily& fam,
                             std::uint64_t cap = kDefaultEnumCap);

/// Independent F-set verifier (direct definition sweep).
bool is_f_set(const std::vector<Mat>& c, const PatternFamily& fam,
              std::uint64_t cap = kDefaultEnumCap);

/// The rate threshold min{ (k - log_q(q^k - min |S|)) / (k-1), 1 } of the
/// extraction guarantee; reporting only.
double f_set_rate_threshold(const PatternFamily& fam);

} // namespace mrdlab
