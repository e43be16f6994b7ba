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

#include <optional>

#include "mrdlab/counting.hpp"
#include "mrdlab/matrix.hpp"

namespace mrdlab {

/// A finite set of equal-shape matrices, kept distinct and sorted in
/// canonical matrix order.
class MatrixCode {
  public:
    MatrixCode(Field f, int m, int n, std::vector<Mat> words);

    const Field& field() const { return f_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Mat>& words() const { return words_; }
    size_t size() const { return words_.size(); }
    bool contains(const Mat& a) const;

    /// Closed under addition and scalar multiplication (checked).
    bool is_linear() const;

  private:
    Field f_;
    int m_, n_;
    std::vector<Mat> words_;
};

/// Minimum rank of X - Y over distinct codewords; requires size >= 2.
/// For linear codes the min nonzero codeword rank is computed as well and
/// both routes are asserted equal.
int rank_distance(const MatrixCode& c);

struct MrdReport {
    bool mrd = false;
    std::string reason;                            // set when not MRD
    std::optional<std::pair<Mat, Mat>> witness;    // offending pair, when applicable
};

/// MRD test by size + rank distance, cross-checked against the product
/// surjectivity criterion (every full-rank k x m matrix B maps the code
/// onto all of GF(q)^{k x n}; transposed version for m > n). Both criteria
/// must agree; disagreement raises Internal.
MrdReport is_mrd(const MatrixCode& c, int k, std::uint64_t cap = kDefaultEnumCap);

/// Gabidulin code: all maps x -> sum_{i<k} a_i x^{q^i} on GF(q^m) as
/// m x m matrices over the polynomial basis, truncated to m x n by
/// deleting the trailing m-n columns (m >= n); built by transposition of
/// the swapped-parameter code when m < n.
MatrixCode gabidulin(int m, int n, int k, const Field& f, std::uint64_t cap = kDefaultEnumCap);

/// The matrix representation of GF(q^m): {0, I, K, K^2, ...} where K is
/// the multiplication matrix of the extension generator.
struct MatrixField {
    Field base;
    int m;
    Mat gen;                   // K
    std::vector<Mat> elements; // zero first, then powers of K in order
};

MatrixField matrix_field(int m, const Field& f);

/// The linear code F_m * A for full-rank A; an (m,n,1) MRD code.
MatrixCode mrd_from_field(const MatrixField& mf, const Mat& a);

/// A function GF(q)^m -> GF(q)^m as a dense table over packed row vectors.
struct VecMap {
    Field f;
    int m;
    std::vector<std::uint64_t> tbl; // tbl[pack(x)] = pack(f(x))
};

/// Reads an (m,2,1)-shaped code as the graph {(x | f(x))}; requires the
/// first columns to exhaust GF(q)^m.
VecMap mrd_to_map(const MatrixCode& c);

MatrixCode map_to_mrd(const VecMap& fm);

/// f and x -> f(x)+x both bijective.
bool is_complete_mapping(const VecMap& fm);

/// f and x -> f(x)-x both bijective.
bool is_orthomorphism(const VecMap& fm);

} // namespace mrdlab
