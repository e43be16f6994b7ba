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

/// A set of points (equal-shape matrices), distinct and canonically sorted.
class PointSet {
  public:
    PointSet(Field f, int m, int n, std::vector<Mat> pts);

    const Field& field() const { return f_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Mat>& points() const { return pts_; }
    size_t size() const { return pts_.size(); }
    bool contains(const Mat& a) const;

  private:
    Field f_;
    int m_, n_;
    std::vector<Mat> pts_;
};

/// An r-flat of RAG(m,n,q) (side = Right) or LAG(m,n,q) (side = Left):
/// the coset rep + {X : colspace(X) ⊆ V} for right flats (V ⊆ GF(q)^m),
/// rep + {X : rowspace(X) ⊆ V} for left flats (V ⊆ GF(q)^n). The rep is
/// the canonical minimum of the coset.
struct FlatDescriptor {
    Side side;
    Mat rep;
    Mat direction; // canonical RREF basis of V, r x m (right) or r x n (left)
    int r;

    std::uint64_t size() const;
};

/// All r-flats, each exactly once: directions in canonical subspace order,
/// and for each direction the flat through 0 first, then the other cosets
/// ordered by canonical representative.
std::vector<FlatDescriptor> enumerate_flats(const Field& f, int m, int n, Side side, int r,
                                            std::uint64_t cap = kDefaultEnumCap);

/// Number of r-flats: [m choose r]_q q^{(m-r)n} for right flats.
Int flat_count(int m, int n, unsigned q, Side side, int r);

/// The points of a flat, canonically sorted.
std::vector<Mat> flat_points(const FlatDescriptor& fd, int m, int n,
                             std::uint64_t cap = kDefaultEnumCap);

struct DenseResult {
    bool dense = false;
    std::optional<FlatDescriptor> unmet; // canonically first unmet flat
};

/// k-denseness of S ⊆ GF(q)^{m x n}, checked both as M S = GF(q)^{k x n}
/// for every full-rank k x m matrix M and as the blocking-set property
/// with respect to (m-k)-flats of RAG(m,n,q); the two must agree.
DenseResult is_k_dense(const PointSet& s, int k, std::uint64_t cap = kDefaultEnumCap);

/// Histogram of |S ∩ F| over all r-flats of the given side.
std::map<std::uint64_t, std::uint64_t> intersection_pattern(const PointSet& s, int r, Side side,
                                                            std::uint64_t cap = kDefaultEnumCap);

struct DesignResult {
    bool design = false;
    Int lambda = 0;
};

/// S meets every (m-k)-flat of RAG in the same number λ of points;
/// λ must equal |S| q^{-kn} when it does.
DesignResult is_design(const PointSet& s, int k, std::uint64_t cap = kDefaultEnumCap);

/// For a k-design S w.r.t. right (m-k)-flats, verifies that S meets every
/// (n-k)-flat of LAG in exactly λ q^{k(n-m)} points. Throws NotADesign
/// when S is not a design to begin with.
bool design_duality_check(const PointSet& s, int k, std::uint64_t cap = kDefaultEnumCap);

/// Columns of X as elements of GF(q^m) over the polynomial basis; the
/// extension field must satisfy p = X's characteristic, e = m, and X's
/// field must be the prime field.
std::vector<felem> ext_coords(const Mat& x, const Field& ext);

/// Inverse of ext_coords.
Mat mat_from_ext_coords(const std::vector<felem>& coords, const Field& base, const Field& ext);

/// The 22-point line-blocking set of GF(2)^{3 x 2}: the union of the
/// extension-field lines GF(8)(1, a^i) for i in {1, 2, 4}.
PointSet build_22set(const Field& gf8);

struct CollinearityResult {
    bool same_line = false;       // rank(A - B) == 1
    bool same_plane_only = false; // rank(A - B) == 2
};

CollinearityResult collinearity(const Mat& a, const Mat& b);

} // namespace mrdlab
