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

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "mrdlab/gf.hpp"

namespace mrdlab {

enum class Side { Left, Right };

/// Default guard for exhaustive enumerations (number of states).
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

/// Immutable-by-convention m x n matrix over a Field, entries row-major.
/// The canonical matrix order used everywhere for determinism is the
/// lexicographic order on the row-major entry sequence, equivalently the
/// numeric order of pack().
class Mat {
  public:
    /// Zero matrix. Zero-row (or zero-column) matrices are legal; they
    /// represent empty bases and 0-dimensional flat directions.
    Mat(Field f, int m, int n)
        : f_(std::move(f)), m_(m), n_(n), e_(size_t(m) * size_t(n), 0) {
        if (m < 0 || n < 0) raise(Errc::ParameterOutOfRange, "matrix shape");
    }

    static Mat from_rows(const Field& f, std::initializer_list<std::initializer_list<unsigned>> rows);
    static Mat identity(const Field& f, int n);

    int rows() const { return m_; }
    int cols() const { return n_; }
    const Field& field() const { return f_; }

    felem at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    void set(int i, int j, felem v) { e_[size_t(i) * n_ + j] = v; }

    const std::vector<felem>& entries() const { return e_; }
    std::vector<felem>& entries() { return e_; }

    /// Row-major base-q packing with the first entry most significant;
    /// numeric order of pack() equals the canonical matrix order.
    std::uint64_t pack() const;
    static Mat unpack(const Field& f, int m, int n, std::uint64_t idx);

    Mat row(int i) const;
    Mat col_slice(int c0, int c1) const; // columns [c0, c1)

    bool is_zero() const;

    std::strong_ordering operator<=>(const Mat& o) const;
    bool operator==(const Mat& o) const { return (*this <=> o) == std::strong_ordering::equal; }

  private:
    Field f_;
    int m_, n_;
    std::vector<felem> e_;
};

Mat matmul(const Mat& a, const Mat& b);
Mat matadd(const Mat& a, const Mat& b);
Mat matsub(const Mat& a, const Mat& b);
Mat scalar_mul(felem c, const Mat& a);
Mat transpose(const Mat& a);

/// Rank over GF(q) by exact Gaussian elimination; the input is unchanged.
int rank(const Mat& a);

/// In-place elimination on a raw row-major buffer, for hot loops.
int rank_inplace(felem* a, int m, int n, const Field& f);

/// Reduced row echelon form; rank_out (optional) receives the rank.
Mat rref(const Mat& a, int* rank_out = nullptr);

/// Basis of the left/right null space, one basis vector per row of the
/// result; empty vector when the kernel is trivial. dim = m - rank (left)
/// or n - rank (right).
std::vector<Mat> kernel(const Mat& a, Side side);

/// Exhaustive enumeration of all matrices of a shape in canonical order,
/// guarded by `cap` (throws EnumerationTooLarge when q^{mn} > cap).
void for_each_mat(const Field& f, int m, int n, const std::function<void(const Mat&)>& fn,
                  std::uint64_t cap = kDefaultEnumCap);

std::vector<Mat> enumerate_mats(const Field& f, int m, int n, std::uint64_t cap = kDefaultEnumCap);

/// Enumeration restricted to full-rank matrices (rank = min(m,n)),
/// canonical order.
void for_each_full_rank(const Field& f, int m, int n, const std::function<void(const Mat&)>& fn,
                        std::uint64_t cap = kDefaultEnumCap);

std::vector<Mat> enumerate_full_rank(const Field& f, int m, int n,
                                     std::uint64_t cap = kDefaultEnumCap);

/// q^{mn} as a 64-bit count; throws EnumerationTooLarge beyond cap.
std::uint64_t space_size_guarded(const Field& f, int m, int n, std::uint64_t cap);

} // namespace mrdlab
