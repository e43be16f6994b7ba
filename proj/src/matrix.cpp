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

#include "mrdlab/matrix.hpp"

namespace mrdlab {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) raise(Errc::FieldMismatch, "operands over different fields");
}

} // namespace

Mat Mat::from_rows(const Field& f, std::initializer_list<std::initializer_list<unsigned>> rows) {
    int m = int(rows.size());
    int n = m ? int(rows.begin()->size()) : 0;
    Mat r(f, m, n);
    int i = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != n) raise(Errc::ShapeMismatch, "ragged rows");
        int j = 0;
        for (unsigned v : row) {
            if (!f.valid(felem(v))) raise(Errc::ParameterOutOfRange, "entry out of field");
            r.set(i, j++, felem(v));
        }
        ++i;
    }
    return r;
}

Mat Mat::identity(const Field& f, int n) {
    Mat r(f, n, n);
    for (int i = 0; i < n; ++i) r.set(i, i, 1);
    return r;
}

std::uint64_t Mat::pack() const {
    std::uint64_t r = 0;
    for (felem v : e_) r = r * f_.q() + v;
    return r;
}

Mat Mat::unpack(const Field& f, int m, int n, std::uint64_t idx) {
    Mat r(f, m, n);
    for (size_t i = r.e_.size(); i-- > 0;) {
        r.e_[i] = felem(idx % f.q());
        idx /= f.q();
    }
    return r;
}

Mat Mat::row(int i) const {
    Mat r(f_, 1, n_);
    for (int j = 0; j < n_; ++j) r.set(0, j, at(i, j));
    return r;
}

Mat Mat::col_slice(int c0, int c1) const {
    if (c0 < 0 || c1 > n_ || c0 >= c1) raise(Errc::ParameterOutOfRange, "column slice");
    Mat r(f_, m_, c1 - c0);
    for (int i = 0; i < m_; ++i)
        for (int j = c0; j < c1; ++j) r.set(i, j - c0, at(i, j));
    return r;
}

bool Mat::is_zero() const {
    for (felem v : e_)
        if (v) return false;
    return true;
}

std::strong_ordering Mat::operator<=>(const Mat& o) const {
    if (auto c = m_ <=> o.m_; c != 0) return c;
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (size_t i = 0; i < e_.size(); ++i)
        if (auto c = e_[i] <=> o.e_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Mat matmul(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) raise(Errc::ShapeMismatch, "matmul inner dimensions");
    const Field& f = a.field();
    Mat r(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            felem v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.set(i, j, f.add(r.at(i, j), f.mul(v, b.at(k, j))));
        }
    return r;
}

Mat matadd(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) raise(Errc::ShapeMismatch, "matadd shapes");
    Mat r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
    return r;
}

Mat matsub(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) raise(Errc::ShapeMismatch, "matsub shapes");
    Mat r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().sub(a.at(i, j), b.at(i, j)));
    return r;
}

Mat scalar_mul(felem c, const Mat& a) {
    Mat r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().mul(c, a.at(i, j)));
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
    return r;
}

int rank_inplace(felem* a, int m, int n, const Field& f) {
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // pivot: lowest-index nonzero row at or below r
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a[size_t(i) * n + c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < n; ++j) std::swap(a[size_t(piv) * n + j], a[size_t(r) * n + j]);
        felem inv = f.inv(a[size_t(r) * n + c]);
        for (int i = r + 1; i < m; ++i) {
            felem factor = f.mul(a[size_t(i) * n + c], inv);
            if (!factor) continue;
            for (int j = c; j < n; ++j)
                a[size_t(i) * n + j] = f.sub(a[size_t(i) * n + j], f.mul(factor, a[size_t(r) * n + j]));
        }
        ++r;
    }
    return r;
}

int rank(const Mat& a) {
    std::vector<felem> buf = a.entries();
    int r = rank_inplace(buf.data(), a.rows(), a.cols(), a.field());
    if (r > std::min(a.rows(), a.cols())) raise(Errc::Internal, "rank exceeds min(m,n)");
    return r;
}

Mat rref(const Mat& a, int* rank_out) {
    Mat w = a;
    const Field& f = a.field();
    int m = a.rows(), n = a.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < n; ++j) {
                felem t = w.at(piv, j);
                w.set(piv, j, w.at(r, j));
                w.set(r, j, t);
            }
        felem inv = f.inv(w.at(r, c));
        for (int j = 0; j < n; ++j) w.set(r, j, f.mul(inv, w.at(r, j)));
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            felem factor = w.at(i, c);
            if (!factor) continue;
            for (int j = 0; j < n; ++j) w.set(i, j, f.sub(w.at(i, j), f.mul(factor, w.at(r, j))));
        }
        ++r;
    }
    if (rank_out) *rank_out = r;
    return w;
}

std::vector<Mat> kernel(const Mat& a, Side side) {
    if (side == Side::Left) {
        auto base = kernel(transpose(a), Side::Right);
        return base;
    }
    // right kernel: vectors v (as 1 x n) with A v^T = 0
    const Field& f = a.field();
    int n = a.cols();
    int r = 0;
    Mat e = rref(a, &r);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(size_t(n), false);
    for (int i = 0, c = 0; i < r; ++i) {
        while (c < n && !e.at(i, c)) ++c;
        pivot_col.push_back(c);
        is_pivot[size_t(c)] = true;
    }
    std::vector<Mat> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[size_t(c)]) continue;
        Mat v(f, 1, n);
        v.set(0, c, 1);
        for (int i = 0; i < r; ++i) v.set(0, pivot_col[size_t(i)], f.neg(e.at(i, c)));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint64_t space_size_guarded(const Field& f, int m, int n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < m * n; ++i) {
        if (total > cap / f.q() + 1) raise(Errc::EnumerationTooLarge, "q^{mn} exceeds cap");
        total *= f.q();
        if (total > cap) raise(Errc::EnumerationTooLarge, "q^{mn} exceeds cap");
    }
    return total;
}

void for_each_mat(const Field& f, int m, int n, const std::function<void(const Mat&)>& fn,
                  std::uint64_t cap) {
    space_size_guarded(f, m, n, cap);
    Mat cur(f, m, n);
    auto& e = cur.entries();
    const unsigned q = f.q();
    for (;;) {
        fn(cur);
        // odometer with the last entry least significant
        size_t i = e.size();
        while (i-- > 0) {
            if (++e[i] < q) break;
            e[i] = 0;
            if (i == 0) return;
        }
    }
}

std::vector<Mat> enumerate_mats(const Field& f, int m, int n, std::uint64_t cap) {
    std::vector<Mat> r;
    for_each_mat(f, m, n, [&](const Mat& a) { r.push_back(a); }, cap);
    return r;
}

void for_each_full_rank(const Field& f, int m, int n, const std::function<void(const Mat&)>& fn,
                        std::uint64_t cap) {
    const int k = std::min(m, n);
    std::vector<felem> buf(size_t(m) * n);
    for_each_mat(f, m, n, [&](const Mat& a) {
        buf = a.entries();
        if (rank_inplace(buf.data(), m, n, f) == k) fn(a);
    }, cap);
}

std::vector<Mat> enumerate_full_rank(const Field& f, int m, int n, std::uint64_t cap) {
    std::vector<Mat> r;
    for_each_full_rank(f, m, n, [&](const Mat& a) { r.push_back(a); }, cap);
    return r;
}

} // namespace mrdlab
