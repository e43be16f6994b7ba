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

#include "mrdlab/counting.hpp"

#include <algorithm>
#include <set>

namespace mrdlab {

Int gaussian_binomial(int n, int m, unsigned q) {
    if (m < 0 || m > n) return 0;
    Int num = 1, den = 1;
    for (int i = n - m + 1; i <= n; ++i) num *= ipow(Int(q), unsigned(i)) - 1;
    for (int i = 1; i <= m; ++i) den *= ipow(Int(q), unsigned(i)) - 1;
    return num / den;
}

Int anzahl_intersecting_subspaces(int k, int l, int m, int n, unsigned q) {
    if (k < 0 || l < 0 || m < 0 || n < 0 || k > std::min(l, m) || l + m - k > n)
        raise(Errc::ParameterOutOfRange, "anzahl_intersecting_subspaces parameters");
    return ipow(Int(q), unsigned((l - k) * (m - k))) * gaussian_binomial(m, k, q) *
           gaussian_binomial(n - m, l - k, q);
}

Int anzahl_rank_k_products(int k, int l, int m, int n, unsigned q) {
    if (k < 0 || !(k <= l && l <= m && m <= n) || k + n < l + m)
        raise(Errc::ParameterOutOfRange, "anzahl_rank_k_products parameters");
    Int r = ipow(Int(q), unsigned(k * (n - l - m + k))) * gaussian_binomial(l, k, q) *
            gaussian_binomial(n - l, m - k, q);
    for (int i = 0; i < m; ++i) r *= ipow(Int(q), unsigned(m)) - ipow(Int(q), unsigned(i));
    return r;
}

Int mrd_orbit_count(int m, int n, unsigned q) {
    if (!(m >= n && n >= 1)) raise(Errc::ParameterOutOfRange, "mrd_orbit_count requires m >= n >= 1");
    Int r = 1;
    for (int i = 1; i <= n - 1; ++i) r *= ipow(Int(q), unsigned(m)) - ipow(Int(q), unsigned(i));
    return r;
}

Int rank_count(int m, int n, unsigned q, int r) {
    if (r < 0 || r > std::min(m, n)) return 0;
    Int c = gaussian_binomial(m, r, q) * gaussian_binomial(n, r, q);
    for (int i = 0; i < r; ++i) c *= ipow(Int(q), unsigned(r)) - ipow(Int(q), unsigned(i));
    return c;
}

Int full_rank_count(int m, int n, unsigned q) {
    int mn = std::min(m, n), mx = std::max(m, n);
    Int c = 1;
    for (int i = 0; i < mn; ++i) c *= ipow(Int(q), unsigned(mx)) - ipow(Int(q), unsigned(i));
    return c;
}

SubspaceIterator::SubspaceIterator(Field f, int ambient, int dim)
    : f_(std::move(f)), n_(ambient), m_(dim), done_(false) {
    if (dim < 0 || dim > ambient) raise(Errc::ParameterOutOfRange, "subspace dimension");
    pivots_.resize(size_t(m_));
    for (int i = 0; i < m_; ++i) pivots_[size_t(i)] = i;
    reset_free();
}

void SubspaceIterator::reset_free() {
    free_pos_.clear();
    std::vector<bool> is_pivot(size_t(n_), false);
    for (int c : pivots_) is_pivot[size_t(c)] = true;
    for (int i = 0; i < m_; ++i)
        for (int j = pivots_[size_t(i)] + 1; j < n_; ++j)
            if (!is_pivot[size_t(j)]) free_pos_.emplace_back(i, j);
    free_val_.assign(free_pos_.size(), 0);
}

bool SubspaceIterator::advance_pivots() {
    // next m-combination of {0..n-1} in lexicographic order
    int i = m_ - 1;
    while (i >= 0 && pivots_[size_t(i)] == n_ - m_ + i) --i;
    if (i < 0) return false;
    ++pivots_[size_t(i)];
    for (int j = i + 1; j < m_; ++j) pivots_[size_t(j)] = pivots_[size_t(j - 1)] + 1;
    return true;
}

std::optional<Mat> SubspaceIterator::next() {
    if (done_) return std::nullopt;
    Mat basis(f_, m_, n_);
    for (int i = 0; i < m_; ++i) basis.set(i, pivots_[size_t(i)], 1);
    for (size_t t = 0; t < free_pos_.size(); ++t)
        basis.set(free_pos_[t].first, free_pos_[t].second, free_val_[t]);

    // advance: free entries as an odometer (last position fastest), then pivots
    size_t t = free_val_.size();
    bool carried = true;
    while (t-- > 0) {
        if (++free_val_[t] < f_.q()) {
            carried = false;
            break;
        }
        free_val_[t] = 0;
    }
    if (carried) {
        if (m_ == 0 || !advance_pivots())
            done_ = true;
        else
            reset_free();
    }
    return basis;
}

std::vector<Mat> subspaces(const Field& f, int ambient, int dim) {
    SubspaceIterator it(f, ambient, dim);
    std::vector<Mat> r;
    while (auto b = it.next()) r.push_back(std::move(*b));
    return r;
}

Mat subspace_canonical(const Mat& basis) {
    int r = 0;
    Mat e = rref(basis, &r);
    Mat canon(basis.field(), r, basis.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < basis.cols(); ++j) canon.set(i, j, e.at(i, j));
    return canon;
}

Int brute_count_intersecting_subspaces(int k, int l, int m, int n, const Field& f) {
    // fixed M = span(e_1, ..., e_m)
    Int count = 0;
    SubspaceIterator it(f, n, l);
    while (auto L = it.next()) {
        // dim(L ∩ M) = l + m - dim(L + M)
        Mat stacked(f, l + m, n);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < n; ++j) stacked.set(i, j, L->at(i, j));
        for (int i = 0; i < m; ++i) stacked.set(l + i, i, 1);
        int inter = l + m - rank(stacked);
        if (inter == k) ++count;
    }
    return count;
}

namespace {

// Incremental column-space rank: prefix_ranks[j] = rank of the first j+1
// columns. Returns the full rank. Used by the matrix-enumeration oracle.
struct PrefixRank {
    const Field& f;
    int m;
    std::vector<felem> basis; // echelon basis rows, each length m
    std::vector<int> lead;

    explicit PrefixRank(const Field& field, int rows) : f(field), m(rows) {}

    void reset() {
        basis.clear();
        lead.clear();
    }

    // reduce column vector v (length m) against the basis; true if it extends
    bool insert(std::vector<felem>& v) {
        for (size_t b = 0; b < lead.size(); ++b) {
            felem c = v[size_t(lead[b])];
            if (!c) continue;
            const felem* row = &basis[b * size_t(m)];
            for (int i = 0; i < m; ++i) v[size_t(i)] = f.sub(v[size_t(i)], f.mul(c, row[i]));
        }
        int pos = -1;
        for (int i = 0; i < m; ++i)
            if (v[size_t(i)]) {
                pos = i;
                break;
            }
        if (pos < 0) return false;
        felem inv = f.inv(v[size_t(pos)]);
        for (int i = 0; i < m; ++i) v[size_t(i)] = f.mul(inv, v[size_t(i)]);
        basis.insert(basis.end(), v.begin(), v.end());
        lead.push_back(pos);
        return true;
    }
};

} // namespace

Int brute_count_rank_k_products(int k, int l, int m, int n, const Field& f, std::uint64_t cap) {
    if (k < 0 || !(k <= l && l <= m && m <= n) || k + n < l + m)
        raise(Errc::ParameterOutOfRange, "brute_count_rank_k_products parameters");
    space_size_guarded(f, m, n, cap);
    // fixed N = identity block of rank l, so M N^T keeps the first l columns
    // of M and rank(M N^T) = rank of those columns
    const unsigned q = f.q();
    std::vector<felem> e(size_t(m) * n, 0);
    std::vector<felem> col(size_t(m), 0);
    PrefixRank pr(f, m);
    Int count = 0;
    for (;;) {
        pr.reset();
        int rank_l = 0, rank_full = 0;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < m; ++i) col[size_t(i)] = e[size_t(i) * n + j];
            if (pr.insert(col)) ++rank_full;
            if (j == l - 1) rank_l = rank_full;
        }
        if (l == 0) rank_l = 0;
        if (rank_full == m && rank_l == k) ++count;
        size_t i = e.size();
        while (i-- > 0) {
            if (++e[i] < q) break;
            e[i] = 0;
            if (i == 0) return count;
        }
    }
}

std::vector<std::vector<Int>> brute_rank_product_profile(int m, int n, const Field& f,
                                                         std::uint64_t cap) {
    if (m > n) raise(Errc::ParameterOutOfRange, "profile requires m <= n");
    space_size_guarded(f, m, n, cap);
    std::vector<std::vector<Int>> hist(size_t(n) + 1, std::vector<Int>(size_t(m) + 1, 0));
    const unsigned q = f.q();
    std::vector<felem> e(size_t(m) * n, 0);
    std::vector<felem> col(size_t(m), 0);
    std::vector<int> prefix(size_t(n) + 1, 0);
    PrefixRank pr(f, m);
    for (;;) {
        pr.reset();
        int r = 0;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < m; ++i) col[size_t(i)] = e[size_t(i) * n + j];
            if (pr.insert(col)) ++r;
            prefix[size_t(j) + 1] = r;
        }
        if (prefix[size_t(n)] == m)
            for (int l = 0; l <= n; ++l) ++hist[size_t(l)][size_t(prefix[size_t(l)])];
        size_t i = e.size();
        while (i-- > 0) {
            if (++e[i] < q) break;
            e[i] = 0;
            if (i == 0) return hist;
        }
    }
}

Int brute_count_rank(int m, int n, const Field& f, int r, std::uint64_t cap) {
    space_size_guarded(f, m, n, cap);
    const unsigned q = f.q();
    std::vector<felem> e(size_t(m) * n, 0);
    std::vector<felem> buf(e.size());
    Int count = 0;
    for (;;) {
        buf = e;
        if (rank_inplace(buf.data(), m, n, f) == r) ++count;
        size_t i = e.size();
        while (i-- > 0) {
            if (++e[i] < q) break;
            e[i] = 0;
            if (i == 0) return count;
        }
    }
}

Int brute_count_full_rank(int m, int n, const Field& f, std::uint64_t cap) {
    return brute_count_rank(m, n, f, std::min(m, n), cap);
}

Int brute_count_subspaces(int ambient, int dim, const Field& f, std::uint64_t cap) {
    // distinct row spaces over all dim x ambient matrices, by canonical RREF
    std::set<std::uint64_t> seen;
    if (dim == 0) return 1;
    for_each_mat(f, dim, ambient, [&](const Mat& a) {
        int r = 0;
        Mat e = rref(a, &r);
        if (r == dim) seen.insert(e.pack());
    }, cap);
    return Int(seen.size());
}

Int brute_mrd_orbit_count(int m, int n, const Field& f, std::uint64_t cap) {
    if (!(m >= n && n >= 1)) raise(Errc::ParameterOutOfRange, "brute_mrd_orbit_count");
    // multiplicative group of the matrix subfield generated by the
    // multiplication matrix of GF(q^m) over GF(q)
    ExtField ext(f, unsigned(m));
    Mat gen(f, m, m);
    for (int i = 0; i < m; ++i) {
        ExtField::Elem bi = ext.zero();
        bi[size_t(i)] = 1;
        ExtField::Elem prod = ext.mul(bi, ext.gen());
        for (int j = 0; j < m; ++j) gen.set(i, j, prod[size_t(j)]);
    }
    std::vector<Mat> group;
    Mat acc = Mat::identity(f, m);
    std::uint64_t ord = ext.order() - 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
        group.push_back(acc);
        acc = matmul(acc, gen);
    }
    std::set<std::uint64_t> orbit_reps;
    for_each_full_rank(f, m, n, [&](const Mat& x) {
        std::uint64_t best = ~std::uint64_t(0);
        for (const Mat& g : group) best = std::min(best, matmul(g, x).pack());
        orbit_reps.insert(best);
    }, cap);
    return Int(orbit_reps.size());
}

} // namespace mrdlab
