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

#include "mrdlab/homweight.hpp"

#include <algorithm>

namespace mrdlab {

Rational hom_weight_by_rank(Side side, int m, int n, unsigned q, int r) {
    if (r < 0 || r > std::min(m, n)) raise(Errc::ParameterOutOfRange, "rank out of range");
    const int d = side == Side::Left ? m : n;
    Int den = 1;
    for (int i = 0; i < r; ++i) den *= ipow(Int(q), unsigned(d - i)) - 1;
    Rational w = 1;
    w -= Rational(r % 2 ? Int(-1) : Int(1), den);
    return w;
}

Rational hom_weight(Side side, const Mat& x) {
    return hom_weight_by_rank(side, x.rows(), x.cols(), x.field().q(), rank(x));
}

namespace {

Rational total_weight_closed(Side side, int m, int n, unsigned q) {
    const int a = side == Side::Left ? m : n;
    const int b = side == Side::Left ? n : m;
    Rational c = Rational(ipow(Int(q), unsigned(m * n)));
    Int corr = ipow(Int(q), unsigned(a * (a + 1) / 2)) * gaussian_binomial(b - 1, a, q);
    if (a % 2)
        c += corr;
    else
        c -= corr;
    return c;
}

} // namespace

Rational brute_total_weight(Side side, const Field& f, int m, int n, std::uint64_t cap) {
    Rational sum = 0;
    for_each_mat(f, m, n, [&](const Mat& x) { sum += hom_weight(side, x); }, cap);
    return sum;
}

Rational total_weight(Side side, int m, int n, unsigned q) {
    Rational c = total_weight_closed(side, m, n, q);
    // cross-check against the brute sum where the space is small enough
    std::uint64_t space = 1;
    bool small = true;
    for (int i = 0; i < m * n; ++i) {
        space *= q;
        if (space > (std::uint64_t(1) << 16)) {
            small = false;
            break;
        }
    }
    if (small) {
        Field f = Field::of_order(q);
        if (brute_total_weight(side, f, m, n) != c)
            raise(Errc::Internal, "total weight closed form disagrees with brute sum");
    }
    return c;
}

MatrixDistribution normalized_hom_distribution(Side side, const Field& f, int m, int n,
                                               std::uint64_t cap) {
    const unsigned q = f.q();
    Rational c = total_weight(side, m, n, q);
    std::vector<Rational> by_rank(size_t(std::min(m, n)) + 1);
    for (int r = 0; r <= std::min(m, n); ++r)
        by_rank[size_t(r)] = hom_weight_by_rank(side, m, n, q, r) / c;
    std::map<std::uint64_t, Rational> w;
    for_each_mat(f, m, n, [&](const Mat& x) {
        int r = rank(x);
        if (r > 0) w[x.pack()] = by_rank[size_t(r)];
    }, cap);
    return MatrixDistribution(f, m, n, std::move(w));
}

std::vector<CosetSum> coset_weight_sums(const MatrixDistribution& d, Side module_side,
                                        const Mat& direction, std::uint64_t cap) {
    const Field& f = d.field();
    const int m = d.m(), n = d.n();
    const int amb = module_side == Side::Right ? m : n;
    if (direction.cols() != amb)
        raise(Errc::ShapeMismatch, "direction subspace lives in the wrong space");

    Mat v = subspace_canonical(direction);
    const int r = v.rows();

    // submodule points: V^T W (right) resp. (V^T W)^T = W^T V (left)
    std::vector<std::uint64_t> module_pts;
    Mat vt = transpose(v);
    if (r == 0) {
        module_pts.push_back(0);
    } else {
        const int free_cols = module_side == Side::Right ? n : m;
        for_each_mat(f, r, free_cols, [&](const Mat& wfree) {
            Mat x = matmul(vt, wfree);
            if (module_side == Side::Left) x = transpose(x);
            module_pts.push_back(x.pack());
        }, cap);
        std::sort(module_pts.begin(), module_pts.end());
        module_pts.erase(std::unique(module_pts.begin(), module_pts.end()), module_pts.end());
    }

    const std::uint64_t total = space_size_guarded(f, m, n, cap);
    std::vector<bool> seen(total, false);
    std::vector<CosetSum> out;
    for (std::uint64_t p = 0; p < total; ++p) {
        if (seen[p]) continue;
        Mat rep = Mat::unpack(f, m, n, p);
        CosetSum cs{rep, Rational(0), {}};
        for (std::uint64_t mp : module_pts) {
            Mat x = matadd(rep, Mat::unpack(f, m, n, mp));
            std::uint64_t key = x.pack();
            seen[key] = true;
            cs.sum += d.prob(x);
            ++cs.rank_census[rank(x)];
        }
        out.push_back(std::move(cs));
    }
    return out;
}

bool submodule_cyclic(Side module_side, int m, int n, int dim_w) {
    return dim_w <= (module_side == Side::Left ? m : n);
}

} // namespace mrdlab
