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

#include "mrdlab/geometry.hpp"

#include <algorithm>
#include <set>

namespace mrdlab {

PointSet::PointSet(Field f, int m, int n, std::vector<Mat> pts)
    : f_(std::move(f)), m_(m), n_(n), pts_(std::move(pts)) {
    for (const Mat& p : pts_) {
        if (p.rows() != m_ || p.cols() != n_) raise(Errc::ShapeMismatch, "point shape");
        if (p.field() != f_) raise(Errc::FieldMismatch, "point field");
    }
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const Mat& a) const {
    return std::binary_search(pts_.begin(), pts_.end(), a);
}

std::uint64_t FlatDescriptor::size() const {
    std::uint64_t s = 1;
    const unsigned q = rep.field().q();
    const int other = side == Side::Right ? rep.cols() : rep.rows();
    for (int i = 0; i < r * other; ++i) s *= q;
    return s;
}

namespace {

// the submodule {X : colspace(X) ⊆ V} (right) or {X : rowspace(X) ⊆ V}
// (left), as sorted packed indices
std::vector<std::uint64_t> submodule_points(const Field& f, int m, int n, Side side, const Mat& v,
                                            std::uint64_t cap) {
    std::vector<std::uint64_t> pts;
    if (v.rows() == 0) {
        pts.push_back(0);
        return pts;
    }
    Mat vt = transpose(v);
    const int free_cols = side == Side::Right ? n : m;
    for_each_mat(f, v.rows(), free_cols, [&](const Mat& w) {
        Mat x = matmul(vt, w);
        if (side == Side::Left) x = transpose(x);
        pts.push_back(x.pack());
    }, cap);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

Int flat_count(int m, int n, unsigned q, Side side, int r) {
    const int a = side == Side::Right ? m : n;
    const int b = side == Side::Right ? n : m;
    if (r < 0 || r > a) raise(Errc::ParameterOutOfRange, "flat dimension");
    return gaussian_binomial(a, r, q) * ipow(Int(q), unsigned((a - r) * b));
}

std::vector<FlatDescriptor> enumerate_flats(const Field& f, int m, int n, Side side, int r,
                                            std::uint64_t cap) {
    const int amb = side == Side::Right ? m : n;
    if (r < 0 || r > amb) raise(Errc::ParameterOutOfRange, "flat dimension");
    Int count = flat_count(m, n, f.q(), side, r);
    if (count > Int(cap)) raise(Errc::EnumerationTooLarge, "flat count exceeds cap");

    const std::uint64_t total = space_size_guarded(f, m, n, cap);
    std::vector<FlatDescriptor> out;
    std::vector<bool> seen(total);
    for (const Mat& v : subspaces(f, amb, r)) {
        auto module_pts = submodule_points(f, m, n, side, v, cap);
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint64_t p = 0; p < total; ++p) {
            if (seen[p]) continue;
            // p is the canonical minimum of its coset
            for (std::uint64_t mp : module_pts) {
                Mat x = matadd(Mat::unpack(f, m, n, p), Mat::unpack(f, m, n, mp));
                seen[x.pack()] = true;
            }
            out.push_back(FlatDescriptor{side, Mat::unpack(f, m, n, p), v, r});
        }
    }
    return out;
}

std::vector<Mat> flat_points(const FlatDescriptor& fd, int m, int n, std::uint64_t cap) {
    const Field& f = fd.rep.field();
    std::vector<Mat> pts;
    for (std::uint64_t mp : submodule_points(f, m, n, fd.side, fd.direction, cap))
        pts.push_back(matadd(fd.rep, Mat::unpack(f, m, n, mp)));
    std::sort(pts.begin(), pts.end());
    return pts;
}

DenseResult is_k_dense(const PointSet& s, int k, std::uint64_t cap) {
    const Field& f = s.field();
    const int m = s.m(), n = s.n();
    if (k < 1 || k > std::min(m, n)) raise(Errc::ParameterOutOfRange, "is_k_dense k");

    // blocking criterion, which also provides the canonical witness
    DenseResult res;
    res.dense = true;
    for (const FlatDescriptor& fd : enumerate_flats(f, m, n, Side::Right, m - k, cap)) {
        bool met = false;
        for (const Mat& p : flat_points(fd, m, n, cap))
            if (s.contains(p)) {
                met = true;
                break;
            }
        if (!met) {
            res.dense = false;
            res.unmet = fd;
            break;
        }
    }

    // definition criterion: M S = GF(q)^{k x n} for every full-rank M
    const std::uint64_t want = space_size_guarded(f, k, n, cap);
    bool by_def = true;
    for_each_full_rank(f, k, m, [&](const Mat& M) {
        if (!by_def) return;
        std::set<std::uint64_t> image;
        for (const Mat& a : s.points()) {
            image.insert(matmul(M, a).pack());
            if (image.size() == want) return;
        }
        if (image.size() != want) by_def = false;
    }, cap);
    if (by_def != res.dense) raise(Errc::Internal, "dense-set criteria disagree");
    return res;
}

std::map<std::uint64_t, std::uint64_t> intersection_pattern(const PointSet& s, int r, Side side,
                                                            std::uint64_t cap) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const FlatDescriptor& fd : enumerate_flats(s.field(), s.m(), s.n(), side, r, cap)) {
        std::uint64_t hits = 0;
        for (const Mat& p : flat_points(fd, s.m(), s.n(), cap))
            if (s.contains(p)) ++hits;
        ++hist[hits];
    }
    return hist;
}

DesignResult is_design(const PointSet& s, int k, std::uint64_t cap) {
    if (k < 1 || k > std::min(s.m(), s.n())) raise(Errc::ParameterOutOfRange, "is_design k");
    auto hist = intersection_pattern(s, s.m() - k, Side::Right, cap);
    DesignResult res;
    res.design = hist.size() == 1;
    if (res.design) {
        res.lambda = Int(hist.begin()->first);
        Int expect = Int(s.size());
        Int denom = ipow(Int(s.field().q()), unsigned(k * s.n()));
        if (res.lambda * denom != expect)
            raise(Errc::Internal, "design index inconsistent with |S| q^{-kn}");
    }
    return res;
}

bool design_duality_check(const PointSet& s, int k, std::uint64_t cap) {
    DesignResult right = is_design(s, k, cap);
    if (!right.design) raise(Errc::NotADesign, "not a design w.r.t. right (m-k)-flats");
    // λ' = λ q^{k(n-m)} on (n-k)-flats of LAG
    Rational lambda_left = Rational(right.lambda) *
                           Rational(ipow(Int(s.field().q()), unsigned(k * s.n())),
                                    ipow(Int(s.field().q()), unsigned(k * s.m())));
    auto hist = intersection_pattern(s, s.n() - k, Side::Left, cap);
    return hist.size() == 1 && Rational(Int(hist.begin()->first)) == lambda_left;
}

std::vector<felem> ext_coords(const Mat& x, const Field& ext) {
    const Field& base = x.field();
    if (base.e() != 1 || ext.p() != base.p() || int(ext.e()) != x.rows())
        raise(Errc::BasisMismatch, "extension field incompatible with the polynomial basis");
    std::vector<felem> out(size_t(x.cols()));
    for (int j = 0; j < x.cols(); ++j) {
        std::uint64_t idx = 0, mult = 1;
        for (int i = 0; i < x.rows(); ++i) {
            idx += std::uint64_t(x.at(i, j)) * mult;
            mult *= base.p();
        }
        out[size_t(j)] = felem(idx);
    }
    return out;
}

Mat mat_from_ext_coords(const std::vector<felem>& coords, const Field& base, const Field& ext) {
    if (base.e() != 1 || ext.p() != base.p())
        raise(Errc::BasisMismatch, "extension field incompatible with the polynomial basis");
    Mat x(base, int(ext.e()), int(coords.size()));
    for (size_t j = 0; j < coords.size(); ++j) {
        std::uint64_t idx = coords[j];
        for (unsigned i = 0; i < ext.e(); ++i) {
            x.set(int(i), int(j), felem(idx % base.p()));
            idx /= base.p();
        }
    }
    return x;
}

PointSet build_22set(const Field& gf8) {
    if (gf8.p() != 2 || gf8.e() != 3) raise(Errc::BasisMismatch, "build_22set needs GF(8)");
    Field f2 = Field::make(2, 1);
    felem alpha = felem(2); // the class of x
    std::vector<Mat> pts;
    for (unsigned i : {1u, 2u, 4u}) {
        felem ai = gf8.pow(alpha, i);
        for (felem x : gf8.elements())
            pts.push_back(mat_from_ext_coords({x, gf8.mul(x, ai)}, f2, gf8));
    }
    PointSet s(f2, 3, 2, std::move(pts));
    if (s.size() != 22) raise(Errc::Internal, "22-set construction produced wrong size");
    return s;
}

CollinearityResult collinearity(const Mat& a, const Mat& b) {
    if (a == b) raise(Errc::EqualPoints, "collinearity of equal points");
    int r = rank(matsub(a, b));
    return CollinearityResult{r == 1, r == 2};
}

} // namespace mrdlab
