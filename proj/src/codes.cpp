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

#include "mrdlab/codes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mrdlab {

MatrixCode::MatrixCode(Field f, int m, int n, std::vector<Mat> words)
    : f_(std::move(f)), m_(m), n_(n), words_(std::move(words)) {
    for (const Mat& w : words_) {
        if (w.rows() != m_ || w.cols() != n_) raise(Errc::ShapeMismatch, "codeword shape");
        if (w.field() != f_) raise(Errc::FieldMismatch, "codeword field");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool MatrixCode::contains(const Mat& a) const {
    return std::binary_search(words_.begin(), words_.end(), a);
}

bool MatrixCode::is_linear() const {
    if (words_.empty()) return false;
    for (const Mat& a : words_)
        for (felem c : f_.elements())
            if (!contains(scalar_mul(c, a))) return false;
    for (const Mat& a : words_)
        for (const Mat& b : words_)
            if (!contains(matadd(a, b))) return false;
    return true;
}

int rank_distance(const MatrixCode& c) {
    if (c.size() < 2) raise(Errc::CodeTooSmall, "rank distance needs >= 2 codewords");
    int d = std::min(c.m(), c.n());
    const auto& w = c.words();
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j) d = std::min(d, rank(matsub(w[i], w[j])));
    if (c.is_linear()) {
        int dl = std::min(c.m(), c.n());
        for (const Mat& a : w)
            if (!a.is_zero()) dl = std::min(dl, rank(a));
        if (dl != d) raise(Errc::Internal, "linear rank-distance route disagrees with pair scan");
    }
    return d;
}

namespace {

// product-surjectivity criterion: for every full-rank B (k x m), the set
// B*code covers GF(q)^{k x n}; transposed when m > n
bool mrd_by_products(const MatrixCode& c, int k, std::uint64_t cap,
                     std::optional<std::pair<Mat, Mat>>* witness) {
    const Field& f = c.field();
    bool transposed = c.m() > c.n();
    const int m = transposed ? c.n() : c.m();
    const int n = transposed ? c.m() : c.n();
    std::vector<Mat> words;
    words.reserve(c.size());
    for (const Mat& w : c.words()) words.push_back(transposed ? transpose(w) : w);

    const std::uint64_t image_size = space_size_guarded(f, k, n, cap);
    bool ok = true;
    for_each_full_rank(f, k, m, [&](const Mat& b) {
        if (!ok) return;
        std::set<std::uint64_t> image;
        for (const Mat& w : words) {
            image.insert(matmul(b, w).pack());
            if (image.size() == image_size) return;
        }
        if (image.size() != image_size) {
            ok = false;
            // two words colliding under b, as the witness pair
            if (witness) {
                std::map<std::uint64_t, size_t> seen;
                for (size_t i = 0; i < words.size(); ++i) {
                    auto [it, fresh] = seen.emplace(matmul(b, words[i]).pack(), i);
                    if (!fresh) {
                        *witness = std::make_pair(c.words()[it->second], c.words()[i]);
                        break;
                    }
                }
            }
        }
    }, cap);
    return ok;
}

} // namespace

MrdReport is_mrd(const MatrixCode& c, int k, std::uint64_t cap) {
    const int mn = std::min(c.m(), c.n()), mx = std::max(c.m(), c.n());
    if (k < 1 || k > mn) raise(Errc::ParameterOutOfRange, "is_mrd k");
    MrdReport rep;

    Int want_size = ipow(Int(c.field().q()), unsigned(k * mx));
    bool size_ok = Int(c.size()) == want_size;
    bool dist_ok = false;
    if (size_ok && c.size() >= 2) {
        const auto& w = c.words();
        int need = mn - k + 1;
        dist_ok = true;
        for (size_t i = 0; i < w.size() && dist_ok; ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (rank(matsub(w[i], w[j])) < need) {
                    dist_ok = false;
                    rep.witness = std::make_pair(w[i], w[j]);
                    break;
                }
    }
    bool by_definition = size_ok && (c.size() < 2 ? true : dist_ok);
    if (!size_ok)
        rep.reason = "size " + std::to_string(c.size()) + " != q^{k max(m,n)} = " + want_size.str();
    else if (!by_definition)
        rep.reason = "rank distance below min(m,n)-k+1";

    // cross-validation where affordable
    if (c.size() <= (std::uint64_t(1) << 16)) {
        std::optional<std::pair<Mat, Mat>> prod_wit;
        bool by_products = size_ok && mrd_by_products(c, k, cap, &prod_wit);
        if (by_products != by_definition)
            raise(Errc::Internal, "MRD criteria disagree");
        if (!rep.witness && prod_wit) rep.witness = prod_wit;
    }

    rep.mrd = by_definition;
    if (rep.mrd) rep.reason.clear();
    return rep;
}

MatrixCode gabidulin(int m, int n, int k, const Field& f, std::uint64_t cap) {
    if (m < 1 || n < 1 || k < 1 || k > std::min(m, n))
        raise(Errc::ParameterOutOfRange, "gabidulin parameters");
    if (m < n) {
        MatrixCode base = gabidulin(n, m, k, f, cap);
        std::vector<Mat> words;
        words.reserve(base.size());
        for (const Mat& w : base.words()) words.push_back(transpose(w));
        MatrixCode code(f, m, n, std::move(words));
        MrdReport rep = is_mrd(code, k, cap);
        if (!rep.mrd) raise(Errc::Internal, "transposed gabidulin failed MRD check: " + rep.reason);
        return code;
    }

    ExtField ext(f, unsigned(m));
    // guard q^{km} codewords
    std::uint64_t total = 1;
    for (int i = 0; i < k * m; ++i) {
        total *= f.q();
        if (total > cap) raise(Errc::EnumerationTooLarge, "gabidulin code size exceeds cap");
    }

    // Frobenius powers of the basis: frob[i][j] = b_j^{q^i}
    std::vector<std::vector<ExtField::Elem>> frob(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        frob[size_t(i)].resize(size_t(m));
        for (int j = 0; j < m; ++j) {
            ExtField::Elem bj = ext.zero();
            bj[size_t(j)] = 1;
            std::uint64_t exp = 1;
            for (int t = 0; t < i; ++t) exp *= f.q();
            frob[size_t(i)][size_t(j)] = ext.pow(bj, exp);
        }
    }

    std::vector<Mat> words;
    words.reserve(size_t(total));
    std::vector<ExtField::Elem> coef(size_t(k), ext.zero());
    std::vector<std::uint64_t> idx(size_t(k), 0);
    for (;;) {
        // matrix of x -> sum a_i x^{q^i}: row j = coordinates of L(b_j),
        // columns beyond n deleted
        Mat w(f, m, n);
        for (int j = 0; j < m; ++j) {
            ExtField::Elem v = ext.zero();
            for (int i = 0; i < k; ++i)
                v = ext.add(v, ext.mul(coef[size_t(i)], frob[size_t(i)][size_t(j)]));
            for (int c = 0; c < n; ++c) w.set(j, c, v[size_t(c)]);
        }
        words.push_back(std::move(w));

        size_t i = 0;
        while (i < size_t(k)) {
            if (++idx[i] < ext.order()) {
                coef[i] = ext.unpack(idx[i]);
                break;
            }
            idx[i] = 0;
            coef[i] = ext.zero();
            ++i;
        }
        if (i == size_t(k)) break;
    }

    MatrixCode code(f, m, n, std::move(words));
    MrdReport rep = is_mrd(code, k, cap);
    if (!rep.mrd) raise(Errc::Internal, "gabidulin construction failed MRD check: " + rep.reason);
    return code;
}

MatrixField matrix_field(int m, const Field& f) {
    if (m < 1) raise(Errc::ParameterOutOfRange, "matrix_field m");
    std::uint64_t q_m = 1;
    for (int i = 0; i < m; ++i) {
        q_m *= f.q();
        if (q_m > 65536) raise(Errc::FieldTooLarge, "q^m exceeds 2^16");
    }
    ExtField ext(f, unsigned(m));
    Mat gen(f, m, m);
    for (int i = 0; i < m; ++i) {
        ExtField::Elem bi = ext.zero();
        bi[size_t(i)] = 1;
        ExtField::Elem prod = ext.mul(bi, ext.gen());
        for (int j = 0; j < m; ++j) gen.set(i, j, prod[size_t(j)]);
    }
    MatrixField mf{f, m, gen, {}};
    mf.elements.push_back(Mat(f, m, m));
    Mat acc = Mat::identity(f, m);
    for (std::uint64_t i = 0; i + 1 < q_m; ++i) {
        mf.elements.push_back(acc);
        acc = matmul(acc, gen);
    }
    if (!(acc == Mat::identity(f, m))) raise(Errc::Internal, "matrix field generator order");
    return mf;
}

MatrixCode mrd_from_field(const MatrixField& mf, const Mat& a) {
    if (a.rows() != mf.m || a.rows() < a.cols())
        raise(Errc::ShapeMismatch, "mrd_from_field needs an m x n matrix with m >= n");
    if (rank(a) != std::min(a.rows(), a.cols())) raise(Errc::NotFullRank, "A must be full rank");
    std::vector<Mat> words;
    words.reserve(mf.elements.size());
    for (const Mat& g : mf.elements) words.push_back(matmul(g, a));
    MatrixCode code(mf.base, a.rows(), a.cols(), std::move(words));
    MrdReport rep = is_mrd(code, 1);
    if (!rep.mrd) raise(Errc::Internal, "F_m * A failed MRD check: " + rep.reason);
    return code;
}

VecMap mrd_to_map(const MatrixCode& c) {
    if (c.n() != 2 || c.m() < 2) raise(Errc::ParameterOutOfRange, "mrd_to_map needs an (m,2) code");
    const Field& f = c.field();
    std::uint64_t q_m = 1;
    for (int i = 0; i < c.m(); ++i) q_m *= f.q();
    if (c.size() != q_m)
        raise(Errc::NotRepresentable, "code size != q^m");
    VecMap fm{f, c.m(), std::vector<std::uint64_t>(q_m, ~std::uint64_t(0))};
    for (const Mat& w : c.words()) {
        std::uint64_t x = 0, y = 0;
        for (int i = 0; i < c.m(); ++i) {
            x = x * f.q() + w.at(i, 0);
            y = y * f.q() + w.at(i, 1);
        }
        if (fm.tbl[x] != ~std::uint64_t(0))
            raise(Errc::NotRepresentable, "first columns are not a bijection");
        fm.tbl[x] = y;
    }
    return fm;
}

MatrixCode map_to_mrd(const VecMap& fm) {
    const Field& f = fm.f;
    std::vector<Mat> words;
    words.reserve(fm.tbl.size());
    for (std::uint64_t x = 0; x < fm.tbl.size(); ++x) {
        Mat w(f, fm.m, 2);
        std::uint64_t xv = x, yv = fm.tbl[x];
        for (int i = fm.m; i-- > 0;) {
            w.set(i, 0, felem(xv % f.q()));
            w.set(i, 1, felem(yv % f.q()));
            xv /= f.q();
            yv /= f.q();
        }
        words.push_back(std::move(w));
    }
    return MatrixCode(f, fm.m, 2, std::move(words));
}

namespace {

bool bijective(const std::vector<std::uint64_t>& tbl) {
    std::vector<bool> hit(tbl.size(), false);
    for (std::uint64_t v : tbl) {
        if (v >= tbl.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::vector<std::uint64_t> shift_by_identity(const VecMap& fm, bool subtract) {
    const Field& f = fm.f;
    std::vector<std::uint64_t> r(fm.tbl.size());
    for (std::uint64_t x = 0; x < fm.tbl.size(); ++x) {
        std::uint64_t xv = x, yv = fm.tbl[x], out = 0, mult = 1;
        for (int i = 0; i < fm.m; ++i) {
            felem xc = felem(xv % f.q()), yc = felem(yv % f.q());
            felem c = subtract ? f.sub(yc, xc) : f.add(yc, xc);
            out += std::uint64_t(c) * mult;
            mult *= f.q();
            xv /= f.q();
            yv /= f.q();
        }
        r[x] = out;
    }
    return r;
}

} // namespace

bool is_complete_mapping(const VecMap& fm) {
    return bijective(fm.tbl) && bijective(shift_by_identity(fm, false));
}

bool is_orthomorphism(const VecMap& fm) {
    return bijective(fm.tbl) && bijective(shift_by_identity(fm, true));
}

} // namespace mrdlab
