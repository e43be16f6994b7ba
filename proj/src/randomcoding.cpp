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

#include "mrdlab/randomcoding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace mrdlab {

PatternFamily singleton_family(unsigned q, int k) {
    PatternFamily fam{q, k, {}};
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    for (std::uint64_t v = 0; v < total; ++v) fam.sets.push_back({v});
    return fam;
}

PatternFamily separating_2_1() {
    // tuples packed base 2, first component most significant
    PatternFamily fam{2, 3, {}};
    fam.sets.push_back({0b001, 0b110});
    fam.sets.push_back({0b010, 0b101});
    fam.sets.push_back({0b100, 0b011});
    return fam;
}

namespace {

// next k-combination of {0..n-1} in lexicographic order
bool next_combination(std::vector<int>& c, int n) {
    int k = int(c.size());
    int i = k - 1;
    while (i >= 0 && c[size_t(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[size_t(i)];
    for (int j = i + 1; j < k; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
    return true;
}

Mat stack_rows(const Field& f, const std::vector<Mat>& rows) {
    Mat r(f, int(rows.size()), rows.empty() ? 0 : rows.front().cols());
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.set(int(i), j, rows[i].at(0, j));
    return r;
}

} // namespace

VectorSet::VectorSet(Field f, int m, std::vector<Mat> vectors, VectorSetProperty prop, int k)
    : f_(std::move(f)), m_(m), k_(k), prop_(prop), vecs_(std::move(vectors)) {
    if (k_ < 1) raise(Errc::ParameterOutOfRange, "vector set k");
    for (const Mat& v : vecs_)
        if (v.rows() != 1 || v.cols() != m_) raise(Errc::ShapeMismatch, "vectors must be 1 x m");

    const int tuple = prop_ == VectorSetProperty::AnyKIndependent ? k_ : k_ + 1;
    if (int(vecs_.size()) >= tuple) {
        std::vector<int> comb(static_cast<size_t>(tuple), 0);
        for (int i = 0; i < tuple; ++i) comb[size_t(i)] = i;
        do {
            if (prop_ == VectorSetProperty::AnyKIndependent) {
                std::vector<Mat> rows;
                for (int i : comb) rows.push_back(vecs_[size_t(i)]);
                if (rank(stack_rows(f_, rows)) != k_)
                    raise(Errc::PropertyNotVerified, "k vectors are linearly dependent");
            } else {
                // affinely independent: the k differences to the first have rank k
                std::vector<Mat> rows;
                for (int t = 1; t <= k_; ++t)
                    rows.push_back(matsub(vecs_[size_t(comb[size_t(t)])], vecs_[size_t(comb[0])]));
                if (rank(stack_rows(f_, rows)) != k_)
                    raise(Errc::PropertyNotVerified, "k+1 points lie on a (k-1)-flat");
            }
        } while (next_combination(comb, int(vecs_.size())));
    }
}

JointLawResult joint_law_check(const MatrixDistribution& d, const VectorSet& u, JointLawMode mode,
                               int k, std::uint64_t cap) {
    const Field& f = d.field();
    const int n = d.n();
    if (u.m() != d.m() || u.field() != f) raise(Errc::FieldMismatch, "vector set vs distribution");
    if (u.k() != k) raise(Errc::ParameterOutOfRange, "vector set was verified for a different k");
    if (mode == JointLawMode::Linear && u.property() != VectorSetProperty::AnyKIndependent)
        raise(Errc::PropertyNotVerified, "linear mode needs an any-k-independent set");
    if (mode == JointLawMode::Affine && u.property() != VectorSetProperty::CapCondition)
        raise(Errc::PropertyNotVerified, "affine mode needs the cap condition");
    if (!is_k_good(d, k, cap).good)
        raise(Errc::PropertyNotVerified, "distribution is not k-good");

    const int tuple = mode == JointLawMode::Linear ? k : k + 1;
    const int M = int(u.vectors().size());
    JointLawResult res;
    res.ok = true;
    if (M < tuple) return res; // vacuous

    std::uint64_t values = 1;
    for (int i = 0; i < tuple * n; ++i) {
        values *= f.q();
        if (values > cap) raise(Errc::EnumerationTooLarge, "value tuple space exceeds cap");
    }
    const Rational target(1, ipow(Int(f.q()), unsigned(tuple * n)));
    const Rational translate_mass(1, ipow(Int(f.q()), unsigned(n)));
    const std::uint64_t n_space = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < n; ++i) t *= f.q();
        return t;
    }();

    std::vector<int> comb(static_cast<size_t>(tuple), 0);
    for (int i = 0; i < tuple; ++i) comb[size_t(i)] = i;
    do {
        std::map<std::uint64_t, Rational> mass;
        for (const auto& [key, w] : d.weights()) {
            Mat a = d.support_mat(key);
            std::vector<std::uint64_t> imgs(static_cast<size_t>(tuple), 0);
            for (int t = 0; t < tuple; ++t)
                imgs[size_t(t)] = matmul(u.vectors()[size_t(comb[size_t(t)])], a).pack();
            if (mode == JointLawMode::Linear) {
                std::uint64_t packed = 0;
                for (int t = 0; t < tuple; ++t) packed = packed * n_space + imgs[size_t(t)];
                mass[packed] += w;
            } else {
                for (std::uint64_t v = 0; v < n_space; ++v) {
                    Mat vm = Mat::unpack(f, 1, n, v);
                    std::uint64_t packed = 0;
                    for (int t = 0; t < tuple; ++t)
                        packed = packed * n_space +
                                 matadd(Mat::unpack(f, 1, n, imgs[size_t(t)]), vm).pack();
                    mass[packed] += w * translate_mass;
                }
            }
        }
        auto fail = [&](std::uint64_t packed, const Rational& p) {
            res.ok = false;
            JointLawWitness wit;
            wit.indices.assign(comb.begin(), comb.end());
            std::vector<std::uint64_t> parts(static_cast<size_t>(tuple), 0);
            for (int t = tuple; t-- > 0;) {
                parts[size_t(t)] = packed % n_space;
                packed /= n_space;
            }
            for (std::uint64_t part : parts) wit.values.push_back(Mat::unpack(f, 1, n, part));
            wit.prob = p;
            res.witness = wit;
        };
        if (mass.size() == values) {
            for (const auto& [packed, p] : mass)
                if (p != target) {
                    fail(packed, p);
                    return res;
                }
        } else {
            std::uint64_t expect = 0;
            for (const auto& [packed, p] : mass) {
                if (packed != expect) break;
                if (p != target) {
                    fail(packed, p);
                    return res;
                }
                ++expect;
            }
            fail(expect, Rational(0));
            return res;
        }
    } while (next_combination(comb, M));
    return res;
}

namespace {

std::vector<Mat> row_space_codewords(const Mat& gen, std::uint64_t cap) {
    const Field& f = gen.field();
    std::set<std::uint64_t> seen;
    std::vector<Mat> words;
    for_each_mat(f, 1, gen.rows(), [&](const Mat& coef) {
        Mat w = matmul(coef, gen);
        if (seen.insert(w.pack()).second) words.push_back(w);
    }, cap);
    std::sort(words.begin(), words.end());
    return words;
}

bool tuple_intersects(const std::vector<const Mat*>& tup, int n) {
    for (int j = 0; j < n; ++j) {
        bool all_nonzero = true;
        for (const Mat* v : tup)
            if (!v->at(0, j)) {
                all_nonzero = false;
                break;
            }
        if (all_nonzero) return true;
    }
    return false;
}

bool codeword_set_k_wise_intersecting(const std::vector<Mat>& words, int k, const Field& f) {
    if (int(words.size()) < k) return true;
    std::vector<int> comb(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
    do {
        std::vector<Mat> rows;
        std::vector<const Mat*> tup;
        for (int i : comb) {
            rows.push_back(words[size_t(i)]);
            tup.push_back(&words[size_t(i)]);
        }
        if (rank(stack_rows(f, rows)) != k) continue;
        if (!tuple_intersects(tup, words.front().cols())) return false;
    } while (next_combination(comb, int(words.size())));
    return true;
}

} // namespace

bool is_k_wise_intersecting(const Mat& gen, int k, std::uint64_t cap) {
    if (k < 1) raise(Errc::ParameterOutOfRange, "k");
    auto words = row_space_codewords(gen, cap);
    return codeword_set_k_wise_intersecting(words, k, gen.field());
}

Rational intersecting_failure_bound(int m, int n, unsigned q, int k) {
    Rational pw = 1;
    for (int i = 0; i < k; ++i) pw *= Rational(Int(q) - 1, Int(q));
    const Rational factor = Rational(1) - pw; // 1 - (1-1/q)^k
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= factor;
    for (int i = 0; i < k; ++i) r *= Rational(ipow(Int(q), unsigned(m)) - ipow(Int(q), unsigned(i)));
    return r;
}

Rational intersecting_failure_exact(const MatrixDistribution& d, int k, std::uint64_t cap) {
    Rational p = 0;
    for (const auto& [key, w] : d.weights()) {
        Mat a = d.support_mat(key);
        auto words = row_space_codewords(a, cap);
        if (!codeword_set_k_wise_intersecting(words, k, d.field())) p += w;
    }
    return p;
}

Rational intersecting_failure_estimate(const MatrixDistribution& d, int k, std::uint64_t trials,
                                       std::uint64_t seed) {
    if (trials == 0) raise(Errc::ParameterOutOfRange, "trials must be positive");
    std::mt19937_64 rng(seed);
    // cumulative distribution in canonical support order; draws are exact
    // rationals u/2^64
    std::vector<std::pair<Rational, std::uint64_t>> cdf;
    Rational acc = 0;
    for (const auto& [key, w] : d.weights()) {
        acc += w;
        cdf.emplace_back(acc, key);
    }
    const Rational denom = ipow(Int(2), 64);
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rational u(Int(rng()), 1);
        u /= denom;
        auto it = std::lower_bound(cdf.begin(), cdf.end(), u,
                                   [](const auto& lhs, const Rational& val) { return lhs.first <= val; });
        if (it == cdf.end()) --it;
        Mat a = d.support_mat(it->second);
        auto words = row_space_codewords(a, kDefaultEnumCap);
        if (!codeword_set_k_wise_intersecting(words, k, d.field())) ++failures;
    }
    return Rational(Int(failures), Int(trials));
}

namespace {

std::uint64_t pack_pattern(const std::vector<felem>& pat, unsigned q) {
    std::uint64_t r = 0;
    for (felem c : pat) r = r * q + c;
    return r;
}

// the ordered tuple (c[idx[0]], ..., c[idx[k-1]]) misses some member of F
bool tuple_undesirable(const std::vector<Mat>& c, const std::vector<int>& idx,
                       const PatternFamily& fam) {
    const int n = c.front().cols();
    const int k = int(idx.size());
    std::set<std::uint64_t> w;
    std::vector<felem> pat(static_cast<size_t>(k), 0);
    for (int j = 0; j < n; ++j) {
        for (int t = 0; t < k; ++t) pat[size_t(t)] = c[size_t(idx[size_t(t)])].at(0, j);
        w.insert(pack_pattern(pat, fam.q));
    }
    for (const auto& s : fam.sets) {
        bool meets = false;
        for (std::uint64_t v : s)
            if (w.count(v)) {
                meets = true;
                break;
            }
        if (!meets) return true;
    }
    return false;
}

} // namespace

bool is_f_set(const std::vector<Mat>& c, const PatternFamily& fam, std::uint64_t cap) {
    const int k = fam.k;
    // an F-set is a set: duplicate elements disqualify
    std::set<std::uint64_t> uniq;
    for (const Mat& v : c)
        if (!uniq.insert(v.pack()).second) return false;
    if (int(c.size()) < k) return true;

    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= c.size();
    if (tuples > cap) raise(Errc::EnumerationTooLarge, "tuple space exceeds cap");

    std::vector<int> comb(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
    do {
        std::vector<int> perm(comb);
        std::sort(perm.begin(), perm.end());
        do {
            if (tuple_undesirable(c, perm, fam)) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (next_combination(comb, int(c.size())));
    return true;
}

FSetExtraction f_set_extract(const std::vector<Mat>& c, const PatternFamily& fam,
                             std::uint64_t cap) {
    const int k = fam.k;
    const int M = int(c.size());
    std::vector<bool> removed(size_t(M), false);

    if (M >= k) {
        std::uint64_t tuples = 1;
        for (int i = 0; i < k; ++i) tuples *= std::uint64_t(M);
        if (tuples > cap) raise(Errc::EnumerationTooLarge, "tuple space exceeds cap");
        std::vector<int> comb(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
        do {
            std::vector<int> perm(comb);
            std::sort(perm.begin(), perm.end());
            bool bad = false;
            do {
                if (tuple_undesirable(c, perm, fam)) {
                    bad = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (bad)
                for (int i : comb) removed[size_t(i)] = true;
        } while (next_combination(comb, M));
    }
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
            if (c[size_t(i)] == c[size_t(j)]) removed[size_t(i)] = removed[size_t(j)] = true;

    FSetExtraction out;
    for (int i = 0; i < M; ++i)
        if (!removed[size_t(i)])
            out.kept.push_back(c[size_t(i)]);
        else
            ++out.removed;
    if (!is_f_set(out.kept, fam, cap)) raise(Errc::Internal, "extraction output failed verification");
    return out;
}

double f_set_rate_threshold(const PatternFamily& fam) {
    size_t min_s = ~size_t(0);
    for (const auto& s : fam.sets) min_s = std::min(min_s, s.size());
    double qk = std::pow(double(fam.q), double(fam.k));
    double val = (fam.k - std::log(qk - double(min_s)) / std::log(double(fam.q))) / (fam.k - 1);
    return std::min(val, 1.0);
}

} // namespace mrdlab
