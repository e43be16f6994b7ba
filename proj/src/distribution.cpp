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

#include "mrdlab/distribution.hpp"

namespace mrdlab {

MatrixDistribution::MatrixDistribution(Field f, int m, int n,
                                       std::map<std::uint64_t, Rational> weights)
    : f_(std::move(f)), m_(m), n_(n), w_(std::move(weights)) {
    if (w_.empty()) raise(Errc::EmptySupport, "distribution with empty support");
    Rational total = 0;
    std::uint64_t space = 1;
    bool overflow = false;
    for (int i = 0; i < m_ * n_ && !overflow; ++i) {
        if (space > (std::uint64_t(1) << 62) / f_.q()) overflow = true;
        space *= f_.q();
    }
    for (const auto& [key, w] : w_) {
        if (w <= 0) raise(Errc::ParameterOutOfRange, "weights must be positive");
        if (!overflow && key >= space) raise(Errc::ParameterOutOfRange, "support key out of space");
        total += w;
    }
    if (total != 1) raise(Errc::ParameterOutOfRange, "weights must sum to 1");
}

Rational MatrixDistribution::prob(const Mat& a) const {
    auto it = w_.find(a.pack());
    return it == w_.end() ? Rational(0) : it->second;
}

MatrixDistribution uniform_over(const Field& f, int m, int n, const std::vector<Mat>& support) {
    if (support.empty()) raise(Errc::EmptySupport, "uniform_over of empty set");
    std::map<std::uint64_t, Rational> w;
    for (const Mat& a : support) {
        if (a.rows() != m || a.cols() != n) raise(Errc::ShapeMismatch, "support shape");
        w[a.pack()] = 0;
    }
    Rational each(1, Int(w.size()));
    for (auto& [k, v] : w) v = each;
    return MatrixDistribution(f, m, n, std::move(w));
}

MatrixDistribution uniform_over(const MatrixCode& c) {
    return uniform_over(c.field(), c.m(), c.n(), c.words());
}

MatrixDistribution point_mass(const Mat& a) {
    std::map<std::uint64_t, Rational> w;
    w[a.pack()] = 1;
    return MatrixDistribution(a.field(), a.rows(), a.cols(), std::move(w));
}

MatrixDistribution uniform_over_space(const Field& f, int m, int n, std::uint64_t cap) {
    std::uint64_t total = space_size_guarded(f, m, n, cap);
    std::map<std::uint64_t, Rational> w;
    Rational each(1, Int(total));
    for (std::uint64_t i = 0; i < total; ++i) w[i] = each;
    return MatrixDistribution(f, m, n, std::move(w));
}

GoodnessResult is_k_good(const MatrixDistribution& d, int k, std::uint64_t cap) {
    const Field& f = d.field();
    const int m = d.m(), n = d.n();
    if (k < 1 || k > std::min(m, n)) raise(Errc::ParameterOutOfRange, "is_k_good k");
    space_size_guarded(f, k, m, cap); // full-rank M enumeration guard
    const std::uint64_t values = space_size_guarded(f, k, n, cap);
    const Rational target(1, ipow(Int(f.q()), unsigned(k * n)));

    // support as matrices once
    std::vector<std::pair<Mat, const Rational*>> supp;
    supp.reserve(d.support_size());
    for (const auto& [key, w] : d.weights()) supp.emplace_back(d.support_mat(key), &w);

    GoodnessResult res;
    res.good = true;
    for_each_full_rank(f, k, m, [&](const Mat& M) {
        if (!res.good) return;
        std::map<std::uint64_t, Rational> mass;
        for (const auto& [A, w] : supp) mass[matmul(M, A).pack()] += *w;
        // canonical-first violation over all K, including missing ones
        if (mass.size() == values) {
            for (const auto& [key, p] : mass) {
                if (p != target) {
                    res.good = false;
                    res.witness = GoodnessWitness{M, Mat::unpack(f, k, n, key), p};
                    return;
                }
            }
            return;
        }
        std::uint64_t expect = 0;
        for (const auto& [key, p] : mass) {
            if (key != expect) break;
            if (p != target) {
                res.good = false;
                res.witness = GoodnessWitness{M, Mat::unpack(f, k, n, key), p};
                return;
            }
            ++expect;
        }
        res.good = false;
        res.witness = GoodnessWitness{M, Mat::unpack(f, k, n, expect), Rational(0)};
    }, cap);
    return res;
}

MatrixDistribution transpose_dist(const MatrixDistribution& d) {
    std::map<std::uint64_t, Rational> w;
    for (const auto& [key, p] : d.weights()) w[transpose(d.support_mat(key)).pack()] += p;
    return MatrixDistribution(d.field(), d.n(), d.m(), std::move(w));
}

MatrixDistribution compose(const MatrixDistribution& a, const std::vector<PqbAtom>& joint) {
    if (joint.empty()) raise(Errc::EmptySupport, "compose with empty joint law");
    const Field& f = a.field();
    const int m = a.m(), n = a.n();
    const int s = joint.front().B.rows(), t = joint.front().B.cols();
    Rational total = 0;
    for (const auto& atom : joint) {
        if (atom.P.rows() != s || atom.P.cols() != m || atom.Q.rows() != n || atom.Q.cols() != t ||
            atom.B.rows() != s || atom.B.cols() != t)
            raise(Errc::ShapeMismatch, "compose atom shapes");
        if (rank(atom.P) != std::min(s, m) || rank(atom.Q) != std::min(n, t))
            raise(Errc::NotFullRankSupport, "P and Q must be supported on full-rank matrices");
        if (atom.w <= 0) raise(Errc::ParameterOutOfRange, "joint weights must be positive");
        total += atom.w;
    }
    if (total != 1) raise(Errc::ParameterOutOfRange, "joint weights must sum to 1");

    std::map<std::uint64_t, Rational> w;
    for (const auto& atom : joint)
        for (const auto& [key, pa] : a.weights()) {
            Mat img = matadd(matmul(matmul(atom.P, a.support_mat(key)), atom.Q), atom.B);
            w[img.pack()] += atom.w * pa;
        }
    return MatrixDistribution(f, s, t, std::move(w));
}

MinSupportReport classify_min_support(const MatrixDistribution& d, int k, std::uint64_t cap) {
    const int mn = std::min(d.m(), d.n()), mx = std::max(d.m(), d.n());
    if (k < 1 || k > mn) raise(Errc::ParameterOutOfRange, "classify_min_support k");
    MinSupportReport rep;
    rep.k_good = is_k_good(d, k, cap).good;
    rep.support_size = d.support_size();
    rep.is_minimum = Int(rep.support_size) == ipow(Int(d.field().q()), unsigned(k * mx));

    if (rep.is_minimum) {
        std::vector<Mat> supp;
        for (const auto& [key, w] : d.weights()) supp.push_back(d.support_mat(key));
        MatrixCode code(d.field(), d.m(), d.n(), std::move(supp));
        rep.mrd_support = is_mrd(code, k, cap).mrd;
        bool uniform = true;
        const Rational each(1, Int(rep.support_size));
        for (const auto& [key, w] : d.weights())
            if (w != each) uniform = false;
        // minimum-support equivalence, both directions
        if (rep.k_good && !(rep.mrd_support && uniform))
            raise(Errc::Internal, "k-good minimum-support distribution not uniform over an MRD code");
        if (rep.mrd_support && uniform && !rep.k_good)
            raise(Errc::Internal, "uniform MRD-code distribution failed the k-goodness check");
    }
    return rep;
}

Rational full_rank_probability(const MatrixDistribution& d) {
    const int mn = std::min(d.m(), d.n());
    Rational p = 0;
    for (const auto& [key, w] : d.weights())
        if (rank(d.support_mat(key)) == mn) p += w;
    return p;
}

} // namespace mrdlab
