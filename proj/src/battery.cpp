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

#include "mrdlab/battery.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "mrdlab/homweight.hpp"
#include "mrdlab/randomcoding.hpp"
#include "mrdlab/search.hpp"

namespace mrdlab {

namespace {

struct Harness {
    RunReport report;

    template <typename Fn>
    void check(const std::string& name, const std::string& claim, double limit_seconds, Fn&& fn) {
        CheckResult r;
        r.name = name;
        r.claim = claim;
        r.limit_seconds = limit_seconds;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [expected, actual] = fn();
            r.expected = expected;
            r.actual = actual;
            r.pass = expected == actual;
        } catch (const std::exception& e) {
            r.expected = "(no exception)";
            r.actual = std::string("exception: ") + e.what();
            r.pass = false;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.limit_seconds) {
            r.pass = false;
            r.actual += " [over time limit]";
        }
        report.total_seconds += r.seconds;
        if (!r.pass) report.all_pass = false;
        report.checks.push_back(std::move(r));
    }
};

using SS = std::ostringstream;
using Pair = std::pair<std::string, std::string>;

std::string hist_str(const std::map<std::uint64_t, std::uint64_t>& h) {
    SS os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : h) {
        if (!first) os << ", ";
        first = false;
        os << k << ":" << v;
    }
    os << "}";
    return os.str();
}

PointSet vertex_subspace(const Field& f) {
    std::vector<Mat> pts;
    for_each_mat(f, 2, 3, [&](const Mat& a) {
        felem a12 = a.at(0, 1), a13 = a.at(0, 2), a22 = a.at(1, 1), a23 = a.at(1, 2);
        if (f.add(f.add(a12, a13), a23) == 0 && f.add(f.add(a12, a22), a23) == 0)
            pts.push_back(a);
    });
    return PointSet(f, 2, 3, std::move(pts));
}

PointSet dense6(const Field& f) {
    return PointSet(f, 3, 2,
                    {Mat::from_rows(f, {{1, 0}, {0, 1}, {0, 0}}),
                     Mat::from_rows(f, {{1, 1}, {1, 0}, {0, 0}}),
                     Mat::from_rows(f, {{0, 1}, {1, 1}, {0, 0}}),
                     Mat::from_rows(f, {{0, 0}, {1, 0}, {1, 0}}),
                     Mat::from_rows(f, {{0, 1}, {0, 0}, {0, 1}}),
                     Mat::from_rows(f, {{0, 0}, {0, 0}, {1, 1}})});
}

MatrixDistribution seeded_random_dist(const Field& f, int m, int n, std::mt19937_64& rng) {
    std::uint64_t total = 1;
    for (int i = 0; i < m * n; ++i) total *= f.q();
    std::map<std::uint64_t, Int> raw;
    Int denom = 0;
    int support = 1 + int(rng() % (total - 1));
    for (int i = 0; i < support; ++i) {
        std::uint64_t key = rng() % total;
        Int val = Int(1 + rng() % 7);
        raw[key] += val;
        denom += val;
    }
    std::map<std::uint64_t, Rational> w;
    for (const auto& [k, v] : raw) w[k] = Rational(v, denom);
    return MatrixDistribution(f, m, n, std::move(w));
}

SearchConfig search_cfg(const Field& f, int m, int n, int k) {
    SearchConfig cfg{f};
    cfg.m = m;
    cfg.n = n;
    cfg.k = k;
    return cfg;
}

} // namespace

RunReport run_verification_battery(bool fast) {
    Harness h;
    Field f2 = Field::make(2, 1);
    Field f8 = Field::make(2, 3);

    // 1. homogeneous weight tables on binary 2x3
    h.check("homweight_table_left_2x3", "normalized left weights are 1/42 (rank 1), 1/84 (rank 2)",
            1.0, [&]() -> Pair {
                MatrixDistribution d = normalized_hom_distribution(Side::Left, f2, 2, 3);
                std::map<int, std::string> got;
                for (const auto& [key, w] : d.weights()) got[rank(d.support_mat(key))] = rat_str(w);
                SS os;
                os << got.at(1) << " " << got.at(2) << " support=" << d.support_size();
                return {"1/42 1/84 support=63", os.str()};
            });
    h.check("homweight_table_right_2x3", "normalized right weights are 1/56 (rank 1), 5/336 (rank 2)",
            1.0, [&]() -> Pair {
                MatrixDistribution d = normalized_hom_distribution(Side::Right, f2, 2, 3);
                std::map<int, std::string> got;
                for (const auto& [key, w] : d.weights()) got[rank(d.support_mat(key))] = rat_str(w);
                return {"1/56 5/336", got.at(1) + " " + got.at(2)};
            });

    // 2. total weights, closed form vs brute sums
    h.check("total_weight_2x3_and_3x2", "c_23 = 56 and c_32 = 64 by closed form and brute sum", 1.0,
            [&]() -> Pair {
                SS os;
                os << rat_str(total_weight(Side::Left, 2, 3, 2)) << " "
                   << rat_str(brute_total_weight(Side::Left, f2, 2, 3)) << " "
                   << rat_str(total_weight(Side::Left, 3, 2, 2)) << " "
                   << rat_str(brute_total_weight(Side::Left, f2, 3, 2));
                return {"56 56 64 64", os.str()};
            });
    h.check("total_weight_small_shapes", "closed form equals brute sum for m,n <= 3, q in {2,3}", 1.0,
            [&]() -> Pair {
                int agree = 0, total = 0;
                for (unsigned q : {2u, 3u}) {
                    Field f = Field::of_order(q);
                    for (int m = 1; m <= 3; ++m)
                        for (int n = 1; n <= 3; ++n)
                            for (Side s : {Side::Left, Side::Right}) {
                                ++total;
                                if (total_weight(s, m, n, q) == brute_total_weight(s, f, m, n))
                                    ++agree;
                            }
                }
                SS os;
                os << agree << "/" << total;
                return {"36/36", os.str()};
            });

    // 3. goodness of the normalized weights
    h.check("right_hom_2x3_1good", "normalized right weight on binary 2x3 is 1-good", 1.0,
            [&]() -> Pair {
                bool ok = is_k_good(normalized_hom_distribution(Side::Right, f2, 2, 3), 1).good;
                return {"1-good", ok ? "1-good" : "not 1-good"};
            });
    h.check("left_hom_2x3_not_1good", "normalized left weight on binary 2x3 fails with a witness",
            1.0, [&]() -> Pair {
                auto res = is_k_good(normalized_hom_distribution(Side::Left, f2, 2, 3), 1);
                SS os;
                os << (res.good ? "good" : "fails") << " witness=" << (res.witness ? "yes" : "no");
                return {"fails witness=yes", os.str()};
            });

    // 4. coset censuses
    h.check("coset_census_2x3", "size-8 right submodule cosets have censuses {2 rank-1, 6 rank-2}",
            1.0, [&]() -> Pair {
                MatrixDistribution d = normalized_hom_distribution(Side::Right, f2, 2, 3);
                bool ok = true;
                for (const Mat& v : subspaces(f2, 2, 1))
                    for (const auto& cs : coset_weight_sums(d, Side::Right, v)) {
                        if (cs.sum != Rational(1, 8)) ok = false;
                        if (!cs.rep.is_zero() &&
                            (cs.rank_census.at(1) != 2 || cs.rank_census.at(2) != 6))
                            ok = false;
                    }
                return {"censuses {2,6}, sums 1/8", ok ? "censuses {2,6}, sums 1/8" : "mismatch"};
            });
    h.check("coset_census_3x2",
            "size-16 right submodules: census {1,9,6}; nontrivial cosets {0,4,12}", 1.0,
            [&]() -> Pair {
                MatrixDistribution d = normalized_hom_distribution(Side::Left, f2, 3, 2);
                bool ok = true;
                for (const Mat& v : subspaces(f2, 3, 2))
                    for (const auto& cs : coset_weight_sums(d, Side::Right, v)) {
                        if (cs.sum != Rational(1, 4)) ok = false;
                        if (cs.rep.is_zero()) {
                            if (cs.rank_census.at(0) != 1 || cs.rank_census.at(1) != 9 ||
                                cs.rank_census.at(2) != 6)
                                ok = false;
                        } else if (cs.rank_census.count(0) != 0 || cs.rank_census.at(1) != 4 ||
                                   cs.rank_census.at(2) != 12) {
                            ok = false;
                        }
                    }
                return {"censuses {1,9,6}/{0,4,12}", ok ? "censuses {1,9,6}/{0,4,12}" : "mismatch"};
            });

    // 5. the Gabidulin family
    h.check("gabidulin_family_mrd", "(3,3,1), (3,3,2), (3,2,1), (2,3,1) over GF(2) are MRD", 5.0,
            [&]() -> Pair {
                int ok = 0;
                for (auto [m, n, k] : {std::tuple{3, 3, 1}, {3, 3, 2}, {3, 2, 1}, {2, 3, 1}})
                    if (is_mrd(gabidulin(m, n, k, f2), k).mrd) ++ok;
                SS os;
                os << ok << "/4";
                return {"4/4", os.str()};
            });
    h.check("gabidulin_uniform_kgood", "uniform distributions over the family are k-good", 5.0,
            [&]() -> Pair {
                int ok = 0;
                for (auto [m, n, k] : {std::tuple{3, 3, 1}, {3, 3, 2}, {3, 2, 1}, {2, 3, 1}})
                    if (is_k_good(uniform_over(gabidulin(m, n, k, f2)), k).good) ++ok;
                SS os;
                os << ok << "/4";
                return {"4/4", os.str()};
            });
    h.check("gabidulin_min_support", "supports have size q^{k max(m,n)} and classify as minimum",
            5.0, [&]() -> Pair {
                int ok = 0;
                for (auto [m, n, k] : {std::tuple{3, 3, 1}, {3, 3, 2}, {3, 2, 1}, {2, 3, 1}}) {
                    auto rep = classify_min_support(uniform_over(gabidulin(m, n, k, f2)), k);
                    std::uint64_t want = 1;
                    for (int i = 0; i < k * std::max(m, n); ++i) want *= 2;
                    if (rep.k_good && rep.is_minimum && rep.mrd_support && rep.support_size == want)
                        ++ok;
                }
                SS os;
                os << ok << "/4";
                return {"4/4", os.str()};
            });

    // 6. duality and nesting over a 50-distribution corpus
    {
        std::vector<MatrixDistribution> corpus;
        corpus.push_back(uniform_over_space(f2, 2, 3));
        corpus.push_back(uniform_over(gabidulin(2, 3, 1, f2)));
        corpus.push_back(normalized_hom_distribution(Side::Right, f2, 2, 3));
        corpus.push_back(normalized_hom_distribution(Side::Left, f2, 2, 3));
        corpus.push_back(uniform_over(f2, 2, 3, vertex_subspace(f2).points()));
        std::mt19937_64 rng(0);
        while (corpus.size() < 50) corpus.push_back(seeded_random_dist(f2, 2, 3, rng));

        h.check("duality_corpus50",
                "k-goodness agrees with the transposed distribution for k in {1,2}, 50 cases", 30.0,
                [&]() -> Pair {
                    int agree = 0;
                    for (const auto& d : corpus) {
                        MatrixDistribution dt = transpose_dist(d);
                        bool ok = true;
                        for (int k = 1; k <= 2; ++k)
                            if (is_k_good(d, k).good != is_k_good(dt, k).good) ok = false;
                        if (ok) ++agree;
                    }
                    SS os;
                    os << agree << "/50";
                    return {"50/50", os.str()};
                });
        h.check("nesting_corpus50", "2-good implies 1-good over the corpus", 30.0, [&]() -> Pair {
            int ok = 0, seen2 = 0;
            for (const auto& d : corpus) {
                if (is_k_good(d, 2).good) {
                    ++seen2;
                    if (is_k_good(d, 1).good) ++ok;
                } else {
                    ++ok;
                }
            }
            SS os;
            os << ok << "/50 (2-good cases: " << seen2 << ")";
            SS want;
            want << 50 << "/50 (2-good cases: " << seen2 << ")";
            return {want.str(), os.str()};
        });
    }

    // 7. counting lemmas against brute force
    h.check("anzahl_subspaces_brute",
            "subspace intersection counts match enumeration, q in {2,3}, n <= 4", 60.0,
            [&]() -> Pair {
                int agree = 0, total = 0;
                for (unsigned q : {2u, 3u}) {
                    Field f = Field::of_order(q);
                    for (int n = 1; n <= 4; ++n)
                        for (int m = 1; m <= n; ++m)
                            for (int l = 0; l <= n; ++l)
                                for (int k = 0; k <= std::min(l, m); ++k) {
                                    if (l + m - k > n) continue;
                                    ++total;
                                    if (anzahl_intersecting_subspaces(k, l, m, n, q) ==
                                        brute_count_intersecting_subspaces(k, l, m, n, f))
                                        ++agree;
                                }
                }
                SS os, want;
                os << agree << "/" << total;
                want << total << "/" << total;
                return {want.str(), os.str()};
            });
    h.check("anzahl_products_brute",
            "full-rank product-rank counts match enumeration, q in {2,3}, n <= 4", 60.0,
            [&]() -> Pair {
                int agree = 0, total = 0;
                for (unsigned q : {2u, 3u}) {
                    Field f = Field::of_order(q);
                    for (int n = 1; n <= 4; ++n)
                        for (int m = 1; m <= n; ++m) {
                            auto profile = brute_rank_product_profile(m, n, f, std::uint64_t(1) << 27);
                            for (int l = 0; l <= m; ++l)
                                for (int k = std::max(0, l + m - n); k <= l; ++k) {
                                    ++total;
                                    if (anzahl_rank_k_products(k, l, m, n, q) ==
                                        profile[size_t(l)][size_t(k)])
                                        ++agree;
                                }
                        }
                }
                SS os, want;
                os << agree << "/" << total;
                want << total << "/" << total;
                return {want.str(), os.str()};
            });
    h.check("qbinom_identities", "Gaussian binomial identities hold for n <= 5, q in {2,3}", 60.0,
            [&]() -> Pair {
                bool ok = true;
                for (unsigned q : {2u, 3u})
                    for (int n = 0; n <= 5; ++n)
                        for (int m = 0; m <= n; ++m) {
                            if (gaussian_binomial(n, m, q) != gaussian_binomial(n, n - m, q))
                                ok = false;
                            for (int l = 0; l <= n; ++l)
                                for (int k = 0; k <= l; ++k)
                                    if (gaussian_binomial(n, l, q) * gaussian_binomial(l, k, q) *
                                            gaussian_binomial(n - l, m - k, q) !=
                                        gaussian_binomial(n, m, q) * gaussian_binomial(m, k, q) *
                                            gaussian_binomial(n - m, l - k, q))
                                        ok = false;
                        }
                // rank-distribution sum identity
                for (unsigned q : {2u, 3u})
                    for (int n = 1; n <= 5; ++n)
                        for (int m = 1; m <= n; ++m)
                            for (int k = 0; k <= m; ++k) {
                                Int sum = 0;
                                for (int l = k; l <= std::min(m, n - m + k); ++l) {
                                    Int term = gaussian_binomial(n - m, l - k, q);
                                    for (int i = 0; i < l - k; ++i)
                                        term *= ipow(Int(q), unsigned(m - k)) -
                                                ipow(Int(q), unsigned(i));
                                    sum += term;
                                }
                                if (sum != ipow(Int(q), unsigned((m - k) * (n - m)))) ok = false;
                            }
                return {"all identities hold", ok ? "all identities hold" : "violation"};
            });

    // 8. minimum dense set at k = 1 in GF(2)^{3x2}
    h.check("nu1_3_2_search", "exhaustive search gives minimum 6 with a verified witness", 10.0,
            [&]() -> Pair {
                auto res = min_dense_size(search_cfg(f2, 3, 2, 1));
                SS os;
                os << (res.minimum ? *res.minimum : -1) << " proved=" << (res.proved ? "yes" : "no")
                   << " witness_dense="
                   << (res.witness && is_k_dense(*res.witness, 1).dense ? "yes" : "no");
                return {"6 proved=yes witness_dense=yes", os.str()};
            });
    h.check("dense6_explicit", "the explicit 6-point set is 1-dense and its 5-subsets are not",
            10.0, [&]() -> Pair {
                PointSet s = dense6(f2);
                bool ok = is_k_dense(s, 1).dense;
                for (size_t skip = 0; skip < 6 && ok; ++skip) {
                    std::vector<Mat> pts;
                    for (size_t i = 0; i < 6; ++i)
                        if (i != skip) pts.push_back(s.points()[i]);
                    if (is_k_dense(PointSet(f2, 3, 2, std::move(pts)), 1).dense) ok = false;
                }
                return {"dense, minimally", ok ? "dense, minimally" : "violation"};
            });

    // 9. minimum line-blocking set at k = 2 in GF(2)^{3x2}
    if (!fast) {
        h.check("nu2_3_2_search", "symmetry-pruned search gives minimum 22 with proof", 600.0,
                [&]() -> Pair {
                    auto res = min_dense_size(search_cfg(f2, 3, 2, 2));
                    SS os;
                    os << (res.minimum ? *res.minimum : -1)
                       << " proved=" << (res.proved ? "yes" : "no") << " witness_dense="
                       << (res.witness && is_k_dense(*res.witness, 2).dense ? "yes" : "no");
                    return {"22 proved=yes witness_dense=yes", os.str()};
                });
        h.check("decide21_infeasible", "no 21-point line-blocking set exists", 600.0,
                [&]() -> Pair {
                    SearchConfig cfg = search_cfg(f2, 3, 2, 2);
                    cfg.target = SearchConfig::Target::DecideSize;
                    cfg.decide_size = 21;
                    auto res = min_dense_size(cfg);
                    SS os;
                    os << (res.verdict == Verdict::Infeasible ? "infeasible" : "other")
                       << " proved=" << (res.proved ? "yes" : "no");
                    return {"infeasible proved=yes", os.str()};
                });
    }
    h.check("set22_histogram", "the 22-point set blocks all lines with histogram {1:91, 3:21}",
            600.0, [&]() -> Pair {
                PointSet s = build_22set(f8);
                bool dense = is_k_dense(s, 2).dense;
                auto hist = intersection_pattern(s, 1, Side::Right);
                SS os;
                os << "size=" << s.size() << " dense=" << (dense ? "yes" : "no") << " "
                   << hist_str(hist);
                return {"size=22 dense=yes {1:91, 3:21}", os.str()};
            });

    // 10. small minima with MRD witnesses
    h.check("nu1_2_1_search", "minimum blocking set in AG(2,2) has 3 points", 30.0, [&]() -> Pair {
        auto res = min_dense_size(search_cfg(f2, 2, 1, 1));
        SS os;
        os << (res.minimum ? *res.minimum : -1) << " proved=" << (res.proved ? "yes" : "no");
        return {"3 proved=yes", os.str()};
    });
    h.check("nu_small_mrd_witnesses",
            "minima q^{kn} with MRD witnesses for binary (2,2,1) and (2,3,1)", 30.0, [&]() -> Pair {
                int ok = 0;
                for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
                    auto res = min_dense_size(search_cfg(f2, m, n, 1));
                    if (res.minimum && *res.minimum == (1 << n) && res.proved && res.witness &&
                        is_mrd(MatrixCode(f2, m, n, res.witness->points()), 1).mrd)
                        ++ok;
                }
                SS os;
                os << ok << "/2";
                return {"2/2", os.str()};
            });

    // 11. plane lemma and the affine plane of order 4
    {
        std::optional<PlaneLemmaReport> rep_cache;
        auto plane_report = [&]() -> const PlaneLemmaReport& {
            if (!rep_cache) rep_cache = verify_plane_lemma();
            return *rep_cache;
        };
        h.check("plane_lemma_parts", "sizes 5-8 blocking-set facts hold exhaustively", 60.0,
                [&]() -> Pair {
                    const PlaneLemmaReport& rep = plane_report();
                    SS os;
                    os << "i=" << (rep.part_i ? "ok" : "fail") << " ii="
                       << (rep.part_ii ? "ok" : "fail") << " iii=" << (rep.part_iii ? "ok" : "fail");
                    return {"i=ok ii=ok iii=ok", os.str()};
                });
        h.check("plane_mrd_codes", "the 4-point blocking sets are exactly the 8 MRD codes", 60.0,
                [&]() -> Pair {
                    const PlaneLemmaReport& rep = plane_report();
                    SS os;
                    os << rep.mrd_code_count << " all_mrd=" << (rep.size4_all_mrd ? "yes" : "no");
                    return {"8 all_mrd=yes", os.str()};
                });
        h.check("affine_plane_order4", "12 lines + 8 MRD codes form the affine plane of order 4",
                60.0, [&]() -> Pair {
                    const PlaneLemmaReport& rep = plane_report();
                    return {"affine plane", rep.affine_plane_order4 ? "affine plane" : "violation"};
                });
    }

    // 12. the 16-point vertex example
    h.check("vertex_line_design", "the 16-point subspace meets every line in exactly 2 points",
            10.0, [&]() -> Pair {
                PointSet s = vertex_subspace(f2);
                auto d = is_design(s, 1);
                bool zero_ai = true;
                std::vector<Mat> ai;
                for (const Mat& v : subspaces(f2, 2, 1)) {
                    FlatDescriptor fd{Side::Right, Mat(f2, 2, 3), v, 1};
                    std::vector<Mat> inter;
                    for (const Mat& p : flat_points(fd, 2, 3))
                        if (s.contains(p)) inter.push_back(p);
                    if (inter.size() != 2 || !inter[0].is_zero()) zero_ai = false;
                    if (inter.size() == 2) ai.push_back(inter[1]);
                }
                bool sum_zero =
                    ai.size() == 3 && matadd(matadd(ai[0], ai[1]), ai[2]).is_zero();
                SS os;
                os << "size=" << s.size() << " design=" << (d.design ? "yes" : "no")
                   << " lambda=" << d.lambda.str() << " A_i_sum_zero="
                   << (zero_ai && sum_zero ? "yes" : "no");
                return {"size=16 design=yes lambda=2 A_i_sum_zero=yes", os.str()};
            });
    h.check("vertex_no_mrd_subcode", "the subspace is 1-good but contains no (2,3,1) MRD code",
            10.0, [&]() -> Pair {
                PointSet s = vertex_subspace(f2);
                bool good = is_k_good(uniform_over(f2, 2, 3, s.points()), 1).good;
                bool none = !find_mrd_subset(s, 1).has_value();
                SS os;
                os << "1-good=" << (good ? "yes" : "no") << " mrd_subset="
                   << (none ? "none" : "found");
                return {"1-good=yes mrd_subset=none", os.str()};
            });

    // 13. the orthomorphism bridge
    h.check("orthomorphism_roundtrip",
            "x -> xM for the companion of x^2+x+1 is a complete mapping and round-trips", 1.0,
            [&]() -> Pair {
                Mat comp = Mat::from_rows(f2, {{0, 1}, {1, 1}});
                VecMap fm{f2, 2, std::vector<std::uint64_t>(4)};
                for (std::uint64_t x = 0; x < 4; ++x)
                    fm.tbl[x] = matmul(Mat::unpack(f2, 1, 2, x), comp).pack();
                bool complete = is_complete_mapping(fm) && is_orthomorphism(fm);
                MatrixCode c = map_to_mrd(fm);
                bool mrd = is_mrd(c, 1).mrd;
                bool roundtrip = mrd_to_map(c).tbl == fm.tbl;
                SS os;
                os << "complete=" << (complete ? "yes" : "no") << " mrd=" << (mrd ? "yes" : "no")
                   << " roundtrip=" << (roundtrip ? "yes" : "no");
                return {"complete=yes mrd=yes roundtrip=yes", os.str()};
            });
    h.check("identity_not_complete", "the identity map is rejected", 1.0, [&]() -> Pair {
        VecMap id{f2, 2, {0, 1, 2, 3}};
        bool complete = is_complete_mapping(id);
        bool mrd = is_mrd(map_to_mrd(id), 1).mrd;
        SS os;
        os << "complete=" << (complete ? "yes" : "no") << " mrd=" << (mrd ? "yes" : "no");
        return {"complete=no mrd=no", os.str()};
    });

    // 14. exact joint laws and the intersecting-code bound
    h.check("pairwise_independence_2x2", "all pairs of independent rows give the product law 2^{-2n}",
            30.0, [&]() -> Pair {
                MatrixDistribution d = uniform_over_space(f2, 2, 2);
                VectorSet u(f2, 2,
                            {Mat::from_rows(f2, {{0, 1}}), Mat::from_rows(f2, {{1, 0}}),
                             Mat::from_rows(f2, {{1, 1}})},
                            VectorSetProperty::AnyKIndependent, 2);
                bool ok = joint_law_check(d, u, JointLawMode::Linear, 2).ok;
                return {"product law holds", ok ? "product law holds" : "violation"};
            });
    h.check("triple_law_2x2", "translated triples give the product law 2^{-3n}", 30.0,
            [&]() -> Pair {
                MatrixDistribution d = uniform_over_space(f2, 2, 2);
                VectorSet u(f2, 2,
                            {Mat::from_rows(f2, {{0, 0}}), Mat::from_rows(f2, {{0, 1}}),
                             Mat::from_rows(f2, {{1, 0}}), Mat::from_rows(f2, {{1, 1}})},
                            VectorSetProperty::CapCondition, 2);
                bool ok = joint_law_check(d, u, JointLawMode::Affine, 2).ok;
                return {"product law holds", ok ? "product law holds" : "violation"};
            });
    h.check("intersecting_bound_2x3", "exact failure probabilities stay below the closed-form bound",
            30.0, [&]() -> Pair {
                MatrixDistribution d = uniform_over_space(f2, 2, 3);
                Rational e1 = intersecting_failure_exact(d, 1);
                Rational e2 = intersecting_failure_exact(d, 2);
                bool ok = e1 <= intersecting_failure_bound(2, 3, 2, 1) &&
                          e2 <= intersecting_failure_bound(2, 3, 2, 2);
                SS os;
                os << "exact k1=" << rat_str(e1) << " k2=" << rat_str(e2)
                   << " bounded=" << (ok ? "yes" : "no");
                return {"exact k1=0 k2=9/16 bounded=yes", os.str()};
            });

    // 15. extraction procedure verification
    h.check("fset_extract_100trials",
            "extraction output passes the independent verifier on 100 seeded trials", 30.0,
            [&]() -> Pair {
                PatternFamily singles = singleton_family(2, 2);
                PatternFamily sep = separating_2_1();
                std::mt19937_64 rng(20110501);
                int ok = 0;
                for (int t = 0; t < 100; ++t) {
                    std::vector<Mat> c;
                    for (int i = 0; i < 8; ++i) c.push_back(Mat::unpack(f2, 1, 4, rng() % 16));
                    bool a = is_f_set(f_set_extract(c, singles).kept, singles);
                    std::vector<Mat> c3;
                    for (int i = 0; i < 8; ++i) c3.push_back(Mat::unpack(f2, 1, 4, rng() % 16));
                    bool b = is_f_set(f_set_extract(c3, sep).kept, sep);
                    if (a && b) ++ok;
                }
                SS os;
                os << ok << "/100";
                return {"100/100", os.str()};
            });

    if (!fast) {
        h.check("mc_intersecting_convergence",
                "Monte Carlo failure estimates track the exact sweep within 4 sigma", 60.0,
                [&]() -> Pair {
                    MatrixDistribution d = uniform_over_space(f2, 2, 3);
                    Rational exact = intersecting_failure_exact(d, 2);
                    const std::uint64_t trials = 4096;
                    bool ok = true;
                    for (std::uint64_t seed : {1ull, 2ull, 42ull}) {
                        Rational est = intersecting_failure_estimate(d, 2, trials, seed);
                        double p = est.convert_to<double>();
                        double tol = 4.0 * std::sqrt(p * (1 - p) / double(trials));
                        if (std::abs((est - exact).convert_to<double>()) > tol) ok = false;
                    }
                    return {"within tolerance", ok ? "within tolerance" : "off"};
                });
    }

    return h.report;
}

} // namespace mrdlab
