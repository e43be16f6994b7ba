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

#include "mrdlab/search.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>

namespace mrdlab {

namespace {

struct BudgetStop {};

// Incidence of points of GF(q)^{m x n} with the (m-k)-flats of RAG, plus
// the bounding structures. Point ids are packed matrix indices.
struct SearchContext {
    explicit SearchContext(Field field) : f(std::move(field)) {}

    Field f;
    int m = 0, n = 0, k = 0, r = 0;
    std::uint32_t N = 0;
    std::vector<FlatDescriptor> flats;
    std::vector<std::vector<std::uint16_t>> flat_pts;
    std::vector<int> class_of;                       // flat -> parallel class
    int num_classes = 0;
    std::vector<std::vector<std::uint32_t>> point_flats; // point -> one flat per class

    // one-dimension-up completion bound: for each super class, the
    // partition into super flats, the per-point local line masks, and the
    // exact minimum completion table f over local blocked masks
    struct SuperClass {
        std::vector<std::uint32_t> h_of;   // point -> super flat id
        std::vector<std::uint32_t> lm_of;  // point -> local blocked bits
        std::vector<std::uint8_t> fmin;    // 2^L exact completions
        int num_h = 0;
        int L = 0;
    };
    std::vector<SuperClass> supers;

    // symmetry group as point permutations (flattened |G| x N)
    std::vector<std::uint8_t> group;
    size_t group_size = 0;
};

void build_group(SearchContext& ctx) {
    const Field& f = ctx.f;
    if (ctx.N > 256) raise(Errc::EnumerationTooLarge, "symmetry needs at most 256 points");
    auto gl_m = enumerate_full_rank(f, ctx.m, ctx.m);
    auto gl_n = enumerate_full_rank(f, ctx.n, ctx.n);
    std::uint64_t gsize = std::uint64_t(gl_m.size()) * gl_n.size() * ctx.N;
    if (gsize > (std::uint64_t(1) << 21))
        raise(Errc::EnumerationTooLarge, "symmetry group too large; rerun with symmetry off");

    // translation composition on packed indices
    std::vector<std::uint8_t> trans(size_t(ctx.N) * ctx.N);
    for (std::uint32_t a = 0; a < ctx.N; ++a) {
        Mat ma = Mat::unpack(f, ctx.m, ctx.n, a);
        for (std::uint32_t c = 0; c < ctx.N; ++c)
            trans[size_t(c) * ctx.N + a] =
                std::uint8_t(matadd(ma, Mat::unpack(f, ctx.m, ctx.n, c)).pack());
    }

    ctx.group.resize(size_t(gsize) * ctx.N);
    std::vector<std::uint8_t> lin(ctx.N);
    size_t g = 0;
    for (const Mat& u : gl_m)
        for (const Mat& v : gl_n) {
            for (std::uint32_t p = 0; p < ctx.N; ++p)
                lin[p] = std::uint8_t(matmul(matmul(u, Mat::unpack(f, ctx.m, ctx.n, p)), v).pack());
            for (std::uint32_t c = 0; c < ctx.N; ++c) {
                std::uint8_t* row = &ctx.group[g * ctx.N];
                const std::uint8_t* tc = &trans[size_t(c) * ctx.N];
                for (std::uint32_t p = 0; p < ctx.N; ++p) row[p] = tc[lin[p]];
                ++g;
            }
        }
    ctx.group_size = g;
}

SearchContext build_context(const Field& f, int m, int n, int k, bool symmetry) {
    if (k < 1 || k > std::min(m, n)) raise(Errc::ParameterOutOfRange, "search k");
    SearchContext ctx(f);
    ctx.m = m;
    ctx.n = n;
    ctx.k = k;
    ctx.r = m - k;
    std::uint64_t total = space_size_guarded(f, m, n, 4096);
    ctx.N = std::uint32_t(total);

    ctx.flats = enumerate_flats(f, m, n, Side::Right, ctx.r);
    ctx.flat_pts.resize(ctx.flats.size());
    ctx.class_of.resize(ctx.flats.size());
    int cls = -1;
    std::uint64_t prev_dir = ~std::uint64_t(0);
    for (size_t i = 0; i < ctx.flats.size(); ++i) {
        std::uint64_t dir = ctx.flats[i].direction.pack() + 1; // +1 to distinguish from sentinel
        if (dir != prev_dir) {
            ++cls;
            prev_dir = dir;
        }
        ctx.class_of[i] = cls;
        for (const Mat& p : flat_points(ctx.flats[i], m, n))
            ctx.flat_pts[i].push_back(std::uint16_t(p.pack()));
    }
    ctx.num_classes = cls + 1;

    ctx.point_flats.assign(ctx.N, {});
    for (std::uint32_t p = 0; p < ctx.N; ++p) ctx.point_flats[p].reserve(size_t(ctx.num_classes));
    for (size_t i = 0; i < ctx.flats.size(); ++i)
        for (std::uint16_t p : ctx.flat_pts[i]) ctx.point_flats[p].push_back(std::uint32_t(i));

    // super-flat completion tables, one dimension up, when small enough
    if (ctx.r >= 1 && ctx.r + 1 < m) {
        for (const Mat& w : subspaces(f, m, ctx.r + 1)) {
            // local sub-directions: r-dim subspaces contained in W
            std::vector<Mat> subdirs;
            for (const Mat& v : subspaces(f, m, ctx.r)) {
                Mat stacked(f, v.rows() + w.rows(), m);
                for (int i = 0; i < v.rows(); ++i)
                    for (int j = 0; j < m; ++j) stacked.set(i, j, v.at(i, j));
                for (int i = 0; i < w.rows(); ++i)
                    for (int j = 0; j < m; ++j) stacked.set(v.rows() + i, j, w.at(i, j));
                if (rank(stacked) == w.rows()) subdirs.push_back(v);
            }
            std::uint64_t hsize = 1;
            for (int i = 0; i < (ctx.r + 1) * n; ++i) hsize *= f.q();
            std::uint64_t cosets_per_dir = hsize;
            for (int i = 0; i < ctx.r * n; ++i) cosets_per_dir /= f.q();
            std::uint64_t L = std::uint64_t(subdirs.size()) * cosets_per_dir;
            if (L > 16) continue;

            SearchContext::SuperClass sc;
            sc.L = int(L);
            sc.h_of.assign(ctx.N, ~std::uint32_t(0));
            sc.lm_of.assign(ctx.N, 0);

            // super flats = cosets of the W-submodule, through 0 first
            std::vector<std::uint16_t> h0;
            {
                std::vector<bool> seen(ctx.N, false);
                std::vector<std::uint32_t> reps;
                for (std::uint32_t p = 0; p < ctx.N; ++p) {
                    if (seen[p]) continue;
                    FlatDescriptor hd{Side::Right, Mat::unpack(f, m, n, p), w, ctx.r + 1};
                    int hid = sc.num_h++;
                    reps.push_back(p);
                    for (const Mat& pt : flat_points(hd, m, n)) {
                        seen[pt.pack()] = true;
                        sc.h_of[pt.pack()] = std::uint32_t(hid);
                        if (hid == 0) h0.push_back(std::uint16_t(pt.pack()));
                    }
                }
                // local flats of the through-zero super flat, in canonical order
                std::vector<std::vector<std::uint16_t>> local_pts;
                int local_id = 0;
                std::vector<std::uint32_t> lm0(ctx.N, 0);
                for (const Mat& v : subdirs) {
                    std::vector<bool> seen_local(ctx.N, false);
                    for (std::uint16_t p : h0) {
                        if (seen_local[p]) continue;
                        FlatDescriptor ld{Side::Right, Mat::unpack(f, m, n, p), v, ctx.r};
                        std::vector<std::uint16_t> pts;
                        for (const Mat& pt : flat_points(ld, m, n)) {
                            seen_local[pt.pack()] = true;
                            lm0[pt.pack()] |= std::uint32_t(1) << local_id;
                            pts.push_back(std::uint16_t(pt.pack()));
                        }
                        local_pts.push_back(std::move(pts));
                        ++local_id;
                    }
                }
                if (local_id != sc.L) raise(Errc::Internal, "local flat count mismatch");

                // translate the through-zero labeling to every coset
                for (std::uint32_t p = 0; p < ctx.N; ++p) {
                    std::uint32_t hid = sc.h_of[p];
                    Mat diff = matsub(Mat::unpack(f, m, n, p), Mat::unpack(f, m, n, reps[hid]));
                    sc.lm_of[p] = lm0[diff.pack()];
                }

                // exact completion table by direct search over masks
                const std::uint32_t full = (std::uint32_t(1) << sc.L) - 1;
                sc.fmin.assign(size_t(full) + 1, 0);
                for (std::uint32_t mask = full; mask-- > 0;) {
                    int first = -1;
                    for (int j = 0; j < sc.L; ++j)
                        if (!(mask & (std::uint32_t(1) << j))) {
                            first = j;
                            break;
                        }
                    std::uint8_t best = 255;
                    for (std::uint16_t pt : local_pts[size_t(first)])
                        best = std::min(best, sc.fmin[mask | lm0[pt]]);
                    sc.fmin[mask] = std::uint8_t(best + 1);
                }
            }
            ctx.supers.push_back(std::move(sc));
        }
    }

    if (symmetry) build_group(ctx);
    return ctx;
}

// Depth-first decision search: is there a blocking set of size <= goal?
struct Solver {
    const SearchContext& ctx;
    int goal;
    bool symmetry;
    std::uint64_t seed;
    std::uint64_t* nodes;
    std::uint64_t node_budget;
    std::mt19937_64 rng;

    std::vector<std::uint16_t> chosen;
    std::vector<std::uint16_t> cover;           // per flat
    std::vector<int> unblocked_in_class;
    std::uint64_t total_unblocked = 0;
    std::vector<std::vector<std::uint32_t>> blocked_local; // per super class, per super flat
    std::vector<int> deficit;                   // per super class
    std::vector<std::vector<std::uint32_t>> stab_stack;
    std::vector<std::uint16_t> witness;

    Solver(const SearchContext& c, int g, bool sym, std::uint64_t sd, std::uint64_t* nd,
           std::uint64_t budget)
        : ctx(c), goal(g), symmetry(sym && c.group_size > 0), seed(sd), nodes(nd),
          node_budget(budget), rng(sd) {
        cover.assign(ctx.flats.size(), 0);
        unblocked_in_class.assign(size_t(ctx.num_classes), 0);
        for (size_t i = 0; i < ctx.flats.size(); ++i) ++unblocked_in_class[size_t(ctx.class_of[i])];
        total_unblocked = ctx.flats.size();
        blocked_local.resize(ctx.supers.size());
        deficit.assign(ctx.supers.size(), 0);
        for (size_t s = 0; s < ctx.supers.size(); ++s) {
            blocked_local[s].assign(size_t(ctx.supers[s].num_h), 0);
            deficit[s] = int(ctx.supers[s].fmin[0]) * ctx.supers[s].num_h;
        }
        if (symmetry) {
            std::vector<std::uint32_t> all(ctx.group_size);
            std::iota(all.begin(), all.end(), 0);
            stab_stack.push_back(std::move(all));
        }
    }

    int bound() const {
        int need = 0;
        for (int c = 0; c < ctx.num_classes; ++c) need = std::max(need, unblocked_in_class[size_t(c)]);
        for (size_t s = 0; s < ctx.supers.size(); ++s) need = std::max(need, deficit[s]);
        return need;
    }

    struct Undo {
        std::uint32_t sc, h, old_mask;
        int old_deficit;
    };

    void add_point(std::uint16_t p, std::vector<Undo>& undo) {
        chosen.push_back(p);
        for (std::uint32_t fid : ctx.point_flats[p])
            if (cover[fid]++ == 0) {
                --unblocked_in_class[size_t(ctx.class_of[fid])];
                --total_unblocked;
            }
        for (std::uint32_t s = 0; s < ctx.supers.size(); ++s) {
            const auto& sc = ctx.supers[s];
            std::uint32_t h = sc.h_of[p];
            std::uint32_t old = blocked_local[s][h];
            std::uint32_t nw = old | sc.lm_of[p];
            if (nw != old) {
                undo.push_back({s, h, old, deficit[s]});
                deficit[s] += int(sc.fmin[nw]) - int(sc.fmin[old]);
                blocked_local[s][h] = nw;
            }
        }
    }

    void remove_point(std::uint16_t p, const std::vector<Undo>& undo) {
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
            blocked_local[it->sc][it->h] = it->old_mask;
            deficit[it->sc] = it->old_deficit;
        }
        for (std::uint32_t fid : ctx.point_flats[p])
            if (--cover[fid] == 0) {
                ++unblocked_in_class[size_t(ctx.class_of[fid])];
                ++total_unblocked;
            }
        chosen.pop_back();
    }

    bool dfs() {
        if (++*nodes > node_budget) throw BudgetStop{};
        if (total_unblocked == 0) {
            witness = chosen;
            return true;
        }
        if (int(chosen.size()) + bound() > goal) return false;

        size_t branch = 0;
        while (branch < ctx.flats.size() && cover[branch]) ++branch;

        std::vector<std::uint16_t> cands(ctx.flat_pts[branch]);
        const std::vector<std::uint32_t>* stab = symmetry ? &stab_stack.back() : nullptr;
        if (stab && stab->size() > 1) {
            std::vector<std::uint16_t> kept;
            std::vector<bool> marked(ctx.N, false);
            for (std::uint16_t p : cands) {
                if (marked[p]) continue;
                kept.push_back(p);
                for (std::uint32_t g : *stab) marked[ctx.group[size_t(g) * ctx.N + p]] = true;
            }
            cands = std::move(kept);
        }
        if (seed) std::shuffle(cands.begin(), cands.end(), rng);

        std::vector<Undo> undo;
        undo.reserve(ctx.supers.size());
        for (std::uint16_t p : cands) {
            undo.clear();
            add_point(p, undo);
            bool pushed = false;
            if (stab && stab->size() > 1) {
                std::vector<std::uint32_t> next;
                for (std::uint32_t g : *stab)
                    if (ctx.group[size_t(g) * ctx.N + p] == p) next.push_back(g);
                stab_stack.push_back(std::move(next));
                stab = &stab_stack[stab_stack.size() - 2];
                pushed = true;
            }
            bool found = dfs();
            if (pushed) stab_stack.pop_back();
            if (found) return true; // witness recorded; state left as-is by design
            remove_point(p, undo);
        }
        return false;
    }

    // first-unblocked-flat descent picking the point that blocks the most
    // flats; yields the initial upper bound for the minimum search
    std::vector<std::uint16_t> greedy() {
        std::vector<Undo> undo;
        while (total_unblocked > 0) {
            size_t branch = 0;
            while (branch < ctx.flats.size() && cover[branch]) ++branch;
            std::uint16_t best_p = 0;
            int best_gain = -1;
            for (std::uint16_t p : ctx.flat_pts[branch]) {
                int gain = 0;
                for (std::uint32_t fid : ctx.point_flats[p])
                    if (!cover[fid]) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_p = p;
                }
            }
            undo.clear();
            add_point(best_p, undo);
        }
        return chosen;
    }
};

PointSet points_from_ids(const SearchContext& ctx, const std::vector<std::uint16_t>& ids) {
    std::vector<Mat> pts;
    pts.reserve(ids.size());
    for (std::uint16_t p : ids) pts.push_back(Mat::unpack(ctx.f, ctx.m, ctx.n, p));
    return PointSet(ctx.f, ctx.m, ctx.n, std::move(pts));
}

} // namespace

SearchResult min_dense_size(const SearchConfig& cfg) {
    SearchContext ctx = build_context(cfg.f, cfg.m, cfg.n, cfg.k, cfg.symmetry);
    SearchResult res;

    if (cfg.target == SearchConfig::Target::DecideSize) {
        if (cfg.decide_size < 1) raise(Errc::ParameterOutOfRange, "decide size must be >= 1");
        Solver sv(ctx, cfg.decide_size, cfg.symmetry, cfg.seed, &res.nodes, cfg.node_budget);
        try {
            bool ok = sv.dfs();
            res.verdict = ok ? Verdict::Feasible : Verdict::Infeasible;
            res.proved = true;
            if (ok) res.witness = points_from_ids(ctx, sv.witness);
        } catch (const BudgetStop&) {
            res.verdict = Verdict::Unknown;
            res.proved = false;
        }
        return res;
    }

    // initial witness from the greedy descent
    std::vector<std::uint16_t> best;
    {
        Solver sv(ctx, 0, false, 0, &res.nodes, ~std::uint64_t(0));
        best = sv.greedy();
    }
    int root_lb;
    {
        Solver sv(ctx, 0, false, 0, &res.nodes, ~std::uint64_t(0));
        root_lb = sv.bound();
    }

    for (int s = root_lb; s < int(best.size()); ++s) {
        Solver sv(ctx, s, cfg.symmetry, cfg.seed, &res.nodes, cfg.node_budget);
        try {
            if (sv.dfs()) {
                res.minimum = int(sv.witness.size());
                res.witness = points_from_ids(ctx, sv.witness);
                res.verdict = Verdict::Feasible;
                res.proved = true;
                return res;
            }
        } catch (const BudgetStop&) {
            // best-so-far outcome without a proof
            res.witness = points_from_ids(ctx, best);
            res.verdict = Verdict::Unknown;
            res.proved = false;
            return res;
        }
    }
    res.minimum = int(best.size());
    res.witness = points_from_ids(ctx, best);
    res.verdict = Verdict::Feasible;
    res.proved = true;
    return res;
}

std::optional<MatrixCode> find_mrd_subset(const PointSet& s, int k, std::uint64_t node_budget) {
    const Field& f = s.field();
    const int mn = std::min(s.m(), s.n()), mx = std::max(s.m(), s.n());
    if (k < 1 || k > mn) raise(Errc::ParameterOutOfRange, "find_mrd_subset k");
    Int target_big = ipow(Int(f.q()), unsigned(k * mx));
    if (target_big > Int(s.size())) return std::nullopt;
    const size_t target = size_t(std::uint64_t(target_big));
    const int need = mn - k + 1;

    const size_t nn = s.size();
    const size_t words = (nn + 63) / 64;
    std::vector<std::uint64_t> adj(nn * words, 0);
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = i + 1; j < nn; ++j)
            if (rank(matsub(s.points()[i], s.points()[j])) >= need) {
                adj[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
                adj[j * words + i / 64] |= std::uint64_t(1) << (i % 64);
            }

    std::vector<size_t> clique;
    std::vector<std::uint64_t> cand(words);
    for (size_t w = 0; w < words; ++w) cand[w] = ~std::uint64_t(0);
    if (nn % 64) cand[words - 1] = (std::uint64_t(1) << (nn % 64)) - 1;

    std::uint64_t nodes = 0;
    // extend the clique with candidates above the last chosen index
    auto popcount_from = [&](const std::vector<std::uint64_t>& c, size_t from) {
        size_t total = 0;
        for (size_t w = 0; w < words; ++w) {
            std::uint64_t word = c[w];
            if (w == from / 64) word &= ~((std::uint64_t(1) << (from % 64)) - 1);
            if (w < from / 64) continue;
            total += size_t(std::popcount(word));
        }
        return total;
    };

    std::function<bool(std::vector<std::uint64_t>&, size_t)> extend =
        [&](std::vector<std::uint64_t>& cands, size_t from) -> bool {
        if (++nodes > node_budget) raise(Errc::BudgetExhausted, "find_mrd_subset budget");
        if (clique.size() == target) return true;
        if (clique.size() + popcount_from(cands, from) < target) return false;
        for (size_t i = from; i < nn; ++i) {
            if (!(cands[i / 64] >> (i % 64) & 1)) continue;
            clique.push_back(i);
            std::vector<std::uint64_t> next(words);
            for (size_t w = 0; w < words; ++w) next[w] = cands[w] & adj[i * words + w];
            if (extend(next, i + 1)) return true;
            clique.pop_back();
        }
        return false;
    };

    if (!extend(cand, 0)) return std::nullopt;
    std::vector<Mat> words_out;
    for (size_t i : clique) words_out.push_back(s.points()[i]);
    return MatrixCode(f, s.m(), s.n(), std::move(words_out));
}

PlaneLemmaReport verify_plane_lemma() {
    Field f = Field::make(2, 1);
    const int N = 16;
    auto flats = enumerate_flats(f, 2, 2, Side::Right, 1);
    std::vector<std::uint32_t> line_mask;
    for (const auto& fd : flats) {
        std::uint32_t mask = 0;
        for (const Mat& p : flat_points(fd, 2, 2)) mask |= std::uint32_t(1) << p.pack();
        line_mask.push_back(mask);
    }
    auto blocks_all = [&](std::uint32_t set) {
        for (std::uint32_t lm : line_mask)
            if (!(set & lm)) return false;
        return true;
    };

    bool collin[16][16] = {};
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (a != b)
                collin[a][b] =
                    rank(matsub(Mat::unpack(f, 2, 2, std::uint64_t(a)), Mat::unpack(f, 2, 2, std::uint64_t(b)))) == 1;

    PlaneLemmaReport rep;

    // 4-point blocking sets, which must be exactly the MRD codes
    std::vector<std::uint32_t> mrd_masks;
    rep.size4_all_mrd = true;
    for (std::uint32_t set = 0; set < (1u << 16); ++set) {
        if (std::popcount(set) != 4) continue;
        if (!blocks_all(set)) continue;
        mrd_masks.push_back(set);
        std::vector<Mat> wordv;
        for (int p = 0; p < N; ++p)
            if (set >> p & 1) wordv.push_back(Mat::unpack(f, 2, 2, std::uint64_t(p)));
        if (!is_mrd(MatrixCode(f, 2, 2, std::move(wordv)), 1).mrd) rep.size4_all_mrd = false;
    }
    rep.mrd_code_count = mrd_masks.size();
    rep.blocking_sets_of_size[4] = mrd_masks.size();

    rep.part_i = rep.part_ii = rep.part_iii = true;
    for (std::uint32_t set = 0; set < (1u << 16); ++set) {
        int size = std::popcount(set);
        if (size < 5 || size > 8) continue;
        if (!blocks_all(set)) continue;
        ++rep.blocking_sets_of_size[size];
        if (size == 5) {
            bool contains = false, disjoint = false;
            for (std::uint32_t cm : mrd_masks) {
                if ((set & cm) == cm) contains = true;
                if ((set & cm) == 0) disjoint = true;
            }
            if (!(contains && disjoint)) rep.part_i = false;
        } else if (size == 6) {
            bool disjoint = false;
            for (std::uint32_t cm : mrd_masks)
                if ((set & cm) == 0) disjoint = true;
            if (!disjoint) rep.part_ii = false;
        } else {
            bool found = false;
            for (int a = 0; a < N && !found; ++a) {
                if (set >> a & 1) continue;
                for (int b = a + 1; b < N && !found; ++b) {
                    if ((set >> b & 1) || collin[a][b]) continue;
                    for (int c = b + 1; c < N && !found; ++c) {
                        if ((set >> c & 1) || collin[a][c] || collin[b][c]) continue;
                        found = true;
                    }
                }
            }
            if (!found) rep.part_iii = false;
        }
    }

    // the 12 lines and 8 MRD codes as the affine plane of order 4
    std::vector<std::uint32_t> plane_lines = line_mask;
    plane_lines.insert(plane_lines.end(), mrd_masks.begin(), mrd_masks.end());
    rep.affine_plane_order4 = plane_lines.size() == 20;
    for (int a = 0; a < N && rep.affine_plane_order4; ++a)
        for (int b = a + 1; b < N; ++b) {
            int through = 0;
            for (std::uint32_t lm : plane_lines)
                if ((lm >> a & 1) && (lm >> b & 1)) ++through;
            if (through != 1) {
                rep.affine_plane_order4 = false;
                break;
            }
        }
    return rep;
}

} // namespace mrdlab
