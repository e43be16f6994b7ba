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

#include "mrdlab/geometry.hpp"

namespace mrdlab {

struct SearchConfig {
    Field f;
    int m = 0, n = 0, k = 1;

    enum class Target { FindMinimum, DecideSize };
    Target target = Target::FindMinimum;
    int decide_size = 0; // for DecideSize: is there a k-dense set of size <= s?

    bool symmetry = true;
    std::uint64_t node_budget = std::uint64_t(1) << 40;
    std::uint64_t seed = 0; // 0 = canonical exploration order
};

enum class Verdict { Feasible, Infeasible, Unknown };

struct SearchResult {
    std::optional<int> minimum;       // FindMinimum mode, when proved or witnessed
    Verdict verdict = Verdict::Unknown; // DecideSize mode
    std::optional<PointSet> witness;
    std::uint64_t nodes = 0;
    bool proved = false; // search space exhausted under the declared symmetry group
};

/// Exact minimum size of a k-dense subset of GF(q)^{m x n} (equivalently,
/// a minimum blocking set with respect to (m-k)-flats of RAG(m,n,q)).
/// Backtracking branches on the canonically first unblocked flat; pruning
/// uses per-parallel-class counts of unblocked flats plus exact blocking
/// completions inside the flats one dimension up; symmetry reduction uses
/// orbit representatives under translations X -> X + C combined with
/// X -> U X V for U in GL_m, V in GL_n.
SearchResult min_dense_size(const SearchConfig& cfg);

/// Searches S for a subset forming an (m,n,k) MRD code, by exhaustive
/// clique search on the graph whose edges join matrices at rank distance
/// >= min(m,n)-k+1. Throws BudgetExhausted when inconclusive.
std::optional<MatrixCode> find_mrd_subset(const PointSet& s, int k,
                                          std::uint64_t node_budget = std::uint64_t(1) << 32);

/// Exhaustive facts about small blocking sets in the plane RAG(2,2,GF(2)),
/// together with the affine-plane-of-order-4 structure formed by its 12
/// lines and 8 MRD codes.
struct PlaneLemmaReport {
    std::uint64_t blocking_sets_of_size[9] = {0}; // index = size, 4..8 used
    bool size4_all_mrd = false;          // the 4-point blocking sets are exactly the MRD codes
    std::uint64_t mrd_code_count = 0;    // should be 8
    bool part_i = false;   // size 5: contains an MRD code and is disjoint from another
    bool part_ii = false;  // size 6: disjoint from an MRD code
    bool part_iii = false; // sizes 7-8: three mutually non-collinear points outside
    bool affine_plane_order4 = false; // 20 lines, any 2 points on exactly 1
};

PlaneLemmaReport verify_plane_lemma();

} // namespace mrdlab
