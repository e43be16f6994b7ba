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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mrdlab/battery.hpp"
#include "mrdlab/homweight.hpp"
#include "mrdlab/io.hpp"
#include "mrdlab/randomcoding.hpp"
#include "mrdlab/search.hpp"

using json = nlohmann::json;
using namespace mrdlab;

namespace {

struct GlobalOpts {
    unsigned q = 2;
    std::string poly;
    std::uint64_t cap = kDefaultEnumCap;
    std::uint64_t seed = 0;
    int threads = 0;
};

Field field_from(const GlobalOpts& g) {
    if (g.poly.empty()) return Field::of_order(g.q);
    std::vector<unsigned> coeffs;
    std::istringstream ss(g.poly);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(unsigned(std::stoul(tok)));
    return Field::of_order(g.q, coeffs);
}

json mat_to_json(const Mat& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(unsigned(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact laboratory for rank-metric codes, k-good random matrices, and matrix affine geometries"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--q", g.q, "field order (prime power)")->capture_default_str();
    app.add_option("--poly", g.poly, "modulus polynomial, constant term first, comma separated");
    app.add_option("--cap", g.cap, "enumeration cap in states")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized procedures")->capture_default_str();
    app.add_option("--threads", g.threads,
                   "worker threads (outputs are identical for any value)");

    // count ------------------------------------------------------------
    auto* count = app.add_subcommand("count", "closed-form counts with optional brute-force oracles");
    count->require_subcommand(1);

    struct {
        int n = 0, m = 0, k = 0, l = 0;
        bool brute = false;
    } c;
    auto add_count_common = [&](CLI::App* sub) {
        sub->add_flag("--brute", c.brute, "also run the enumeration oracle");
    };

    auto* cg = count->add_subcommand("gaussian", "[n choose m]_q");
    cg->add_option("--n", c.n)->required();
    cg->add_option("--m", c.m)->required();
    add_count_common(cg);
    cg->callback([&] {
        Field f = field_from(g);
        Int formula = gaussian_binomial(c.n, c.m, g.q);
        json out{{"formula", formula.str()}, {"brute_force", nullptr}, {"match", nullptr}};
        if (c.brute) {
            Int brute = brute_count_subspaces(c.n, c.m, f, g.cap);
            out["brute_force"] = brute.str();
            out["match"] = brute == formula;
        }
        emit(out);
    });

    auto* ci = count->add_subcommand("anzahl-subspaces",
                                     "l-subspaces meeting a fixed m-subspace in dimension k");
    for (auto [name, ptr] : {std::pair{"--k", &c.k}, {"--l", &c.l}, {"--m", &c.m}, {"--n", &c.n}})
        ci->add_option(name, *ptr)->required();
    add_count_common(ci);
    ci->callback([&] {
        Field f = field_from(g);
        Int formula = anzahl_intersecting_subspaces(c.k, c.l, c.m, c.n, g.q);
        json out{{"formula", formula.str()}, {"brute_force", nullptr}, {"match", nullptr}};
        if (c.brute) {
            Int brute = brute_count_intersecting_subspaces(c.k, c.l, c.m, c.n, f);
            out["brute_force"] = brute.str();
            out["match"] = brute == formula;
        }
        emit(out);
    });

    auto* cp = count->add_subcommand("anzahl-products",
                                     "full-rank matrices with prescribed product rank");
    for (auto [name, ptr] : {std::pair{"--k", &c.k}, {"--l", &c.l}, {"--m", &c.m}, {"--n", &c.n}})
        cp->add_option(name, *ptr)->required();
    add_count_common(cp);
    cp->callback([&] {
        Field f = field_from(g);
        Int formula = anzahl_rank_k_products(c.k, c.l, c.m, c.n, g.q);
        json out{{"formula", formula.str()}, {"brute_force", nullptr}, {"match", nullptr}};
        if (c.brute) {
            Int brute = brute_count_rank_k_products(c.k, c.l, c.m, c.n, f, g.cap);
            out["brute_force"] = brute.str();
            out["match"] = brute == formula;
        }
        emit(out);
    });

    auto* co = count->add_subcommand("mrd-orbits", "distinct codes F_m A over full-rank A");
    co->add_option("--m", c.m)->required();
    co->add_option("--n", c.n)->required();
    add_count_common(co);
    co->callback([&] {
        Field f = field_from(g);
        Int formula = mrd_orbit_count(c.m, c.n, g.q);
        json out{{"formula", formula.str()}, {"brute_force", nullptr}, {"match", nullptr}};
        if (c.brute) {
            Int brute = brute_mrd_orbit_count(c.m, c.n, f, g.cap);
            out["brute_force"] = brute.str();
            out["match"] = brute == formula;
        }
        emit(out);
    });

    // code ---------------------------------------------------------------
    auto* code = app.add_subcommand("code", "rank-metric code construction and verification");
    code->require_subcommand(1);
    struct {
        int m = 0, n = 0, k = 1;
        std::string out, in;
    } cd;

    auto* cgab = code->add_subcommand("gabidulin", "build a Gabidulin MRD code");
    cgab->add_option("--m", cd.m)->required();
    cgab->add_option("--n", cd.n)->required();
    cgab->add_option("--k", cd.k)->required();
    cgab->add_option("--out", cd.out, "output matrix-list file")->required();
    cgab->callback([&] {
        Field f = field_from(g);
        MatrixCode codev = gabidulin(cd.m, cd.n, cd.k, f, g.cap);
        std::ostringstream os;
        write_code(os, codev);
        write_text_file(cd.out, os.str());
        write_text_file(cd.out + ".json", code_sidecar_json(codev, cd.k) + "\n");
        emit(json{{"written", cd.out}, {"codewords", codev.size()}});
    });

    auto* cchk = code->add_subcommand("check", "verify the MRD property of a stored code");
    cchk->add_option("--in", cd.in)->required();
    cchk->add_option("--k", cd.k)->required();
    cchk->callback([&] {
        MatrixListFile file = read_matrix_list_file(cd.in);
        MatrixCode codev(file.f, file.m, file.n, file.mats);
        auto rep = is_mrd(codev, cd.k, g.cap);
        json out{{"is_mrd", rep.mrd},
                 {"rank_distance", rank_distance(codev)},
                 {"linear", codev.is_linear()}};
        if (!rep.mrd) {
            out["reason"] = rep.reason;
            if (rep.witness)
                out["witness"] = json{{"x", mat_to_json(rep.witness->first)},
                                      {"y", mat_to_json(rep.witness->second)}};
        }
        emit(out);
    });

    // dist ---------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "distribution checks");
    dist->require_subcommand(1);
    struct {
        int k = 1;
        std::string in, uniform;
    } dc;
    auto* dchk = dist->add_subcommand("check", "exact k-goodness verdict");
    dchk->add_option("--k", dc.k)->required();
    dchk->add_option("--in", dc.in, "distribution file");
    dchk->add_option("--uniform", dc.uniform, "point-set file; check the uniform distribution on it");
    dchk->callback([&] {
        if (dc.in.empty() == dc.uniform.empty())
            throw CLI::ValidationError("dist check", "exactly one of --in or --uniform is required");
        MatrixDistribution d = dc.in.empty()
                                   ? [&] {
                                         PointSet s = read_pointset_file(dc.uniform);
                                         return uniform_over(s.field(), s.m(), s.n(), s.points());
                                     }()
                                   : read_distribution_file(dc.in);
        auto res = is_k_good(d, dc.k, g.cap);
        json out{{"k_good", res.good}};
        if (res.witness)
            out["witness"] = json{{"M", mat_to_json(res.witness->M)},
                                  {"K", mat_to_json(res.witness->K)},
                                  {"prob", rat_str(res.witness->prob)}};
        emit(out);
    });

    // homweight ------------------------------------------------------------
    auto* hw = app.add_subcommand("homweight", "homogeneous weights");
    hw->require_subcommand(1);
    struct {
        int m = 0, n = 0;
        std::string side = "left";
    } hwv;
    auto* hwt = hw->add_subcommand("table", "normalized rank -> weight table (TSV)");
    hwt->add_option("--m", hwv.m)->required();
    hwt->add_option("--n", hwv.n)->required();
    hwt->add_option("--side", hwv.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    hwt->callback([&] {
        Side side = hwv.side == "left" ? Side::Left : Side::Right;
        Rational total = total_weight(side, hwv.m, hwv.n, g.q);
        std::cout << "rank\tweight\n";
        for (int r = 0; r <= std::min(hwv.m, hwv.n); ++r) {
            Rational w = hom_weight_by_rank(side, hwv.m, hwv.n, g.q, r) / total;
            std::cout << r << "\t" << rat_str(w) << "\n";
        }
    });

    // geom ---------------------------------------------------------------
    auto* geom = app.add_subcommand("geom", "matrix affine geometry");
    geom->require_subcommand(1);
    struct {
        int m = 0, n = 0, k = 1;
        std::string in;
    } gm;
    auto* gst = geom->add_subcommand("stats", "point/line/plane counts of RAG(m,n,q)");
    gst->add_option("--m", gm.m)->required();
    gst->add_option("--n", gm.n)->required();
    gst->callback([&] {
        json out{{"points", flat_count(gm.m, gm.n, g.q, Side::Right, 0).str()}};
        if (gm.m >= 1) out["lines"] = flat_count(gm.m, gm.n, g.q, Side::Right, 1).str();
        if (gm.m >= 2) out["planes"] = flat_count(gm.m, gm.n, g.q, Side::Right, 2).str();
        emit(out);
    });
    auto* gcd = geom->add_subcommand("check-dense", "k-denseness of a stored point set");
    gcd->add_option("--k", gm.k)->required();
    gcd->add_option("--in", gm.in)->required();
    gcd->callback([&] {
        PointSet s = read_pointset_file(gm.in);
        auto res = is_k_dense(s, gm.k, g.cap);
        json out{{"k_dense", res.dense}};
        if (res.unmet)
            out["unmet_flat"] = json{{"rep", mat_to_json(res.unmet->rep)},
                                     {"direction", mat_to_json(res.unmet->direction)}};
        emit(out);
    });

    // search ---------------------------------------------------------------
    auto* search = app.add_subcommand("search", "exact minimum-size searches");
    search->require_subcommand(1);
    struct {
        int m = 0, n = 0, k = 1, decide = 0;
        std::uint64_t budget = std::uint64_t(1) << 40;
        bool no_symmetry = false;
        std::string witness_out;
    } sc;
    auto* smd = search->add_subcommand("min-dense", "minimum k-dense (blocking) set size");
    smd->add_option("--m", sc.m)->required();
    smd->add_option("--n", sc.n)->required();
    smd->add_option("--k", sc.k)->required();
    smd->add_option("--decide", sc.decide, "decide existence at a fixed size instead of minimizing");
    smd->add_option("--budget-nodes", sc.budget, "node budget");
    smd->add_flag("--no-symmetry", sc.no_symmetry, "disable symmetry reduction");
    smd->add_option("--witness-out", sc.witness_out, "write the witness point set to this file");
    smd->callback([&] {
        SearchConfig cfg{field_from(g)};
        cfg.m = sc.m;
        cfg.n = sc.n;
        cfg.k = sc.k;
        cfg.symmetry = !sc.no_symmetry;
        cfg.node_budget = sc.budget;
        cfg.seed = g.seed;
        if (sc.decide > 0) {
            cfg.target = SearchConfig::Target::DecideSize;
            cfg.decide_size = sc.decide;
        }
        SearchResult res = min_dense_size(cfg);
        json out{{"nodes", res.nodes}, {"proved", res.proved}};
        out["verdict"] = res.verdict == Verdict::Feasible     ? "feasible"
                         : res.verdict == Verdict::Infeasible ? "infeasible"
                                                              : "unknown";
        if (res.minimum)
            out["minimum"] = *res.minimum;
        else
            out["minimum"] = nullptr;
        out["witness_size"] = res.witness ? json(res.witness->size()) : json(nullptr);
        if (res.witness && !sc.witness_out.empty()) {
            std::ostringstream os;
            write_pointset(os, *res.witness);
            write_text_file(sc.witness_out, os.str());
            out["witness_file"] = sc.witness_out;
        }
        emit(out);
    });

    // rc ---------------------------------------------------------------
    auto* rc = app.add_subcommand("rc", "random-coding applications");
    rc->require_subcommand(1);
    struct {
        int k = 2, m = 0, n = 0;
        std::string mode = "linear", dist_file, vectors, family = "singletons";
        bool bound = false, exact = false;
        std::uint64_t trials = 0;
    } rv;

    auto* rjc = rc->add_subcommand("joint-check", "exact joint-law verification");
    rjc->add_option("--mode", rv.mode)->check(CLI::IsMember({"linear", "affine"}));
    rjc->add_option("--k", rv.k)->required();
    rjc->add_option("--dist", rv.dist_file, "distribution file")->required();
    rjc->add_option("--vectors", rv.vectors, "matrix file whose rows are the vectors")->required();
    rjc->callback([&] {
        MatrixDistribution d = read_distribution_file(rv.dist_file);
        MatrixListFile vf = read_matrix_list_file(rv.vectors);
        if (vf.mats.size() != 1) throw Error(Errc::IoError, "vectors file must hold one matrix");
        std::vector<Mat> rows;
        for (int i = 0; i < vf.m; ++i) rows.push_back(vf.mats[0].row(i));
        JointLawMode mode = rv.mode == "linear" ? JointLawMode::Linear : JointLawMode::Affine;
        VectorSet u(vf.f, vf.n, rows,
                    mode == JointLawMode::Linear ? VectorSetProperty::AnyKIndependent
                                                 : VectorSetProperty::CapCondition,
                    rv.k);
        auto res = joint_law_check(d, u, mode, rv.k, g.cap);
        json out{{"ok", res.ok}};
        if (res.witness) {
            json values = json::array();
            for (const Mat& v : res.witness->values) values.push_back(mat_to_json(v));
            out["witness"] = json{{"indices", res.witness->indices},
                                  {"values", values},
                                  {"prob", rat_str(res.witness->prob)}};
        }
        emit(out);
    });

    auto* rin = rc->add_subcommand("intersect", "k-wise intersecting failure probabilities");
    rin->add_option("--m", rv.m)->required();
    rin->add_option("--n", rv.n)->required();
    rin->add_option("--k", rv.k)->required();
    rin->add_flag("--bound", rv.bound, "closed-form upper bound");
    rin->add_flag("--exact", rv.exact, "exact probability under the distribution");
    rin->add_option("--trials", rv.trials, "Monte Carlo trials (0 = no estimate)");
    rin->add_option("--dist", rv.dist_file, "distribution file (default: uniform over the space)");
    rin->callback([&] {
        json out;
        if (rv.bound) out["bound"] = rat_str(intersecting_failure_bound(rv.m, rv.n, g.q, rv.k));
        if (rv.exact || rv.trials) {
            MatrixDistribution d = rv.dist_file.empty()
                                       ? uniform_over_space(field_from(g), rv.m, rv.n, g.cap)
                                       : read_distribution_file(rv.dist_file);
            if (rv.exact) out["exact"] = rat_str(intersecting_failure_exact(d, rv.k, g.cap));
            if (rv.trials)
                out["estimate"] = rat_str(intersecting_failure_estimate(d, rv.k, rv.trials, g.seed));
        }
        if (out.empty()) throw CLI::ValidationError("rc intersect", "nothing to compute");
        emit(out);
    });

    auto* rfs = rc->add_subcommand("fset-extract", "extract an F-set from stored vectors");
    rfs->add_option("--in", rv.vectors, "matrix file whose rows are the vectors")->required();
    rfs->add_option("--family", rv.family)->check(CLI::IsMember({"singletons", "separating_2_1"}));
    rfs->add_option("--k", rv.k, "tuple length for the singleton family");
    rfs->callback([&] {
        MatrixListFile vf = read_matrix_list_file(rv.vectors);
        if (vf.mats.size() != 1) throw Error(Errc::IoError, "vectors file must hold one matrix");
        std::vector<Mat> rows;
        for (int i = 0; i < vf.m; ++i) rows.push_back(vf.mats[0].row(i));
        PatternFamily fam =
            rv.family == "singletons" ? singleton_family(vf.f.q(), rv.k) : separating_2_1();
        auto res = f_set_extract(rows, fam, g.cap);
        emit(json{{"kept", res.kept.size()},
                  {"removed", res.removed},
                  {"verified", is_f_set(res.kept, fam, g.cap)}});
    });

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    struct {
        bool fast = false, as_json = false, omit_times = false;
    } vf;
    verify->add_flag("--fast", vf.fast, "skip the k=2 minimum search and Monte Carlo");
    verify->add_flag("--json", vf.as_json, "machine-readable report");
    verify->add_flag("--omit-times", vf.omit_times, "suppress wall times (stable output)");
    verify->callback([&] {
        RunReport rep = run_verification_battery(vf.fast);
        if (vf.as_json) {
            json checks = json::array();
            for (const auto& ck : rep.checks) {
                json cj{{"name", ck.name},
                        {"claim", ck.claim},
                        {"expected", ck.expected},
                        {"actual", ck.actual},
                        {"pass", ck.pass}};
                if (!vf.omit_times) cj["seconds"] = ck.seconds;
                checks.push_back(std::move(cj));
            }
            json out{{"checks", checks}, {"all_pass", rep.all_pass}};
            if (!vf.omit_times) out["total_seconds"] = rep.total_seconds;
            emit(out);
        } else {
            for (const auto& ck : rep.checks) {
                std::cout << (ck.pass ? "[PASS] " : "[FAIL] ") << ck.name;
                if (!vf.omit_times) {
                    std::ostringstream ts;
                    ts.setf(std::ios::fixed);
                    ts.precision(3);
                    ts << ck.seconds;
                    std::cout << " (" << ts.str() << "s)";
                }
                if (!ck.pass)
                    std::cout << "  expected: " << ck.expected << "  actual: " << ck.actual;
                std::cout << "\n";
            }
            std::cout << (rep.all_pass ? "ALL CHECKS PASSED" : "FAILURES PRESENT") << " ("
                      << rep.checks.size() << " checks)\n";
        }
        if (!rep.all_pass) throw Error(Errc::Internal, "battery failures");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc_code = app.exit(e);
        return rc_code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json err{{"error", errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", "Unhandled"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
