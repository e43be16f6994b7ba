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

// End-to-end CLI tests against golden files. Every subcommand path is
// exercised; outputs are exact (rationals print as p/q, no floats).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "mrdlab/geometry.hpp"
#include "mrdlab/io.hpp"

#ifndef MRDLAB_BIN
#error "MRDLAB_BIN must be defined"
#endif
#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must be defined"
#endif

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string out;
};

RunOutput run_cli(const std::string& args) {
    std::string cmd = std::string(MRDLAB_BIN) + " " + args + " 2>/tmp/mrdlab_cli_stderr.txt";
    RunOutput r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(is), "missing file: ", path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void compare_golden(const std::string& name, const std::string& actual) {
    std::string expect = read_file(std::string(GOLDEN_DIR) + "/" + name);
    CHECK_MESSAGE(actual == expect, "golden mismatch for ", name, "\n--- actual ---\n", actual,
                  "\n--- expected ---\n", expect);
}

} // namespace

TEST_CASE("geom stats golden") {
    auto r = run_cli("geom stats --m 3 --n 2 --q 2");
    CHECK(r.exit_code == 0);
    compare_golden("geom_stats.txt", r.out);
}

TEST_CASE("homweight tables golden") {
    auto r = run_cli("homweight table --m 2 --n 3 --q 2 --side right");
    CHECK(r.exit_code == 0);
    compare_golden("homweight_right_2x3.txt", r.out);
    auto l = run_cli("homweight table --m 2 --n 3 --q 2 --side left");
    CHECK(l.exit_code == 0);
    compare_golden("homweight_left_2x3.txt", l.out);
}

TEST_CASE("count goldens") {
    compare_golden("count_gaussian.txt", run_cli("count gaussian --n 4 --m 2 --q 2 --brute").out);
    compare_golden("count_anzahl_subspaces.txt",
                   run_cli("count anzahl-subspaces --k 1 --l 2 --m 2 --n 4 --q 2 --brute").out);
    compare_golden("count_anzahl_products.txt",
                   run_cli("count anzahl-products --k 1 --l 1 --m 1 --n 3 --q 2 --brute").out);
    compare_golden("count_mrd_orbits.txt", run_cli("count mrd-orbits --m 3 --n 2 --q 2 --brute").out);
}

TEST_CASE("code build, sidecar, and check goldens") {
    auto r = run_cli("code gabidulin --m 3 --n 2 --k 1 --q 2 --out /tmp/mrdlab_c.mat");
    CHECK(r.exit_code == 0);
    compare_golden("code_gabidulin_321_stdout.txt", r.out);
    compare_golden("code_gabidulin_321.mat", read_file("/tmp/mrdlab_c.mat"));
    compare_golden("code_gabidulin_321_sidecar.json", read_file("/tmp/mrdlab_c.mat.json"));
    compare_golden("code_check.txt", run_cli("code check --in /tmp/mrdlab_c.mat --k 1").out);
}

TEST_CASE("dist check goldens") {
    compare_golden("dist_check_uniform.txt",
                   run_cli("dist check --k 1 --uniform /tmp/mrdlab_c.mat").out);
    // a distribution file written by the library
    using namespace mrdlab;
    Field f8 = Field::make(2, 3);
    PointSet s = build_22set(f8);
    std::ostringstream os;
    write_pointset(os, s);
    write_text_file("/tmp/mrdlab_22.pts", os.str());
    compare_golden("geom_check_dense_22.txt",
                   run_cli("geom check-dense --k 2 --in /tmp/mrdlab_22.pts").out);
}

TEST_CASE("geom check-dense failure carries a witness flat") {
    using namespace mrdlab;
    Field f = Field::make(2, 1);
    std::vector<Mat> pts;
    for (std::uint64_t i = 0; i < 5; ++i) pts.push_back(Mat::unpack(f, 3, 2, i));
    std::ostringstream os;
    write_pointset(os, PointSet(f, 3, 2, std::move(pts)));
    write_text_file("/tmp/mrdlab_5.pts", os.str());
    compare_golden("geom_check_dense_false.txt",
                   run_cli("geom check-dense --k 1 --in /tmp/mrdlab_5.pts").out);
}

TEST_CASE("search goldens") {
    auto r = run_cli(
        "search min-dense --m 3 --n 2 --q 2 --k 1 --witness-out /tmp/mrdlab_w.pts");
    CHECK(r.exit_code == 0);
    compare_golden("search_min_dense_321.txt", r.out);
    compare_golden("search_witness_321.pts", read_file("/tmp/mrdlab_w.pts"));
    compare_golden("search_decide21.txt",
                   run_cli("search min-dense --m 3 --n 2 --q 2 --k 2 --decide 21").out);
}

TEST_CASE("rc goldens") {
    using namespace mrdlab;
    Field f = Field::make(2, 1);
    // vectors file: one matrix whose rows are the vectors
    std::ostringstream vs;
    write_matrix_list(vs, f, 3, 2, {Mat::from_rows(f, {{0, 1}, {1, 0}, {1, 1}})});
    write_text_file("/tmp/mrdlab_u.mat", vs.str());
    // distribution: uniform over the full 2x2 space
    MatrixDistribution d = uniform_over_space(f, 2, 2);
    std::ostringstream ds;
    write_distribution(ds, d);
    write_text_file("/tmp/mrdlab_d.dist", ds.str());
    compare_golden(
        "rc_joint_check.txt",
        run_cli("rc joint-check --mode linear --k 2 --dist /tmp/mrdlab_d.dist --vectors /tmp/mrdlab_u.mat")
            .out);
    compare_golden("rc_intersect.txt",
                   run_cli("rc intersect --m 2 --n 3 --q 2 --k 2 --bound --exact --trials 64 --seed 5")
                       .out);
    std::ostringstream cs;
    write_matrix_list(cs, f, 4, 4,
                      {Mat::from_rows(f, {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}})});
    write_text_file("/tmp/mrdlab_cvec.mat", cs.str());
    compare_golden("rc_fset.txt",
                   run_cli("rc fset-extract --in /tmp/mrdlab_cvec.mat --family singletons --k 2").out);
}

TEST_CASE("verify --fast --omit-times golden") {
    auto r = run_cli("verify --fast --omit-times");
    CHECK(r.exit_code == 0);
    compare_golden("verify_fast.txt", r.out);
}

TEST_CASE("exit codes: usage errors are 2, computational errors are 1") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("count gaussian --n 4").exit_code == 2); // missing --m
    CHECK(run_cli("verify --bogus").exit_code == 2);
    auto r = run_cli("dist check --k 1 --uniform /tmp/definitely_missing.pts");
    CHECK(r.exit_code == 1);
    std::string err = read_file("/tmp/mrdlab_cli_stderr.txt");
    CHECK(err.find("\"error\"") != std::string::npos);
    // field errors surface as named conditions
    auto bad = run_cli("count gaussian --n 4 --m 2 --q 6");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("malformed files are IoError, not crashes") {
    using namespace mrdlab;
    write_text_file("/tmp/mrdlab_bad1.pts", "no header here\n");
    std::istringstream bad1("no header here\n");
    CHECK_THROWS_AS(read_pointset(bad1), Error);
    std::istringstream bad2("# q=2 m=2 n=2\n0 0\n0\n");
    CHECK_THROWS_AS(read_pointset(bad2), Error);
    std::istringstream bad3("# q=2 m=1 n=2\n0 1\n"); // distribution without weight line
    CHECK_THROWS_AS(read_distribution(bad3), Error);
    CHECK(run_cli("geom check-dense --k 1 --in /tmp/mrdlab_bad1.pts").exit_code == 1);
}
