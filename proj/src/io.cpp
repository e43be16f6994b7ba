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

#include "mrdlab/io.hpp"

#include <fstream>
#include <sstream>

#include "mrdlab/codes.hpp"

namespace mrdlab {

namespace {

void write_header(std::ostream& os, const Field& f, int m, int n) {
    os << "# q=" << f.q() << " m=" << m << " n=" << n;
    if (f.e() > 1) {
        os << " poly=";
        for (size_t i = 0; i < f.modulus().size(); ++i) {
            if (i) os << ",";
            os << f.modulus()[i];
        }
    }
    os << "\n";
}

void write_mat_block(std::ostream& os, const Mat& a) {
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) os << " ";
            os << unsigned(a.at(i, j));
        }
        os << "\n";
    }
}

struct Header {
    unsigned q = 0;
    int m = 0, n = 0;
    std::optional<std::vector<unsigned>> poly;
};

Header parse_header(const std::string& line) {
    Header h;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok != "#") raise(Errc::IoError, "missing header line");
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) raise(Errc::IoError, "bad header token: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "q")
            h.q = unsigned(std::stoul(val));
        else if (key == "m")
            h.m = std::stoi(val);
        else if (key == "n")
            h.n = std::stoi(val);
        else if (key == "poly") {
            std::vector<unsigned> coeffs;
            std::istringstream cs(val);
            std::string c;
            while (std::getline(cs, c, ',')) coeffs.push_back(unsigned(std::stoul(c)));
            h.poly = coeffs;
        } else {
            raise(Errc::IoError, "unknown header key: " + key);
        }
    }
    if (h.q < 2 || h.m < 1 || h.n < 1) raise(Errc::IoError, "incomplete header");
    return h;
}

} // namespace

void write_matrix_list(std::ostream& os, const Field& f, int m, int n,
                       const std::vector<Mat>& mats) {
    write_header(os, f, m, n);
    for (size_t i = 0; i < mats.size(); ++i) {
        if (i) os << "\n";
        write_mat_block(os, mats[i]);
    }
}

void write_pointset(std::ostream& os, const PointSet& s) {
    write_matrix_list(os, s.field(), s.m(), s.n(), s.points());
}

void write_code(std::ostream& os, const MatrixCode& c) {
    write_matrix_list(os, c.field(), c.m(), c.n(), c.words());
}

void write_distribution(std::ostream& os, const MatrixDistribution& d) {
    write_header(os, d.field(), d.m(), d.n());
    bool first = true;
    for (const auto& [key, w] : d.weights()) {
        if (!first) os << "\n";
        first = false;
        write_mat_block(os, d.support_mat(key));
        os << "w " << numerator(w).str() << "/" << denominator(w).str() << "\n";
    }
}

namespace {

struct ParsedFile {
    Header h;
    Field f;
    std::vector<Mat> mats;
    std::vector<std::optional<Rational>> weights;
};

ParsedFile parse_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) raise(Errc::IoError, "empty input");
    Header h = parse_header(line);
    Field f = Field::of_order(h.q, h.poly);
    ParsedFile out{h, f, {}, {}};

    std::vector<std::vector<felem>> rows;
    std::optional<Rational> weight;
    auto flush = [&]() {
        if (rows.empty()) return;
        if (int(rows.size()) != h.m) raise(Errc::IoError, "matrix block with wrong row count");
        Mat a(f, h.m, h.n);
        for (int i = 0; i < h.m; ++i) {
            if (int(rows[size_t(i)].size()) != h.n) raise(Errc::IoError, "row with wrong length");
            for (int j = 0; j < h.n; ++j) {
                felem v = rows[size_t(i)][size_t(j)];
                if (!f.valid(v)) raise(Errc::IoError, "entry out of field");
                a.set(i, j, v);
            }
        }
        out.mats.push_back(std::move(a));
        out.weights.push_back(weight);
        rows.clear();
        weight.reset();
    };

    while (std::getline(is, line)) {
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') continue;
        if (line[0] == 'w' && (line.size() == 1 || line[1] == ' ')) {
            weight = rat_parse(line.substr(2));
            flush();
            continue;
        }
        std::istringstream ss(line);
        std::vector<felem> row;
        long v;
        while (ss >> v) row.push_back(felem(v));
        rows.push_back(std::move(row));
    }
    flush();
    return out;
}

} // namespace

MatrixListFile read_matrix_list(std::istream& is) {
    ParsedFile p = parse_file(is);
    return MatrixListFile{p.f, p.h.m, p.h.n, std::move(p.mats)};
}

PointSet read_pointset(std::istream& is) {
    ParsedFile p = parse_file(is);
    return PointSet(p.f, p.h.m, p.h.n, std::move(p.mats));
}

MatrixDistribution read_distribution(std::istream& is) {
    ParsedFile p = parse_file(is);
    std::map<std::uint64_t, Rational> w;
    for (size_t i = 0; i < p.mats.size(); ++i) {
        if (!p.weights[i]) raise(Errc::IoError, "matrix block without weight line");
        w[p.mats[i].pack()] += *p.weights[i];
    }
    return MatrixDistribution(p.f, p.h.m, p.h.n, std::move(w));
}

std::string code_sidecar_json(const MatrixCode& c, int k) {
    MrdReport rep = is_mrd(c, k);
    std::ostringstream os;
    os << "{\"m\":" << c.m() << ",\"n\":" << c.n() << ",\"q\":" << c.field().q() << ",\"k\":" << k
       << ",\"is_mrd\":" << (rep.mrd ? "true" : "false")
       << ",\"rank_distance\":" << rank_distance(c)
       << ",\"linear\":" << (c.is_linear() ? "true" : "false") << "}";
    return os.str();
}

MatrixListFile read_matrix_list_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) raise(Errc::IoError, "cannot open " + path);
    return read_matrix_list(is);
}

PointSet read_pointset_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) raise(Errc::IoError, "cannot open " + path);
    return read_pointset(is);
}

MatrixDistribution read_distribution_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) raise(Errc::IoError, "cannot open " + path);
    return read_distribution(is);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) raise(Errc::IoError, "cannot open " + path + " for writing");
    os << content;
}

} // namespace mrdlab
