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

#include <iosfwd>
#include <string>

#include "mrdlab/distribution.hpp"
#include "mrdlab/geometry.hpp"

namespace mrdlab {

// Text matrix format: a header line `# q=<q> m=<m> n=<n> [poly=c0,c1,...]`,
// then one matrix per block (m lines of n whitespace-separated element
// indices), blocks separated by one blank line. ASCII, LF line endings.
// Distribution files interleave a `w <num>/<den>` line after each matrix.

void write_matrix_list(std::ostream& os, const Field& f, int m, int n,
                       const std::vector<Mat>& mats);
void write_pointset(std::ostream& os, const PointSet& s);
void write_code(std::ostream& os, const MatrixCode& c);
void write_distribution(std::ostream& os, const MatrixDistribution& d);

struct MatrixListFile {
    Field f;
    int m, n;
    std::vector<Mat> mats;
};

MatrixListFile read_matrix_list(std::istream& is);
PointSet read_pointset(std::istream& is);
MatrixDistribution read_distribution(std::istream& is);

/// JSON sidecar for a serialized code: {m,n,q,k,is_mrd,rank_distance,linear}.
std::string code_sidecar_json(const MatrixCode& c, int k);

MatrixListFile read_matrix_list_file(const std::string& path);
PointSet read_pointset_file(const std::string& path);
MatrixDistribution read_distribution_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace mrdlab
