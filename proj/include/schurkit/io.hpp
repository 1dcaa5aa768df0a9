#pragma once

#include <string>
#include <vector>

#include "schurkit/fourier.hpp"
#include "schurkit/matrix.hpp"
#include "schurkit/permutation.hpp"

namespace schurkit {

// State on (C^d)^(x)n in the tuple basis, first factor most significant.
struct StateVector {
    int n = 0;
    int d = 0;
    std::vector<cplx> amps;
};

struct ResidualRecord {
    std::string check;
    std::string params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// JSON layouts (field order fixed, so equal inputs serialize byte-identically):
//   LabeledUnitary:  {"rows": [..], "cols": [..], "data": [[re,im], ..]} with
//                    data row-major.
//   BlockStructure:  {"total_dim": N, "blocks": [{"lambda", "mult_labels",
//                    "irrep_labels", "mult_major"}, ..]}
//   StateVector:     {"n", "d", "amps": [[re,im], ..]}
//   residuals:       [{"check", "params", "residual", "tolerance", "pass"}, ..]
std::string labeled_unitary_to_json(const LabeledUnitary& u);
std::string block_structure_to_json(const BlockStructure& b);
std::string state_vector_to_json(const StateVector& s);
StateVector state_vector_from_json(const std::string& text);
std::string residual_records_to_json(const std::vector<ResidualRecord>& recs);

// Comma list with or without brackets: "2,1" and "[2,1]" both parse.
std::vector<int> parse_int_list(const std::string& text);

// Permutation of [n] from text: one-line notation ("[2,1,3]" or "2,1,3",
// length must equal n) or disjoint cycles with fixed points omitted
// ("(1 2)(3 4)", "(1,2)"; "()" is the identity).
Permutation parse_permutation(const std::string& text, int n);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace schurkit
