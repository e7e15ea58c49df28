#pragma once

#include <string>
#include <string_view>

#include "tsallis/harness.hpp"

namespace tsallis {

// JSON text formats. Matrices are {"dim": n, "data": [n*n reals, row-major]};
// doubles are written with round-trip precision.

std::string matrix_to_json(const Matrix& m);
// Reads a symmetric matrix of any definiteness. FormatError on malformed
// input, InvalidMatrixError on shape or symmetry problems.
Matrix symmetric_from_json(std::string_view text);
// As above plus positive definiteness.
SpdMatrix spd_from_json(std::string_view text);

std::string map_to_json(const PositiveMapSpec& phi);
PositiveMapSpec map_from_json(std::string_view text);

// Full replayable case: every matrix, the map and all parameters.
std::string case_to_json(const InequalityCase& c);
InequalityCase case_from_json(std::string_view text);

std::string verdict_to_json(const Verdict& v);

}  // namespace tsallis
