#pragma once

// nlohmann::json conversions shared by the serialization and report sources.
// Not installed.

#include <json.hpp>

#include "tsallis/harness.hpp"

namespace tsallis::json_io {

using Json = nlohmann::json;

inline constexpr int kCaseSchemaVersion = 1;

Json parse(std::string_view text);

Json matrix(const Matrix& m);
Matrix general_matrix(const Json& j);  // square, any symmetry
Matrix symmetric_matrix(const Json& j);
SpdMatrix spd(const Json& j);

Json map(const PositiveMapSpec& phi);
PositiveMapSpec map(const Json& j);

Json window(const SpectralWindow& w);
SpectralWindow window(const Json& j);

Json inequality_case(const InequalityCase& c);
InequalityCase inequality_case(const Json& j);

Json verdict(const Verdict& v);

// Throws FormatError naming the key when it is missing or has the wrong type.
const Json& field(const Json& j, const char* key);
double number(const Json& j, const char* key);
std::uint64_t unsigned_integer(const Json& j, const char* key);

}  // namespace tsallis::json_io
