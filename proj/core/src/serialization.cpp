#include "tsallis/serialization.hpp"

#include <cmath>

#include "json_io.hpp"

namespace tsallis {
namespace json_io {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

double number(const Json& j, const char* key) {
  const Json& x = field(j, key);
  if (!x.is_number()) throw FormatError(std::string("key '") + key + "' must be a number");
  return x.get<double>();
}

std::uint64_t unsigned_integer(const Json& j, const char* key) {
  const Json& x = field(j, key);
  if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
    throw FormatError(std::string("key '") + key + "' must be a non-negative integer");
  return x.get<std::uint64_t>();
}

namespace {

Matrix dense(const Json& data, Index rows, Index cols) {
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols))
    throw InvalidMatrixError(InvalidMatrixError::Reason::kShape,
                             "matrix data must hold rows*cols numbers");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const Json& x = data[static_cast<std::size_t>(i * cols + j)];
      if (!x.is_number()) throw FormatError("matrix entries must be numbers");
      m(i, j) = x.get<double>();
    }
  return m;
}

Json row_major(const Matrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  return data;
}

Index positive_dim(const Json& j, const char* key) {
  const std::uint64_t n = unsigned_integer(j, key);
  if (n == 0)
    throw InvalidMatrixError(InvalidMatrixError::Reason::kShape,
                             std::string("'") + key + "' must be positive");
  return static_cast<Index>(n);
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

Json matrix(const Matrix& m) {
  return Json{{"dim", m.rows()}, {"data", row_major(m)}};
}

Matrix general_matrix(const Json& j) {
  const Index n = positive_dim(j, "dim");
  return dense(field(j, "data"), n, n);
}

Matrix symmetric_matrix(const Json& j) {
  Matrix m = general_matrix(j);
  if (!m.allFinite())
    throw InvalidMatrixError(InvalidMatrixError::Reason::kNonFinite,
                             "matrix has non-finite entries");
  if (!is_symmetric(m))
    throw InvalidMatrixError(InvalidMatrixError::Reason::kAsymmetric,
                             "matrix is not symmetric");
  return symmetrize(m);
}

SpdMatrix spd(const Json& j) { return SpdMatrix(general_matrix(j)); }

Json map(const PositiveMapSpec& phi) {
  Json j{{"kind", std::string(to_string(phi.kind()))}};
  switch (phi.kind()) {
    case MapKind::kIdentity:
      j["dim"] = phi.input_dim();
      break;
    case MapKind::kPinching:
      j["blocks"] = phi.blocks();
      break;
    case MapKind::kUnitaryMixture: {
      j["weights"] = phi.weights();
      Json us = Json::array();
      for (const Matrix& u : phi.unitaries()) us.push_back(matrix(u));
      j["unitaries"] = std::move(us);
      break;
    }
    case MapKind::kCompression:
      j["rows"] = phi.isometry().rows();
      j["cols"] = phi.isometry().cols();
      j["data"] = row_major(phi.isometry());
      break;
  }
  return j;
}

PositiveMapSpec map(const Json& j) {
  const Json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) throw FormatError("map 'kind' must be a string");
  MapKind kind;
  try {
    kind = map_kind_from_string(kind_json.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  try {
    switch (kind) {
      case MapKind::kIdentity:
        return PositiveMapSpec::identity(positive_dim(j, "dim"));
      case MapKind::kPinching:
        return PositiveMapSpec::pinching(field(j, "blocks").get<std::vector<Index>>());
      case MapKind::kUnitaryMixture: {
        std::vector<Matrix> us;
        for (const Json& u : field(j, "unitaries")) us.push_back(general_matrix(u));
        return PositiveMapSpec::unitary_mixture(
            field(j, "weights").get<std::vector<double>>(), std::move(us));
      }
      case MapKind::kCompression:
        return PositiveMapSpec::compression(dense(
            field(j, "data"), positive_dim(j, "rows"), positive_dim(j, "cols")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad map parameters: ") + e.what());
  }
  throw FormatError("unknown map kind");
}

Json window(const SpectralWindow& w) { return Json{{"m", w.m()}, {"M", w.big_m()}}; }

SpectralWindow window(const Json& j) {
  try {
    return SpectralWindow(number(j, "m"), number(j, "M"));
  } catch (const DomainError& e) {
    throw FormatError(std::string("bad window: ") + e.what());
  }
}

Json inequality_case(const InequalityCase& c) {
  Json j{{"case_schema", kCaseSchemaVersion},
         {"id", std::string(to_string(c.id))},
         {"A", matrix(c.pair.a().matrix())},
         {"B", matrix(c.pair.b().matrix())},
         {"quad_nodes", c.quad_nodes},
         {"tol", c.tol},
         {"seed", c.seed},
         {"index", c.index}};
  if (c.pair.window()) j["window"] = window(*c.pair.window());
  if (c.v) j["v"] = *c.v;
  if (c.s) j["s"] = *c.s;
  if (c.t) j["t"] = *c.t;
  if (c.mu) j["mu"] = *c.mu;
  if (c.map) j["map"] = map(*c.map);
  if (c.c) j["C"] = matrix(c.c->matrix());
  if (c.k_window) j["k_window"] = window(*c.k_window);
  return j;
}

InequalityCase inequality_case(const Json& j) {
  const Json& schema = field(j, "case_schema");
  if (!schema.is_number_integer() || schema.get<int>() != kCaseSchemaVersion)
    throw FormatError("unsupported case_schema version");
  const Json& id_json = field(j, "id");
  if (!id_json.is_string()) throw FormatError("'id' must be a string");
  InequalityId id;
  try {
    id = inequality_from_string(id_json.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  SpdMatrix a = spd(field(j, "A"));
  SpdMatrix b = spd(field(j, "B"));
  OperatorPair pair = j.contains("window")
                          ? OperatorPair(std::move(a), std::move(b), window(j["window"]))
                          : OperatorPair(std::move(a), std::move(b));
  InequalityCase c{.id = id, .pair = std::move(pair)};
  try {
    c.v = optional_field<double>(j, "v");
    c.s = optional_field<double>(j, "s");
    c.t = optional_field<double>(j, "t");
    c.mu = optional_field<double>(j, "mu");
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad case parameter: ") + e.what());
  }
  if (j.contains("map")) c.map = map(j["map"]);
  if (j.contains("C")) c.c = spd(j["C"]);
  if (j.contains("k_window")) c.k_window = window(j["k_window"]);
  c.quad_nodes = static_cast<int>(unsigned_integer(j, "quad_nodes"));
  c.tol = number(j, "tol");
  c.seed = unsigned_integer(j, "seed");
  c.index = unsigned_integer(j, "index");
  return c;
}

Json verdict(const Verdict& v) {
  Json links = Json::array();
  for (const LinkVerdict& l : v.links)
    links.push_back({{"lower", l.lower},
                     {"upper", l.upper},
                     {"margin", l.verdict.margin},
                     {"scale", l.verdict.scale},
                     {"tol", l.verdict.tol},
                     {"holds", l.verdict.holds}});
  Json j{{"id", std::string(to_string(v.id))},
         {"overall_holds", v.overall_holds},
         {"min_normalized_margin", v.min_normalized_margin},
         {"links", std::move(links)},
         {"dim", v.dim},
         {"seed", v.seed},
         {"index", v.index}};
  if (v.v) j["v"] = *v.v;
  if (v.quadrature_delta) {
    j["quadrature_delta"] = *v.quadrature_delta;
    j["quadrature_stable"] = v.quadrature_stable;
  }
  return j;
}

}  // namespace json_io

std::string matrix_to_json(const Matrix& m) { return json_io::matrix(m).dump(); }

Matrix symmetric_from_json(std::string_view text) {
  return json_io::symmetric_matrix(json_io::parse(text));
}

SpdMatrix spd_from_json(std::string_view text) {
  return json_io::spd(json_io::parse(text));
}

std::string map_to_json(const PositiveMapSpec& phi) {
  return json_io::map(phi).dump();
}

PositiveMapSpec map_from_json(std::string_view text) {
  return json_io::map(json_io::parse(text));
}

std::string case_to_json(const InequalityCase& c) {
  return json_io::inequality_case(c).dump(2);
}

InequalityCase case_from_json(std::string_view text) {
  return json_io::inequality_case(json_io::parse(text));
}

std::string verdict_to_json(const Verdict& v) {
  return json_io::verdict(v).dump(2);
}

}  // namespace tsallis
