#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "json.hpp"

#include "igusa/norm_geometry.hpp"
#include "igusa/point_counting.hpp"
#include "igusa/snc_model.hpp"
#include "igusa/zeta_rational.hpp"

namespace igusa {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Polynomial input: {schemaVersion, n, terms: [[c, [e1..en]], ...], label?, models?: {"p": path}}.
struct PolynomialFile {
  std::string label;
  IntPolynomial poly{1, {}};
  // Shipped SNC model per prime, paths resolved against the file's directory.
  std::map<long, std::filesystem::path> models;
};

// All parsers throw SchemaError on malformed input or unknown fields.
Json read_json_file(const std::filesystem::path& path);

PolynomialFile parse_polynomial(const Json& j, const std::filesystem::path& base_dir = {});
PolynomialFile load_polynomial(const std::filesystem::path& path);

GlobalModel parse_global_model(const Json& j);
GlobalModel load_global_model(const std::filesystem::path& path);
Json to_json(const GlobalModel& model);

GlobalPointModel parse_point_model(const Json& j);
GlobalPointModel load_point_model(const std::filesystem::path& path);

CellMeasureModel parse_cell_measure_model(const Json& j);
CellMeasureModel load_cell_measure_model(const std::filesystem::path& path);
Json to_json(const CellMeasureModel& model);

struct TwoNormData {
  long q = 2;
  Rational s1 = 0;
  Rational s2 = 0;
  std::vector<TwoNormCell> cells;
};

TwoNormData parse_two_norm_data(const Json& j);
TwoNormData load_two_norm_data(const std::filesystem::path& path);

// Rationals are written as strings "a" or "a/b".
Json rational_json(const Rational& x);
Json to_json(const TruncatedSeries& s);
Json to_json(const ZetaRational& r);

}  // namespace igusa
