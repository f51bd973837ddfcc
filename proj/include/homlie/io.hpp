#pragma once

// File formats. All scalars are written as string literals ("-3/4", "17").
//
//   algebra: {"dim": n, "field": {"kind": "rational"} | {"kind": "prime", "p": p},
//             "products": [{"left": i, "right": j, "coeffs": [lit x n]}, ...]}
//   map:     {"dim": n, "field": ..., "columns": [[lit x n] x n]}
//            columns[q] holds the coordinates of f(e_{q+1})
//   matrix:  plain (space separated rows), csv, or
//            {"rows": r, "cols": c, "entries": [[lit x c] x r]}
//   report:  {"dim", "p", "trials", "seed", "histogram": {"nullity": count}, "full_rank"}
//
// Loaders throw Error{parse} with a JSON-pointer location on malformed input.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homlie/algebra.hpp"
#include "homlie/homjacobi.hpp"
#include "homlie/linalg.hpp"
#include "homlie/variety_lab.hpp"

namespace homlie::io {

using json = nlohmann::json;

std::string read_text_file(const std::filesystem::path& path);
/// Parses JSON text; syntax errors become Error{parse} with the byte offset.
json parse_json(std::string_view text, std::string_view source = "input");

json to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j, const std::string& where = "/field");

json to_json(const SkewAlgebra& a);
SkewAlgebra algebra_from_json(const json& j);

json to_json(const LinearMap& f);
LinearMap map_from_json(const json& j);

json to_json(const std::vector<LinearMap>& maps);
std::vector<LinearMap> maps_from_json(const json& j);

json to_json(const SampleReport& report);

enum class MatrixFormat { plain, csv, json };

/// "plain" | "csv" | "json"; throws Error{usage} otherwise.
MatrixFormat parse_matrix_format(std::string_view name);

std::string write_matrix(const Matrix& m, MatrixFormat format);
json matrix_to_json(const Matrix& m);
Matrix read_matrix(std::string_view text, MatrixFormat format, const FieldSpec& field);

/// "diag", "bidiag", "full", or an explicit list "p,q;p,q;...".
SupportPattern parse_support(std::string_view spec, std::size_t n);

}  // namespace homlie::io
