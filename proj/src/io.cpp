#include "homlie/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace homlie::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::parse, where + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key \"" + key + "\"");
  return *it;
}

std::size_t positive_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) fail(where, "expected a positive integer");
  return j.get<std::size_t>();
}

Scalar scalar_from_json(const json& j, const FieldSpec& field, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(field, j.dump());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar literal string");
}

std::vector<Scalar> scalar_row(const json& j, std::size_t n, const FieldSpec& field,
                               const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) {
    fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(scalar_from_json(j[k], field, where + "/" + std::to_string(k)));
  return out;
}

json literals(std::span<const Scalar> values) {
  json out = json::array();
  for (const auto& s : values) out.push_back(s.to_string());
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string(source) + ": byte " + std::to_string(e.byte) +
                                      ": malformed JSON (" + e.what() + ")");
  }
}

json to_json(const FieldSpec& field) {
  if (field.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const json& j, const std::string& where) {
  const json& kind = member(j, "kind", where);
  if (kind == "rational") return FieldSpec::rational();
  if (kind != "prime") fail(where + "/kind", "expected \"rational\" or \"prime\"");
  const json& p = member(j, "p", where);
  if (!p.is_number_unsigned()) fail(where + "/p", "expected a positive integer modulus");
  try {
    return FieldSpec::prime(p.get<std::uint64_t>());
  } catch (const Error& e) {
    fail(where + "/p", e.what());
  }
}

json to_json(const SkewAlgebra& a) {
  json products = json::array();
  for (const auto& prod : a.products()) {
    products.push_back({{"left", prod.left}, {"right", prod.right}, {"coeffs", literals(prod.coeffs)}});
  }
  return {{"dim", a.dim()}, {"field", to_json(a.field())}, {"products", products}};
}

SkewAlgebra algebra_from_json(const json& j) {
  const std::size_t n = positive_int(member(j, "dim", ""), "/dim");
  const FieldSpec field = field_from_json(member(j, "field", ""));
  const json& list = member(j, "products", "");
  if (!list.is_array()) fail("/products", "expected an array");
  std::vector<Product> products;
  for (std::size_t idx = 0; idx < list.size(); ++idx) {
    const std::string where = "/products/" + std::to_string(idx);
    const std::size_t left = positive_int(member(list[idx], "left", where), where + "/left");
    const std::size_t right = positive_int(member(list[idx], "right", where), where + "/right");
    products.push_back({left, right, scalar_row(member(list[idx], "coeffs", where), n, field, where + "/coeffs")});
  }
  try {
    return make_algebra(n, field, std::move(products));
  } catch (const Error& e) {
    fail("/products", e.what());
  }
}

json to_json(const LinearMap& f) {
  json columns = json::array();
  for (std::size_t q = 1; q <= f.dim(); ++q) columns.push_back(literals(f.image(q).coords()));
  return {{"dim", f.dim()}, {"field", to_json(f.field())}, {"columns", columns}};
}

LinearMap map_from_json(const json& j) {
  const std::size_t n = positive_int(member(j, "dim", ""), "/dim");
  const FieldSpec field = field_from_json(member(j, "field", ""));
  const json& cols = member(j, "columns", "");
  if (!cols.is_array() || cols.size() != n) {
    fail("/columns", "expected an array of " + std::to_string(n) + " columns");
  }
  std::vector<std::vector<Scalar>> columns;
  for (std::size_t q = 0; q < n; ++q) columns.push_back(scalar_row(cols[q], n, field, "/columns/" + std::to_string(q)));
  return LinearMap::from_columns(field, columns);
}

json to_json(const std::vector<LinearMap>& maps) {
  json out = json::array();
  for (const auto& f : maps) out.push_back(to_json(f));
  return out;
}

std::vector<LinearMap> maps_from_json(const json& j) {
  if (!j.is_array()) fail("", "expected an array of maps");
  std::vector<LinearMap> out;
  for (const auto& item : j) out.push_back(map_from_json(item));
  return out;
}

json to_json(const SampleReport& report) {
  json hist = json::object();
  for (const auto& [k, count] : report.histogram) hist[std::to_string(k)] = count;
  json out = {{"dim", report.dim},
              {"trials", report.trials},
              {"seed", report.seed},
              {"histogram", hist},
              {"full_rank", report.full_rank}};
  out["p"] = report.field.is_prime() ? json(report.field.modulus()) : json(nullptr);
  if (report.field.is_rational()) out["bound"] = report.bound;
  return out;
}

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "plain") return MatrixFormat::plain;
  if (name == "csv") return MatrixFormat::csv;
  if (name == "json") return MatrixFormat::json;
  throw Error(ErrorKind::usage, "unknown matrix format \"" + std::string(name) + "\" (plain, csv, json)");
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(literals(m.row(r)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::string write_matrix(const Matrix& m, MatrixFormat format) {
  if (format == MatrixFormat::json) return matrix_to_json(m).dump() + "\n";
  const char sep = format == MatrixFormat::csv ? ',' : ' ';
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += sep;
      out += m(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

Matrix read_matrix(std::string_view text, MatrixFormat format, const FieldSpec& field) {
  if (format == MatrixFormat::json) {
    const json j = parse_json(text);
    const json& rows_j = member(j, "rows", "");
    const json& cols_j = member(j, "cols", "");
    if (!rows_j.is_number_unsigned() || !cols_j.is_number_unsigned()) {
      fail("", "rows and cols must be nonnegative integers");
    }
    const auto rows = rows_j.get<std::size_t>();
    const auto cols = cols_j.get<std::size_t>();
    const json& entries = member(j, "entries", "");
    if (!entries.is_array() || entries.size() != rows) fail("/entries", "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = scalar_row(entries[r], cols, field, "/entries/" + std::to_string(r));
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(row[c]);
    }
    return m;
  }

  std::vector<std::vector<Scalar>> rows;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<Scalar> row;
    std::vector<std::string_view> cells;
    if (format == MatrixFormat::csv) {
      cells = split(line, ',');
    } else {
      for (auto cell : split(line, ' ')) {
        if (!cell.empty()) cells.push_back(cell);
      }
    }
    for (auto cell : cells) {
      try {
        row.push_back(Scalar::parse(field, trim(cell)));
      } catch (const Error& e) {
        fail("line " + std::to_string(line_no), e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail("line " + std::to_string(line_no), "ragged row");
    }
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(rows[r][c]);
  }
  return m;
}

SupportPattern parse_support(std::string_view spec, std::size_t n) {
  if (spec == "diag") return SupportPattern::diagonal(n);
  if (spec == "bidiag") return SupportPattern::bidiagonal(n);
  if (spec == "full") return SupportPattern::full(n);
  std::vector<SupportPattern::Position> positions;
  for (auto item : split(spec, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto parts = split(item, ',');
    std::size_t p = 0, q = 0;
    auto parse_index = [&](std::string_view s, std::size_t& out) {
      s = trim(s);
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
    };
    if (parts.size() != 2 || !parse_index(parts[0], p) || !parse_index(parts[1], q)) {
      throw Error(ErrorKind::usage, "malformed support entry \"" + std::string(item) +
                                        "\" (expected p,q)");
    }
    positions.emplace_back(p, q);
  }
  return SupportPattern(n, std::move(positions));
}

}  // namespace homlie::io
