#include "symalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "symalg/errors.hpp"

namespace symalg {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "pretty") return OutputFormat::pretty;
  throw ParseError("unknown output format '" + std::string(name) + "'");
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (const auto& x : m.entries()) entries.push_back(x.to_string());
  return json{{"n", m.n()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw ParseError("matrix object needs \"n\" and \"entries\"");
  }
  const json& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<long>() <= 0) {
    throw ParseError("\"n\" must be a positive integer");
  }
  const auto n = jn.get<std::size_t>();
  const json& je = j.at("entries");
  if (!je.is_array()) throw ParseError("\"entries\" must be an array");
  if (je.size() != n * n) {
    throw ParseError("expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(je.size()));
  }
  std::vector<Scalar> entries;
  entries.reserve(je.size());
  for (const auto& e : je) entries.push_back(scalar_from_json(e));
  return Matrix(n, std::move(entries));
}

Matrix parse_matrix_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    std::vector<Scalar> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(Scalar::parse(cell));
    if (!line.empty() && line.back() == ',') throw ParseError("trailing comma in CSV row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  const std::size_t n = rows.size();
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (auto& r : rows) {
    if (r.size() != n) {
      throw ParseError("CSV matrix is not square: " + std::to_string(n) + " rows, a row has " +
                       std::to_string(r.size()) + " cells");
    }
    std::move(r.begin(), r.end(), std::back_inserter(entries));
  }
  return Matrix(n, std::move(entries));
}

Matrix parse_matrix(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return parse_matrix_json(text);
  return parse_matrix_csv(text);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const Matrix& m, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return matrix_to_json(m).dump() + "\n";
    case OutputFormat::csv: {
      std::string out;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (j > 0) out += ",";
          out += m(i, j).to_string();
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::pretty: {
      std::vector<std::string> cells;
      std::size_t width = 1;
      for (const auto& x : m.entries()) {
        cells.push_back(x.to_pretty());
        width = std::max(width, cells.back().size());
      }
      std::string out;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const std::string& c = cells[i * m.cols() + j];
          // "√2" is 3 bytes but one column wide.
          const std::size_t shown = c.size() - (c.find("√") != std::string::npos ? 2 : 0);
          out += std::string(width - std::min(width, shown) + (j > 0 ? 2 : 0), ' ');
          out += c;
        }
        out += "\n";
      }
      return out;
    }
  }
  return {};
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m, OutputFormat format) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << format_matrix(m, format);
}

Matrix dense_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix parameter must be an array of rows");
  if (j.empty()) return Matrix(0, 0);
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix parameter");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector parameter must be an array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

}  // namespace symalg
