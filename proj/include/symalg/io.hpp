#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symalg/matrix.hpp"

namespace symalg {

enum class OutputFormat { json, csv, pretty };

/// Parses "json", "csv" or "pretty"; throws ParseError.
OutputFormat parse_output_format(std::string_view name);

// Matrix file format: {"n": N, "entries": [...]} with N*N row-major scalar
// strings, or plain CSV with one row per line. Integer JSON numbers are
// accepted as entries; floating-point numbers are rejected.

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

Matrix parse_matrix_json(std::string_view text);
Matrix parse_matrix_csv(std::string_view text);
/// JSON when the first non-blank character is '{', CSV otherwise.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);

std::string format_matrix(const Matrix& m, OutputFormat format);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m,
                       OutputFormat format = OutputFormat::json);

/// Scalar from a JSON string or integer.
Scalar scalar_from_json(const nlohmann::json& j);
/// Rectangular matrix from nested arrays [[...], ...]; an empty array is 0x0.
Matrix dense_from_json(const nlohmann::json& j);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace symalg
