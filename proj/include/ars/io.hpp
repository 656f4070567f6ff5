#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ars/binary_matrix.hpp"
#include "ars/structure.hpp"

namespace ars {

/// Text form: a line "m n", then m lines of n space-separated 0/1 digits.
BinaryMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const BinaryMatrix& a);

/// JSON form: {"m": .., "n": .., "rows": [[..], ..]}.
nlohmann::json matrix_to_json(const BinaryMatrix& a);
BinaryMatrix matrix_from_json(const nlohmann::json& j);

/// Reads either form; JSON is recognized by a leading '{'.
BinaryMatrix read_matrix(std::istream& in);

/// Aligned integer grid with 0-based row and column headers.
std::string format_table(const StructureTable& t);
nlohmann::json table_to_json(const StructureTable& t);

}  // namespace ars
