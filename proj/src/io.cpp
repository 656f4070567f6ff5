#include "ars/io.hpp"

#include <algorithm>
#include <iomanip>
#include <iterator>
#include <sstream>

#include "ars/error.hpp"

namespace ars {

BinaryMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int m = -1;
  int n = -1;
  if (!(in >> m >> n) || m < 0 || n < 0) {
    throw Error(ErrorCode::Parse, "matrix text must start with 'm n'");
  }
  IntMatrix values(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = -1;
      if (!(in >> v) || (v != 0 && v != 1)) {
        throw Error(ErrorCode::Parse, "expected 0 or 1 at row " + std::to_string(i) +
                                          ", column " + std::to_string(j));
      }
      values(i, j) = v;
    }
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::Parse, "trailing data after matrix: '" + rest + "'");
  return BinaryMatrix(values);
}

std::string format_matrix_text(const BinaryMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += static_cast<char>('0' + a(i, j));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_to_json(const BinaryMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return {{"m", a.rows()}, {"n", a.cols()}, {"rows", std::move(rows)}};
}

BinaryMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != m) {
      throw Error(ErrorCode::Parse, "'rows' length differs from m");
    }
    IntMatrix values(m, n);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw Error(ErrorCode::Parse, "row " + std::to_string(i) + " length differs from n");
      }
      for (int c = 0; c < n; ++c) values(i, c) = rows[i][c].get<int>();
    }
    return BinaryMatrix(values);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, e.what());
  }
}

BinaryMatrix read_matrix(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    return matrix_from_json(j);
  }
  return parse_matrix_text(text);
}

std::string format_table(const StructureTable& t) {
  int width = 1;
  for (int k = 0; k < t.rows(); ++k) {
    for (int l = 0; l < t.cols(); ++l) {
      width = std::max(width, static_cast<int>(std::to_string(t(k, l)).size()));
    }
  }
  width = std::max(width, static_cast<int>(std::to_string(t.cols() - 1).size()));
  const int label = static_cast<int>(std::to_string(std::max(t.rows() - 1, 0)).size());

  std::ostringstream out;
  out << std::setw(label) << "" << " |";
  for (int l = 0; l < t.cols(); ++l) out << ' ' << std::setw(width) << l;
  out << '\n' << std::string(static_cast<std::size_t>(label) + 2, '-');
  out << std::string(static_cast<std::size_t>(t.cols() * (width + 1)), '-') << '\n';
  for (int k = 0; k < t.rows(); ++k) {
    out << std::setw(label) << k << " |";
    for (int l = 0; l < t.cols(); ++l) out << ' ' << std::setw(width) << t(k, l);
    out << '\n';
  }
  return out.str();
}

nlohmann::json table_to_json(const StructureTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k < t.rows(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int l = 0; l < t.cols(); ++l) row.push_back(t(k, l));
    rows.push_back(std::move(row));
  }
  return {{"kind", t.kind == TableKind::Structure ? "T" : "Phi"}, {"rows", std::move(rows)}};
}

}  // namespace ars
