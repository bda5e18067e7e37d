#pragma once

// ASCII and CSV renderings of the operator matrices and the multiplication
// table. CSV matrices are 4 rows of 4 comma-separated 0/1 digits under the
// operator's identifier; table cells use the identifiers R1..R12, I1..I12.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "chiral/operators.hpp"

namespace chiral {

inline std::string ascii_matrix(const Operator& op) {
  std::ostringstream out;
  out << op.name() << "\n";
  const auto m = op.matrix();
  for (int i = 0; i < 4; ++i) {
    out << "  ";
    for (int j = 0; j < 4; ++j) out << m[i][j] << (j == 3 ? "\n" : " ");
  }
  return out.str();
}

inline std::string csv_matrix(const Operator& op) {
  std::ostringstream out;
  out << op.name() << "\n";
  const auto m = op.matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out << m[i][j] << (j == 3 ? "\n" : ",");
  }
  return out.str();
}

/// All matrices of one kind (or both when kind is empty), blocks separated
/// by blank lines.
inline std::string render_tables(std::optional<Kind> kind, bool csv) {
  std::ostringstream out;
  bool first = true;
  for (const Operator& op : Operator::all()) {
    if (kind && op.kind() != *kind) continue;
    if (!first) out << "\n";
    first = false;
    out << (csv ? csv_matrix(op) : ascii_matrix(op));
  }
  return out.str();
}

inline std::string csv_cayley() {
  const CayleyTable& t = cayley_table();
  const auto& ops = Operator::all();
  std::ostringstream out;
  out << "*";
  for (const Operator& b : ops) out << "," << b.name();
  out << "\n";
  for (const Operator& a : ops) {
    out << a.name();
    for (const Operator& b : ops)
      out << "," << ops[t[a.ordinal()][b.ordinal()]].name();
    out << "\n";
  }
  return out.str();
}

inline std::string ascii_cayley() {
  const CayleyTable& t = cayley_table();
  const auto& ops = Operator::all();
  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << s;
    for (std::size_t k = s.size(); k < 4; ++k) out << ' ';
  };
  cell("*");
  for (const Operator& b : ops) cell(b.name());
  out << "\n";
  for (const Operator& a : ops) {
    cell(a.name());
    for (const Operator& b : ops)
      cell(ops[t[a.ordinal()][b.ordinal()]].name());
    out << "\n";
  }
  return out.str();
}

/// Parse "R1".."R12" / "I1".."I12"; empty on anything else.
inline std::optional<Operator> parse_operator_name(std::string_view name) {
  if (name.size() < 2 || name.size() > 3) return std::nullopt;
  Kind kind;
  if (name[0] == 'R')
    kind = Kind::Rotation;
  else if (name[0] == 'I')
    kind = Kind::Inversion;
  else
    return std::nullopt;
  int idx = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    idx = idx * 10 + (c - '0');
  }
  if (idx < 1 || idx > 12) return std::nullopt;
  return Operator::get(kind, idx);
}

}  // namespace chiral
