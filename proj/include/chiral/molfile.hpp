#pragma once

// Molecule text format, line oriented, UTF-8:
//
//   # comment to end of line
//   molecule <name>
//   center <id>: <t1> <t2> <t3> <t4>
//   end
//
// Slot tokens are ligand labels (no whitespace) or @<id> links; slot order
// is left, top, right, bottom of the projection cross. One molecule per
// file. Bond geometry is not serialized. The serializer emits the canonical
// single-space form, so parse -> serialize -> parse is the identity.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/errors.hpp"
#include "chiral/tetra.hpp"

namespace chiral {

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline ChainMolecule parse_molecule(std::string_view text) {
  ChainMolecule mol;
  std::vector<int> centre_lines;
  bool opened = false, closed = false;
  int lineno = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    std::size_t eol = text.find('\n', cursor);
    std::string_view line = text.substr(
        cursor, eol == std::string_view::npos ? text.size() - cursor
                                              : eol - cursor);
    cursor = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "molecule") {
      if (opened) throw ParseError(lineno, "nested 'molecule'");
      if (closed) throw ParseError(lineno, "content after 'end'");
      if (tokens.size() != 2)
        throw ParseError(lineno, "'molecule' takes exactly one name token");
      mol.name = tokens[1];
      opened = true;
    } else if (tokens[0] == "center") {
      if (!opened || closed)
        throw ParseError(lineno, "'center' outside molecule block");
      if (tokens.size() < 2 || tokens[1].size() < 2 || tokens[1].back() != ':')
        throw ParseError(lineno, "expected 'center <id>:'");
      Tetrahedron t;
      t.centre_id = tokens[1].substr(0, tokens[1].size() - 1);
      if (tokens.size() != 6)
        throw ParseError(lineno, "centre '" + t.centre_id +
                                     "' needs exactly 4 slot tokens, got " +
                                     std::to_string(tokens.size() - 2));
      for (const Tetrahedron& prev : mol.centres)
        if (prev.centre_id == t.centre_id)
          throw ParseError(lineno, "duplicate centre id '" + t.centre_id + "'");
      for (int i = 0; i < 4; ++i) {
        const std::string& tok = tokens[2 + i];
        if (tok[0] == '@') {
          if (tok.size() == 1)
            throw ParseError(lineno, "link token with empty target");
          t.slots[i] = Link{tok.substr(1)};
        } else {
          t.slots[i] = Ligand{tok};
        }
      }
      mol.centres.push_back(std::move(t));
      centre_lines.push_back(lineno);
    } else if (tokens[0] == "end") {
      if (!opened || closed) throw ParseError(lineno, "stray 'end'");
      if (tokens.size() != 1) throw ParseError(lineno, "'end' takes no tokens");
      closed = true;
    } else {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!opened) throw ParseError(lineno, "missing 'molecule' header");
  if (!closed) throw ParseError(lineno, "missing 'end'");
  if (mol.centres.empty()) throw ParseError(lineno, "molecule has no centres");

  // dangling links are a parse-level error; deeper topology problems
  // (non-consecutive links, missing back-links) surface via validate()
  for (std::size_t k = 0; k < mol.centres.size(); ++k)
    for (const Slot& s : mol.centres[k].slots)
      if (is_link(s)) {
        const std::string& tgt = std::get<Link>(s).target;
        bool found = false;
        for (const Tetrahedron& u : mol.centres)
          found = found || u.centre_id == tgt;
        if (!found)
          throw ParseError(centre_lines[k], "dangling link '@" + tgt +
                                                "' from centre '" +
                                                mol.centres[k].centre_id + "'");
      }
  mol.validate();
  return mol;
}

inline std::string serialize_molecule(const ChainMolecule& m) {
  std::ostringstream out;
  out << "molecule " << m.name << "\n";
  for (const Tetrahedron& t : m.centres) {
    out << "center " << t.centre_id << ":";
    for (const Slot& s : t.slots) out << " " << slot_token(s);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace chiral
