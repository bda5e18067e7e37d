#pragma once

// Bonds, tetrahedra and linear chains.
//
// A bond is a projected complex number in polar form. A tetrahedron is the
// ordered 4-slot vector the operators act on; a slot holds either a ligand
// label or a link to a neighbouring stereogenic centre. Chains are simply
// connected: consecutive centres share exactly one mutual link and no centre
// carries more than two links. All values are immutable in use; every
// operation is a pure function.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chiral/errors.hpp"
#include "chiral/operators.hpp"

namespace chiral {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Equality tolerance for bond values (complex plane distance).
inline constexpr double kBondTolerance = 1e-12;

struct Bond {
  double rho;    // projected length, >= 0, in multiples of the unit length
  double theta;  // anomaly, normalized into [0, 2*pi)

  Bond(double rho_, double theta_) : rho(rho_), theta(theta_) {
    if (!(rho >= 0.0))
      throw std::invalid_argument("bond length must be nonnegative");
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta = 0.0;
  }

  friend bool operator==(const Bond&, const Bond&) = default;
};

inline std::complex<double> bond_value(const Bond& b) {
  return std::polar(b.rho, b.theta);
}

inline bool approx_equal(const Bond& a, const Bond& b,
                         double tol = kBondTolerance) {
  return std::abs(bond_value(a) - bond_value(b)) <= tol;
}

struct Ligand {
  std::string label;
  friend bool operator==(const Ligand&, const Ligand&) = default;
};

struct Link {
  std::string target;  // centre id of the neighbour
  friend bool operator==(const Link&, const Link&) = default;
};

using Slot = std::variant<Ligand, Link>;

inline bool is_link(const Slot& s) noexcept {
  return std::holds_alternative<Link>(s);
}

inline std::string slot_token(const Slot& s) {
  return is_link(s) ? "@" + std::get<Link>(s).target : std::get<Ligand>(s).label;
}

struct Tetrahedron {
  std::string centre_id;
  std::array<Slot, 4> slots;
  std::optional<std::array<Bond, 4>> bonds;

  friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

/// Sum vector of the four projected bonds.
inline std::complex<double> sum_vector(const Tetrahedron& t) {
  if (!t.bonds)
    throw StateError("tetrahedron '" + t.centre_id + "' carries no bonds");
  std::complex<double> acc{0.0, 0.0};
  for (const Bond& b : *t.bonds) acc += bond_value(b);
  return acc;
}

/// Permute slots (and bonds, if present) as the matrix acts on the column
/// vector: new slot i receives the content of slot perm[i].
inline Tetrahedron apply_operator(const Operator& op, const Tetrahedron& t) {
  Tetrahedron out = t;
  for (int i = 0; i < 4; ++i) out.slots[i] = t.slots[op.perm()[i]];
  if (t.bonds) {
    auto& ob = *out.bonds;
    const auto& ib = *t.bonds;
    for (int i = 0; i < 4; ++i) ob[i] = ib[op.perm()[i]];
  }
  return out;
}

/// Bonds of a simply connected chain of n centres: 3n+1, or 4n when spacer
/// atoms sit between consecutive centres.
inline long long bond_count(long long n, bool spacers) {
  if (n < 1)
    throw std::invalid_argument("a chain needs at least one centre, got n = " +
                                std::to_string(n));
  return spacers ? 4 * n : 3 * n + 1;
}

struct ChainMolecule {
  std::string name;
  std::vector<Tetrahedron> centres;
  bool spacers = false;

  int n() const noexcept { return static_cast<int>(centres.size()); }

  /// Total bonds of the chain: 3n+1, or 4n when spacers is set.
  long long bond_total() const { return bond_count(n(), spacers); }

  friend bool operator==(const ChainMolecule&, const ChainMolecule&) = default;

  /// Enforces the chain invariants; throws StructureError otherwise.
  void validate() const {
    const std::size_t n = centres.size();
    if (n == 0) throw StructureError("molecule has no centres");
    for (std::size_t k = 0; k < n; ++k) {
      if (centres[k].centre_id.empty())
        throw StructureError("centre with empty id");
      for (std::size_t j = k + 1; j < n; ++j)
        if (centres[j].centre_id == centres[k].centre_id)
          throw StructureError("duplicate centre id '" + centres[k].centre_id +
                               "'");
    }
    auto links_to = [&](std::size_t k, const std::string& id) {
      int count = 0;
      for (const Slot& s : centres[k].slots)
        if (is_link(s) && std::get<Link>(s).target == id) ++count;
      return count;
    };
    auto token_ok = [](const std::string& s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
          return false;
      return true;
    };
    for (std::size_t k = 0; k < n; ++k) {
      if (!token_ok(centres[k].centre_id) || centres[k].centre_id[0] == '@')
        throw StructureError("centre id '" + centres[k].centre_id +
                             "' is not a valid token");
      int link_slots = 0;
      for (const Slot& s : centres[k].slots) {
        if (!is_link(s)) {
          const std::string& label = std::get<Ligand>(s).label;
          if (!token_ok(label) || label[0] == '@')
            throw StructureError("ligand label '" + label +
                                 "' is not a valid token");
          continue;
        }
        ++link_slots;
        const std::string& tgt = std::get<Link>(s).target;
        if (tgt == centres[k].centre_id)
          throw StructureError("centre '" + tgt + "' links to itself");
        const std::string prev = k > 0 ? centres[k - 1].centre_id : "";
        const std::string next = k + 1 < n ? centres[k + 1].centre_id : "";
        if (tgt != prev && tgt != next)
          throw StructureError("centre '" + centres[k].centre_id +
                               "' links to non-adjacent centre '" + tgt + "'");
      }
      if (link_slots > 2)
        throw StructureError("centre '" + centres[k].centre_id +
                             "' has more than two links");
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::string& a = centres[k].centre_id;
      const std::string& b = centres[k + 1].centre_id;
      if (links_to(k, b) != 1 || links_to(k + 1, a) != 1)
        throw StructureError("centres '" + a + "' and '" + b +
                             "' must share exactly one mutual link");
    }
  }
};

/// Apply an operator to one centre of a chain, leaving the others untouched.
inline ChainMolecule apply_to_centre(const ChainMolecule& m, std::size_t k,
                                     const Operator& op) {
  if (k >= m.centres.size())
    throw std::invalid_argument("centre position out of range");
  ChainMolecule out = m;
  out.centres[k] = apply_operator(op, m.centres[k]);
  return out;
}

}  // namespace chiral
