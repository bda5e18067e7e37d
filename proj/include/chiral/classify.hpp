#pragma once

// Superimposability and the chirality index.
//
// A chain is compared against its mirror image (every centre reflected by a
// designated inversion). The search superimposes the mirror onto the
// original using the moves the projection rules allow: a chain automorphism
// (identity, or end-to-end reversal for linear chains) combined with an
// independent rotation at every centre, where link slots must land on link
// slots of corresponding centres. p counts the centres that no such move can
// reconcile, minimized over the automorphisms; the designated inversion does
// not matter because any two inversions differ by a rotation the per-centre
// search absorbs.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/operators.hpp"
#include "chiral/tetra.hpp"

namespace chiral {

struct ChiralityIndex {
  int n;  // stereogenic centres
  int p;  // centres still inverted after optimal superimposition

  friend bool operator==(const ChiralityIndex&, const ChiralityIndex&) =
      default;
};

enum class Classification : std::uint8_t {
  Achiral,          // p = 0
  Diastereoisomer,  // 0 < p < n
  Enantiomer,       // p = n
};

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::Achiral: return "ACHIRAL";
    case Classification::Diastereoisomer: return "DIASTEREOISOMER";
    case Classification::Enantiomer: return "ENANTIOMER";
  }
  throw std::logic_error("unreachable");
}

inline Classification classify(const ChiralityIndex& idx) {
  if (idx.n < 1 || idx.p < 0 || idx.p > idx.n)
    throw std::invalid_argument("chirality index must satisfy 0 <= p <= n");
  if (idx.p == 0) return Classification::Achiral;
  if (idx.p == idx.n) return Classification::Enantiomer;
  return Classification::Diastereoisomer;
}

/// The designated mirror image: the inversion interchanging slots 1 and 4.
inline Tetrahedron mirror_tetra(const Tetrahedron& t) {
  return apply_operator(inversion(1), t);
}

namespace detail {

// Does some rotation carry src onto tgt, slot for slot? Links compare
// through pos_map: corresponding centre positions rather than raw ids.
template <typename LinkMatch>
std::optional<Operator> find_rotation(const Tetrahedron& src,
                                      const Tetrahedron& tgt,
                                      LinkMatch&& link_match) {
  for (int k = 1; k <= 12; ++k) {
    const Operator& r = rotation(k);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      const Slot& s = src.slots[r.perm()[i]];
      const Slot& t = tgt.slots[i];
      if (is_link(s) != is_link(t)) {
        ok = false;
      } else if (is_link(s)) {
        ok = link_match(std::get<Link>(s).target, std::get<Link>(t).target);
      } else {
        ok = std::get<Ligand>(s).label == std::get<Ligand>(t).label;
      }
    }
    if (ok) return r;
  }
  return std::nullopt;
}

}  // namespace detail

/// Some rotation with apply_operator(r, a) == b, or none. Link slots match
/// when they target the same centre id.
inline std::optional<Operator> rotationally_superimposable(
    const Tetrahedron& a, const Tetrahedron& b) {
  return detail::find_rotation(
      a, b, [](const std::string& x, const std::string& y) { return x == y; });
}

/// True when the tetrahedron, taken alone, cannot be rotated onto its
/// mirror image; equivalently, its four slot values are pairwise distinct.
inline bool standalone_chiral(const Tetrahedron& t) {
  return !rotationally_superimposable(mirror_tetra(t), t).has_value();
}

/// Chirality index of a chain against its mirror image built with the given
/// inversion (any of the twelve; the result is invariant).
inline ChiralityIndex chirality_index(const ChainMolecule& m,
                                      const Operator& mirror) {
  if (mirror.kind() != Kind::Inversion)
    throw std::invalid_argument("designated mirror must be an inversion");
  m.validate();
  const int n = m.n();

  std::map<std::string, int> pos;
  for (int k = 0; k < n; ++k) pos[m.centres[k].centre_id] = k;

  std::vector<Tetrahedron> mirrored;
  mirrored.reserve(m.centres.size());
  for (const Tetrahedron& t : m.centres)
    mirrored.push_back(apply_operator(mirror, t));

  // automorphism maps mirror-chain position q to original position
  auto mismatches = [&](auto&& phi) {
    int bad = 0;
    for (int k = 0; k < n; ++k) {
      const Tetrahedron& tgt = m.centres[k];
      const Tetrahedron& src = mirrored[phi(k)];
      auto link_match = [&](const std::string& s, const std::string& t) {
        return phi(pos.at(s)) == pos.at(t);
      };
      if (!detail::find_rotation(src, tgt, link_match)) ++bad;
    }
    return bad;
  };

  int p = mismatches([](int k) { return k; });
  if (n > 1)
    p = std::min(p, mismatches([n](int k) { return n - 1 - k; }));
  return ChiralityIndex{n, p};
}

inline ChiralityIndex chirality_index(const ChainMolecule& m) {
  return chirality_index(m, inversion(1));
}

struct Projection {
  Operator op;
  Tetrahedron image;
  int orbit;  // 0-based, numbered by first appearance in R1..I12 order
};

struct ProjectionSet {
  std::vector<Projection> entries;  // all 24, in R1..R12, I1..I12 order
  int distinct_count;
  std::vector<int> orbit_sizes;  // distinct images per orbit

  int orbit_count() const noexcept {
    return static_cast<int>(orbit_sizes.size());
  }
};

/// Apply all 24 operators to a single all-ligand tetrahedron and partition
/// the images into rotation orbits. Four distinct ligands give 24 distinct
/// projections in two orbits of twelve; repeated ligands merge them.
inline ProjectionSet enumerate_projections(const Tetrahedron& t) {
  for (const Slot& s : t.slots)
    if (is_link(s))
      throw std::invalid_argument(
          "projection enumeration needs four ligand slots");

  using Key = std::array<std::string, 4>;
  auto key_of = [](const Tetrahedron& x) {
    Key k;
    for (int i = 0; i < 4; ++i) k[i] = std::get<Ligand>(x.slots[i]).label;
    return k;
  };

  std::map<Key, int> orbit_of;
  std::vector<int> orbit_sizes;
  ProjectionSet out;
  out.entries.reserve(24);
  for (const Operator& op : Operator::all()) {
    Tetrahedron image = apply_operator(op, t);
    const Key key = key_of(image);
    auto it = orbit_of.find(key);
    if (it == orbit_of.end()) {
      const int orbit = static_cast<int>(orbit_sizes.size());
      // seed the whole rotation orbit of this image
      int distinct = 0;
      for (int r = 1; r <= 12; ++r) {
        const Key rk = key_of(apply_operator(rotation(r), image));
        if (orbit_of.emplace(rk, orbit).second) ++distinct;
      }
      orbit_sizes.push_back(distinct);
      it = orbit_of.find(key);
    }
    out.entries.push_back(Projection{op, std::move(image), it->second});
  }
  out.distinct_count = static_cast<int>(orbit_of.size());
  out.orbit_sizes = std::move(orbit_sizes);
  return out;
}

}  // namespace chiral
