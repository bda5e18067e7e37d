#pragma once

// Building-up rules for tetrahedral chains: each added stereogenic centre
// raises n by one and p by a declared delta in {0,1}. verified_add_centre
// builds the actual extended chain as well, so degenerate additions (a
// mirror-twin centre creating internal symmetry) are caught by the
// classifier even though the declared rule cannot see them.

#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/classify.hpp"
#include "chiral/tetra.hpp"

namespace chiral {

struct AufbauStep {
  int delta_p;

  explicit AufbauStep(int dp) : delta_p(dp) {
    if (dp != 0 && dp != 1)
      throw std::invalid_argument("aufbau step delta must be 0 or 1");
  }
};

inline ChiralityIndex add_centre(const ChiralityIndex& idx,
                                 const AufbauStep& step) {
  if (idx.n < 1 || idx.p < 0 || idx.p > idx.n)
    throw std::invalid_argument("chirality index must satisfy 0 <= p <= n");
  return ChiralityIndex{idx.n + 1, idx.p + step.delta_p};
}

struct AufbauTrace {
  ChiralityIndex start;
  std::vector<AufbauStep> steps;
  std::vector<ChiralityIndex> states;            // one per step
  std::vector<Classification> classifications;   // one per step

  ChiralityIndex final_state() const noexcept {
    return states.empty() ? start : states.back();
  }
};

inline AufbauTrace aufbau_sequence(const ChiralityIndex& start,
                                   const std::vector<AufbauStep>& steps) {
  AufbauTrace trace{start, steps, {}, {}};
  ChiralityIndex cur = start;
  classify(cur);  // validates the start index
  for (const AufbauStep& s : steps) {
    cur = add_centre(cur, s);
    trace.states.push_back(cur);
    trace.classifications.push_back(classify(cur));
  }
  return trace;
}

struct VerifiedAddition {
  ChainMolecule chain;       // the extended chain
  ChiralityIndex classified; // authoritative: full superimposition search
  ChiralityIndex raw;        // declared-rule bookkeeping, blind to degeneracy
};

/// Attach a new centre to the tail of the chain, replacing the given ligand
/// slot (1..4) of the last centre with a link. The new centre must already
/// carry exactly one link slot pointing back at the last centre.
inline VerifiedAddition verified_add_centre(const ChainMolecule& m,
                                            const Tetrahedron& new_centre,
                                            int attach_slot) {
  m.validate();
  if (attach_slot < 1 || attach_slot > 4)
    throw std::invalid_argument("attach slot must be in 1..4");

  const Tetrahedron& last = m.centres.back();
  if (is_link(last.slots[attach_slot - 1]))
    throw StructureError("attachment slot of centre '" + last.centre_id +
                         "' is already a link");

  int back_links = 0;
  for (const Slot& s : new_centre.slots) {
    if (!is_link(s)) continue;
    ++back_links;
    if (std::get<Link>(s).target != last.centre_id)
      throw StructureError("new centre must link back to '" + last.centre_id +
                           "'");
  }
  if (back_links != 1)
    throw StructureError("new centre must carry exactly one link slot");

  const ChiralityIndex before = chirality_index(m);
  const int delta = standalone_chiral(new_centre) ? 1 : 0;

  ChainMolecule extended = m;
  extended.centres.back().slots[attach_slot - 1] =
      Link{new_centre.centre_id};
  extended.centres.push_back(new_centre);
  extended.validate();

  return VerifiedAddition{extended, chirality_index(extended),
                          ChiralityIndex{before.n + 1, before.p + delta}};
}

}  // namespace chiral
