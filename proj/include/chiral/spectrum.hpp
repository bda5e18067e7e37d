#pragma once

// Exact eigenvalues and canonical eigenvectors of the 24 operators.
//
// Only six eigenvalues occur across the whole set: +-1, +-i and the two
// primitive cube roots of unity. Each eigenvalue instance of an operator
// corresponds to one cycle of its permutation whose length divides the
// eigenvalue's order; the canonical eigenvector is supported on that cycle,
// carries 1 at the cycle's lowest slot and successive eigenvalue powers
// along it. For a repeated eigenvalue the instances are emitted
// lexicographically smallest vector first (deepest-starting cycle first),
// which also makes them linearly independent.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/charpoly.hpp"
#include "chiral/cyclotomic.hpp"
#include "chiral/operators.hpp"

namespace chiral {

enum class SpectrumValue : std::uint8_t {
  PlusOne,
  MinusOne,
  PlusI,
  MinusI,
  OmegaPlus,   // (-1 + i*sqrt(3))/2
  OmegaMinus,  // (-1 - i*sqrt(3))/2
};

inline Cyclotomic to_cyclotomic(SpectrumValue v) {
  switch (v) {
    case SpectrumValue::PlusOne: return Cyclotomic::one();
    case SpectrumValue::MinusOne: return Cyclotomic::minus_one();
    case SpectrumValue::PlusI: return Cyclotomic::i();
    case SpectrumValue::MinusI: return Cyclotomic::minus_i();
    case SpectrumValue::OmegaPlus: return Cyclotomic::omega_plus();
    case SpectrumValue::OmegaMinus: return Cyclotomic::omega_minus();
  }
  throw std::logic_error("unreachable");
}

inline std::complex<double> to_complex(SpectrumValue v) {
  return to_cyclotomic(v).to_complex();
}

inline std::string to_string(SpectrumValue v) {
  switch (v) {
    case SpectrumValue::PlusOne: return "1";
    case SpectrumValue::MinusOne: return "-1";
    case SpectrumValue::PlusI: return "i";
    case SpectrumValue::MinusI: return "-i";
    case SpectrumValue::OmegaPlus: return "(-1+i*sqrt3)/2";
    case SpectrumValue::OmegaMinus: return "(-1-i*sqrt3)/2";
  }
  throw std::logic_error("unreachable");
}

/// Order of the eigenvalue as a root of unity (1, 2, 3 or 4).
inline int root_order(SpectrumValue v) noexcept {
  switch (v) {
    case SpectrumValue::PlusOne: return 1;
    case SpectrumValue::MinusOne: return 2;
    case SpectrumValue::PlusI:
    case SpectrumValue::MinusI: return 4;
    default: return 3;
  }
}

struct EigenPair {
  SpectrumValue value;
  std::array<Cyclotomic, 4> vector;
};

struct EigenSet {
  std::array<EigenPair, 4> pairs;

  std::array<SpectrumValue, 4> values() const noexcept {
    return {pairs[0].value, pairs[1].value, pairs[2].value, pairs[3].value};
  }
};

namespace detail {

// Eigenvalues compatible with a cycle of length c, i.e. the c-th roots of
// unity, in emission order.
inline std::vector<SpectrumValue> roots_for_cycle_length(int c) {
  switch (c) {
    case 1: return {SpectrumValue::PlusOne};
    case 2: return {SpectrumValue::PlusOne, SpectrumValue::MinusOne};
    case 3:
      return {SpectrumValue::PlusOne, SpectrumValue::OmegaPlus,
              SpectrumValue::OmegaMinus};
    case 4:
      return {SpectrumValue::PlusOne, SpectrumValue::MinusOne,
              SpectrumValue::PlusI, SpectrumValue::MinusI};
    default: throw std::logic_error("cycle length outside 1..4");
  }
}

}  // namespace detail

/// Exact check that (op - lambda*I) v = 0 for one pair.
inline bool eigenpair_exact(const Operator& op, const EigenPair& pair) {
  const Cyclotomic lambda = to_cyclotomic(pair.value);
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    const Cyclotomic lhs = pair.vector[op.perm()[i]];  // (op*v)[i]
    if (!(lhs - lambda * pair.vector[i]).is_zero()) return false;
    nonzero = nonzero || !pair.vector[i].is_zero();
  }
  return nonzero;
}

/// The four (eigenvalue, eigenvector) pairs of an operator, exact and in
/// canonical order (values grouped 1, -1, i, -i, omega+, omega-). Every
/// pair is verified to satisfy (op - lambda*I)v = 0 before it is returned.
inline EigenSet eigenvalues(const Operator& op) {
  struct Candidate {
    SpectrumValue value;
    int start;  // lowest slot of the supporting cycle
    std::array<Cyclotomic, 4> vec;
  };
  std::vector<Candidate> cands;
  const auto cyc = cycles(op);
  for (const auto& c : cyc) {
    const int len = c[0];
    if (len == 0) continue;
    for (SpectrumValue v : detail::roots_for_cycle_length(len)) {
      std::array<Cyclotomic, 4> vec{};
      Cyclotomic pw = Cyclotomic::one();
      const Cyclotomic lambda = to_cyclotomic(v);
      // walk the orbit: slot sequence c[1..len]; eigen condition
      // vec[perm[i]] = lambda * vec[i]
      for (int k = 0; k < len; ++k) {
        vec[c[1 + k]] = pw;
        pw = pw * lambda;
      }
      cands.push_back({v, c[1], vec});
    }
  }
  // group by value in display order; within a value, deepest start first
  EigenSet out{};
  int filled = 0;
  for (SpectrumValue v :
       {SpectrumValue::PlusOne, SpectrumValue::MinusOne, SpectrumValue::PlusI,
        SpectrumValue::MinusI, SpectrumValue::OmegaPlus,
        SpectrumValue::OmegaMinus}) {
    std::vector<const Candidate*> group;
    for (const auto& cand : cands)
      if (cand.value == v) group.push_back(&cand);
    for (int i = static_cast<int>(group.size()) - 1; i >= 0; --i) {
      // candidates were generated cycle-by-cycle in ascending start order
      if (filled >= 4) throw std::logic_error("more than 4 eigenvalues");
      out.pairs[filled++] = EigenPair{v, group[static_cast<size_t>(i)]->vec};
    }
  }
  if (filled != 4) throw std::logic_error("expected exactly 4 eigenvalues");
  for (const EigenPair& pair : out.pairs)
    if (!eigenpair_exact(op, pair))
      throw std::logic_error("eigensolver produced an inexact pair");
  return out;
}

/// Floating bridge: max |op*v - lambda*v| over components.
inline double eigenpair_residual(const Operator& op, const EigenPair& pair) {
  const std::complex<double> lambda = to_complex(pair.value);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> lhs = pair.vector[op.perm()[i]].to_complex();
    worst = std::max(worst, std::abs(lhs - lambda * pair.vector[i].to_complex()));
  }
  return worst;
}

}  // namespace chiral
