#pragma once

// Self-verification checks grouped the way the CLI exposes them. Every check
// is deterministic (fixed seeds) and fast; each returns PASS/FAIL with a
// short detail string.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chiral/aufbau.hpp"
#include "chiral/charpoly.hpp"
#include "chiral/classify.hpp"
#include "chiral/commutator.hpp"
#include "chiral/molfile.hpp"
#include "chiral/operators.hpp"
#include "chiral/quantum.hpp"
#include "chiral/spectrum.hpp"
#include "chiral/tetra.hpp"

namespace chiral {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

namespace verify_detail {

inline void report(std::vector<CheckResult>& out, const std::string& name,
                   bool ok, const std::string& detail = "") {
  out.push_back(CheckResult{name, ok, detail});
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline Tetrahedron ligand_tetra(const std::string& id,
                                std::array<std::string, 4> labels) {
  Tetrahedron t;
  t.centre_id = id;
  for (int i = 0; i < 4; ++i) t.slots[i] = Ligand{labels[i]};
  return t;
}

// the canonical two-centre chain with an internal mirror twin (achiral)
inline ChainMolecule meso_chain() {
  ChainMolecule m;
  m.name = "meso";
  Tetrahedron c1 = ligand_tetra("c1", {"H", "CO2H", "OH", "x"});
  c1.slots[3] = Link{"c2"};
  Tetrahedron c2 = ligand_tetra("c2", {"H", "x", "OH", "CO2H"});
  c2.slots[1] = Link{"c1"};
  m.centres = {c1, c2};
  return m;
}

inline ChainMolecule lactic_chain() {
  ChainMolecule m;
  m.name = "lactic";
  m.centres = {ligand_tetra("c1", {"OH", "CO2H", "H", "CH3"})};
  return m;
}

inline ChainMolecule distinct_two_chain() {
  ChainMolecule m;
  m.name = "twochiral";
  Tetrahedron c1 = ligand_tetra("c1", {"A", "B", "C", "x"});
  c1.slots[3] = Link{"c2"};
  Tetrahedron c2 = ligand_tetra("c2", {"x", "D", "E", "F"});
  c2.slots[0] = Link{"c1"};
  m.centres = {c1, c2};
  return m;
}

}  // namespace verify_detail

inline std::vector<CheckResult> verify_closure() {
  using verify_detail::report;
  std::vector<CheckResult> out;
  const auto& ops = Operator::all();

  {
    std::set<std::array<std::uint8_t, 4>> perms;
    int det_plus = 0, det_minus = 0;
    bool perm_matrix = true, kinds = true;
    for (const Operator& op : ops) {
      perms.insert(op.perm());
      (determinant(op) > 0 ? det_plus : det_minus)++;
      kinds = kinds && ((determinant(op) > 0) == (op.kind() == Kind::Rotation));
      const auto m = op.matrix();
      for (int i = 0; i < 4; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < 4; ++j) {
          row += m[i][j];
          col += m[j][i];
        }
        perm_matrix = perm_matrix && row == 1 && col == 1;
      }
    }
    const bool identity_ok = rotation(1).matrix() ==
                             std::array<std::array<int, 4>, 4>{{{1, 0, 0, 0},
                                                                {0, 1, 0, 0},
                                                                {0, 0, 1, 0},
                                                                {0, 0, 0, 1}}};
    const bool i1_ok =
        inversion(1).perm() == std::array<std::uint8_t, 4>{3, 1, 2, 0};
    report(out, "closure/table-fidelity",
           perms.size() == 24 && det_plus == 12 && det_minus == 12 && kinds &&
               perm_matrix && identity_ok && i1_ok,
           "24 distinct permutation matrices, 12 each determinant");
  }

  {
    bool ok = true;
    for (const Operator& a : ops)
      for (const Operator& b : ops) {
        const Operator& c = compose(a, b);
        ok = ok && determinant(c) == determinant(a) * determinant(b);
      }
    report(out, "closure/product-closure",
           ok, "576 products stay in the set, kind follows determinants");
  }

  {
    const bool ok = compose(rotation(8), rotation(9)) == rotation(5) &&
                    compose(inversion(10), rotation(10)) == inversion(7) &&
                    compose(inversion(5), inversion(2)) == rotation(6) &&
                    compose(inversion(2), inversion(5)) == rotation(10);
    report(out, "closure/recorded-products",
           ok, "R8*R9=R5, I10*R10=I7, I5*I2=R6, I2*I5=R10");
  }

  {
    bool ok = true;
    for (const Operator& x : ops)
      ok = ok && compose(rotation(1), x) == x && compose(x, rotation(1)) == x;
    report(out, "closure/identity", ok, "R1 is a two-sided identity");
  }

  {
    bool ok = true;
    for (int k = 1; k <= 12; ++k)
      for (int l = 1; l <= 12; ++l)
        ok = ok && compose(inversion(k), inversion(l)).kind() == Kind::Rotation;
    report(out, "closure/inversion-pairs-rotate",
           ok, "every product of two inversions is a rotation");
  }

  {
    bool ok = true;
    for (int k = 1; k <= 12; ++k) {
      ok = ok && inverse(rotation(k)).kind() == Kind::Rotation;
      for (int l = 1; l <= 12; ++l)
        ok = ok && compose(rotation(k), rotation(l)).kind() == Kind::Rotation;
    }
    report(out, "closure/rotation-subgroup",
           ok, "rotations closed under product and inverse");
  }

  {
    const int klein[4] = {1, 5, 7, 11};
    bool ok = true;
    for (int a : klein)
      for (int b : klein) {
        const Operator& p = compose(rotation(a), rotation(b));
        ok = ok && p == compose(rotation(b), rotation(a));
        bool member = false;
        for (int c : klein) member = member || p == rotation(c);
        ok = ok && member;
      }
    report(out, "closure/klein-subgroup",
           ok, "{R1,R5,R7,R11} abelian and closed");
  }

  {
    const CayleyTable& t = cayley_table();
    bool ok = true;
    for (int a = 0; a < 24; ++a) {
      std::set<int> row, col;
      for (int b = 0; b < 24; ++b) {
        row.insert(t[a][b]);
        col.insert(t[b][a]);
      }
      ok = ok && row.size() == 24 && col.size() == 24;
    }
    for (int b = 0; b < 24; ++b) ok = ok && t[0][b] == b && t[b][0] == b;
    report(out, "closure/cayley-latin-square",
           ok, "each row and column a permutation of the 24, identity row/col");
  }

  {
    bool ok = true;
    for (const Operator& op : ops)
      ok = ok && compose(op, inverse(op)) == rotation(1) &&
           compose(inverse(op), op) == rotation(1);
    report(out, "closure/inverses", ok, "op * op^-1 = identity for all 24");
  }

  {
    bool ok = group_dimension(4) == 6 && group_dimension(2) == 1 &&
              group_dimension(3) == 3;
    bool threw = false;
    try {
      group_dimension(1);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    report(out, "closure/group-dimension",
           ok && threw, "N(N-1)/2: 6 for N=4; rejects N<2");
  }

  return out;
}

inline std::vector<CheckResult> verify_eigen() {
  using verify_detail::report;
  std::vector<CheckResult> out;
  const auto& ops = Operator::all();

  {
    auto cls = [](const Operator& op) { return char_poly(op).cls; };
    bool ok = cls(rotation(1)) == CharPolyClass::Identity;
    for (int k : {2, 3, 4, 6, 8, 9, 10, 12})
      ok = ok && cls(rotation(k)) == CharPolyClass::ThreeCycle;
    for (int k : {5, 7, 11})
      ok = ok && cls(rotation(k)) == CharPolyClass::DoubleTransposition;
    for (int k : {1, 2, 3, 6, 8, 11})
      ok = ok && cls(inversion(k)) == CharPolyClass::Transposition;
    for (int k : {4, 5, 7, 9, 10, 12})
      ok = ok && cls(inversion(k)) == CharPolyClass::FourCycle;
    report(out, "eigen/charpoly-classes",
           ok, "five factored classes with the exact memberships");
  }

  {
    bool ok = true;
    for (const Operator& op : ops) ok = ok && char_poly(op).eval(1) == 0;
    report(out, "eigen/charpoly-at-one",
           ok, "lambda = 1 is a root for every operator");
  }

  {
    bool ok = true;
    for (const Operator& g : ops)
      for (const Operator& a : ops) {
        const Operator& conj = compose(compose(g, a), inverse(g));
        ok = ok && char_poly(conj).coefficients == char_poly(a).coefficients;
      }
    report(out, "eigen/charpoly-conjugation",
           ok, "invariant under conjugation, all 576 pairs");
  }

  {
    // cross-check the symbolic expansion against integer determinants of
    // (M - x I) at a few integer points
    auto int_det4 = [](std::array<std::array<long long, 4>, 4> m) {
      long long det = 0;
      int idx[4] = {0, 1, 2, 3};
      std::sort(idx, idx + 4);
      do {
        int sign = 1;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            if (idx[i] > idx[j]) sign = -sign;
        long long term = sign;
        for (int i = 0; i < 4; ++i) term *= m[i][idx[i]];
        det += term;
      } while (std::next_permutation(idx, idx + 4));
      return det;
    };
    bool ok = true;
    for (const Operator& op : ops) {
      const CharPoly cp = char_poly(op);
      for (long long x : {-3LL, 0LL, 2LL, 5LL}) {
        std::array<std::array<long long, 4>, 4> m{};
        const auto mm = op.matrix();
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            m[i][j] = mm[i][j] - (i == j ? x : 0);
        ok = ok && int_det4(m) == cp.eval(x);
      }
    }
    report(out, "eigen/charpoly-determinant-crosscheck",
           ok, "expansion matches integer det(M - xI) at sample points");
  }

  {
    std::set<SpectrumValue> seen;
    bool ok = true;
    for (const Operator& op : ops)
      for (const EigenPair& pr : eigenvalues(op).pairs) {
        seen.insert(pr.value);
        ok = ok && root_order(pr.value) >= 1 && root_order(pr.value) <= 4;
      }
    report(out, "eigen/six-values",
           ok && seen.size() == 6,
           "exactly 6 distinct eigenvalues occur across the set");
  }

  {
    bool ok = true;
    double worst = 0.0;
    for (const Operator& op : ops)
      for (const EigenPair& pr : eigenvalues(op).pairs) {
        ok = ok && eigenpair_exact(op, pr);
        worst = std::max(worst, eigenpair_residual(op, pr));
      }
    report(out, "eigen/eigenvector-residuals",
           ok && worst < 1e-12,
           "(op - lambda I)v = 0 exactly; float residual " +
               verify_detail::fmt(worst));
  }

  {
    bool ok = true;
    for (const Operator& op : ops) {
      Cyclotomic prod = Cyclotomic::one();
      for (const EigenPair& pr : eigenvalues(op).pairs)
        prod = prod * to_cyclotomic(pr.value);
      const Cyclotomic det = determinant(op) > 0 ? Cyclotomic::one()
                                                 : Cyclotomic::minus_one();
      ok = ok && prod == det;
    }
    report(out, "eigen/value-product-is-determinant", ok, "");
  }

  {
    // eigenvalue multisets follow the factored class
    auto values_sorted = [](const Operator& op) {
      auto v = eigenvalues(op).values();
      std::array<int, 4> tags{};
      for (int i = 0; i < 4; ++i) tags[i] = static_cast<int>(v[i]);
      std::sort(tags.begin(), tags.end());
      return tags;
    };
    auto tag = [](SpectrumValue v) { return static_cast<int>(v); };
    using A = std::array<int, 4>;
    auto sorted = [](A a) { std::sort(a.begin(), a.end()); return a; };
    const A id = sorted({tag(SpectrumValue::PlusOne), tag(SpectrumValue::PlusOne),
                         tag(SpectrumValue::PlusOne), tag(SpectrumValue::PlusOne)});
    const A three = sorted({tag(SpectrumValue::PlusOne), tag(SpectrumValue::PlusOne),
                            tag(SpectrumValue::OmegaPlus),
                            tag(SpectrumValue::OmegaMinus)});
    const A dbl = sorted({tag(SpectrumValue::PlusOne), tag(SpectrumValue::PlusOne),
                          tag(SpectrumValue::MinusOne),
                          tag(SpectrumValue::MinusOne)});
    const A tr = sorted({tag(SpectrumValue::PlusOne), tag(SpectrumValue::PlusOne),
                         tag(SpectrumValue::PlusOne), tag(SpectrumValue::MinusOne)});
    const A four = sorted({tag(SpectrumValue::PlusOne), tag(SpectrumValue::MinusOne),
                           tag(SpectrumValue::PlusI), tag(SpectrumValue::MinusI)});
    bool ok = true;
    for (const Operator& op : ops) {
      const A got = values_sorted(op);
      switch (char_poly(op).cls) {
        case CharPolyClass::Identity: ok = ok && got == id; break;
        case CharPolyClass::ThreeCycle: ok = ok && got == three; break;
        case CharPolyClass::DoubleTransposition: ok = ok && got == dbl; break;
        case CharPolyClass::Transposition: ok = ok && got == tr; break;
        case CharPolyClass::FourCycle: ok = ok && got == four; break;
      }
    }
    report(out, "eigen/values-match-charpoly", ok, "");
  }

  return out;
}

inline std::vector<CheckResult> verify_commutators() {
  using verify_detail::report;
  std::vector<CheckResult> out;
  const auto& ops = Operator::all();

  {
    bool ok = true;
    for (int s : {5, 7, 11})
      for (int m : {5, 7, 11})
        ok = ok && commutator(rotation(s), rotation(m)).is_zero;
    report(out, "commutators/klein-vanishing",
           ok, "[Rs, Rm] = 0 for s, m in {5, 7, 11}");
  }

  {
    bool ok = true;
    for (const Operator& x : ops)
      ok = ok && commutator(rotation(1), x).is_zero;
    report(out, "commutators/identity-vanishing", ok, "");
  }

  {
    bool ok = true;
    for (const Operator& a : ops)
      for (const Operator& b : ops) {
        const CommutatorDecomposition d = commutator(a, b);
        ok = ok && d.lhs_product.kind() == d.rhs_product.kind();
        ok = ok && d.is_zero == (d.lhs_product == d.rhs_product);
        ok = ok && d.lhs_product == compose(a, b) &&
             d.rhs_product == compose(b, a);
      }
    report(out, "commutators/same-kind-decomposition",
           ok, "both products share a kind for all 576 pairs");
  }

  {
    bool ok = true;
    for (int k = 1; k <= 12; ++k)
      for (int l = 1; l <= 12; ++l) {
        const CommutatorDecomposition d =
            commutator(rotation(k), inversion(l));
        ok = ok && d.product_kind() == Kind::Inversion;
      }
    report(out, "commutators/mixed-pairs-invert",
           ok, "[rotation, inversion] decomposes into two inversions");
  }

  {
    const CommutatorDecomposition d = commutator(inversion(1), inversion(2));
    report(out, "commutators/noncommuting-example",
           !d.is_zero && d.product_kind() == Kind::Rotation &&
               d.lhs_product == rotation(3) && d.rhs_product == rotation(2),
           "[I1, I2] = R3 - R2");
  }

  {
    // operators on different centres act independently
    ChainMolecule m = verify_detail::distinct_two_chain();
    bool ok = true;
    for (const Operator& a : ops)
      for (const Operator& b : ops) {
        const ChainMolecule x = apply_to_centre(apply_to_centre(m, 0, a), 1, b);
        const ChainMolecule y = apply_to_centre(apply_to_centre(m, 1, b), 0, a);
        ok = ok && x == y;
      }
    report(out, "commutators/cross-centre-independence",
           ok, "per-centre actions commute for all 576 pairs");
  }

  return out;
}

inline std::vector<CheckResult> verify_quantum() {
  using verify_detail::report;
  using verify_detail::fmt;
  std::vector<CheckResult> out;
  const auto& ops = Operator::all();

  {
    double worst = 0.0;
    for (int l : {0, 1, 2, 3})
      for (double e : {0.5, 1.0, 2.0})
        worst = std::max(
            worst, radial_residual(RadialProblem{l, e}, 0.5, 5.0, 1001));
    report(out, "quantum/radial-bounds", worst <= 1e-6,
           "max over l in 0..3, E in {0.5,1,2}: " + fmt(worst));
  }

  {
    double worst = 0.0;
    for (int samples : {1001, 4004, 16016})
      for (int l : {2, 3})
        worst = std::max(worst, radial_residual(RadialProblem{l, 1.0}, 0.5,
                                                5.0, samples));
    report(out, "quantum/radial-refined-bounds", worst <= 1e-6,
           "residual stays bounded on refined grids: " + fmt(worst));
  }

  {
    const RadialProblem p{2, 1.0};
    const double res =
        radial_residual_with_alpha0(p, 0.5, 5.0, 1001, alpha0(p) + 0.1);
    report(out, "quantum/radial-negative-control", res > 1e-3,
           "perturbed potential residual " + fmt(res));
  }

  {
    double worst = 0.0;
    for (int m : {0, 1, 2, 3})
      worst =
          std::max(worst, azimuthal_residual(AzimuthalProblem{m}, 4001));
    const bool zero_exact =
        azimuthal_residual(AzimuthalProblem{0}, 4001) == 0.0;
    report(out, "quantum/azimuthal-bounds", worst <= 1e-5 && zero_exact,
           "max over m in 0..3 at 4001 samples: " + fmt(worst));
  }

  {
    bool ok = true;
    for (const Operator& op : ops)
      ok = ok && hamiltonian_commutes({1.25, 1.25, 1.25, 1.25}, op);
    report(out, "quantum/hamiltonian-degenerate",
           ok, "diag(E) commutes with all 24 when energies are equal");
  }

  {
    std::mt19937 rng(20240901);
    std::uniform_real_distribution<double> dist(0.5, 4.0);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      EnergyVector e{dist(rng), dist(rng), dist(rng), dist(rng)};
      if (trial % 3 == 1) e[2] = e[0];  // engineered coincidences
      if (trial % 3 == 2) e = {e[0], e[0], e[1], e[1]};
      for (const Operator& op : ops) {
        bool constant_on_cycles = true;
        for (int i = 0; i < 4; ++i)
          constant_on_cycles =
              constant_on_cycles &&
              std::abs(e[i] - e[op.perm()[i]]) <= 1e-12;
        ok = ok && hamiltonian_commutes(e, op) == constant_on_cycles;
      }
    }
    ok = ok && hamiltonian_commutes({1, 2, 3, 4}, rotation(1)) &&
         !hamiltonian_commutes({1, 2, 3, 4}, rotation(2));
    report(out, "quantum/hamiltonian-cycle-condition",
           ok, "commutes iff E constant on every permutation cycle");
  }

  {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      std::complex<double> l{dist(rng), dist(rng)}, r{dist(rng), dist(rng)};
      const double nrm = std::sqrt(std::norm(l) + std::norm(r));
      const ChiralState s{l / nrm, r / nrm};
      for (const Operator& op : ops) {
        const ChiralState t = chiral_action(op, s);
        if (determinant(op) > 0)
          ok = ok && t.left == s.left && t.right == s.right;
        else
          ok = ok && t.left == s.right && t.right == s.left;
        ok = ok && std::abs(t.norm() - 1.0) <= 1e-12;
      }
    }
    report(out, "quantum/chiral-action-determinant-factor",
           ok, "action depends only on the determinant sign; unitary");
  }

  {
    bool ok = true;
    const ChiralState r = ChiralState::right_state();
    for (const Operator& a : ops)
      for (const Operator& b : ops) {
        const ChiralState via_compose = chiral_action(compose(a, b), r);
        const ChiralState via_steps = chiral_action(a, chiral_action(b, r));
        ok = ok && via_compose.left == via_steps.left &&
             via_compose.right == via_steps.right;
      }
    report(out, "quantum/chiral-action-homomorphism",
           ok, "chiral_action(a*b) = chiral_action(a) o chiral_action(b)");
  }

  {
    bool ok = true;
    for (const Operator& op : ops) {
      const int plus = parity_eigenphase(op, ParityKind::Plus);
      const int minus = parity_eigenphase(op, ParityKind::Minus);
      if (op.kind() == Kind::Rotation)
        ok = ok && plus == +1 && minus == +1;
      else
        ok = ok && plus == +1 && minus == -1;
    }
    const auto [plus, minus] = parity_states();
    const std::complex<double> overlap =
        std::conj(plus.left) * minus.left + std::conj(plus.right) * minus.right;
    ok = ok && std::abs(overlap) <= 1e-12 &&
         std::abs(plus.norm() - 1.0) <= 1e-12 &&
         std::abs(minus.norm() - 1.0) <= 1e-12;
    report(out, "quantum/parity-preservation",
           ok, "rotations +1/+1, inversions +1/-1; parity states orthonormal");
  }

  {
    bool ok = true;
    for (double e : {0.0, 1.0, -2.5})
      for (double d : {0.0, 0.3, 1.7}) {
        const Matrix2 z = hund_commutator(e, d, 0.0);
        ok = ok && z[0][0] == 0 && z[0][1] == 0 && z[1][0] == 0 && z[1][1] == 0;
        const Matrix2 nz = hund_commutator(e, d, 0.05);
        ok = ok && std::abs(nz[0][1] + 0.1) <= 1e-12 &&
             std::abs(nz[1][0] - 0.1) <= 1e-12 && nz[0][0] == 0 &&
             nz[1][1] == 0;
      }
    report(out, "quantum/hund-commutator",
           ok, "[P, H] = 0 iff the handed asymmetry vanishes");
  }

  return out;
}

inline std::vector<CheckResult> verify_chains() {
  using verify_detail::report;
  using verify_detail::ligand_tetra;
  std::vector<CheckResult> out;
  const auto& ops = Operator::all();

  Tetrahedron probe = ligand_tetra("t", {"w", "x", "y", "z"});
  probe.bonds = {{Bond{1.0, 0.1}, Bond{0.5, 2.0}, Bond{2.0, 4.0}, Bond{1.5, 5.5}}};

  {
    bool ok = true;
    for (const Operator& a : ops)
      for (const Operator& b : ops)
        ok = ok && apply_operator(compose(a, b), probe) ==
                       apply_operator(a, apply_operator(b, probe));
    report(out, "chains/representation-property",
           ok, "apply(a*b) = apply(a) o apply(b), all 576 pairs");
  }

  {
    bool ok = true;
    const std::complex<double> base = sum_vector(probe);
    for (const Operator& op : ops)
      ok = ok && std::abs(sum_vector(apply_operator(op, probe)) - base) <= 1e-12;
    report(out, "chains/sum-vector-invariance", ok, "");
  }

  {
    bool ok = true;
    for (const Operator& op : ops)
      ok = ok && apply_operator(inverse(op), apply_operator(op, probe)) == probe;
    report(out, "chains/operator-round-trip", ok, "");
  }

  {
    bool ok = bond_count(1, false) == 4 && bond_count(2, false) == 7 &&
              bond_count(2, true) == 8 && bond_count(5, false) == 16 &&
              bond_count(5, true) == 20;
    bool threw = false;
    try {
      bond_count(0, false);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    report(out, "chains/bond-count", ok && threw, "3n+1 plain, 4n with spacers");
  }

  {
    bool ok = true;
    for (const Operator& op : ops) {
      const Tetrahedron t = apply_operator(op, probe);
      ok = ok && mirror_tetra(mirror_tetra(t)) == t;
    }
    report(out, "chains/mirror-involution", ok, "");
  }

  {
    const ChiralityIndex idx = chirality_index(verify_detail::lactic_chain());
    report(out, "chains/lactic-enantiomer",
           idx == ChiralityIndex{1, 1} &&
               classify(idx) == Classification::Enantiomer,
           "chi = {1, 1}");
  }

  {
    const ChiralityIndex idx = chirality_index(verify_detail::meso_chain());
    report(out, "chains/meso-achiral",
           idx == ChiralityIndex{2, 0} &&
               classify(idx) == Classification::Achiral,
           "chi = {2, 0}");
  }

  {
    const ChiralityIndex idx =
        chirality_index(verify_detail::distinct_two_chain());
    report(out, "chains/distinct-pair-enantiomer",
           idx == ChiralityIndex{2, 2} &&
               classify(idx) == Classification::Enantiomer,
           "chi = {2, 2}");
  }

  {
    bool ok = true;
    for (int k = 1; k <= 12; ++k) {
      ok = ok && chirality_index(verify_detail::lactic_chain(), inversion(k)) ==
                     ChiralityIndex{1, 1};
      ok = ok && chirality_index(verify_detail::meso_chain(), inversion(k)) ==
                     ChiralityIndex{2, 0};
      ok = ok &&
           chirality_index(verify_detail::distinct_two_chain(), inversion(k)) ==
               ChiralityIndex{2, 2};
    }
    report(out, "chains/mirror-choice-invariance",
           ok, "same index under all 12 designated inversions");
  }

  {
    const ProjectionSet fourd =
        enumerate_projections(ligand_tetra("c", {"OH", "CO2H", "H", "CH3"}));
    const ProjectionSet merged =
        enumerate_projections(ligand_tetra("c", {"A", "A", "A", "A"}));
    report(out, "chains/projection-orbits",
           fourd.distinct_count == 24 && fourd.orbit_count() == 2 &&
               fourd.orbit_sizes == std::vector<int>{12, 12} &&
               merged.distinct_count == 1 && merged.orbit_count() == 1,
           "4 distinct ligands: 24 projections in 2 orbits of 12");
  }

  {
    bool ok = true;
    ok = ok && add_centre({3, 0}, AufbauStep{0}) == ChiralityIndex{4, 0};
    ok = ok && add_centre({3, 2}, AufbauStep{0}) == ChiralityIndex{4, 2};
    ok = ok && add_centre({3, 3}, AufbauStep{0}) == ChiralityIndex{4, 3};
    ok = ok && add_centre({3, 0}, AufbauStep{1}) == ChiralityIndex{4, 1};
    ok = ok && add_centre({3, 2}, AufbauStep{1}) == ChiralityIndex{4, 3};
    ok = ok && add_centre({3, 3}, AufbauStep{1}) == ChiralityIndex{4, 4};
    report(out, "chains/aufbau-transitions", ok, "all six rules");
  }

  {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> nd(1, 6), coin(0, 1);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n0 = nd(rng);
      std::uniform_int_distribution<int> pd(0, n0);
      const ChiralityIndex start{n0, pd(rng)};
      std::vector<AufbauStep> steps;
      const int len = nd(rng);
      int sum = 0;
      for (int i = 0; i < len; ++i) {
        steps.emplace_back(coin(rng));
        sum += steps.back().delta_p;
      }
      const AufbauTrace trace = aufbau_sequence(start, steps);
      ok = ok && trace.final_state() ==
                     ChiralityIndex{start.n + len, start.p + sum};
      for (std::size_t j = 0; j < trace.states.size(); ++j) {
        ok = ok && trace.states[j].p >= 0 &&
             trace.states[j].p <= trace.states[j].n;
        if (j > 0)
          ok = ok && trace.states[j].n == trace.states[j - 1].n + 1 &&
               trace.states[j].p >= trace.states[j - 1].p &&
               trace.states[j].p <= trace.states[j - 1].p + 1;
      }
    }
    report(out, "chains/aufbau-additivity",
           ok, "1000 random sequences match the closed form");
  }

  {
    ChainMolecule start;
    start.name = "half";
    start.centres = {ligand_tetra("c1", {"H", "CO2H", "OH", "R"})};
    Tetrahedron twin = ligand_tetra("c2", {"H", "x", "OH", "CO2H"});
    twin.slots[1] = Link{"c1"};
    const VerifiedAddition degenerate = verified_add_centre(start, twin, 4);
    const bool ok = degenerate.classified == ChiralityIndex{2, 0} &&
                    degenerate.raw == ChiralityIndex{2, 2};
    report(out, "chains/degenerate-addition",
           ok, "mirror-twin addition: classifier {2,0}, declared rule {2,2}");
  }

  {
    const std::string lactic =
        "molecule lactic\ncenter c1: OH CO2H H CH3\nend\n";
    const std::string meso =
        "molecule meso-tartaric\n"
        "center c1: H CO2H OH @c2\n"
        "center c2: H @c1 OH CO2H\n"
        "end\n";
    bool ok = true;
    for (const std::string& text : {lactic, meso}) {
      const ChainMolecule once = parse_molecule(text);
      const ChainMolecule twice = parse_molecule(serialize_molecule(once));
      ok = ok && once == twice;
    }
    report(out, "chains/molfile-round-trip",
           ok, "parse -> serialize -> parse is the identity");
  }

  return out;
}

inline std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (auto group : {verify_closure, verify_eigen, verify_commutators,
                     verify_quantum, verify_chains}) {
    auto part = group();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace chiral
