#pragma once

// Quantum-mechanical consistency checks.
//
// The bond representation rho(r) = r/r0, Phi(theta) = exp(i*m*theta) solves
// a radial Schroedinger problem with V(r) = E - alpha0/r^2,
// alpha0 = (hbar^2/2mu)[l(l+1) - 2]. The residual routines verify this
// numerically on a sample grid with finite differences: 3-point second-order
// stencils for the radial equation, a 5-point fourth-order central stencil
// for the azimuthal one (periodic). Boundary points are excluded from the
// radial maximum; the azimuthal grid wraps.
//
// The two-level part: rotations fix the handed states |L>, |R>, inversions
// swap them, so the action factors through the determinant sign. The parity
// superpositions |+-> = (|L> +- |R>)/sqrt(2) are eigenstates of every
// operator, and the symmetric two-state Hamiltonian commutes with the swap
// exactly when its handed-state asymmetry vanishes.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/operators.hpp"
#include "chiral/tetra.hpp"

namespace chiral {

struct RadialProblem {
  int l;                         // orbital quantum number, >= 0
  double energy;                 // eigenvalue, units hbar^2/(2 mu r0^2)
  double r0 = 1.0;               // normalization length
  double hbar2_over_2mu = 1.0;

  void check() const {
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    if (!(r0 > 0.0)) throw std::invalid_argument("r0 must be positive");
    if (!(hbar2_over_2mu > 0.0))
      throw std::invalid_argument("hbar^2/(2 mu) must be positive");
  }
};

/// Coefficient of the 1/r^2 potential term for which rho(r) = r/r0 is an
/// exact solution.
inline double alpha0(const RadialProblem& p) {
  p.check();
  return p.hbar2_over_2mu * (static_cast<double>(p.l) * (p.l + 1) - 2.0);
}

/// Max absolute residual of the radial equation over the interior grid,
/// with the potential coefficient overridden (for negative controls).
inline double radial_residual_with_alpha0(const RadialProblem& p, double r_min,
                                          double r_max, int samples,
                                          double alpha) {
  p.check();
  if (!(r_min > 0.0)) throw std::invalid_argument("r_min must be positive");
  if (!(r_min < r_max)) throw std::invalid_argument("need r_min < r_max");
  if (samples < 3) throw std::invalid_argument("need at least 3 samples");

  const double h = (r_max - r_min) / (samples - 1);
  std::vector<double> r(samples), rho(samples);
  for (int i = 0; i < samples; ++i) {
    r[i] = r_min + i * h;
    rho[i] = r[i] / p.r0;
  }
  const double ll1 = static_cast<double>(p.l) * (p.l + 1);
  double worst = 0.0;
  for (int i = 1; i + 1 < samples; ++i) {
    const double d2 = (rho[i + 1] - 2.0 * rho[i] + rho[i - 1]) / (h * h);
    const double d1 = (rho[i + 1] - rho[i - 1]) / (2.0 * h);
    const double v = p.energy - alpha / (r[i] * r[i]);
    const double res =
        -p.hbar2_over_2mu * (d2 + (2.0 / r[i]) * d1 - ll1 * rho[i] / (r[i] * r[i]))
        + v * rho[i] - p.energy * rho[i];
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

inline double radial_residual(const RadialProblem& p, double r_min,
                              double r_max, int samples) {
  return radial_residual_with_alpha0(p, r_min, r_max, samples, alpha0(p));
}

struct AzimuthalProblem {
  int m;  // azimuthal quantum number
};

/// Max absolute residual of Phi'' + m^2 Phi = 0 for Phi = exp(i*m*theta)
/// over a periodic grid of the given size on [0, 2*pi).
inline double azimuthal_residual(const AzimuthalProblem& p, int samples) {
  if (samples < 3) throw std::invalid_argument("need at least 3 samples");
  const double h = kTwoPi / samples;
  std::vector<std::complex<double>> f(samples);
  for (int i = 0; i < samples; ++i)
    f[i] = std::polar(1.0, p.m * (i * h));
  auto at = [&](int i) { return f[(i % samples + samples) % samples]; };
  const double m2 = static_cast<double>(p.m) * p.m;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    std::complex<double> d2;
    if (samples >= 5) {
      d2 = (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) -
            at(i + 2)) /
           (12.0 * h * h);
    } else {
      d2 = (at(i - 1) - 2.0 * at(i) + at(i + 1)) / (h * h);
    }
    worst = std::max(worst, std::abs(d2 + m2 * at(i)));
  }
  return worst;
}

using EnergyVector = std::array<double, 4>;

/// Whether diag(E) commutes with the operator's matrix, entrywise within
/// tol. Holds exactly when E is constant on every cycle of the permutation.
inline bool hamiltonian_commutes(const EnergyVector& energies,
                                 const Operator& op, double tol = 1e-12) {
  const auto m = op.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double hm = energies[i] * m[i][j];  // diag(E) * M
      const double mh = m[i][j] * energies[j];  // M * diag(E)
      if (std::abs(hm - mh) > tol) return false;
    }
  return true;
}

/// Two-level state over the handed basis; amplitudes (left, right).
struct ChiralState {
  std::complex<double> left;
  std::complex<double> right;

  ChiralState(std::complex<double> l, std::complex<double> r)
      : left(l), right(r) {
    if (std::abs(std::norm(left) + std::norm(right) - 1.0) > 1e-12)
      throw std::invalid_argument("chiral state must be normalized");
  }

  static ChiralState left_state() { return ChiralState{1.0, 0.0}; }
  static ChiralState right_state() { return ChiralState{0.0, 1.0}; }

  double norm() const { return std::sqrt(std::norm(left) + std::norm(right)); }
};

/// Rotations fix the handed amplitudes, inversions swap them.
inline ChiralState chiral_action(const Operator& op, const ChiralState& s) {
  return determinant(op) > 0 ? s : ChiralState{s.right, s.left};
}

enum class ParityKind : std::uint8_t { Plus, Minus };

/// |+> = (|L> + |R>)/sqrt(2) and |-> = (|L> - |R>)/sqrt(2).
inline std::pair<ChiralState, ChiralState> parity_states() {
  const double s = 1.0 / std::sqrt(2.0);
  return {ChiralState{s, s}, ChiralState{s, -s}};
}

/// The scalar +-1 with chiral_action(op, state) == scalar * state for the
/// chosen parity state. Any other outcome would be leakage between the
/// parity sectors and throws.
inline int parity_eigenphase(const Operator& op, ParityKind which) {
  const auto [plus, minus] = parity_states();
  const ChiralState& in = which == ParityKind::Plus ? plus : minus;
  const ChiralState out = chiral_action(op, in);
  for (int sign : {+1, -1}) {
    if (std::abs(out.left - double(sign) * in.left) <= 1e-12 &&
        std::abs(out.right - double(sign) * in.right) <= 1e-12)
      return sign;
  }
  throw std::logic_error("operator leaked between parity states");
}

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Commutator [P, H] of the swap operator with the minimal two-state
/// Hamiltonian H = [[even+asym, delta], [delta, even-asym]] in the handed
/// basis. Zero exactly when asym = 0.
inline Matrix2 hund_commutator(double even_energy, double odd_delta,
                               double asym) {
  const Matrix2 h{{{even_energy + asym, odd_delta},
                   {odd_delta, even_energy - asym}}};
  // P*H - H*P with P = [[0,1],[1,0]]
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = h[1 - i][j] - h[i][1 - j];
  return out;
}

}  // namespace chiral
