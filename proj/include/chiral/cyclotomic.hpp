#pragma once

// Exact complex arithmetic in Z[z] with z = exp(i*pi/6), the smallest ring
// containing every eigenvalue of the operator set (1, -1, +-i and the two
// primitive cube roots of unity) and every component of their canonical
// eigenvectors. Minimal polynomial: z^4 = z^2 - 1.

#include <array>
#include <complex>
#include <cstdint>

namespace chiral {

struct Cyclotomic {
  // value = c[0] + c[1]*z + c[2]*z^2 + c[3]*z^3
  std::array<long long, 4> c{};

  friend constexpr bool operator==(const Cyclotomic&, const Cyclotomic&) =
      default;

  constexpr bool is_zero() const noexcept {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }

  friend constexpr Cyclotomic operator+(const Cyclotomic& a,
                                        const Cyclotomic& b) noexcept {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2],
             a.c[3] + b.c[3]}};
  }

  friend constexpr Cyclotomic operator-(const Cyclotomic& a,
                                        const Cyclotomic& b) noexcept {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2],
             a.c[3] - b.c[3]}};
  }

  friend constexpr Cyclotomic operator*(const Cyclotomic& a,
                                        const Cyclotomic& b) noexcept {
    long long r[7] = {};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i + j] += a.c[i] * b.c[j];
    // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
    r[0] -= r[6];
    r[3] += r[5];
    r[1] -= r[5];
    r[2] += r[4];
    r[0] -= r[4];
    return {{r[0], r[1], r[2], r[3]}};
  }

  std::complex<double> to_complex() const {
    constexpr double kHalfSqrt3 = 0.86602540378443864676;
    const std::complex<double> z{kHalfSqrt3, 0.5};  // exp(i*pi/6)
    std::complex<double> acc{0.0, 0.0}, pw{1.0, 0.0};
    for (long long k : c) {
      acc += static_cast<double>(k) * pw;
      pw *= z;
    }
    return acc;
  }

  static constexpr Cyclotomic zero() { return {{0, 0, 0, 0}}; }
  static constexpr Cyclotomic one() { return {{1, 0, 0, 0}}; }
  static constexpr Cyclotomic minus_one() { return {{-1, 0, 0, 0}}; }
  static constexpr Cyclotomic i() { return {{0, 0, 0, 1}}; }       // z^3
  static constexpr Cyclotomic minus_i() { return {{0, 0, 0, -1}}; }
  /// (-1 + i*sqrt(3))/2, a primitive cube root of unity (= z^2 - 1).
  static constexpr Cyclotomic omega_plus() { return {{-1, 0, 1, 0}}; }
  /// (-1 - i*sqrt(3))/2, its conjugate (= -z^2).
  static constexpr Cyclotomic omega_minus() { return {{0, 0, -1, 0}}; }
};

}  // namespace chiral
