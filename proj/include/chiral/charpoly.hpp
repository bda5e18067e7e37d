#pragma once

// Exact characteristic polynomials of the 24 operators. Only five expansions
// occur, one per cycle type of the underlying permutation.

#include <array>
#include <stdexcept>
#include <string>

#include "chiral/operators.hpp"

namespace chiral {

enum class CharPolyClass : std::uint8_t {
  Identity,             // (1-x)^4
  ThreeCycle,           // (1-x)^2 (1+x+x^2)
  DoubleTransposition,  // (1-x)^2 (1+x)^2
  Transposition,        // (1-x)^3 (1+x)
  FourCycle,            // (1-x)(1+x)(x^2+1)
};

struct CharPoly {
  /// Coefficients of det(op - x*I); coefficients[k] multiplies x^k.
  /// For inversions this is the negative of the factored form below
  /// (same zero set).
  std::array<long long, 5> coefficients;
  CharPolyClass cls;

  long long eval(long long x) const noexcept {
    long long acc = 0, pw = 1;
    for (long long c : coefficients) {
      acc += c * pw;
      pw *= x;
    }
    return acc;
  }

  /// Factored form of the characteristic equation det(op - x*I) = 0.
  std::string factored() const {
    switch (cls) {
      case CharPolyClass::Identity: return "(1-x)^4";
      case CharPolyClass::ThreeCycle: return "(1-x)^2(1+x+x^2)";
      case CharPolyClass::DoubleTransposition: return "(1-x)^2(1+x)^2";
      case CharPolyClass::Transposition: return "(1-x)^3(1+x)";
      case CharPolyClass::FourCycle: return "(1-x)(1+x)(x^2+1)";
    }
    throw std::logic_error("unreachable");
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

namespace detail {

using Poly5 = std::array<long long, 5>;

inline Poly5 poly_mul(const Poly5& a, const Poly5& b) {
  Poly5 r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j + i < 5; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// det(op - x*I) by cofactor expansion along the first row, with entries
// that are degree-<=1 polynomials in x.
inline Poly5 charpoly_coefficients(const Operator& op) {
  const auto m = op.matrix();
  // entry(i,j) = m[i][j] - x*[i==j]
  auto entry = [&](int i, int j) {
    Poly5 p{};
    p[0] = m[i][j];
    if (i == j) p[1] = -1;
    return p;
  };
  auto det3 = [&](int rows[3], int cols[3]) {
    Poly5 d{};
    for (int k = 0; k < 3; ++k) {
      int c0 = cols[k], c1 = cols[(k + 1) % 3], c2 = cols[(k + 2) % 3];
      Poly5 t = poly_mul(entry(rows[0], c0),
                         poly_mul(entry(rows[1], c1), entry(rows[2], c2)));
      Poly5 u = poly_mul(entry(rows[0], c0),
                         poly_mul(entry(rows[1], c2), entry(rows[2], c1)));
      for (int i = 0; i < 5; ++i) d[i] += t[i] - u[i];
    }
    return d;
  };
  Poly5 det{};
  int rows[3] = {1, 2, 3};
  for (int j = 0; j < 4; ++j) {
    int cols[3], c = 0;
    for (int jj = 0; jj < 4; ++jj)
      if (jj != j) cols[c++] = jj;
    Poly5 minor = det3(rows, cols);
    Poly5 term = poly_mul(entry(0, j), minor);
    int sign = (j % 2 == 0) ? 1 : -1;
    for (int i = 0; i < 5; ++i) det[i] += sign * term[i];
  }
  return det;
}

inline CharPolyClass classify_charpoly(const Poly5& c) {
  if (c == Poly5{1, -4, 6, -4, 1}) return CharPolyClass::Identity;
  if (c == Poly5{1, -1, 0, -1, 1}) return CharPolyClass::ThreeCycle;
  if (c == Poly5{1, 0, -2, 0, 1}) return CharPolyClass::DoubleTransposition;
  if (c == Poly5{-1, 2, 0, -2, 1}) return CharPolyClass::Transposition;
  if (c == Poly5{-1, 0, 0, 0, 1}) return CharPolyClass::FourCycle;
  throw std::logic_error("characteristic polynomial outside the five classes");
}

}  // namespace detail

inline CharPoly char_poly(const Operator& op) {
  const auto c = detail::charpoly_coefficients(op);
  return CharPoly{c, detail::classify_charpoly(c)};
}

}  // namespace chiral
