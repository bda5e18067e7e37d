#pragma once

// The 24 slot-permutation operators of a tetrahedral stereocentre.
//
// A projected tetrahedron is a column vector of four bonds; slot 1 is the
// left arm of the projection cross and slots proceed clockwise (top, right,
// bottom). Each operator is a 4x4 permutation matrix acting on that vector
// from the left. Twelve operators have determinant +1 (R1..R12, the allowed
// projection moves: even permutations, an A4 subgroup) and twelve have
// determinant -1 (I1..I12, bond-pair interchanges: odd permutations).
// Together they are all of S4, realized as O(4) integer matrices.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace chiral {

enum class Kind : std::uint8_t { Rotation, Inversion };

class Operator {
 public:
  /// Row map of the matrix: row i has its 1 in column perm()[i], i.e.
  /// applying the operator puts the content of slot perm()[i] into slot i
  /// (0-based).
  const std::array<std::uint8_t, 4>& perm() const noexcept { return perm_; }

  Kind kind() const noexcept { return kind_; }

  /// 1..12 within its kind.
  int index() const noexcept { return index_; }

  /// 0..23 over the whole set; R1..R12 are 0..11, I1..I12 are 12..23.
  int ordinal() const noexcept {
    return (kind_ == Kind::Rotation ? 0 : 12) + index_ - 1;
  }

  /// "R1".."R12" / "I1".."I12".
  std::string name() const {
    return (kind_ == Kind::Rotation ? "R" : "I") + std::to_string(index_);
  }

  /// The matrix with exact 0/1 integer entries.
  std::array<std::array<int, 4>, 4> matrix() const noexcept {
    std::array<std::array<int, 4>, 4> m{};
    for (int i = 0; i < 4; ++i) m[i][perm_[i]] = 1;
    return m;
  }

  friend bool operator==(const Operator& a, const Operator& b) noexcept {
    return a.perm_ == b.perm_;
  }
  friend bool operator!=(const Operator& a, const Operator& b) noexcept {
    return !(a == b);
  }

  static const Operator& get(Kind kind, int index);
  static const Operator& by_ordinal(int ordinal);
  static const std::array<Operator, 24>& all();

 private:
  constexpr Operator(Kind kind, std::uint8_t index,
                     std::array<std::uint8_t, 4> perm) noexcept
      : perm_(perm), kind_(kind), index_(index) {}

  std::array<std::uint8_t, 4> perm_;
  Kind kind_;
  std::uint8_t index_;

  template <std::size_t... Is>
  friend constexpr std::array<Operator, 24> detail_make_all(
      std::index_sequence<Is...>);
};

namespace detail {

// Row maps transcribed from the two operator tables (0-based).
inline constexpr std::array<std::array<std::uint8_t, 4>, 12> kRotationPerms{{
    {0, 1, 2, 3},  // R1: identity
    {2, 1, 3, 0},  // R2: (s1,s2,s3,s4) -> (s3,s2,s4,s1)
    {3, 1, 0, 2},  // R3
    {1, 2, 0, 3},  // R4
    {1, 0, 3, 2},  // R5
    {1, 3, 2, 0},  // R6
    {2, 3, 0, 1},  // R7
    {3, 0, 2, 1},  // R8
    {0, 2, 3, 1},  // R9
    {0, 3, 1, 2},  // R10
    {3, 2, 1, 0},  // R11
    {2, 0, 1, 3},  // R12
}};

inline constexpr std::array<std::array<std::uint8_t, 4>, 12> kInversionPerms{{
    {3, 1, 2, 0},  // I1: swaps slots 1 and 4
    {2, 1, 0, 3},  // I2
    {0, 1, 3, 2},  // I3
    {1, 2, 3, 0},  // I4
    {1, 3, 0, 2},  // I5
    {1, 0, 2, 3},  // I6
    {2, 0, 3, 1},  // I7
    {0, 3, 2, 1},  // I8
    {3, 2, 0, 1},  // I9
    {3, 0, 1, 2},  // I10
    {0, 2, 1, 3},  // I11
    {2, 3, 1, 0},  // I12
}};

constexpr int permutation_sign(const std::array<std::uint8_t, 4>& p) noexcept {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

constexpr bool tables_consistent() {
  for (const auto& p : kRotationPerms)
    if (permutation_sign(p) != +1) return false;
  for (const auto& p : kInversionPerms)
    if (permutation_sign(p) != -1) return false;
  return true;
}
static_assert(tables_consistent(),
              "rotation tables must be even permutations, inversions odd");

constexpr int pack(const std::array<std::uint8_t, 4>& p) noexcept {
  return p[0] | p[1] << 2 | p[2] << 4 | p[3] << 6;
}

}  // namespace detail

template <std::size_t... Is>
constexpr std::array<Operator, 24> detail_make_all(std::index_sequence<Is...>) {
  return {Operator(Is < 12 ? Kind::Rotation : Kind::Inversion,
                   static_cast<std::uint8_t>(Is % 12 + 1),
                   Is < 12 ? detail::kRotationPerms[Is]
                           : detail::kInversionPerms[Is - 12])...};
}

inline constexpr std::array<Operator, 24> kAllOperators =
    detail_make_all(std::make_index_sequence<24>{});

inline const std::array<Operator, 24>& Operator::all() {
  return kAllOperators;
}

inline const Operator& Operator::by_ordinal(int ordinal) {
  if (ordinal < 0 || ordinal >= 24)
    throw std::invalid_argument("operator ordinal must be in 0..23, got " +
                                std::to_string(ordinal));
  return all()[ordinal];
}

inline const Operator& Operator::get(Kind kind, int index) {
  if (index < 1 || index > 12)
    throw std::invalid_argument("operator index must be in 1..12, got " +
                                std::to_string(index));
  return all()[(kind == Kind::Rotation ? 0 : 12) + index - 1];
}

inline const Operator& rotation(int index) {
  return Operator::get(Kind::Rotation, index);
}
inline const Operator& inversion(int index) {
  return Operator::get(Kind::Inversion, index);
}

/// +1 for rotations, -1 for inversions (the permutation sign).
inline int determinant(const Operator& op) noexcept {
  return detail::permutation_sign(op.perm());
}

/// Locate an operator by its row map; every 4-slot permutation is present.
inline const Operator& operator_from_perm(const std::array<std::uint8_t, 4>& p) {
  static const std::array<std::int8_t, 256> table = [] {
    std::array<std::int8_t, 256> t{};
    t.fill(-1);
    for (const Operator& op : Operator::all())
      t[detail::pack(op.perm())] = static_cast<std::int8_t>(op.ordinal());
    return t;
  }();
  int ord = table[detail::pack(p)];
  if (ord < 0) throw std::logic_error("not a valid slot permutation");
  return Operator::all()[ord];
}

/// Matrix product a*b acting on column vectors: b is applied first.
/// The set is closed, so the result is always one of the 24.
inline const Operator& compose(const Operator& a, const Operator& b) {
  std::array<std::uint8_t, 4> c{};
  for (int i = 0; i < 4; ++i) c[i] = b.perm()[a.perm()[i]];
  return operator_from_perm(c);
}

inline const Operator& inverse(const Operator& op) {
  std::array<std::uint8_t, 4> q{};
  for (int i = 0; i < 4; ++i) q[op.perm()[i]] = static_cast<std::uint8_t>(i);
  return operator_from_perm(q);
}

/// 24x24 multiplication table of ordinals; cell [a][b] = ordinal of a*b.
using CayleyTable = std::array<std::array<std::uint8_t, 24>, 24>;

inline const CayleyTable& cayley_table() {
  static const CayleyTable table = [] {
    CayleyTable t{};
    for (const Operator& a : Operator::all())
      for (const Operator& b : Operator::all())
        t[a.ordinal()][b.ordinal()] =
            static_cast<std::uint8_t>(compose(a, b).ordinal());
    return t;
  }();
  return table;
}

/// Cycles of the permutation (orbits of the row map), each listed from its
/// lowest slot, cycles ordered by lowest slot.
inline std::array<std::array<std::uint8_t, 5>, 4> cycles(const Operator& op) {
  // cycles[c][0] = length, then the slots; unused cycles have length 0.
  std::array<std::array<std::uint8_t, 5>, 4> out{};
  std::array<bool, 4> seen{};
  int c = 0;
  for (std::uint8_t i = 0; i < 4; ++i) {
    if (seen[i]) continue;
    std::uint8_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      out[c][1 + len++] = j;
      j = op.perm()[j];
    }
    out[c][0] = len;
    ++c;
  }
  return out;
}

/// Number of independent rotation angles of O(N): N(N-1)/2.
inline long long group_dimension(long long n) {
  if (n < 2)
    throw std::invalid_argument("group dimension needs N >= 2, got " +
                                std::to_string(n));
  return n * (n - 1) / 2;
}

}  // namespace chiral
