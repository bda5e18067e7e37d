#include <catch2/catch.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "chiral/commutator.hpp"
#include "chiral/operators.hpp"

using namespace chiral;

namespace {

// Reference matrices transcribed independently of the row maps the library
// stores, so a typo in either transcription fails the comparison.
const std::array<std::array<const char*, 4>, 12> kRotRef{{
    {"1000", "0100", "0010", "0001"},  // R1
    {"0010", "0100", "0001", "1000"},  // R2
    {"0001", "0100", "1000", "0010"},  // R3
    {"0100", "0010", "1000", "0001"},  // R4
    {"0100", "1000", "0001", "0010"},  // R5
    {"0100", "0001", "0010", "1000"},  // R6
    {"0010", "0001", "1000", "0100"},  // R7
    {"0001", "1000", "0010", "0100"},  // R8
    {"1000", "0010", "0001", "0100"},  // R9
    {"1000", "0001", "0100", "0010"},  // R10
    {"0001", "0010", "0100", "1000"},  // R11
    {"0010", "1000", "0100", "0001"},  // R12
}};

const std::array<std::array<const char*, 4>, 12> kInvRef{{
    {"0001", "0100", "0010", "1000"},  // I1
    {"0010", "0100", "1000", "0001"},  // I2
    {"1000", "0100", "0001", "0010"},  // I3
    {"0100", "0010", "0001", "1000"},  // I4
    {"0100", "0001", "1000", "0010"},  // I5
    {"0100", "1000", "0010", "0001"},  // I6
    {"0010", "1000", "0001", "0100"},  // I7
    {"1000", "0001", "0010", "0100"},  // I8
    {"0001", "0010", "1000", "0100"},  // I9
    {"0001", "1000", "0100", "0010"},  // I10
    {"1000", "0010", "0100", "0001"},  // I11
    {"0010", "0001", "0100", "1000"},  // I12
}};

bool matches_ref(const Operator& op, const std::array<const char*, 4>& ref) {
  const auto m = op.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m[i][j] != ref[i][j] - '0') return false;
  return true;
}

// sign of the permutation matrix's determinant by Leibniz expansion,
// independent of the library's parity computation
int leibniz_det(const Operator& op) {
  const auto m = op.matrix();
  int idx[4] = {0, 1, 2, 3}, det = 0;
  do {
    int sign = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (idx[i] > idx[j]) sign = -sign;
    int term = sign;
    for (int i = 0; i < 4; ++i) term *= m[i][idx[i]];
    det += term;
  } while (std::next_permutation(idx, idx + 4));
  return det;
}

}  // namespace

TEST_CASE("the 24 operators match the reference matrices") {
  for (int k = 1; k <= 12; ++k) {
    INFO("R" << k);
    CHECK(matches_ref(rotation(k), kRotRef[k - 1]));
    INFO("I" << k);
    CHECK(matches_ref(inversion(k), kInvRef[k - 1]));
  }

  SECTION("all distinct, covering every 4-slot permutation") {
    std::set<std::array<std::uint8_t, 4>> perms;
    for (const Operator& op : Operator::all()) perms.insert(op.perm());
    CHECK(perms.size() == 24);
  }

  SECTION("each row and column holds exactly one 1") {
    for (const Operator& op : Operator::all()) {
      const auto m = op.matrix();
      for (int i = 0; i < 4; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < 4; ++j) {
          row += m[i][j];
          col += m[j][i];
        }
        CHECK(row == 1);
        CHECK(col == 1);
      }
    }
  }
}

TEST_CASE("operator lookup and naming") {
  CHECK(rotation(1).matrix() ==
        std::array<std::array<int, 4>, 4>{
            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  CHECK(rotation(5).name() == "R5");
  CHECK(inversion(12).name() == "I12");
  CHECK(rotation(7).ordinal() == 6);
  CHECK(inversion(7).ordinal() == 18);
  CHECK(Operator::by_ordinal(18) == inversion(7));

  CHECK_THROWS_AS(Operator::get(Kind::Rotation, 0), std::invalid_argument);
  CHECK_THROWS_AS(Operator::get(Kind::Rotation, 13), std::invalid_argument);
  CHECK_THROWS_AS(Operator::get(Kind::Inversion, -1), std::invalid_argument);
  CHECK_THROWS_AS(Operator::by_ordinal(24), std::invalid_argument);
}

TEST_CASE("determinants split the set in half") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(determinant(rotation(k)) == +1);
    CHECK(determinant(inversion(k)) == -1);
    CHECK(leibniz_det(rotation(k)) == +1);
    CHECK(leibniz_det(inversion(k)) == -1);
  }
}

TEST_CASE("pinned products") {
  CHECK(compose(rotation(8), rotation(9)) == rotation(5));
  CHECK(compose(inversion(10), rotation(10)) == inversion(7));
  // computed by exhaustive matrix multiplication and recorded
  CHECK(compose(inversion(5), inversion(2)) == rotation(6));
  CHECK(compose(inversion(2), inversion(5)) == rotation(10));
}

TEST_CASE("closure and the parity homomorphism") {
  for (const Operator& a : Operator::all())
    for (const Operator& b : Operator::all()) {
      const Operator& c = compose(a, b);  // throws if outside the set
      CHECK(determinant(c) == determinant(a) * determinant(b));
      CHECK((c.kind() == Kind::Rotation) == (determinant(c) == +1));
    }
}

TEST_CASE("identity and inverses") {
  for (const Operator& x : Operator::all()) {
    CHECK(compose(rotation(1), x) == x);
    CHECK(compose(x, rotation(1)) == x);
    CHECK(compose(x, inverse(x)) == rotation(1));
    CHECK(compose(inverse(x), x) == rotation(1));
  }
}

TEST_CASE("rotations form a subgroup, inversions do not") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(inverse(rotation(k)).kind() == Kind::Rotation);
    for (int l = 1; l <= 12; ++l) {
      CHECK(compose(rotation(k), rotation(l)).kind() == Kind::Rotation);
      CHECK(compose(inversion(k), inversion(l)).kind() == Kind::Rotation);
      CHECK(compose(rotation(k), inversion(l)).kind() == Kind::Inversion);
      CHECK(compose(inversion(k), rotation(l)).kind() == Kind::Inversion);
    }
  }
}

TEST_CASE("the double-transposition subgroup is abelian") {
  const int klein[4] = {1, 5, 7, 11};
  for (int a : klein)
    for (int b : klein) {
      CHECK(compose(rotation(a), rotation(b)) ==
            compose(rotation(b), rotation(a)));
      bool member = false;
      for (int c : klein)
        member = member || compose(rotation(a), rotation(b)) == rotation(c);
      CHECK(member);
    }
}

TEST_CASE("cayley table") {
  const CayleyTable& t = cayley_table();

  SECTION("identity row and column") {
    for (int b = 0; b < 24; ++b) {
      CHECK(t[0][b] == b);
      CHECK(t[b][0] == b);
    }
  }

  SECTION("latin square") {
    for (int a = 0; a < 24; ++a) {
      std::set<int> row, col;
      for (int b = 0; b < 24; ++b) {
        row.insert(t[a][b]);
        col.insert(t[b][a]);
      }
      CHECK(row.size() == 24);
      CHECK(col.size() == 24);
    }
  }

  SECTION("rotation block lands in rotations only") {
    for (int a = 0; a < 12; ++a)
      for (int b = 0; b < 12; ++b) CHECK(t[a][b] < 12);
  }

  SECTION("pinned cell") {
    CHECK(t[rotation(8).ordinal()][rotation(9).ordinal()] ==
          rotation(5).ordinal());
  }
}

TEST_CASE("commutators") {
  SECTION("the double transpositions commute pairwise") {
    for (int s : {5, 7, 11})
      for (int m : {5, 7, 11}) {
        const CommutatorDecomposition d = commutator(rotation(s), rotation(m));
        CHECK(d.is_zero);
        CHECK(d.lhs_product == d.rhs_product);
      }
  }

  SECTION("the identity commutes with everything") {
    for (const Operator& x : Operator::all())
      CHECK(commutator(rotation(1), x).is_zero);
  }

  SECTION("two transpositions decompose into two rotations") {
    const CommutatorDecomposition d = commutator(inversion(1), inversion(2));
    CHECK(!d.is_zero);
    CHECK(d.product_kind() == Kind::Rotation);
    CHECK(d.lhs_product == rotation(3));
    CHECK(d.rhs_product == rotation(2));
  }

  SECTION("mixed pairs decompose into two inversions") {
    for (int k = 1; k <= 12; ++k)
      for (int l = 1; l <= 12; ++l) {
        const CommutatorDecomposition d =
            commutator(rotation(k), inversion(l));
        CHECK(d.lhs_product.kind() == Kind::Inversion);
        CHECK(d.rhs_product.kind() == Kind::Inversion);
      }
  }

  SECTION("both products always share a kind") {
    for (const Operator& a : Operator::all())
      for (const Operator& b : Operator::all()) {
        const CommutatorDecomposition d = commutator(a, b);
        CHECK(d.lhs_product.kind() == d.rhs_product.kind());
        CHECK(d.is_zero == (d.lhs_product == d.rhs_product));
      }
  }
}

TEST_CASE("group dimension") {
  CHECK(group_dimension(4) == 6);
  CHECK(group_dimension(2) == 1);
  CHECK(group_dimension(3) == 3);
  CHECK(group_dimension(10) == 45);
  CHECK_THROWS_AS(group_dimension(1), std::invalid_argument);
  CHECK_THROWS_AS(group_dimension(0), std::invalid_argument);
}

TEST_CASE("cycle decomposition") {
  const auto id_cycles = cycles(rotation(1));
  CHECK(id_cycles[0][0] == 1);
  CHECK(id_cycles[3][0] == 1);

  const auto r2 = cycles(rotation(2));  // one 3-cycle plus a fixed slot
  std::multiset<int> lens;
  for (const auto& c : r2)
    if (c[0] > 0) lens.insert(c[0]);
  CHECK(lens == std::multiset<int>{1, 3});

  const auto i4 = cycles(inversion(4));  // a single 4-cycle
  CHECK(i4[0][0] == 4);
  CHECK(i4[1][0] == 0);
}
