#include <catch2/catch.hpp>

#include <complex>
#include <set>

#include "chiral/charpoly.hpp"
#include "chiral/cyclotomic.hpp"
#include "chiral/spectrum.hpp"

using namespace chiral;

TEST_CASE("cyclotomic ring arithmetic") {
  const Cyclotomic w = Cyclotomic::omega_plus();
  const Cyclotomic wbar = Cyclotomic::omega_minus();
  const Cyclotomic i = Cyclotomic::i();

  CHECK(w * w == wbar);
  CHECK(w * wbar == Cyclotomic::one());
  CHECK(i * i == Cyclotomic::minus_one());
  CHECK(i * Cyclotomic::minus_i() == Cyclotomic::one());
  CHECK((w + wbar) == Cyclotomic::minus_one());
  CHECK((w - w).is_zero());

  const std::complex<double> wc = w.to_complex();
  CHECK(wc.real() == Approx(-0.5).margin(1e-15));
  CHECK(wc.imag() == Approx(0.8660254037844386).margin(1e-15));
  CHECK(std::abs(i.to_complex() - std::complex<double>{0.0, 1.0}) < 1e-15);
}

TEST_CASE("characteristic polynomial classes") {
  SECTION("identity expands to (1-x)^4") {
    const CharPoly cp = char_poly(rotation(1));
    CHECK(cp.coefficients == std::array<long long, 5>{1, -4, 6, -4, 1});
    CHECK(cp.cls == CharPolyClass::Identity);
    CHECK(cp.factored() == "(1-x)^4");
  }

  SECTION("double transposition class") {
    const CharPoly cp = char_poly(rotation(5));
    CHECK(cp.coefficients == std::array<long long, 5>{1, 0, -2, 0, 1});
    CHECK(cp.cls == CharPolyClass::DoubleTransposition);
    CHECK(cp.factored() == "(1-x)^2(1+x)^2");
  }

  SECTION("four-cycle class") {
    const CharPoly cp = char_poly(inversion(4));
    CHECK(cp.coefficients == std::array<long long, 5>{-1, 0, 0, 0, 1});
    CHECK(cp.cls == CharPolyClass::FourCycle);
    CHECK(cp.factored() == "(1-x)(1+x)(x^2+1)");
  }

  SECTION("exact memberships") {
    for (int k : {2, 3, 4, 6, 8, 9, 10, 12})
      CHECK(char_poly(rotation(k)).cls == CharPolyClass::ThreeCycle);
    for (int k : {5, 7, 11})
      CHECK(char_poly(rotation(k)).cls == CharPolyClass::DoubleTransposition);
    for (int k : {1, 2, 3, 6, 8, 11})
      CHECK(char_poly(inversion(k)).cls == CharPolyClass::Transposition);
    for (int k : {4, 5, 7, 9, 10, 12})
      CHECK(char_poly(inversion(k)).cls == CharPolyClass::FourCycle);
  }

  SECTION("lambda = 1 is always a root") {
    for (const Operator& op : Operator::all())
      CHECK(char_poly(op).eval(1) == 0);
  }

  SECTION("constant term is the determinant, leading term is 1") {
    for (const Operator& op : Operator::all()) {
      CHECK(char_poly(op).coefficients[0] == determinant(op));
      CHECK(char_poly(op).coefficients[4] == 1);
    }
  }

  SECTION("invariant under conjugation") {
    for (const Operator& g : Operator::all())
      for (const Operator& a : Operator::all()) {
        const Operator& conj = compose(compose(g, a), inverse(g));
        CHECK(char_poly(conj).coefficients == char_poly(a).coefficients);
      }
  }
}

TEST_CASE("eigenvalues") {
  SECTION("identity has eigenvalue 1 four times") {
    for (const EigenPair& p : eigenvalues(rotation(1)).pairs)
      CHECK(p.value == SpectrumValue::PlusOne);
  }

  SECTION("a four-cycle has {1, -1, i, -i}") {
    std::multiset<int> got;
    for (const EigenPair& p : eigenvalues(inversion(4)).pairs)
      got.insert(static_cast<int>(p.value));
    const std::multiset<int> want{
        static_cast<int>(SpectrumValue::PlusOne),
        static_cast<int>(SpectrumValue::MinusOne),
        static_cast<int>(SpectrumValue::PlusI),
        static_cast<int>(SpectrumValue::MinusI)};
    CHECK(got == want);
  }

  SECTION("a three-cycle has {1, 1, omega+, omega-}") {
    std::multiset<int> got;
    for (const EigenPair& p : eigenvalues(rotation(2)).pairs)
      got.insert(static_cast<int>(p.value));
    const std::multiset<int> want{
        static_cast<int>(SpectrumValue::PlusOne),
        static_cast<int>(SpectrumValue::PlusOne),
        static_cast<int>(SpectrumValue::OmegaPlus),
        static_cast<int>(SpectrumValue::OmegaMinus)};
    CHECK(got == want);
  }

  SECTION("exactly six distinct values across the whole set") {
    std::set<int> seen;
    for (const Operator& op : Operator::all())
      for (const EigenPair& p : eigenvalues(op).pairs) {
        seen.insert(static_cast<int>(p.value));
        const int ord = root_order(p.value);
        CHECK(ord >= 1);
        CHECK(ord <= 4);
      }
    CHECK(seen.size() == 6);
  }

  SECTION("every pair satisfies (op - lambda I)v = 0 exactly") {
    for (const Operator& op : Operator::all())
      for (const EigenPair& p : eigenvalues(op).pairs) {
        INFO(op.name() << " lambda=" << to_string(p.value));
        CHECK(eigenpair_exact(op, p));
        CHECK(eigenpair_residual(op, p) < 1e-12);
      }
  }

  SECTION("first nonzero component is 1") {
    for (const Operator& op : Operator::all())
      for (const EigenPair& p : eigenvalues(op).pairs) {
        int first = -1;
        for (int i = 0; i < 4 && first < 0; ++i)
          if (!p.vector[i].is_zero()) first = i;
        REQUIRE(first >= 0);
        CHECK(p.vector[first] == Cyclotomic::one());
      }
  }

  SECTION("repeated eigenvalues get independent vectors (disjoint supports)") {
    for (const Operator& op : Operator::all()) {
      const EigenSet set = eigenvalues(op);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (set.pairs[a].value != set.pairs[b].value) continue;
          for (int i = 0; i < 4; ++i)
            CHECK(!(!set.pairs[a].vector[i].is_zero() &&
                    !set.pairs[b].vector[i].is_zero()));
        }
    }
  }

  SECTION("product of the values is the determinant") {
    for (const Operator& op : Operator::all()) {
      Cyclotomic prod = Cyclotomic::one();
      for (const EigenPair& p : eigenvalues(op).pairs)
        prod = prod * to_cyclotomic(p.value);
      CHECK(prod == (determinant(op) > 0 ? Cyclotomic::one()
                                         : Cyclotomic::minus_one()));
    }
  }
}
