#pragma once

// Commutators within the operator set. [a,b] = ab - ba is not itself a group
// element, but both products are, and they always share a kind (their
// determinants agree), so every commutator is a difference of two same-kind
// operators; it vanishes exactly when the products coincide.

#include "chiral/operators.hpp"

namespace chiral {

struct CommutatorDecomposition {
  Operator lhs_product;  // a*b
  Operator rhs_product;  // b*a
  bool is_zero;          // a*b == b*a

  Kind product_kind() const noexcept { return lhs_product.kind(); }
};

inline CommutatorDecomposition commutator(const Operator& a,
                                          const Operator& b) {
  const Operator& ab = compose(a, b);
  const Operator& ba = compose(b, a);
  return CommutatorDecomposition{ab, ba, ab == ba};
}

}  // namespace chiral
