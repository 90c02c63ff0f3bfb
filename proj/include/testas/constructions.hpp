#ifndef TESTAS_CONSTRUCTIONS_HPP
#define TESTAS_CONSTRUCTIONS_HPP

#include <cstddef>

#include "testas/types.hpp"

namespace testas {

/// Direct product with pair (x, y) numbered x * n2 + y before reordering.
/// Generators are the pairs with a generator in either coordinate, listed
/// first in pair order; the remaining pairs follow in pair order. There are
/// n1*g2 + n2*g1 - g1*g2 of them, and they always generate the product.
FiniteSemigroup semigroup_direct_product(const FiniteSemigroup& a,
                                         const FiniteSemigroup& b);

/// Element of semigroup_direct_product(a, b) holding the pair (x, y).
Element product_element(const FiniteSemigroup& a, const FiniteSemigroup& b,
                        Element x, Element y);

/// Synchronous product over the common leading labels; node (p, q) is
/// p * g2 + q. Throws Error(incomplete_input) for partial inputs.
TransitionGraph graph_direct_product(const TransitionGraph& a,
                                     const TransitionGraph& b);

/// m-fold graph_direct_product of gr with itself, m >= 2.
TransitionGraph graph_power(const TransitionGraph& gr, std::size_t m);

}  // namespace testas

#endif  // TESTAS_CONSTRUCTIONS_HPP
