#ifndef TESTAS_FIXTURES_HPP
#define TESTAS_FIXTURES_HPP

#include "testas/types.hpp"

namespace testas {

/// Canonical small inputs.
///   U1      two-element semilattice, generators z (0) and e (1)
///   LZ2     left-zero semigroup on x (0), y (1)
///   Z2      cyclic group of order 2, generator s (0), identity 1
///   D_triv  one node, two looping labels
///   D_parity  one label swapping two nodes
///   D_ab    a/b automaton forbidding aa and bb, node 2 is the sink
struct Fixtures {
  FiniteSemigroup U1;
  FiniteSemigroup LZ2;
  FiniteSemigroup Z2;
  TransitionGraph D_triv;
  TransitionGraph D_parity;
  TransitionGraph D_ab;
};

const Fixtures& fixtures();

}  // namespace testas

#endif  // TESTAS_FIXTURES_HPP
