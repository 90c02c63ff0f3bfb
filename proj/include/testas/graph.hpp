#ifndef TESTAS_GRAPH_HPP
#define TESTAS_GRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "testas/digraph.hpp"
#include "testas/oracle.hpp"
#include "testas/properties.hpp"
#include "testas/types.hpp"

namespace testas {

/// Routes every undefined cell to a fresh self-looping sink. Complete graphs
/// are returned unchanged.
TransitionGraph complete_with_sink(const TransitionGraph& gr);

/// Transition semigroup of a complete graph. Letters with equal actions share
/// one generator.
struct TransitionSemigroup {
  FiniteSemigroup semigroup;
  std::vector<Letter> label_to_generator;
  std::vector<Letter> generator_label;  // least label of each generator
  std::vector<Transformation> elements;

  /// Factorization of x rewritten over graph labels.
  Word label_word(Element x) const;
};

/// Throws Error(incomplete_input) for partial graphs and BudgetExceeded when
/// the closure passes `max_elements`.
TransitionSemigroup transition_semigroup(
    const TransitionGraph& gr, std::size_t max_elements = kDefaultMaxElements);

/// Labels act through the transition semigroup; value size() is the empty
/// word.
oracle::WordAction transition_action(const TransitionSemigroup& ts,
                                     std::size_t alphabet_size);

/// Node digraph with one edge per labelled transition.
Digraph underlying_digraph(const TransitionGraph& gr);

/// Letter actions idempotent and pairwise commuting. Witness (u, v, node).
Verdict is_1_testable(const TransitionGraph& gr);

/// Throws Error(bad_k) when k < 1.
Verdict is_k_testable_graph(const TransitionGraph& gr, std::size_t k,
                            std::size_t budget, std::size_t t = 1,
                            std::size_t max_elements = kDefaultMaxElements);

OrderResult order_of_local_testability_graph(
    const TransitionGraph& gr, std::size_t k_max, std::size_t budget,
    std::size_t t = 1, std::size_t max_elements = kDefaultMaxElements);

/// Property of the transition semigroup; witnesses carry label words.
Verdict graph_property(const TransitionGraph& gr, Property p,
                       std::size_t max_elements = kDefaultMaxElements);

/// Completes the graph when needed, then runs the requested checks.
PropertyReport analyze_graph(const TransitionGraph& gr,
                             std::span<const Property> requested,
                             const Limits& limits,
                             std::string input = "graph");

}  // namespace testas

#endif  // TESTAS_GRAPH_HPP
