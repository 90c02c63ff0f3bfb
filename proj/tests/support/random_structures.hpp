#ifndef TESTAS_TESTS_RANDOM_STRUCTURES_HPP
#define TESTAS_TESTS_RANDOM_STRUCTURES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "testas/graph.hpp"
#include "testas/semigroup.hpp"
#include "testas/types.hpp"

namespace testas::testing {

using Rng = std::mt19937_64;

inline TransitionGraph random_complete_graph(Rng& rng, std::size_t nodes,
                                             std::size_t labels) {
  std::uniform_int_distribution<Node> pick(0, static_cast<Node>(nodes - 1));
  std::vector<Node> delta(nodes * labels);
  for (auto& v : delta) v = pick(rng);
  return TransitionGraph(labels, nodes, std::move(delta));
}

inline TransitionGraph random_partial_graph(Rng& rng, std::size_t nodes,
                                            std::size_t labels,
                                            double hole_rate) {
  std::uniform_int_distribution<Node> pick(0, static_cast<Node>(nodes - 1));
  std::bernoulli_distribution hole(hole_rate);
  std::vector<Node> delta(nodes * labels);
  for (auto& v : delta) v = hole(rng) ? kUndefined : pick(rng);
  return TransitionGraph(labels, nodes, std::move(delta));
}

/// Full Cayley table (every element listed as a generator) of `mul`.
inline FiniteSemigroup from_operation(
    std::size_t n, const std::function<Element(Element, Element)>& mul) {
  CayleyRows rows{n, n, std::vector<Element>(n * n)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) rows.cells[x * n + y] = mul(x, y);
  return make_semigroup(std::move(rows));
}

/// Monogenic presentation of Z_m: element i is s^(i+1).
inline FiniteSemigroup cyclic_group(std::size_t m) {
  CayleyRows rows{m, 1, std::vector<Element>(m)};
  for (Element i = 0; i < m; ++i) rows.cells[i] = static_cast<Element>((i + 1) % m);
  return make_semigroup(std::move(rows));
}

inline FiniteSemigroup rectangular_band(std::size_t rows_count,
                                        std::size_t cols) {
  return from_operation(rows_count * cols, [cols](Element x, Element y) {
    return static_cast<Element>((x / cols) * cols + y % cols);
  });
}

/// Random subsets of a small set closed under union.
inline FiniteSemigroup random_semilattice(Rng& rng, std::size_t max_size) {
  std::uniform_int_distribution<unsigned> bits(0, 7);
  std::vector<unsigned> sets;
  auto add = [&](unsigned s) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  };
  add(bits(rng));
  for (int tries = 0; tries < 8 && sets.size() < max_size; ++tries) {
    std::vector<unsigned> next = sets;
    next.push_back(bits(rng));
    // close under union
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < next.size(); ++j) {
        unsigned u = next[i] | next[j];
        if (std::find(next.begin(), next.end(), u) == next.end())
          next.push_back(u);
      }
    if (next.size() <= max_size) {
      sets.clear();
      for (auto s : next) add(s);
    }
  }
  return from_operation(sets.size(), [&](Element x, Element y) {
    const unsigned u = sets[x] | sets[y];
    return static_cast<Element>(std::find(sets.begin(), sets.end(), u) -
                                sets.begin());
  });
}

/// Transition semigroup of a random complete graph.
inline FiniteSemigroup random_transformation_semigroup(Rng& rng,
                                                       std::size_t degree,
                                                       std::size_t gens) {
  return transition_semigroup(random_complete_graph(rng, degree, gens))
      .semigroup;
}

/// Deterministic search for a random transformation semigroup of exactly
/// `size` elements.
inline FiniteSemigroup transformation_semigroup_of_size(std::size_t size,
                                                        std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    Rng rng(s);
    const std::size_t degree = 3 + s % 4;
    auto g = random_complete_graph(rng, degree, 2);
    try {
      auto ts = transition_semigroup(g, 4 * size);
      if (ts.semigroup.size() == size) return std::move(ts.semigroup);
    } catch (const std::exception&) {
    }
  }
}

}  // namespace testas::testing

#endif  // TESTAS_TESTS_RANDOM_STRUCTURES_HPP
