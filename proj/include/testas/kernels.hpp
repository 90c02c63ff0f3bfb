#ifndef TESTAS_KERNELS_HPP
#define TESTAS_KERNELS_HPP

// Data-parallel inner loops of the semigroup analyses. Every kernel has an
// OpenMP path and a serial path with identical results (witnesses are the
// lexicographically least violating tuple in both); the *_reference functions
// are literal definitional loops kept for tests and benchmarks.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "testas/types.hpp"

namespace testas::kernels {

enum class Exec { serial, parallel };

/// Read-only view of an n x n multiplication table.
struct TableView {
  std::span<const Element> cells;
  std::size_t n = 0;

  Element operator()(Element x, Element y) const {
    return cells[static_cast<std::size_t>(x) * n + y];
  }
};

inline constexpr Element kNoParent = static_cast<Element>(-1);

/// Full product table from the right Cayley graph and a BFS spanning tree
/// (parent[y] * last[y] == y, generators have no parent). `order` lists the
/// elements so that every parent precedes its children.
std::vector<Element> product_table(const CayleyRows& rows,
                                   std::span<const Element> order,
                                   std::span<const Element> parent,
                                   std::span<const Letter> last, Exec exec);

/// Folds the whole factorization of y through the Cayley rows from x.
std::vector<Element> product_table_reference(const CayleyRows& rows,
                                             std::span<const Word> words);

/// Light's test over the generators: least (x, gen, y) with
/// (x*gen)*y != x*(gen*y).
std::optional<std::array<Element, 3>> light_violation(TableView table,
                                                      std::size_t generators,
                                                      Exec exec);

/// Least (x, y, z) with (xy)z != x(yz).
std::optional<std::array<Element, 3>> associativity_violation_reference(
    TableView table);

enum class LocalCondition {
  idempotent,  // x x = x
  semilattice, // x x = x, x y = y x
  right,       // x x = x, x y x = x y
  left,        // x x = x, x y x = y x
};

/// Least (e, x, y), e idempotent, x and y in eSe, violating the condition.
/// `idempotents` must be ascending.
std::optional<std::array<Element, 3>> local_violation(
    TableView table, std::span<const Element> idempotents, LocalCondition cond,
    Exec exec);

/// Sorted { e x e : x in S }.
std::vector<Element> sandwich_set(TableView table, Element e, Element f);

/// Least element whose powers cycle with period > 1, and that period.
std::optional<std::pair<Element, std::size_t>> first_periodic(TableView table,
                                                              Exec exec);

/// Least (e, f, x, u, y), e and f idempotent, with
/// exfuey f != eyfuexf. `idempotents` must be ascending.
std::optional<std::array<Element, 5>> exchange_violation(
    TableView table, std::span<const Element> idempotents, Exec exec);

/// Five nested loops straight from the identity.
std::optional<std::array<Element, 5>> exchange_violation_reference(
    TableView table, std::span<const Element> idempotents);

/// Number of worker threads the parallel paths will use.
int max_threads();

}  // namespace testas::kernels

#endif  // TESTAS_KERNELS_HPP
