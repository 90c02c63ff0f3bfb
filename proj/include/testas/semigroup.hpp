#ifndef TESTAS_SEMIGROUP_HPP
#define TESTAS_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "testas/kernels.hpp"
#include "testas/properties.hpp"
#include "testas/types.hpp"

namespace testas {

/// Builds the full multiplication table by breadth-first factorization.
/// Throws Error(not_generated) when some element has no generator word.
/// The result is not yet known to be associative.
FiniteSemigroup close_cayley(CayleyRows rows,
                             kernels::Exec exec = kernels::Exec::parallel);

/// close_cayley() followed by Light's test; throws Error(not_associative).
FiniteSemigroup make_semigroup(CayleyRows rows);

Verdict check_associativity(const FiniteSemigroup& s);

std::vector<Element> idempotents(const FiniteSemigroup& s);

/// { e x e : x in S }. Throws Error(not_idempotent).
std::vector<Element> local_submonoid(const FiniteSemigroup& s, Element e);

enum class LocalProperty {
  locally_idempotent,
  locally_testable,
  strictly_locally_testable,
  right_locally_testable,
  left_locally_testable,
};

/// Witness on failure is (e, x, y) with x, y in eSe.
Verdict check_local_property(const FiniteSemigroup& s, LocalProperty p);

Verdict is_aperiodic(const FiniteSemigroup& s);

/// Aperiodic and e x f u e y f = e y f u e x f for idempotents e, f.
Verdict is_threshold_locally_testable(const FiniteSemigroup& s);

struct JClasses {
  /// Classes of S^1 ordered by least member, members ascending.
  std::vector<std::vector<Element>> classes;
  /// Index of the adjoined identity (== s.size()) when S has none.
  std::optional<Element> adjoined_identity;
};

JClasses j_classes(const FiniteSemigroup& s);

/// J-triviality of S^1.
Verdict is_piecewise_testable(const FiniteSemigroup& s);

/// Every generator idempotent and all generators commute.
Verdict is_1_testable(const FiniteSemigroup& s);

/// Least k <= k_max such that the k-profile of a generator word determines
/// its value, checked on the Cayley automaton.
OrderResult order_of_local_testability_semigroup(const FiniteSemigroup& s,
                                                 std::size_t k_max,
                                                 std::size_t budget,
                                                 std::size_t t = 1);

/// Runs one property on a semigroup.
Verdict semigroup_property(const FiniteSemigroup& s, Property p);

PropertyReport analyze_semigroup(const FiniteSemigroup& s,
                                 std::span<const Property> requested,
                                 const Limits& limits,
                                 std::string input = "semigroup");

}  // namespace testas

#endif  // TESTAS_SEMIGROUP_HPP
