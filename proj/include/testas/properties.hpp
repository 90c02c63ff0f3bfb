#ifndef TESTAS_PROPERTIES_HPP
#define TESTAS_PROPERTIES_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace testas {

/// Checks offered by analyze_semigroup / analyze_graph.
enum class Property {
  associativity,
  aperiodicity,
  local_testability,
  strict_local_testability,
  right_local_testability,
  left_local_testability,
  local_idempotency,
  threshold_local_testability,
  piecewise_testability,
  one_testability,
};

inline constexpr Property kAllProperties[] = {
    Property::associativity,
    Property::aperiodicity,
    Property::local_testability,
    Property::strict_local_testability,
    Property::right_local_testability,
    Property::left_local_testability,
    Property::local_idempotency,
    Property::threshold_local_testability,
    Property::piecewise_testability,
    Property::one_testability,
};

/// Name used in reports, e.g. "local_testability".
std::string_view report_name(Property p);
/// Short command-line name, e.g. "lt".
std::string_view short_name(Property p);
std::optional<Property> parse_property(std::string_view short_name);

/// Parses "all" or a comma-separated list of short names.
/// Throws std::invalid_argument on an unknown name.
std::vector<Property> parse_property_list(std::string_view list);

inline constexpr std::size_t kDefaultKMax = 8;
inline constexpr std::size_t kDefaultBudget = 1'000'000;
inline constexpr std::size_t kDefaultMaxElements = 8192;

struct Limits {
  std::size_t k_max = kDefaultKMax;
  std::size_t threshold = 1;
  std::size_t budget = kDefaultBudget;
  std::size_t max_elements = kDefaultMaxElements;
  bool order = false;
  /// Explicit scan width for a single k-testability verdict.
  std::optional<std::size_t> k;
};

}  // namespace testas

#endif  // TESTAS_PROPERTIES_HPP
