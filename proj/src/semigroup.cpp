#include "testas/semigroup.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <string>

#include "testas/digraph.hpp"
#include "testas/error.hpp"
#include "testas/oracle.hpp"

namespace testas {

namespace detail {
struct SemigroupAccess {
  static FiniteSemigroup build(CayleyRows rows, kernels::Exec exec);
};
}  // namespace detail

namespace {

using kernels::Exec;
using kernels::TableView;

TableView view(const FiniteSemigroup& s) {
  return {s.product_table(), s.size()};
}

Verdict make_verdict(Property p, Truth holds) {
  Verdict v;
  v.property = std::string(report_name(p));
  v.holds = holds;
  return v;
}

std::string tuple_text(std::span<const std::uint32_t> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace

FiniteSemigroup detail::SemigroupAccess::build(CayleyRows rows, Exec exec) {
  const std::size_t n = rows.element_count;
  const std::size_t gens = rows.generator_count;
  if (n == 0 || gens == 0 || gens > n ||
      rows.cells.size() != n * gens)
    throw Error(ErrorKind::header_inconsistent,
                "Cayley rows need 1 <= generators <= elements");
  for (Element v : rows.cells)
    if (v >= n)
      throw Error(ErrorKind::cell_out_of_range,
                  "Cayley cell " + std::to_string(v) + " out of range");

  FiniteSemigroup s;
  s.parent_.assign(n, kernels::kNoParent);
  s.last_.assign(n, 0);
  s.depth_.assign(n, 0);
  std::vector<Element> order;
  order.reserve(n);
  for (Element g = 0; g < gens; ++g) {
    s.depth_[g] = 1;
    order.push_back(g);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element x = order[head];
    for (Letter g = 0; g < gens; ++g) {
      const Element y = rows.at(x, g);
      if (s.depth_[y] == 0) {
        s.depth_[y] = s.depth_[x] + 1;
        s.parent_[y] = x;
        s.last_[y] = g;
        order.push_back(y);
      }
    }
  }
  if (order.size() != n) {
    Element missing = 0;
    while (s.depth_[missing] != 0) ++missing;
    throw Error(ErrorKind::not_generated,
                "element " + std::to_string(missing) +
                    " is not a product of generators",
                {}, {missing});
  }
  s.table_ = kernels::product_table(rows, order, s.parent_, s.last_, exec);
  s.rows_ = std::move(rows);
  return s;
}

FiniteSemigroup close_cayley(CayleyRows rows, Exec exec) {
  return detail::SemigroupAccess::build(std::move(rows), exec);
}

FiniteSemigroup make_semigroup(CayleyRows rows) {
  FiniteSemigroup s = close_cayley(std::move(rows));
  Verdict v = check_associativity(s);
  if (v.holds == Truth::no)
    throw Error(ErrorKind::not_associative,
                "table is not associative: (x*g)*y != x*(g*y) at (x, g, y) = " +
                    tuple_text(v.witness),
                {}, v.witness);
  return s;
}

Verdict check_associativity(const FiniteSemigroup& s) {
  auto v = make_verdict(Property::associativity, Truth::yes);
  if (auto bad = kernels::light_violation(view(s), s.generator_count(),
                                          Exec::parallel)) {
    v.holds = Truth::no;
    v.witness.assign(bad->begin(), bad->end());
    v.detail = "(x*g)*y != x*(g*y) for (x, g, y)";
  }
  return v;
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x)
    if (s.product(x, x) == x) out.push_back(x);
  return out;
}

std::vector<Element> local_submonoid(const FiniteSemigroup& s, Element e) {
  if (e >= s.size() || s.product(e, e) != e)
    throw Error(ErrorKind::not_idempotent,
                "element " + std::to_string(e) + " is not idempotent", {},
                {e});
  return kernels::sandwich_set(view(s), e, e);
}

Verdict check_local_property(const FiniteSemigroup& s, LocalProperty p) {
  Property id{};
  kernels::LocalCondition cond{};
  const char* rule = "";
  switch (p) {
    case LocalProperty::locally_idempotent:
      id = Property::local_idempotency;
      cond = kernels::LocalCondition::idempotent;
      rule = "xx = x in eSe";
      break;
    case LocalProperty::locally_testable:
      id = Property::local_testability;
      cond = kernels::LocalCondition::semilattice;
      rule = "xx = x and xy = yx in eSe";
      break;
    case LocalProperty::strictly_locally_testable:
      id = Property::strict_local_testability;
      cond = kernels::LocalCondition::semilattice;
      rule = "xx = x and xy = yx in eSe";
      break;
    case LocalProperty::right_locally_testable:
      id = Property::right_local_testability;
      cond = kernels::LocalCondition::right;
      rule = "xx = x and xyx = xy in eSe";
      break;
    case LocalProperty::left_locally_testable:
      id = Property::left_local_testability;
      cond = kernels::LocalCondition::left;
      rule = "xx = x and xyx = yx in eSe";
      break;
  }
  auto v = make_verdict(id, Truth::yes);
  const auto idem = idempotents(s);
  if (auto bad = kernels::local_violation(view(s), idem, cond, Exec::parallel)) {
    v.holds = Truth::no;
    v.witness.assign(bad->begin(), bad->end());
    v.detail = std::string("violates ") + rule + " at (e, x, y)";
  }
  return v;
}

Verdict is_aperiodic(const FiniteSemigroup& s) {
  auto v = make_verdict(Property::aperiodicity, Truth::yes);
  if (auto bad = kernels::first_periodic(view(s), Exec::parallel)) {
    v.holds = Truth::no;
    v.witness = {bad->first};
    v.detail = "powers of x cycle with period " + std::to_string(bad->second);
  }
  return v;
}

Verdict is_threshold_locally_testable(const FiniteSemigroup& s) {
  auto v = make_verdict(Property::threshold_local_testability, Truth::yes);
  auto aperiodic = is_aperiodic(s);
  if (aperiodic.holds == Truth::no) {
    v.holds = Truth::no;
    v.witness = aperiodic.witness;
    v.detail = "not aperiodic: " + aperiodic.detail;
    return v;
  }
  const auto idem = idempotents(s);
  if (auto bad = kernels::exchange_violation(view(s), idem, Exec::parallel)) {
    v.holds = Truth::no;
    v.witness.assign(bad->begin(), bad->end());
    v.detail = "exfuey f != eyfuexf at (e, f, x, u, y)";
  }
  return v;
}

JClasses j_classes(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  JClasses out;
  const bool adjoin = !s.identity().has_value();
  const std::size_t vertices = adjoin ? n + 1 : n;
  Digraph g(vertices);
  for (Element x = 0; x < n; ++x) {
    for (Element gen = 0; gen < s.generator_count(); ++gen) {
      g[x].push_back(s.product(gen, x));
      g[x].push_back(s.product(x, gen));
    }
  }
  if (adjoin) {
    out.adjoined_identity = static_cast<Element>(n);
    for (Element gen = 0; gen < s.generator_count(); ++gen)
      g[n].push_back(gen);
  }
  out.classes = strongly_connected_components(g);
  return out;
}

Verdict is_piecewise_testable(const FiniteSemigroup& s) {
  auto v = make_verdict(Property::piecewise_testability, Truth::yes);
  const auto jc = j_classes(s);
  std::optional<std::pair<Element, Element>> best;
  for (const auto& c : jc.classes) {
    if (c.size() < 2) continue;
    std::pair<Element, Element> cand{c[0], c[1]};
    if (!best || cand < *best) best = cand;
  }
  if (best) {
    v.holds = Truth::no;
    v.witness = {best->first, best->second};
    v.detail = "distinct J-equivalent elements";
  }
  return v;
}

Verdict is_1_testable(const FiniteSemigroup& s) {
  auto v = make_verdict(Property::one_testability, Truth::yes);
  const auto gens = static_cast<Element>(s.generator_count());
  for (Element a = 0; a < gens; ++a) {
    for (Element b = a; b < gens; ++b) {
      const bool bad = a == b ? s.product(a, a) != a
                              : s.product(a, b) != s.product(b, a);
      if (bad) {
        v.holds = Truth::no;
        v.witness = {a, b};
        v.detail = a == b ? "generator is not idempotent"
                          : "generators do not commute";
        return v;
      }
    }
  }
  return v;
}

OrderResult order_of_local_testability_semigroup(const FiniteSemigroup& s,
                                                 std::size_t k_max,
                                                 std::size_t budget,
                                                 std::size_t t) {
  return oracle::search_order(oracle::cayley_action(s), k_max, t, budget);
}

Verdict semigroup_property(const FiniteSemigroup& s, Property p) {
  switch (p) {
    case Property::associativity:
      return check_associativity(s);
    case Property::aperiodicity:
      return is_aperiodic(s);
    case Property::local_testability:
      return check_local_property(s, LocalProperty::locally_testable);
    case Property::strict_local_testability:
      return check_local_property(s, LocalProperty::strictly_locally_testable);
    case Property::right_local_testability:
      return check_local_property(s, LocalProperty::right_locally_testable);
    case Property::left_local_testability:
      return check_local_property(s, LocalProperty::left_locally_testable);
    case Property::local_idempotency:
      return check_local_property(s, LocalProperty::locally_idempotent);
    case Property::threshold_local_testability:
      return is_threshold_locally_testable(s);
    case Property::piecewise_testability:
      return is_piecewise_testable(s);
    case Property::one_testability:
      return is_1_testable(s);
  }
  return make_verdict(p, Truth::unknown);
}

PropertyReport analyze_semigroup(const FiniteSemigroup& s,
                                 std::span<const Property> requested,
                                 const Limits& limits, std::string input) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report(std::move(input));
  report.stats.semigroup_size = s.size();
  for (Property p : requested) {
    Verdict v = semigroup_property(s, p);
    // every semigroup witness entry is an element index
    for (auto x : v.witness) v.witness_words.push_back(s.factorization(x));
    report.add(std::move(v));
  }
  if (limits.k) {
    const auto action = oracle::cayley_action(s);
    auto d = oracle::profile_determines(action, *limits.k, limits.threshold,
                                        limits.budget);
    Verdict v;
    v.property = "k_testability";
    v.holds = d.status;
    v.detail = "k=" + std::to_string(*limits.k) +
               " t=" + std::to_string(limits.threshold);
    if (d.witness) v.witness_words = {d.witness->first, d.witness->second};
    if (d.status == Truth::unknown) v.detail += "; " + d.detail;
    report.stats.oracle_states += d.states;
    report.add(std::move(v));
  }
  if (limits.order) {
    report.order = order_of_local_testability_semigroup(s, limits.k_max,
                                                        limits.budget);
    report.stats.oracle_states += report.order->states_explored;
    if (limits.threshold > 1) {
      report.threshold_order = order_of_local_testability_semigroup(
          s, limits.k_max, limits.budget, limits.threshold);
      report.stats.oracle_states += report.threshold_order->states_explored;
    }
  }
  report.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace testas
