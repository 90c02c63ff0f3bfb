#include "testas/graph.hpp"

#include <chrono>
#include <map>
#include <string>

#include "testas/error.hpp"
#include "testas/semigroup.hpp"

namespace testas {
namespace {

void require_complete(const TransitionGraph& gr) {
  if (!gr.is_complete())
    throw Error(ErrorKind::incomplete_input,
                "graph has undefined transitions; complete it first");
}

Transformation letter_action(const TransitionGraph& gr, Letter c) {
  std::vector<Node> img(gr.node_count());
  for (Node p = 0; p < gr.node_count(); ++p) img[p] = gr.next(p, c);
  return Transformation(std::move(img));
}

// Semigroup verdict with witness elements rewritten as label words.
Verdict on_transition_semigroup(const TransitionSemigroup& ts, Property p) {
  Verdict v = semigroup_property(ts.semigroup, p);
  for (auto x : v.witness) v.witness_words.push_back(ts.label_word(x));
  return v;
}

}  // namespace

TransitionGraph complete_with_sink(const TransitionGraph& gr) {
  if (gr.is_complete()) return gr;
  const std::size_t a = gr.alphabet_size();
  const auto sink = static_cast<Node>(gr.node_count());
  std::vector<Node> delta(gr.cells().begin(), gr.cells().end());
  for (auto& v : delta)
    if (v == kUndefined) v = sink;
  delta.insert(delta.end(), a, sink);
  return TransitionGraph(a, gr.node_count() + 1, std::move(delta), sink);
}

Word TransitionSemigroup::label_word(Element x) const {
  Word w = semigroup.factorization(x);
  for (auto& g : w) g = generator_label[g];
  return w;
}

TransitionSemigroup transition_semigroup(const TransitionGraph& gr,
                                         std::size_t max_elements) {
  require_complete(gr);
  const std::size_t a = gr.alphabet_size();
  std::vector<Transformation> elems;
  std::map<Transformation, Element> index;
  std::vector<Letter> label_to_gen(a);
  std::vector<Letter> gen_label;
  for (Letter c = 0; c < a; ++c) {
    auto t = letter_action(gr, c);
    auto [it, fresh] = index.try_emplace(t, static_cast<Element>(elems.size()));
    if (fresh) {
      elems.push_back(std::move(t));
      gen_label.push_back(c);
    }
    label_to_gen[c] = it->second;
  }
  const std::size_t gens = elems.size();
  std::vector<Element> cells;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < gens; ++g) {
      auto t = elems[head].then(elems[g]);
      auto [it, fresh] =
          index.try_emplace(std::move(t), static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() >= max_elements)
          throw BudgetExceeded("transition semigroup has more than " +
                                   std::to_string(max_elements) + " elements",
                               max_elements);
        elems.push_back(it->first);
      }
      cells.push_back(it->second);
    }
  }
  CayleyRows rows{elems.size(), gens, std::move(cells)};
  return TransitionSemigroup{close_cayley(std::move(rows)),
                             std::move(label_to_gen), std::move(gen_label),
                             std::move(elems)};
}

oracle::WordAction transition_action(const TransitionSemigroup& ts,
                                     std::size_t alphabet_size) {
  const std::size_t n = ts.semigroup.size();
  std::vector<std::uint32_t> table((n + 1) * alphabet_size);
  for (Element x = 0; x < n; ++x)
    for (Letter c = 0; c < alphabet_size; ++c)
      table[x * alphabet_size + c] =
          ts.semigroup.right(x, ts.label_to_generator[c]);
  for (Letter c = 0; c < alphabet_size; ++c)
    table[n * alphabet_size + c] = ts.label_to_generator[c];
  return oracle::WordAction(alphabet_size, n + 1,
                            static_cast<std::uint32_t>(n), std::move(table));
}

Digraph underlying_digraph(const TransitionGraph& gr) {
  Digraph g(gr.node_count());
  for (Node p = 0; p < gr.node_count(); ++p)
    for (Node q : gr.row(p))
      if (q != kUndefined) g[p].push_back(q);
  return g;
}

Verdict is_1_testable(const TransitionGraph& gr) {
  require_complete(gr);
  Verdict v;
  v.property = std::string(report_name(Property::one_testability));
  v.holds = Truth::yes;
  const auto a = static_cast<Letter>(gr.alphabet_size());
  for (Letter u = 0; u < a; ++u) {
    for (Letter w = u; w < a; ++w) {
      for (Node p = 0; p < gr.node_count(); ++p) {
        const bool bad = u == w ? gr.next(gr.next(p, u), u) != gr.next(p, u)
                                : gr.next(gr.next(p, u), w) !=
                                      gr.next(gr.next(p, w), u);
        if (bad) {
          v.holds = Truth::no;
          v.witness = {u, w, p};
          v.witness_words = {Word{u}, Word{w}};
          v.detail = u == w ? "letter action is not idempotent at node"
                            : "letter actions do not commute at node";
          return v;
        }
      }
    }
  }
  return v;
}

Verdict is_k_testable_graph(const TransitionGraph& gr, std::size_t k,
                            std::size_t budget, std::size_t t,
                            std::size_t max_elements) {
  if (k < 1) throw Error(ErrorKind::bad_k, "k must be at least 1");
  require_complete(gr);
  Verdict v;
  v.property = "k_testability";
  v.detail = "k=" + std::to_string(k) + " t=" + std::to_string(t);
  try {
    const auto ts = transition_semigroup(gr, max_elements);
    const auto d = oracle::profile_determines(
        transition_action(ts, gr.alphabet_size()), k, t, budget);
    v.holds = d.status;
    if (d.witness) v.witness_words = {d.witness->first, d.witness->second};
    if (d.status == Truth::unknown) v.detail += "; " + d.detail;
  } catch (const BudgetExceeded& e) {
    v.holds = Truth::unknown;
    v.detail += std::string("; ") + e.what();
  }
  return v;
}

OrderResult order_of_local_testability_graph(const TransitionGraph& gr,
                                             std::size_t k_max,
                                             std::size_t budget, std::size_t t,
                                             std::size_t max_elements) {
  require_complete(gr);
  try {
    const auto ts = transition_semigroup(gr, max_elements);
    return oracle::search_order(transition_action(ts, gr.alphabet_size()),
                                k_max, t, budget);
  } catch (const BudgetExceeded& e) {
    OrderResult r;
    r.status = OrderResult::Status::unknown;
    r.k_max = k_max;
    r.threshold = t;
    r.detail = e.what();
    return r;
  }
}

Verdict graph_property(const TransitionGraph& gr, Property p,
                       std::size_t max_elements) {
  if (p == Property::one_testability) return is_1_testable(gr);
  const auto ts = transition_semigroup(gr, max_elements);
  return on_transition_semigroup(ts, p);
}

PropertyReport analyze_graph(const TransitionGraph& input,
                             std::span<const Property> requested,
                             const Limits& limits, std::string name) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report(std::move(name));
  const TransitionGraph gr = complete_with_sink(input);
  if (!input.is_complete())
    report.notes.push_back("sink added as node " +
                           std::to_string(*gr.completed_sink()));

  std::optional<TransitionSemigroup> ts;
  std::string too_large;
  try {
    ts.emplace(transition_semigroup(gr, limits.max_elements));
    report.stats.semigroup_size = ts->semigroup.size();
  } catch (const BudgetExceeded& e) {
    too_large = e.what();
  }

  for (Property p : requested) {
    if (p == Property::one_testability) {
      report.add(is_1_testable(gr));
    } else if (ts) {
      report.add(on_transition_semigroup(*ts, p));
    } else {
      Verdict v;
      v.property = std::string(report_name(p));
      v.holds = Truth::unknown;
      v.detail = too_large;
      report.add(std::move(v));
    }
  }

  auto unknown_order = [&](std::size_t t) {
    OrderResult r;
    r.status = OrderResult::Status::unknown;
    r.k_max = limits.k_max;
    r.threshold = t;
    r.detail = too_large;
    return r;
  };
  if (limits.k) {
    Verdict v;
    v.property = "k_testability";
    v.detail = "k=" + std::to_string(*limits.k) +
               " t=" + std::to_string(limits.threshold);
    if (*limits.k < 1) throw Error(ErrorKind::bad_k, "k must be at least 1");
    if (ts) {
      const auto d = oracle::profile_determines(
          transition_action(*ts, gr.alphabet_size()), *limits.k,
          limits.threshold, limits.budget);
      v.holds = d.status;
      if (d.witness) v.witness_words = {d.witness->first, d.witness->second};
      if (d.status == Truth::unknown) v.detail += "; " + d.detail;
      report.stats.oracle_states += d.states;
    } else {
      v.holds = Truth::unknown;
      v.detail += "; " + too_large;
    }
    report.add(std::move(v));
  }
  if (limits.order) {
    if (ts) {
      const auto action = transition_action(*ts, gr.alphabet_size());
      report.order =
          oracle::search_order(action, limits.k_max, 1, limits.budget);
      report.stats.oracle_states += report.order->states_explored;
      if (limits.threshold > 1) {
        report.threshold_order = oracle::search_order(
            action, limits.k_max, limits.threshold, limits.budget);
        report.stats.oracle_states += report.threshold_order->states_explored;
      }
    } else {
      report.order = unknown_order(1);
      if (limits.threshold > 1)
        report.threshold_order = unknown_order(limits.threshold);
    }
  }
  report.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace testas
