#include "testas/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "testas/error.hpp"
#include "testas/semigroup.hpp"

namespace testas {
namespace {

// Position of every pair code x * n2 + y in the product's element list.
std::vector<Element> pair_positions(const FiniteSemigroup& a,
                                    const FiniteSemigroup& b,
                                    std::size_t* generator_count) {
  const std::size_t n1 = a.size(), n2 = b.size();
  const std::size_t g1 = a.generator_count(), g2 = b.generator_count();
  std::vector<Element> pos(n1 * n2);
  Element next = 0;
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y)
      if (x < g1 || y < g2) pos[x * n2 + y] = next++;
  *generator_count = next;
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y)
      if (!(x < g1 || y < g2)) pos[x * n2 + y] = next++;
  return pos;
}

}  // namespace

FiniteSemigroup semigroup_direct_product(const FiniteSemigroup& a,
                                         const FiniteSemigroup& b) {
  const std::size_t n1 = a.size(), n2 = b.size();
  std::size_t gens = 0;
  const auto pos = pair_positions(a, b, &gens);
  std::vector<std::pair<Element, Element>> pair_of(n1 * n2);
  for (Element x = 0; x < n1; ++x)
    for (Element y = 0; y < n2; ++y) pair_of[pos[x * n2 + y]] = {x, y};

  CayleyRows rows{n1 * n2, gens, std::vector<Element>(n1 * n2 * gens)};
  for (std::size_t e = 0; e < n1 * n2; ++e) {
    const auto [x, y] = pair_of[e];
    for (std::size_t g = 0; g < gens; ++g) {
      const auto [gx, gy] = pair_of[g];
      rows.cells[e * gens + g] =
          pos[a.product(x, gx) * n2 + b.product(y, gy)];
    }
  }
  return close_cayley(std::move(rows));
}

Element product_element(const FiniteSemigroup& a, const FiniteSemigroup& b,
                        Element x, Element y) {
  std::size_t gens = 0;
  return pair_positions(a, b, &gens)[x * b.size() + y];
}

TransitionGraph graph_direct_product(const TransitionGraph& a,
                                     const TransitionGraph& b) {
  if (!a.is_complete() || !b.is_complete())
    throw Error(ErrorKind::incomplete_input,
                "graph product needs complete graphs");
  const std::size_t labels = std::min(a.alphabet_size(), b.alphabet_size());
  const std::size_t g2 = b.node_count();
  const std::size_t nodes = a.node_count() * g2;
  std::vector<Node> delta(nodes * labels);
  for (Node p = 0; p < a.node_count(); ++p)
    for (Node q = 0; q < g2; ++q)
      for (Letter c = 0; c < labels; ++c)
        delta[(p * g2 + q) * labels + c] =
            static_cast<Node>(a.next(p, c) * g2 + b.next(q, c));
  return TransitionGraph(labels, nodes, std::move(delta));
}

TransitionGraph graph_power(const TransitionGraph& gr, std::size_t m) {
  if (m < 2) throw std::invalid_argument("graph power needs m >= 2");
  TransitionGraph out = graph_direct_product(gr, gr);
  for (std::size_t i = 2; i < m; ++i) out = graph_direct_product(out, gr);
  return out;
}

}  // namespace testas
