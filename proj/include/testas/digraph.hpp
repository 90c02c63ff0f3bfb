#ifndef TESTAS_DIGRAPH_HPP
#define TESTAS_DIGRAPH_HPP

#include <cstdint>
#include <vector>

namespace testas {

/// Adjacency lists over vertices 0 .. size()-1.
using Digraph = std::vector<std::vector<std::uint32_t>>;

/// Strongly connected components (iterative Tarjan). Components are sorted
/// by least vertex and list their vertices ascending.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(
    const Digraph& g);

}  // namespace testas

#endif  // TESTAS_DIGRAPH_HPP
