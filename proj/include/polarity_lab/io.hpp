#ifndef POLARITY_LAB_IO_HPP
#define POLARITY_LAB_IO_HPP

#include <iosfwd>
#include <string>

#include "polarity_lab/graph.hpp"
#include "polarity_lab/polarity.hpp"

namespace polarity_lab {

struct GraphMeta {
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  FormKind form = FormKind::PseudoSymplectic;
  std::string construction;  // "paper", "nonabsolute" or "full"
};

/// Header line `# polarity-lab k=<k> q=<q> form=<kind> construction=<name> n=<n>`
/// followed by one `u v` pair per line, u <= v, 0-indexed canonical ids,
/// loops as `u u`.
void write_edge_list(std::ostream& os, const Graph& g, const GraphMeta& meta);

/// Rebuilds a graph from an edge-list stream: adjacency from the pair
/// lines, labels regenerated deterministically from the header parameters.
struct LoadedGraph {
  GraphMeta meta;
  Graph graph;
};
LoadedGraph read_edge_list(std::istream& is);

/// DIMACS: `p edge <n> <m>` then 1-indexed `e u v` lines; loops are
/// omitted with a warning comment.
void write_dimacs(std::ostream& os, const Graph& g, const GraphMeta& meta);

/// Reconstructs the named graph (paper / nonabsolute / full) for the
/// given parameters with the default t0.
Graph build_named_graph(const GraphMeta& meta, const Field& f);

}  // namespace polarity_lab

#endif
