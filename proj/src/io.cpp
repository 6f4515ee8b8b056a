#include "polarity_lab/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polarity_lab/construction.hpp"

namespace polarity_lab {

namespace {

Field field_for_order(std::uint32_t q) {
  if (q >= 2 && (q & (q - 1)) == 0) {
    std::uint32_t h = 0;
    while ((1u << h) < q) ++h;
    return Field::create(2, h);
  }
  return Field::create(q, 1);  // prime field; create() validates primality
}

}  // namespace

Graph build_named_graph(const GraphMeta& meta, const Field& f) {
  if (meta.construction == "paper") return build_H(default_params(meta.k, f));
  const BilinearForm form = make_form(meta.form, meta.k, f);
  if (meta.construction == "nonabsolute") return nonabsolute_subgraph(f, form, meta.k);
  if (meta.construction == "full") return polarity_graph(f, form, meta.k);
  throw std::invalid_argument("unknown construction: " + meta.construction);
}

void write_edge_list(std::ostream& os, const Graph& g, const GraphMeta& meta) {
  os << "# polarity-lab k=" << meta.k << " q=" << meta.q << " form=" << form_kind_name(meta.form)
     << " construction=" << meta.construction << " n=" << g.n() << '\n';
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u; v < g.n(); ++v)
      if (g.adjacent(u, v)) os << u << ' ' << v << '\n';
}

LoadedGraph read_edge_list(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("# polarity-lab ", 0) != 0)
    throw std::runtime_error("edge list: missing polarity-lab header");

  GraphMeta meta;
  std::size_t n = 0;
  std::istringstream hs(header.substr(std::string("# polarity-lab ").size()));
  std::string tok;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "k") meta.k = static_cast<std::uint32_t>(std::stoul(val));
    else if (key == "q") meta.q = static_cast<std::uint32_t>(std::stoul(val));
    else if (key == "form") meta.form = form_kind_from_name(val);
    else if (key == "construction") meta.construction = val;
    else if (key == "n") n = std::stoul(val);
  }

  const Field f = field_for_order(meta.q);
  Graph g = build_named_graph(meta, f);
  if (g.n() != n) throw std::runtime_error("edge list: header n does not match parameters");

  // Adjacency comes from the file; rebuild it from scratch on the labels.
  Graph fresh(g.labels());
  std::size_t u, v;
  while (is >> u >> v) {
    if (u >= fresh.n() || v >= fresh.n()) throw std::runtime_error("edge list: vertex out of range");
    if (u == v) fresh.set_loop(u);
    else fresh.add_edge(u, v);
  }
  return {meta, std::move(fresh)};
}

void write_dimacs(std::ostream& os, const Graph& g, const GraphMeta& meta) {
  const auto loops = g.loops();
  os << "c polarity-lab k=" << meta.k << " q=" << meta.q << " form=" << form_kind_name(meta.form)
     << " construction=" << meta.construction << '\n';
  if (!loops.empty())
    os << "c warning: " << loops.size() << " loop(s) omitted (DIMACS is simple)\n";
  os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v)) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace polarity_lab
