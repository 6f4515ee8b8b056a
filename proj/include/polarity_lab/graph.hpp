#ifndef POLARITY_LAB_GRAPH_HPP
#define POLARITY_LAB_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "polarity_lab/projgeom.hpp"

namespace polarity_lab {

/// Fixed-size bit row; the diagonal bit doubles as the loop marker.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// popcount of the AND with another row of equal size.
  std::size_t and_count(const BitRow& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & other.w_[i]));
    return c;
  }
  BitRow and_with(const BitRow& other) const {
    BitRow r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & other.w_[i];
    return r;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Symmetric adjacency structure over canonical vertex ids, with
/// projective-point labels and an explicit loop set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<ProjPoint> labels)
      : labels_(std::move(labels)), rows_(labels_.size(), BitRow(labels_.size())) {}

  std::size_t n() const { return labels_.size(); }
  const std::vector<ProjPoint>& labels() const { return labels_; }
  const ProjPoint& label(std::size_t v) const { return labels_[v]; }

  void add_edge(std::size_t u, std::size_t v) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void set_loop(std::size_t v) { rows_[v].set(v); }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  bool has_loop(std::size_t v) const { return rows_[v].test(v); }
  /// Degree with a loop contributing 1.
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  const BitRow& row(std::size_t v) const { return rows_[v]; }

  std::vector<std::size_t> loops() const {
    std::vector<std::size_t> l;
    for (std::size_t v = 0; v < n(); ++v)
      if (has_loop(v)) l.push_back(v);
    return l;
  }
  /// Number of non-loop edges {u, v}, u != v.
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < n(); ++v) total += rows_[v].count();
    return (total - loops().size()) / 2;
  }

 private:
  std::vector<ProjPoint> labels_;
  std::vector<BitRow> rows_;
};

}  // namespace polarity_lab

#endif
