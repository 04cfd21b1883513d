#ifndef REFLAP_GRAPH_HPP
#define REFLAP_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reflap/error.hpp"

namespace reflap {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with a designated boundary set.
/// Immutable after construction; every constructor path validates.
class BoundaryGraph {
 public:
  BoundaryGraph() = default;

  BoundaryGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                std::span<const Vertex> boundary)
      : n_(n), is_boundary_(n, false), adjacency_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) {
        throw Error(ErrorCode::InvalidVertex,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has an endpoint >= n=" + std::to_string(n));
      }
      if (a == b) {
        throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
      }
      edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(dup->u) +
                                                "," + std::to_string(dup->v) + ")");
    }
    for (Vertex b : boundary) {
      if (b >= n) {
        throw Error(ErrorCode::InvalidVertex,
                    "boundary vertex " + std::to_string(b) + " >= n=" + std::to_string(n));
      }
      is_boundary_[b] = true;
    }
    for (Vertex v = 0; v < n; ++v) (is_boundary_[v] ? boundary_ : interior_).push_back(v);
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& boundary() const noexcept { return boundary_; }
  const std::vector<Vertex>& interior() const noexcept { return interior_; }
  bool is_boundary(Vertex v) const { return is_boundary_.at(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    const auto& nb = adjacency_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::size_t interior_degree(Vertex v) const {
    const auto& nb = neighbors(v);
    return static_cast<std::size_t>(
        std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return !is_boundary_[w]; }));
  }
  std::size_t boundary_degree(Vertex v) const { return degree(v) - interior_degree(v); }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const BoundaryGraph& a, const BoundaryGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.boundary_ == b.boundary_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> is_boundary_;
  std::vector<Vertex> boundary_;
  std::vector<Vertex> interior_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline BoundaryGraph new_boundary_graph(std::size_t n,
                                        std::span<const std::pair<Vertex, Vertex>> edges,
                                        std::span<const Vertex> boundary = {}) {
  return BoundaryGraph(n, edges, boundary);
}

inline BoundaryGraph new_boundary_graph(std::size_t n,
                                        std::initializer_list<std::pair<Vertex, Vertex>> edges,
                                        std::initializer_list<Vertex> boundary = {}) {
  return BoundaryGraph(n, std::span(edges.begin(), edges.size()),
                       std::span(boundary.begin(), boundary.size()));
}

/// Same vertices and edges, different boundary designation.
inline BoundaryGraph with_boundary(const BoundaryGraph& g, std::span<const Vertex> boundary) {
  const auto pairs = g.edge_pairs();
  return BoundaryGraph(g.size(), pairs, boundary);
}

// ---------------------------------------------------------------------------
// Doubling

/// The doubled graph G' together with the interior mirror map f.
/// Copies are numbered n, n+1, ... in ascending order of the interior vertex
/// they mirror; G' keeps the boundary of the original graph.
struct DoubledGraph {
  BoundaryGraph graph;
  std::size_t original_size = 0;
  /// (v, f(v)) for every interior v, ascending in v.
  std::vector<std::pair<Vertex, Vertex>> mirror;

  std::optional<Vertex> mirror_of(Vertex v) const {
    auto it = std::lower_bound(mirror.begin(), mirror.end(), std::pair<Vertex, Vertex>{v, 0});
    if (it == mirror.end() || it->first != v) return std::nullopt;
    return it->second;
  }

  std::optional<Vertex> original_of(Vertex copy) const {
    if (copy < original_size || copy >= original_size + mirror.size()) return std::nullopt;
    return mirror[copy - original_size].first;
  }

  /// The reflection of G': fixes the boundary and swaps v with f(v).
  std::vector<Vertex> reflection() const {
    std::vector<Vertex> p(graph.size());
    std::iota(p.begin(), p.end(), Vertex{0});
    for (auto [v, fv] : mirror) {
      p[v] = fv;
      p[fv] = v;
    }
    return p;
  }
};

inline DoubledGraph double_graph(const BoundaryGraph& g) {
  const std::size_t n = g.size();
  const auto& interior = g.interior();
  DoubledGraph dg;
  dg.original_size = n;
  if (interior.empty()) {
    dg.graph = g;
    return dg;
  }

  std::vector<std::optional<Vertex>> copy(n);
  for (std::size_t rank = 0; rank < interior.size(); ++rank) {
    copy[interior[rank]] = n + rank;
    dg.mirror.emplace_back(interior[rank], n + rank);
  }

  auto pairs = g.edge_pairs();
  for (const Edge& e : g.edges()) {
    const bool ui = !g.is_boundary(e.u);
    const bool vi = !g.is_boundary(e.v);
    if (ui && vi) {
      pairs.emplace_back(*copy[e.u], *copy[e.v]);  // F
    } else if (ui) {
      pairs.emplace_back(*copy[e.u], e.v);  // F'
    } else if (vi) {
      pairs.emplace_back(e.u, *copy[e.v]);  // F'
    }
  }
  dg.graph = BoundaryGraph(n + interior.size(), pairs, g.boundary());
  return dg;
}

// ---------------------------------------------------------------------------
// Induced subgraphs

struct InducedSubgraph {
  BoundaryGraph graph;
  /// original[i] is the vertex of the parent graph relabeled to i.
  std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const BoundaryGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  for (Vertex v : keep) {
    if (v >= g.size()) {
      throw Error(ErrorCode::InvalidVertex, "subset vertex " + std::to_string(v) +
                                                " >= n=" + std::to_string(g.size()));
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(g.size(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = i;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent)
      pairs.emplace_back(relabel[e.u], relabel[e.v]);
  }
  std::vector<Vertex> boundary;
  for (Vertex b : g.boundary())
    if (relabel[b] != kAbsent) boundary.push_back(relabel[b]);

  return {BoundaryGraph(keep.size(), pairs, boundary), std::move(keep)};
}

// ---------------------------------------------------------------------------
// Connectivity

/// Component label per vertex; labels are assigned in order of smallest vertex.
inline std::vector<std::size_t> component_labels(const BoundaryGraph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.size(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const BoundaryGraph& g) {
  const auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](std::size_t l) { return l == 0; });
}

// ---------------------------------------------------------------------------
// Generators
//
// Numbering: path 0..n-1 in order; cycle 0..n-1 around; grid row-major
// (vertex = row * cols + col); barbell first clique 0..k-1, bridge k..k+L-1,
// second clique k+L..2k+L-1. The bridge runs from vertex k-1 (first clique)
// to vertex k+L (second clique); with L = 0 those two are joined directly.

struct PathSpec { std::size_t n; };
struct CycleSpec { std::size_t n; };
struct GridSpec { std::size_t rows; std::size_t cols; };
struct BarbellSpec { std::size_t clique_size; std::size_t bridge_len; };

using GraphSpec = std::variant<PathSpec, CycleSpec, GridSpec, BarbellSpec>;

enum class BoundaryRule { none, endpoints, explicit_list, grid_columns, grid_rows };

struct BoundarySpec {
  BoundaryRule rule = BoundaryRule::none;
  std::vector<Vertex> vertices;  // explicit_list only

  static BoundarySpec none() { return {}; }
  static BoundarySpec endpoints() { return {BoundaryRule::endpoints, {}}; }
  static BoundarySpec columns() { return {BoundaryRule::grid_columns, {}}; }
  static BoundarySpec rows() { return {BoundaryRule::grid_rows, {}}; }
  static BoundarySpec list(std::vector<Vertex> v) {
    return {BoundaryRule::explicit_list, std::move(v)};
  }
};

namespace detail {

struct RawGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

inline RawGraph raw_path(std::size_t n) {
  RawGraph r{n, {}};
  for (Vertex v = 0; v + 1 < n; ++v) r.edges.emplace_back(v, v + 1);
  return r;
}

inline RawGraph raw_cycle(std::size_t n) {
  RawGraph r = raw_path(n);
  r.edges.emplace_back(n - 1, 0);
  return r;
}

inline RawGraph raw_grid(std::size_t rows, std::size_t cols) {
  RawGraph r{rows * cols, {}};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Vertex v = i * cols + j;
      if (j + 1 < cols) r.edges.emplace_back(v, v + 1);
      if (i + 1 < rows) r.edges.emplace_back(v, v + cols);
    }
  return r;
}

inline RawGraph raw_barbell(std::size_t k, std::size_t bridge) {
  RawGraph r{2 * k + bridge, {}};
  const Vertex second = k + bridge;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) {
      r.edges.emplace_back(a, b);
      r.edges.emplace_back(second + a, second + b);
    }
  Vertex prev = k - 1;
  for (Vertex v = k; v < second; ++v) {
    r.edges.emplace_back(prev, v);
    prev = v;
  }
  r.edges.emplace_back(prev, second);
  return r;
}

}  // namespace detail

inline BoundaryGraph generate(const GraphSpec& spec, const BoundarySpec& boundary = {}) {
  detail::RawGraph raw;
  std::optional<GridSpec> grid;
  bool is_path = false;

  if (const auto* p = std::get_if<PathSpec>(&spec)) {
    if (p->n < 1) throw Error(ErrorCode::InvalidSpec, "path needs n >= 1");
    raw = detail::raw_path(p->n);
    is_path = true;
  } else if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    if (c->n < 3) throw Error(ErrorCode::InvalidSpec, "cycle needs n >= 3");
    raw = detail::raw_cycle(c->n);
  } else if (const auto* gs = std::get_if<GridSpec>(&spec)) {
    if (gs->rows < 1 || gs->cols < 1)
      throw Error(ErrorCode::InvalidSpec, "grid needs rows, cols >= 1");
    raw = detail::raw_grid(gs->rows, gs->cols);
    grid = *gs;
  } else {
    const auto& b = std::get<BarbellSpec>(spec);
    if (b.clique_size < 1) throw Error(ErrorCode::InvalidSpec, "barbell needs clique_size >= 1");
    raw = detail::raw_barbell(b.clique_size, b.bridge_len);
  }

  std::vector<Vertex> bset;
  switch (boundary.rule) {
    case BoundaryRule::none:
      break;
    case BoundaryRule::endpoints:
      if (!is_path) throw Error(ErrorCode::InvalidSpec, "endpoints boundary applies to paths only");
      bset = {0, raw.n - 1};
      break;
    case BoundaryRule::explicit_list:
      bset = boundary.vertices;
      for (Vertex v : bset)
        if (v >= raw.n)
          throw Error(ErrorCode::InvalidSpec, "boundary vertex " + std::to_string(v) +
                                                  " out of range for generated graph");
      break;
    case BoundaryRule::grid_columns:
      if (!grid) throw Error(ErrorCode::InvalidSpec, "column boundary applies to grids only");
      for (std::size_t i = 0; i < grid->rows; ++i) {
        bset.push_back(i * grid->cols);
        bset.push_back(i * grid->cols + grid->cols - 1);
      }
      break;
    case BoundaryRule::grid_rows:
      if (!grid) throw Error(ErrorCode::InvalidSpec, "row boundary applies to grids only");
      for (std::size_t j = 0; j < grid->cols; ++j) {
        bset.push_back(j);
        bset.push_back((grid->rows - 1) * grid->cols + j);
      }
      break;
  }
  std::sort(bset.begin(), bset.end());
  bset.erase(std::unique(bset.begin(), bset.end()), bset.end());
  return BoundaryGraph(raw.n, raw.edges, bset);
}

inline BoundaryGraph path_graph(std::size_t n, BoundarySpec b = {}) {
  return generate(PathSpec{n}, b);
}
inline BoundaryGraph cycle_graph(std::size_t n, BoundarySpec b = {}) {
  return generate(CycleSpec{n}, b);
}
inline BoundaryGraph grid_graph(std::size_t rows, std::size_t cols, BoundarySpec b = {}) {
  return generate(GridSpec{rows, cols}, b);
}
inline BoundaryGraph barbell_graph(std::size_t k, std::size_t bridge, BoundarySpec b = {}) {
  return generate(BarbellSpec{k, bridge}, b);
}

}  // namespace reflap

#endif  // REFLAP_GRAPH_HPP
