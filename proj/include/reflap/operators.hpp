#ifndef REFLAP_OPERATORS_HPP
#define REFLAP_OPERATORS_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "reflap/error.hpp"
#include "reflap/graph.hpp"
#include "reflap/matrix.hpp"

namespace reflap {

/// Vertex permutation used by every block operator: interior vertices
/// ascending, then boundary vertices ascending. ordering[i] is the graph vertex
/// sitting at block position i.
inline std::vector<Vertex> block_ordering(const BoundaryGraph& g) {
  std::vector<Vertex> order = g.interior();
  order.insert(order.end(), g.boundary().begin(), g.boundary().end());
  return order;
}

/// Inverse of block_ordering: position[v] is the block index of vertex v.
inline std::vector<std::size_t> block_positions(const std::vector<Vertex>& ordering) {
  std::vector<std::size_t> pos(ordering.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) pos[ordering[i]] = i;
  return pos;
}

/// Re-indexes a block-ordered matrix by graph vertex.
inline Matrix to_vertex_order(const Matrix& m, const std::vector<Vertex>& ordering) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(ordering[i], ordering[j]) = m(i, j);
  return out;
}

inline Vector to_vertex_order(const Vector& x, const std::vector<Vertex>& ordering) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[ordering[i]] = x[i];
  return out;
}

inline Vector to_block_order(const Vector& x, const std::vector<Vertex>& ordering) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[ordering[i]];
  return out;
}

struct AdjacencyBlocks {
  Matrix a11;  // interior x interior
  Matrix a12;  // interior x boundary
  Matrix a22;  // boundary x boundary
  std::vector<Vertex> ordering;
};

inline AdjacencyBlocks adjacency_blocks(const BoundaryGraph& g) {
  const auto& in = g.interior();
  const auto& bd = g.boundary();
  AdjacencyBlocks blocks{Matrix(in.size(), in.size()), Matrix(in.size(), bd.size()),
                         Matrix(bd.size(), bd.size()), block_ordering(g)};
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = 0; j < in.size(); ++j) blocks.a11(i, j) = g.has_edge(in[i], in[j]);
    for (std::size_t j = 0; j < bd.size(); ++j) blocks.a12(i, j) = g.has_edge(in[i], bd[j]);
  }
  for (std::size_t i = 0; i < bd.size(); ++i)
    for (std::size_t j = 0; j < bd.size(); ++j) blocks.a22(i, j) = g.has_edge(bd[i], bd[j]);
  return blocks;
}

/// Adjacency matrix in plain vertex order.
inline Matrix adjacency_matrix(const BoundaryGraph& g) {
  Matrix a(g.size(), g.size());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

/// Standard combinatorial Laplacian D - A in plain vertex order.
inline Matrix laplacian_matrix(const BoundaryGraph& g) {
  Matrix l(g.size(), g.size());
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) = l(e.v, e.u) = -1.0;
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
  }
  return l;
}

/// Every matrix of the reflected construction, all in block order
/// (interior first, then boundary). Use to_vertex_order() with `ordering`
/// to move back to graph indices.
struct OperatorSet {
  std::vector<Vertex> ordering;
  std::size_t interior_count = 0;

  Matrix r;           // reflected adjacency, boundary rows doubled toward the interior
  Vector d;           // diag(R 1)
  Vector q;           // 1 on interior, 1/2 on boundary
  Matrix l;           // standard Laplacian of G
  Matrix l_boundary;  // Laplacian of G[boundary], zero outside the boundary block
  Matrix l_r;         // D - R
  Matrix l_r_norm;    // D^{-1/2} L_R D^{-1/2}; empty when not normalized
  Matrix sym;         // (DQ)^{-1/2} (L - L_boundary/2) (DQ)^{-1/2}; empty when not normalized
  Matrix l_d;         // interior block of L (Dirichlet Laplacian)
};

enum class Normalize { yes, no };

namespace detail {

inline std::string isolated_message(Vertex v) {
  return "vertex " + std::to_string(v) + " has zero reflected degree";
}

}  // namespace detail

inline OperatorSet assemble(const BoundaryGraph& g, Normalize normalize = Normalize::yes) {
  const std::size_t n = g.size();
  OperatorSet ops;
  ops.ordering = block_ordering(g);
  ops.interior_count = g.interior().size();
  const auto& order = ops.ordering;
  const auto pos = block_positions(order);

  ops.r = Matrix(n, n);
  ops.l = Matrix(n, n);
  ops.l_boundary = Matrix(n, n);
  for (const Edge& e : g.edges()) {
    const std::size_t i = pos[e.u], j = pos[e.v];
    const bool bu = g.is_boundary(e.u), bv = g.is_boundary(e.v);
    // A boundary row entry toward an interior column counts twice.
    ops.r(i, j) = (bu && !bv) ? 2.0 : 1.0;
    ops.r(j, i) = (bv && !bu) ? 2.0 : 1.0;

    ops.l(i, j) = ops.l(j, i) = -1.0;
    ops.l(i, i) += 1.0;
    ops.l(j, j) += 1.0;

    if (bu && bv) {
      ops.l_boundary(i, j) = ops.l_boundary(j, i) = -1.0;
      ops.l_boundary(i, i) += 1.0;
      ops.l_boundary(j, j) += 1.0;
    }
  }

  ops.d.assign(n, 0.0);
  ops.q.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ops.d[i] += ops.r(i, j);
    if (i >= ops.interior_count) ops.q[i] = 0.5;
  }

  ops.l_r = Matrix::diagonal(ops.d) - ops.r;

  const std::size_t ni = ops.interior_count;
  ops.l_d = Matrix(ni, ni);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < ni; ++j) ops.l_d(i, j) = ops.l(i, j);

  if (normalize == Normalize::yes) {
    Vector d_isqrt(n), dq_isqrt(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ops.d[i] <= 0.0) throw Error(ErrorCode::IsolatedVertex, detail::isolated_message(order[i]));
      d_isqrt[i] = 1.0 / std::sqrt(ops.d[i]);
      dq_isqrt[i] = 1.0 / std::sqrt(ops.d[i] * ops.q[i]);
    }
    ops.l_r_norm = scale_rows_cols(ops.l_r, d_isqrt, d_isqrt);
    const Matrix weighted = ops.l - 0.5 * ops.l_boundary;
    ops.sym = scale_rows_cols(weighted, dq_isqrt, dq_isqrt);
    // Symmetrize to remove rounding asymmetry.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double avg = 0.5 * (ops.sym(i, j) + ops.sym(j, i));
        ops.sym(i, j) = ops.sym(j, i) = avg;
      }
  }
  return ops;
}

/// Interior block X of the doubled graph's Laplacian:
/// diag(interior degrees in G) - A11, interior vertices ascending.
inline Matrix dirichlet_laplacian(const BoundaryGraph& g) {
  const auto& in = g.interior();
  if (in.empty()) throw Error(ErrorCode::EmptyInterior, "graph has no interior vertices");
  Matrix x(in.size(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    x(i, i) = static_cast<double>(g.degree(in[i]));
    for (std::size_t j = 0; j < in.size(); ++j)
      if (g.has_edge(in[i], in[j])) x(i, j) = -1.0;
  }
  return x;
}

/// Standard normalized Laplacian D^{-1/2}(D - A)D^{-1/2} in vertex order,
/// ignoring the boundary designation.
inline Matrix normalized_laplacian(const BoundaryGraph& g) {
  Vector s(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) throw Error(ErrorCode::IsolatedVertex, detail::isolated_message(v));
    s[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  return scale_rows_cols(laplacian_matrix(g), s, s);
}

}  // namespace reflap

#endif  // REFLAP_OPERATORS_HPP
