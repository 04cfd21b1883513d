#ifndef REFLAP_DEMO_HPP
#define REFLAP_DEMO_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "reflap/cheeger.hpp"
#include "reflap/graph.hpp"
#include "reflap/io.hpp"
#include "reflap/operators.hpp"
#include "reflap/spectra.hpp"

namespace reflap {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class GridAxis { columns, rows, mixed };

inline const char* to_string(GridAxis a) {
  switch (a) {
    case GridAxis::columns: return "columns";
    case GridAxis::rows: return "rows";
    case GridAxis::mixed: return "mixed";
  }
  return "mixed";
}

/// `columns` when the subset is a union of whole grid columns (a vertical
/// cut), `rows` for a union of whole rows, `mixed` otherwise.
inline GridAxis cut_axis(const std::vector<Vertex>& subset, std::size_t rows, std::size_t cols) {
  std::vector<bool> in(rows * cols, false);
  for (Vertex v : subset) in.at(v) = true;
  auto whole = [&](bool by_column) {
    const std::size_t outer = by_column ? cols : rows, inner = by_column ? rows : cols;
    for (std::size_t a = 0; a < outer; ++a) {
      const bool first = in[by_column ? a : a * cols];
      for (std::size_t b = 1; b < inner; ++b) {
        const Vertex v = by_column ? b * cols + a : a * cols + b;
        if (in[v] != first) return false;
      }
    }
    return true;
  };
  if (whole(true)) return GridAxis::columns;
  if (whole(false)) return GridAxis::rows;
  return GridAxis::mixed;
}

/// Fiedler-type vector of the standard normalized Laplacian in sweep form
/// D^{-1/2} y, boundary designation ignored.
inline Vector standard_sweep_vector(const BoundaryGraph& g) {
  const Spectrum sp = sym_eig(normalized_laplacian(g));
  Vector psi(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    psi[v] = sp.eigenvectors(v, 1) / std::sqrt(static_cast<double>(g.degree(v)));
  return psi;
}

// ---------------------------------------------------------------------------
// Grid: standard vs reflected cut orientation

struct Figure4Data {
  BoundaryGraph graph;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Point> coords;
  Vector psi;    // standard normalized Laplacian, sweep form
  Vector psi_r;  // reflected, sweep form (DQ)^{-1/2} y
  CutResult psi_cut;
  CutResult psi_r_cut;
  GridAxis psi_axis = GridAxis::mixed;
  GridAxis psi_r_axis = GridAxis::mixed;
};

inline Figure4Data figure4(std::size_t rows = 4, std::size_t cols = 6,
                           const BoundarySpec& boundary = BoundarySpec::columns()) {
  Figure4Data f;
  f.rows = rows;
  f.cols = cols;
  f.graph = grid_graph(rows, cols, boundary);
  const BoundaryGraph plain = grid_graph(rows, cols);
  for (Vertex v = 0; v < f.graph.size(); ++v)
    f.coords.push_back({static_cast<double>(v % cols), static_cast<double>(v / cols)});

  f.psi = standard_sweep_vector(plain);
  f.psi_r = reflected_spectrum(f.graph).sweep_vector(1);
  f.psi_cut = sweep_cut(plain, f.psi);
  f.psi_r_cut = sweep_cut(f.graph, f.psi_r);
  f.psi_axis = cut_axis(f.psi_cut.subset, rows, cols);
  f.psi_r_axis = cut_axis(f.psi_r_cut.subset, rows, cols);
  return f;
}

// ---------------------------------------------------------------------------
// Barbell: extremes of psi_R

struct Figure5Data {
  BoundaryGraph graph;
  std::size_t clique_size = 0;
  std::size_t bridge_len = 0;
  std::vector<Point> coords;
  Vector psi_r;  // sweep form (DQ)^{-1/2} y
  Vertex argmax = 0;
  Vertex argmin = 0;
  /// Every vertex attaining the max or min (to 1e-9 relative) is interior.
  bool extremes_interior = false;
};

/// Boundary used by the barbell demo: the clique vertex touching the bridge
/// on each side.
inline std::vector<Vertex> barbell_junctions(std::size_t k, std::size_t bridge) {
  return {k - 1, k + bridge};
}

inline Figure5Data figure5(std::size_t k = 5, std::size_t bridge = 4) {
  Figure5Data f;
  f.clique_size = k;
  f.bridge_len = bridge;
  f.graph = barbell_graph(k, bridge, BoundarySpec::list(barbell_junctions(k, bridge)));

  const double two_pi = 2.0 * std::numbers::pi;
  const double right = static_cast<double>(bridge) + 1.0;
  f.coords.resize(f.graph.size());
  for (std::size_t i = 0; i < k; ++i) {
    // junction at angle 0 facing the bridge, the rest around the circle
    const double a = i + 1 == k ? 0.0 : two_pi * static_cast<double>(i + 1) / static_cast<double>(k);
    f.coords[i] = {std::cos(a) - 1.0, std::sin(a)};
    const double b = std::numbers::pi + (i == 0 ? 0.0 : two_pi * static_cast<double>(i) / static_cast<double>(k));
    f.coords[k + bridge + i] = {right + 1.0 + std::cos(b), std::sin(b)};
  }
  for (std::size_t j = 0; j < bridge; ++j) f.coords[k + j] = {static_cast<double>(j + 1), 0.0};

  f.psi_r = reflected_spectrum(f.graph).sweep_vector(1);
  const auto [mn, mx] = std::minmax_element(f.psi_r.begin(), f.psi_r.end());
  f.argmin = static_cast<Vertex>(mn - f.psi_r.begin());
  f.argmax = static_cast<Vertex>(mx - f.psi_r.begin());
  const double tol = 1e-9 * std::max(std::abs(*mn), std::abs(*mx));
  f.extremes_interior = true;
  for (Vertex v = 0; v < f.graph.size(); ++v) {
    const bool extreme = f.psi_r[v] >= *mx - tol || f.psi_r[v] <= *mn + tol;
    if (extreme && f.graph.is_boundary(v)) f.extremes_interior = false;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Columnar output: one row per vertex, cut sets as comment lines.

inline void write_vertex_list(std::ostream& out, const std::string& label,
                              const std::vector<Vertex>& vs) {
  out << "# " << label;
  for (Vertex v : vs) out << ' ' << v;
  out << '\n';
}

inline void write_figure4(std::ostream& out, const Figure4Data& f) {
  out << "# grid " << f.rows << "x" << f.cols << ", boundary vertices:";
  for (Vertex b : f.graph.boundary()) out << ' ' << b;
  out << '\n';
  write_vertex_list(out, "psi_cut", f.psi_cut.subset);
  write_vertex_list(out, "psi_r_cut", f.psi_r_cut.subset);
  out << "# psi_axis " << to_string(f.psi_axis) << "\n# psi_r_axis " << to_string(f.psi_r_axis)
      << '\n';
  out << "# vertex x y boundary psi psi_r\n";
  for (Vertex v = 0; v < f.graph.size(); ++v) {
    out << v << ' ' << f.coords[v].x << ' ' << f.coords[v].y << ' ' << f.graph.is_boundary(v)
        << ' ' << format_double(f.psi[v]) << ' ' << format_double(f.psi_r[v]) << '\n';
  }
}

inline void write_figure5(std::ostream& out, const Figure5Data& f) {
  out << "# barbell clique_size=" << f.clique_size << " bridge_len=" << f.bridge_len
      << ", boundary vertices:";
  for (Vertex b : f.graph.boundary()) out << ' ' << b;
  out << "\n# argmax " << f.argmax << "\n# argmin " << f.argmin << "\n# extremes_interior "
      << (f.extremes_interior ? "true" : "false") << '\n';
  out << "# vertex x y boundary psi_r\n";
  for (Vertex v = 0; v < f.graph.size(); ++v) {
    out << v << ' ' << format_double(f.coords[v].x) << ' ' << format_double(f.coords[v].y) << ' '
        << f.graph.is_boundary(v) << ' ' << format_double(f.psi_r[v]) << '\n';
  }
}

}  // namespace reflap

#endif  // REFLAP_DEMO_HPP
