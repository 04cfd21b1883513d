#ifndef REFLAP_IO_HPP
#define REFLAP_IO_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "reflap/cheeger.hpp"
#include "reflap/error.hpp"
#include "reflap/graph.hpp"
#include "reflap/operators.hpp"
#include "reflap/spectra.hpp"

namespace reflap {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Graph text format
//
//   # comment
//   n <count>
//   b <i1> <i2> ...     (optional, repeatable)
//   e <u> <v>           (one per edge)

inline BoundaryGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> boundary;

  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_index = [&](std::istringstream& ss, Vertex& out) {
    long long v = 0;
    if (!(ss >> v)) return false;
    if (v < 0) throw fail("negative vertex index");
    out = static_cast<Vertex>(v);
    return true;
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line.substr(first));
    std::string tag;
    ss >> tag;
    if (tag == "n") {
      if (have_n) throw fail("repeated 'n' line");
      long long count = -1;
      if (!(ss >> count) || count < 0) throw fail("expected 'n <count>'");
      n = static_cast<std::size_t>(count);
      have_n = true;
    } else if (tag == "b") {
      if (!have_n) throw fail("'b' before 'n'");
      Vertex v = 0;
      while (read_index(ss, v)) boundary.push_back(v);
      if (!ss.eof()) throw fail("malformed boundary index");
    } else if (tag == "e") {
      if (!have_n) throw fail("'e' before 'n'");
      Vertex u = 0, v = 0;
      if (!read_index(ss, u) || !read_index(ss, v)) throw fail("expected 'e <u> <v>'");
      edges.emplace_back(u, v);
    } else {
      throw fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (tag != "b" && (ss >> extra)) throw fail("trailing content '" + extra + "'");
  }
  if (!have_n) throw Error(ErrorCode::ParseError, "missing 'n' line");
  return BoundaryGraph(n, edges, boundary);
}

inline BoundaryGraph parse_graph(const std::string& text) {
  std::istringstream ss(text);
  return parse_graph(ss);
}

inline void write_graph(std::ostream& out, const BoundaryGraph& g,
                        const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n " << g.size() << '\n';
  if (!g.boundary().empty()) {
    out << 'b';
    for (Vertex b : g.boundary()) out << ' ' << b;
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

inline std::string graph_to_string(const BoundaryGraph& g,
                                   const std::vector<std::string>& comments = {}) {
  std::ostringstream ss;
  write_graph(ss, g, comments);
  return ss.str();
}

/// Doubled graph with one "# mirror v f(v)" comment per interior vertex.
inline void write_doubled(std::ostream& out, const DoubledGraph& dg) {
  std::vector<std::string> comments{"doubled graph: " + std::to_string(dg.original_size) +
                                    " original vertices, " + std::to_string(dg.mirror.size()) +
                                    " interior copies"};
  for (auto [v, fv] : dg.mirror)
    comments.push_back("mirror " + std::to_string(v) + " " + std::to_string(fv));
  write_graph(out, dg.graph, comments);
}

// ---------------------------------------------------------------------------
// JSON
//
// Documents are built as ordered_json so key order is fixed; floats are
// written with 17 significant digits by write_json rather than nlohmann's
// shortest round-trip form.

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_json(std::ostream& out, const Json& j, int indent = 2, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out << "{}"; return; }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(it.key()).dump() << ": ";
        write_json(out, it.value(), indent, depth + 1);
      }
      out << '\n' << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out << "[]"; return; }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(),
                                     [](const Json& e) { return e.is_structured(); });
      if (flat) {
        out << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          write_json(out, j[i], indent, depth + 1);
        }
        out << ']';
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write_json(out, j[i], indent, depth + 1);
      }
      out << '\n' << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

inline std::string json_to_string(const Json& j) {
  std::ostringstream ss;
  write_json(ss, j);
  ss << '\n';
  return ss.str();
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (double x : m.row(i)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

inline Json to_json(const std::vector<Vertex>& v) {
  Json a = Json::array();
  for (Vertex x : v) a.push_back(x);
  return a;
}

inline Json to_json(const Fraction& f) {
  Json j;
  j["numerator"] = f.num();
  j["denominator"] = f.den();
  j["value"] = f.value();
  return j;
}

inline Json to_json(const HalfInt& h) { return h.value(); }

inline Json to_json(const CutResult& c) {
  Json j;
  j["subset"] = to_json(c.subset);
  j["cut_measure"] = to_json(c.cut_measure);
  j["vol_s"] = to_json(c.vol_s);
  j["vol_complement"] = to_json(c.vol_complement);
  j["ratio"] = to_json(c.ratio);
  return j;
}

inline Json to_json(const Spectrum& s) {
  Json j;
  j["eigenvalues"] = to_json(s.eigenvalues);
  j["eigenvectors"] = to_json(s.eigenvectors);
  j["residuals"] = to_json(s.residuals);
  return j;
}

inline Json to_json(const ReflectedSpectrum& rs) {
  Json j;
  j["eigenvalues"] = to_json(rs.eigenvalues());
  j["eigenvectors"] = to_json(rs.eigenvectors);
  j["residuals"] = to_json(rs.residuals);
  j["sweep_vectors"] = to_json(rs.sweep_vectors);
  j["lambda_r"] = rs.eigenvalues().size() >= 2 ? Json(rs.lambda_r()) : Json(nullptr);
  return j;
}

inline Json to_json(const ParityReport& p) {
  Json j;
  j["even_count"] = p.even_count;
  j["odd_count"] = p.odd_count;
  Json clusters = Json::array();
  for (const auto& c : p.clusters) {
    Json cj;
    cj["eigenvalue"] = c.eigenvalue;
    cj["multiplicity"] = c.multiplicity;
    cj["even"] = c.even_dim;
    cj["odd"] = c.odd_dim;
    clusters.push_back(std::move(cj));
  }
  j["clusters"] = std::move(clusters);
  return j;
}

inline Json to_json(const CheegerReport& r) {
  Json j;
  j["h_r"] = to_json(r.h_r_exact);
  j["lambda_r"] = r.lambda_r;
  j["upper"] = r.upper;
  j["lower"] = r.lower;
  j["holds"] = r.holds;
  j["sweep_within_upper"] = r.sweep_within_upper;
  j["optimal_subset"] = to_json(r.optimal.subset);
  j["sweep_subset"] = to_json(r.sweep.subset);
  j["sweep_ratio"] = to_json(r.sweep.ratio);
  return j;
}

inline Json to_json(const OperatorSet& ops) {
  Json j;
  j["ordering"] = to_json(ops.ordering);
  j["interior_count"] = ops.interior_count;
  j["r"] = to_json(ops.r);
  j["d"] = to_json(ops.d);
  j["q"] = to_json(ops.q);
  j["l"] = to_json(ops.l);
  j["l_boundary"] = to_json(ops.l_boundary);
  j["l_r"] = to_json(ops.l_r);
  j["l_r_norm"] = to_json(ops.l_r_norm);
  j["sym"] = to_json(ops.sym);
  j["l_d"] = to_json(ops.l_d);
  return j;
}

inline Json to_json(const BoundaryGraph& g) {
  Json j;
  j["n"] = g.size();
  j["boundary"] = to_json(g.boundary());
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace reflap

#endif  // REFLAP_IO_HPP
