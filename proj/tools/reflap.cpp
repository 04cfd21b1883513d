// reflap: command-line front end for reflected Neumann Laplacians on graphs
// with boundary.
//
//   reflap <subcommand> [-i FILE] [-o FILE] [--format text|json] [--tol REAL]
//          [--max-n INT] [--boundary none|endpoints|cols|rows|LIST]
//
// Exit status: 0 on success, 1 on a library error (one "error: <Code>: ..."
// line on stderr), 2 on a usage error. `verify` exits 0 only if the inequality
// holds.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reflap/reflap.hpp"

namespace {

using namespace reflap;

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  double tol = 0.0;  // 0: use the per-command default
  std::size_t max_n = kDefaultBruteForceCap;
  std::string boundary;
  std::string spectrum_kind = "reflected";
  std::vector<std::string> gen_args;
  std::string demo_name;
  std::size_t rows = 4;
  std::size_t cols = 6;
  unsigned workers = 1;
};

BoundarySpec parse_boundary(const std::string& text) {
  if (text.empty() || text == "none") return BoundarySpec::none();
  if (text == "endpoints") return BoundarySpec::endpoints();
  if (text == "cols") return BoundarySpec::columns();
  if (text == "rows") return BoundarySpec::rows();
  std::vector<Vertex> list;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) {
      throw Error(ErrorCode::InvalidSpec, "bad boundary list entry '" + item + "'");
    }
    list.push_back(static_cast<Vertex>(v));
  }
  return BoundarySpec::list(std::move(list));
}

std::size_t parse_size(const std::string& s) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 0) throw CLI::ValidationError("size", "expected a count, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

GraphSpec parse_graph_spec(const std::vector<std::string>& args) {
  if (args.empty()) throw CLI::ValidationError("gen", "missing graph kind");
  const std::string& kind = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count + 1)
      throw CLI::ValidationError("gen", kind + " takes " + std::to_string(count) + " size argument(s)");
  };
  if (kind == "path") { need(1); return PathSpec{parse_size(args[1])}; }
  if (kind == "cycle") { need(1); return CycleSpec{parse_size(args[1])}; }
  if (kind == "grid") { need(2); return GridSpec{parse_size(args[1]), parse_size(args[2])}; }
  if (kind == "barbell") { need(2); return BarbellSpec{parse_size(args[1]), parse_size(args[2])}; }
  throw CLI::ValidationError("gen", "unknown graph kind '" + kind + "'");
}

BoundaryGraph load_input(const Options& opt) {
  BoundaryGraph g;
  if (opt.input == "-") {
    g = parse_graph(std::cin);
  } else {
    std::ifstream in(opt.input);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + opt.input + "'");
    g = parse_graph(in);
  }
  if (opt.boundary.empty()) return g;
  const BoundarySpec spec = parse_boundary(opt.boundary);
  switch (spec.rule) {
    case BoundaryRule::none:
      return with_boundary(g, {});
    case BoundaryRule::explicit_list:
      return with_boundary(g, spec.vertices);
    default:
      throw Error(ErrorCode::InvalidSpec,
                  "--boundary on an input graph must be 'none' or an index list");
  }
}

void write_matrix_text(std::ostream& out, const std::string& name, const Matrix& m) {
  out << name << " (" << m.rows() << "x" << m.cols() << ")\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "  ") << format_double(m(i, j));
    out << '\n';
  }
}

void write_vector_text(std::ostream& out, const std::string& name, const Vector& v) {
  out << name;
  for (double x : v) out << ' ' << format_double(x);
  out << '\n';
}

void write_list_text(std::ostream& out, const std::string& name, const std::vector<Vertex>& v) {
  out << name;
  for (Vertex x : v) out << ' ' << x;
  out << '\n';
}

std::string fraction_text(const Fraction& f) {
  return std::to_string(f.num()) + "/" + std::to_string(f.den()) + " (" + format_double(f.value()) + ")";
}

void write_cut_text(std::ostream& out, const std::string& name, const CutResult& c) {
  write_list_text(out, name + ".subset", c.subset);
  out << name << ".cut_measure " << format_double(c.cut_measure.value()) << '\n'
      << name << ".vol_s " << format_double(c.vol_s.value()) << '\n'
      << name << ".vol_complement " << format_double(c.vol_complement.value()) << '\n'
      << name << ".ratio " << fraction_text(c.ratio) << '\n';
}

int run_command(const std::string& cmd, const Options& opt, std::ostream& out) {
  const bool json = opt.format == "json";

  if (cmd == "gen") {
    const BoundaryGraph g = generate(parse_graph_spec(opt.gen_args), parse_boundary(opt.boundary));
    if (json) {
      write_json(out, to_json(g));
      out << '\n';
    } else {
      std::string label = "generated:";
      for (const auto& a : opt.gen_args) label += " " + a;
      write_graph(out, g, {label});
    }
    return 0;
  }

  if (cmd == "demo") {
    if (opt.demo_name == "figure4") {
      const BoundarySpec b = opt.boundary.empty() ? BoundarySpec::columns() : parse_boundary(opt.boundary);
      const Figure4Data f = figure4(opt.rows, opt.cols, b);
      if (json) {
        Json j;
        j["rows"] = f.rows;
        j["cols"] = f.cols;
        j["boundary"] = to_json(f.graph.boundary());
        j["psi"] = to_json(f.psi);
        j["psi_r"] = to_json(f.psi_r);
        j["psi_cut"] = to_json(f.psi_cut.subset);
        j["psi_r_cut"] = to_json(f.psi_r_cut.subset);
        j["psi_axis"] = to_string(f.psi_axis);
        j["psi_r_axis"] = to_string(f.psi_r_axis);
        write_json(out, j);
        out << '\n';
      } else {
        write_figure4(out, f);
      }
      return 0;
    }
    if (opt.demo_name == "figure5") {
      const Figure5Data f = figure5();
      if (json) {
        Json j;
        j["clique_size"] = f.clique_size;
        j["bridge_len"] = f.bridge_len;
        j["boundary"] = to_json(f.graph.boundary());
        j["psi_r"] = to_json(f.psi_r);
        j["argmax"] = f.argmax;
        j["argmin"] = f.argmin;
        j["extremes_interior"] = f.extremes_interior;
        write_json(out, j);
        out << '\n';
      } else {
        write_figure5(out, f);
      }
      return 0;
    }
    throw CLI::ValidationError("demo", "expected figure4 or figure5");
  }

  const BoundaryGraph g = load_input(opt);

  if (cmd == "double") {
    const DoubledGraph dg = double_graph(g);
    if (json) {
      Json j = to_json(dg.graph);
      Json mirror = Json::array();
      for (auto [v, fv] : dg.mirror) mirror.push_back(Json::array({v, fv}));
      j["mirror"] = std::move(mirror);
      write_json(out, j);
      out << '\n';
    } else {
      write_doubled(out, dg);
    }
    return 0;
  }

  if (cmd == "ops") {
    const OperatorSet ops = assemble(g);
    if (json) {
      write_json(out, to_json(ops));
      out << '\n';
    } else {
      write_list_text(out, "ordering", ops.ordering);
      out << "interior_count " << ops.interior_count << '\n';
      write_vector_text(out, "d", ops.d);
      write_vector_text(out, "q", ops.q);
      write_matrix_text(out, "R", ops.r);
      write_matrix_text(out, "L", ops.l);
      write_matrix_text(out, "L_boundary", ops.l_boundary);
      write_matrix_text(out, "L_R", ops.l_r);
      write_matrix_text(out, "L_R_norm", ops.l_r_norm);
      write_matrix_text(out, "S", ops.sym);
      write_matrix_text(out, "L_D", ops.l_d);
    }
    return 0;
  }

  if (cmd == "spectrum") {
    const double tol = opt.tol > 0 ? opt.tol : kDefaultEigenTol;
    if (opt.spectrum_kind == "reflected") {
      const ReflectedSpectrum rs = reflected_spectrum(g, tol);
      if (json) {
        write_json(out, to_json(rs));
        out << '\n';
      } else {
        write_vector_text(out, "eigenvalues", rs.eigenvalues());
        write_vector_text(out, "residuals", rs.residuals);
        write_matrix_text(out, "eigenvectors (columns)", rs.eigenvectors);
        write_matrix_text(out, "sweep_vectors (columns)", rs.sweep_vectors);
      }
      return 0;
    }
    Spectrum sp;
    if (opt.spectrum_kind == "dirichlet") {
      sp = dirichlet_spectrum(g, tol);
    } else if (opt.spectrum_kind == "laplacian") {
      sp = sym_eig(laplacian_matrix(g), tol);
    } else {
      throw CLI::ValidationError("--kind", "expected reflected, dirichlet or laplacian");
    }
    if (json) {
      write_json(out, to_json(sp));
      out << '\n';
    } else {
      write_vector_text(out, "eigenvalues", sp.eigenvalues);
      write_vector_text(out, "residuals", sp.residuals);
      write_matrix_text(out, "eigenvectors (columns)", sp.eigenvectors);
    }
    return 0;
  }

  if (cmd == "parity") {
    const DoubledGraph dg = double_graph(g);
    const ParityReport p = parity_classify(dg, opt.tol > 0 ? opt.tol : kDefaultClusterGap);
    if (json) {
      write_json(out, to_json(p));
      out << '\n';
    } else {
      out << "even_count " << p.even_count << "\nodd_count " << p.odd_count << '\n';
      out << "# eigenvalue multiplicity even odd\n";
      for (const auto& c : p.clusters)
        out << format_double(c.eigenvalue) << ' ' << c.multiplicity << ' ' << c.even_dim << ' '
            << c.odd_dim << '\n';
    }
    return 0;
  }

  if (cmd == "cheeger") {
    const ExactCheeger ex = cheeger_exact(g, opt.max_n, opt.workers);
    if (json) {
      Json j;
      j["h_r"] = to_json(ex.h_r);
      j["cut"] = to_json(ex.cut);
      write_json(out, j);
      out << '\n';
    } else {
      out << "h_r " << fraction_text(ex.h_r) << '\n';
      write_cut_text(out, "cut", ex.cut);
    }
    return 0;
  }

  if (cmd == "sweep") {
    const ReflectedSpectrum rs = reflected_spectrum(g, opt.tol > 0 ? opt.tol : kDefaultEigenTol);
    const Vector psi = rs.sweep_vector(1);
    const CutResult c = sweep_cut(g, psi);
    if (json) {
      Json j;
      j["lambda_r"] = rs.lambda_r();
      j["sweep_vector"] = to_json(psi);
      j["cut"] = to_json(c);
      write_json(out, j);
      out << '\n';
    } else {
      out << "lambda_r " << format_double(rs.lambda_r()) << '\n';
      write_vector_text(out, "sweep_vector", psi);
      write_cut_text(out, "cut", c);
    }
    return 0;
  }

  if (cmd == "verify") {
    const CheegerReport r =
        verify_theorem(g, opt.max_n, opt.tol > 0 ? opt.tol : kDefaultEigenTol, opt.workers);
    if (json) {
      write_json(out, to_json(r));
      out << '\n';
    } else {
      out << "h_r " << fraction_text(r.h_r_exact) << '\n'
          << "lambda_r " << format_double(r.lambda_r) << '\n'
          << "upper " << format_double(r.upper) << '\n'
          << "lower " << format_double(r.lower) << '\n'
          << "holds " << (r.holds ? "true" : "false") << '\n'
          << "sweep_within_upper " << (r.sweep_within_upper ? "true" : "false") << '\n';
      write_list_text(out, "optimal_subset", r.optimal.subset);
      write_list_text(out, "sweep_subset", r.sweep.subset);
      out << "sweep_ratio " << fraction_text(r.sweep.ratio) << '\n';
    }
    return r.holds ? 0 : 1;
  }

  throw CLI::ValidationError("subcommand", "unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflected Neumann graph Laplacians and boundary Cheeger constants"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("-i,--input", opt.input, "graph file ('-' for stdin)");
    if (needs_input) in->required();
    sub->add_option("-o,--output", opt.output, "output file (default stdout)");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tol", opt.tol, "eigensolver tolerance or parity cluster gap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-n", opt.max_n, "brute-force vertex cap");
    sub->add_option("--boundary", opt.boundary, "none|endpoints|cols|rows|comma-separated list");
    sub->add_option("--workers", opt.workers, "threads for exact Cheeger enumeration");
  };

  auto* gen = app.add_subcommand("gen", "generate path N | cycle N | grid R C | barbell K L");
  add_common(gen, false);
  gen->add_option("spec", opt.gen_args, "graph kind and sizes")->required();

  for (const char* name : {"double", "ops", "parity", "cheeger", "sweep", "verify"})
    add_common(app.add_subcommand(name), true);
  app.get_subcommand("double")->description("doubled graph with mirror map");
  app.get_subcommand("ops")->description("dump every assembled operator");
  app.get_subcommand("parity")->description("even/odd eigenvector dimensions of the doubled graph");
  app.get_subcommand("cheeger")->description("exact boundary Cheeger constant");
  app.get_subcommand("sweep")->description("sweep cut of the lambda_R eigenvector");
  app.get_subcommand("verify")->description("check sqrt(2 lambda_R) >= h_R >= lambda_R / 2");

  auto* spectrum = app.add_subcommand("spectrum", "eigendecomposition");
  add_common(spectrum, true);
  spectrum->add_option("--kind", opt.spectrum_kind, "reflected|dirichlet|laplacian")
      ->check(CLI::IsMember({"reflected", "dirichlet", "laplacian"}));

  auto* demo = app.add_subcommand("demo", "plot data: figure4 (grid cuts) or figure5 (barbell)");
  add_common(demo, false);
  demo->add_option("name", opt.demo_name)->required()->check(CLI::IsMember({"figure4", "figure5"}));
  demo->add_option("--rows", opt.rows, "figure4 grid rows")->check(CLI::PositiveNumber);
  demo->add_option("--cols", opt.cols, "figure4 grid columns")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    std::ostringstream buffer;
    const int status = run_command(cmd, opt, buffer);
    if (opt.output.empty() || opt.output == "-") {
      std::cout << buffer.str();
    } else {
      std::ofstream file(opt.output);
      if (!file) {
        std::cerr << "error: ParseError: cannot write '" << opt.output << "'\n";
        return 1;
      }
      file << buffer.str();
    }
    return status;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
}
