#ifndef REFLAP_SPECTRA_HPP
#define REFLAP_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "reflap/error.hpp"
#include "reflap/graph.hpp"
#include "reflap/matrix.hpp"
#include "reflap/operators.hpp"

namespace reflap {

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kDefaultClusterGap = 1e-8;

/// Eigenpairs of a symmetric matrix. Column k of `eigenvectors` belongs to
/// eigenvalues[k]; values ascend and each vector has unit norm with its first
/// nonzero entry positive.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
  Vector residuals;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  Vector eigenvector(std::size_t k) const { return eigenvectors.column(k); }
};

namespace detail {

inline void check_symmetric(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  double scale = 0.0;
  for (double x : m.data()) scale = std::max(scale, std::abs(x));
  const double bound = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > bound) {
        throw Error(ErrorCode::NotSymmetric, "entries (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") differ from transpose");
      }
}

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

/// Makes the first entry with magnitude above 1e-12 positive.
inline void fix_sign(std::span<double> x) {
  for (double v : x) {
    if (std::abs(v) > 1e-12) {
      if (v < 0) std::transform(x.begin(), x.end(), x.begin(), [](double t) { return -t; });
      return;
    }
  }
}

inline double residual_norm(const Matrix& m, std::span<const double> x, double lambda) {
  const Vector mx = m * x;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (mx[i] - lambda * x[i]) * (mx[i] - lambda * x[i]);
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi eigendecomposition of a dense symmetric matrix.
/// Stops once the off-diagonal Frobenius norm drops to tol * ||m||_F.
inline Spectrum sym_eig(const Matrix& m, double tol = kDefaultEigenTol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidSpec, "eigen tolerance must be positive");
  detail::check_symmetric(m);
  const std::size_t n = m.rows();

  Matrix a = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::identity(n);
  const double target = tol * frobenius_norm(a);

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::hypot(1.0, theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = a(p, k) = akp - s * (akq + akp * tau);
          a(k, q) = a(q, k) = akq + s * (akp - akq * tau);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + vkp * tau);
          v(k, q) = vkq + s * (vkp - vkq * tau);
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum out{Vector(n), Matrix(n, n), Vector(n)};
  Vector col(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(idx[k], idx[k]);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, idx[k]);
    const double nrm = norm2(col);
    for (double& x : col) x /= nrm;
    detail::fix_sign(col);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = col[i];
    out.residuals[k] = detail::residual_norm(m, col, out.eigenvalues[k]);
  }
  return out;
}

/// Half-open index ranges [first, last) of eigenvalues whose consecutive gaps
/// are all <= gap.
inline std::vector<std::pair<std::size_t, std::size_t>> eigenvalue_clusters(const Vector& values,
                                                                            double gap) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= values.size(); ++k) {
    if (k == values.size() || values[k] - values[k - 1] > gap) {
      out.emplace_back(start, k);
      start = k;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reflected and Dirichlet spectra

/// Spectrum of the normalized reflected Laplacian, obtained from the symmetric
/// form. All vectors are indexed by graph vertex.
struct ReflectedSpectrum {
  /// Eigenpairs of the symmetric form, in block order (interior, boundary).
  Spectrum symmetric;
  std::vector<Vertex> ordering;
  /// Column k: Q^{-1/2} y_k, an eigenvector of D^{-1/2} L_R D^{-1/2}.
  Matrix eigenvectors;
  /// Column k: (DQ)^{-1/2} y_k; orthogonal to DQ 1 for nonzero eigenvalues.
  Matrix sweep_vectors;
  /// ||L_R_norm x - lambda x|| / ||x|| per eigenvector column.
  Vector residuals;

  const Vector& eigenvalues() const noexcept { return symmetric.eigenvalues; }

  /// First nontrivial eigenvalue.
  double lambda_r() const {
    if (symmetric.size() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
    return symmetric.eigenvalues[1];
  }
  Vector eigenvector(std::size_t k) const { return eigenvectors.column(k); }
  Vector sweep_vector(std::size_t k) const { return sweep_vectors.column(k); }
};

inline ReflectedSpectrum reflected_spectrum(const OperatorSet& ops,
                                            double tol = kDefaultEigenTol) {
  if (ops.sym.empty() && !ops.ordering.empty()) {
    throw Error(ErrorCode::IsolatedVertex, "operator set was assembled without normalization");
  }
  const std::size_t n = ops.ordering.size();
  ReflectedSpectrum rs;
  rs.symmetric = sym_eig(ops.sym, tol);
  rs.ordering = ops.ordering;
  rs.eigenvectors = Matrix(n, n);
  rs.sweep_vectors = Matrix(n, n);
  rs.residuals = Vector(n);

  Vector x(n), g(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double y = rs.symmetric.eigenvectors(i, k);
      x[i] = y / std::sqrt(ops.q[i]);
      g[i] = y / std::sqrt(ops.d[i] * ops.q[i]);
    }
    rs.residuals[k] =
        detail::residual_norm(ops.l_r_norm, x, rs.symmetric.eigenvalues[k]) / norm2(x);
    for (std::size_t i = 0; i < n; ++i) {
      rs.eigenvectors(ops.ordering[i], k) = x[i];
      rs.sweep_vectors(ops.ordering[i], k) = g[i];
    }
  }
  return rs;
}

inline ReflectedSpectrum reflected_spectrum(const BoundaryGraph& g,
                                            double tol = kDefaultEigenTol) {
  return reflected_spectrum(assemble(g), tol);
}

/// Spectrum of the Dirichlet Laplacian; vectors indexed by interior rank.
inline Spectrum dirichlet_spectrum(const BoundaryGraph& g, double tol = kDefaultEigenTol) {
  return sym_eig(dirichlet_laplacian(g), tol);
}

// ---------------------------------------------------------------------------
// Path closed forms

enum class PathKind { dirichlet, neumann };

struct ClosedFormPair {
  std::size_t k;
  double eigenvalue;  // 2(1 - cos(pi k / (n - 1)))
  Vector profile;     // sin (dirichlet, j = 1..n-2) or cos (neumann, j = 0..n-1), unnormalized
};

inline std::vector<ClosedFormPair> path_closed_form(std::size_t n, PathKind kind) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "closed forms need n >= 3");
  const double h = std::numbers::pi / static_cast<double>(n - 1);
  std::vector<ClosedFormPair> out;
  if (kind == PathKind::dirichlet) {
    for (std::size_t k = 1; k <= n - 2; ++k) {
      ClosedFormPair p{k, 2.0 * (1.0 - std::cos(h * k)), Vector(n - 2)};
      for (std::size_t j = 1; j <= n - 2; ++j) p.profile[j - 1] = std::sin(h * j * k);
      out.push_back(std::move(p));
    }
  } else {
    for (std::size_t k = 0; k <= n - 1; ++k) {
      ClosedFormPair p{k, 2.0 * (1.0 - std::cos(h * k)), Vector(n)};
      for (std::size_t j = 0; j <= n - 1; ++j) p.profile[j] = std::cos(h * j * k);
      out.push_back(std::move(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parity of doubled-graph eigenvectors

struct ParityCluster {
  double eigenvalue;  // mean of the cluster
  std::size_t multiplicity;
  std::size_t even_dim;
  std::size_t odd_dim;
};

/// Eigenvector of L' with definite parity under the reflection, indexed by
/// doubled-graph vertex.
struct ParityVector {
  double eigenvalue;
  Vector vector;
};

struct ParityReport {
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  std::vector<ParityCluster> clusters;
  std::vector<ParityVector> even_vectors;
  std::vector<ParityVector> odd_vectors;
};

/// Classifies the eigenspaces of the doubled graph's Laplacian into even and
/// odd parts by diagonalizing the reflection inside each eigenvalue cluster.
inline ParityReport parity_classify(const DoubledGraph& dg, double tol = kDefaultClusterGap) {
  const BoundaryGraph& gp = dg.graph;
  const std::size_t n = gp.size();
  const Matrix lap = laplacian_matrix(gp);
  const std::vector<Vertex> p = dg.reflection();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lap(p[i], p[j]) != lap(i, j)) {
        throw Error(ErrorCode::InvariantViolation, "reflection does not commute with L'");
      }

  const Spectrum sp = sym_eig(lap);
  const double floor = n == 0 ? 0.0 : *std::max_element(sp.residuals.begin(), sp.residuals.end());
  if (tol <= floor) {
    throw Error(ErrorCode::ClusteringAmbiguous,
                "cluster gap " + std::to_string(tol) + " is below the residual floor " +
                    std::to_string(floor));
  }

  ParityReport report;
  for (auto [first, last] : eigenvalue_clusters(sp.eigenvalues, tol)) {
    const std::size_t m = last - first;
    // Reflection restricted to the cluster's eigenspace, in its eigenbasis.
    Matrix restricted(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          s += sp.eigenvectors(k, first + a) * sp.eigenvectors(p[k], first + b);
        restricted(a, b) = s;
      }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        restricted(a, b) = restricted(b, a) = 0.5 * (restricted(a, b) + restricted(b, a));

    const Spectrum local = sym_eig(restricted);
    double mean = 0.0;
    for (std::size_t k = first; k < last; ++k) mean += sp.eigenvalues[k];
    mean /= static_cast<double>(m);

    ParityCluster cluster{mean, m, 0, 0};
    for (std::size_t c = 0; c < m; ++c) {
      const double sign = local.eigenvalues[c];
      if (std::abs(std::abs(sign) - 1.0) > 1e-6) {
        throw Error(ErrorCode::ClusteringAmbiguous,
                    "reflection eigenvalue " + std::to_string(sign) + " near lambda " +
                        std::to_string(mean) + " is not +-1");
      }
      Vector x(n, 0.0);
      for (std::size_t a = 0; a < m; ++a) {
        const double w = local.eigenvectors(a, c);
        for (std::size_t k = 0; k < n; ++k) x[k] += w * sp.eigenvectors(k, first + a);
      }
      detail::fix_sign(x);
      const double rayleigh = dot(x, lap * x) / dot(x, x);
      if (sign > 0) {
        ++cluster.even_dim;
        report.even_vectors.push_back({rayleigh, std::move(x)});
      } else {
        ++cluster.odd_dim;
        report.odd_vectors.push_back({rayleigh, std::move(x)});
      }
    }
    report.even_count += cluster.even_dim;
    report.odd_count += cluster.odd_dim;
    report.clusters.push_back(cluster);
  }
  return report;
}

/// Entries of a doubled-graph vector on the original vertices.
inline Vector restrict_to_original(const DoubledGraph& dg, const Vector& x) {
  return Vector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dg.original_size));
}

/// Entries on the original interior vertices, ascending (the Dirichlet index order).
inline Vector restrict_to_interior(const DoubledGraph& dg, const Vector& x) {
  Vector out;
  out.reserve(dg.mirror.size());
  for (auto [v, fv] : dg.mirror) out.push_back(x[v]);
  return out;
}

}  // namespace reflap

#endif  // REFLAP_SPECTRA_HPP
