#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "reflap/spectra.hpp"
#include "support/oracles.hpp"

namespace reflap {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_values(const Vector& got, const Vector& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], tol) << "index " << k;
}

void expect_well_formed(const Spectrum& s, const Matrix& m) {
  const std::size_t n = s.size();
  for (std::size_t k = 1; k < n; ++k) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
  const Matrix gram = s.eigenvectors.transpose() * s.eigenvectors;
  EXPECT_LE(max_abs_diff(gram, Matrix::identity(n)), 1e-10);
  for (std::size_t k = 0; k < n; ++k)
    EXPECT_LE(s.residuals[k], 1e-8 * (1.0 + std::abs(s.eigenvalues[k])));
  const Matrix recon = s.eigenvectors * Matrix::diagonal(s.eigenvalues) * s.eigenvectors.transpose();
  EXPECT_LE(frobenius_norm(recon - m), 1e-8 * std::max(frobenius_norm(m), 1e-300) + 1e-300);
}

TEST(SymEig, TwoByTwo) {
  const Matrix m{{2, -1}, {-1, 2}};
  const Spectrum s = sym_eig(m);
  expect_values(s.eigenvalues, {1, 3}, 1e-14);
  expect_well_formed(s, m);
  // Sign convention: first nonzero component positive.
  EXPECT_GT(s.eigenvectors(0, 0), 0);
  EXPECT_GT(s.eigenvectors(0, 1), 0);
}

TEST(SymEig, ZeroMatrix) {
  const Spectrum s = sym_eig(Matrix(4, 4));
  expect_values(s.eigenvalues, Vector(4, 0.0), 0.0);
  EXPECT_EQ(s.eigenvectors, Matrix::identity(4));
}

TEST(SymEig, CycleSixLaplacian) {
  const Matrix l = laplacian_matrix(cycle_graph(6));
  // Oracle: 2 - 2cos(2 pi k / 6), k = 0..5, sorted.
  Vector want;
  for (int k = 0; k < 6; ++k) want.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * k / 6.0));
  std::sort(want.begin(), want.end());
  const Spectrum s = sym_eig(l);
  expect_values(s.eigenvalues, want, 1e-12);
  expect_values(s.eigenvalues, {0, 1, 1, 3, 3, 4}, 1e-12);
  expect_well_formed(s, l);
}

TEST(SymEig, RandomSymmetricReconstruction) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> nd;
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = nd(rng);
    expect_well_formed(sym_eig(m), m);
  }
}

TEST(SymEig, Deterministic) {
  const Matrix l = laplacian_matrix(grid_graph(3, 4));
  const Spectrum a = sym_eig(l), b = sym_eig(l);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(SymEig, Errors) {
  try {
    sym_eig(Matrix{{1, 2}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
  EXPECT_THROW(sym_eig(Matrix(2, 3)), Error);
  EXPECT_THROW(sym_eig(Matrix::identity(2), 0.0), Error);
}

TEST(ReflectedSpectrum, PathFour) {
  const ReflectedSpectrum rs = reflected_spectrum(path_graph(4, BoundarySpec::endpoints()));
  expect_values(rs.eigenvalues(), {0, 0.5, 1.5, 2}, 1e-12);
  EXPECT_NEAR(rs.lambda_r(), 0.5, 1e-12);
  for (double r : rs.residuals) EXPECT_LE(r, 1e-10);
}

TEST(ReflectedSpectrum, CycleSixNoBoundary) {
  const ReflectedSpectrum rs = reflected_spectrum(cycle_graph(6));
  expect_values(rs.eigenvalues(), {0, 0.5, 0.5, 1.5, 1.5, 2}, 1e-12);
}

TEST(ReflectedSpectrum, CompleteThree) {
  const auto k3 = new_boundary_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {});
  expect_values(reflected_spectrum(k3).eigenvalues(), {0, 1.5, 1.5}, 1e-12);
}

TEST(ReflectedSpectrum, ZeroModeAndSweepOrthogonality) {
  for (std::size_t i = 0; i < 40; ++i) {
    const auto g = testing::suite_graph(11, i, 10);
    const OperatorSet ops = assemble(g);
    const ReflectedSpectrum rs = reflected_spectrum(ops);
    EXPECT_NEAR(rs.eigenvalues()[0], 0.0, 1e-10);
    // Sweep vector of the zero mode is constant.
    const Vector g0 = rs.sweep_vector(0);
    for (double x : g0) EXPECT_NEAR(x, g0[0], 1e-10);
    // Nonzero modes are DQ-orthogonal to the constants.
    for (std::size_t k = 1; k < g.size(); ++k) {
      if (rs.eigenvalues()[k] < 1e-8) continue;
      double s = 0.0;
      for (std::size_t b = 0; b < g.size(); ++b)
        s += rs.sweep_vectors(ops.ordering[b], k) * ops.d[b] * ops.q[b];
      EXPECT_NEAR(s, 0.0, 1e-10);
    }
    for (std::size_t k = 0; k < g.size(); ++k)
      EXPECT_LE(rs.residuals[k], 1e-8 * (1.0 + rs.eigenvalues()[k]));
  }
}

TEST(ReflectedSpectrum, IsolatedVertexRejected) {
  EXPECT_THROW(reflected_spectrum(new_boundary_graph(2, {}, {})), Error);
}

TEST(DirichletSpectrum, PathClosedForms) {
  expect_values(dirichlet_spectrum(path_graph(4, BoundarySpec::endpoints())).eigenvalues, {1, 3}, 1e-12);
  expect_values(dirichlet_spectrum(path_graph(5, BoundarySpec::endpoints())).eigenvalues,
                {2 - std::sqrt(2.0), 2, 2 + std::sqrt(2.0)}, 1e-12);
  const auto star = new_boundary_graph(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 3});
  expect_values(dirichlet_spectrum(star).eigenvalues, {3}, 0.0);
}

TEST(PathClosedForm, Values) {
  const auto n4 = path_closed_form(4, PathKind::neumann);
  ASSERT_EQ(n4.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(n4[k].eigenvalue, (Vector{0, 1, 3, 4})[k], 1e-15);
  expect_values(n4[1].profile, {1, 0.5, -0.5, -1}, 1e-15);

  const auto d4 = path_closed_form(4, PathKind::dirichlet);
  ASSERT_EQ(d4.size(), 2u);
  EXPECT_NEAR(d4[0].eigenvalue, 1.0, 1e-15);
  EXPECT_NEAR(d4[1].eigenvalue, 3.0, 1e-15);
  expect_values(d4[0].profile, {std::sin(kPi / 3), std::sin(2 * kPi / 3)}, 1e-15);

  const auto n3 = path_closed_form(3, PathKind::neumann);
  EXPECT_NEAR(n3[0].eigenvalue, 0.0, 1e-15);
  EXPECT_NEAR(n3[1].eigenvalue, 2.0, 1e-15);
  EXPECT_NEAR(n3[2].eigenvalue, 4.0, 1e-15);

  EXPECT_THROW(path_closed_form(2, PathKind::neumann), Error);
}

TEST(Parity, PathFour) {
  const ParityReport p = parity_classify(double_graph(path_graph(4, BoundarySpec::endpoints())));
  EXPECT_EQ(p.even_count, 4u);
  EXPECT_EQ(p.odd_count, 2u);
}

TEST(Parity, AllBoundary) {
  const auto g = with_boundary(cycle_graph(5), std::vector<Vertex>{0, 1, 2, 3, 4});
  const ParityReport p = parity_classify(double_graph(g));
  EXPECT_EQ(p.even_count, 5u);
  EXPECT_EQ(p.odd_count, 0u);
}

TEST(Parity, PathFiveOddModesAreDirichlet) {
  const auto p5 = path_graph(5, BoundarySpec::endpoints());
  const ParityReport p = parity_classify(double_graph(p5));
  EXPECT_EQ(p.even_count, 5u);
  EXPECT_EQ(p.odd_count, 3u);
  Vector odd;
  for (const auto& v : p.odd_vectors) odd.push_back(v.eigenvalue);
  std::sort(odd.begin(), odd.end());
  expect_values(odd, dirichlet_spectrum(p5).eigenvalues, 1e-10);
  // C8 has degenerate pairs; each such cluster splits one even, one odd.
  for (const auto& c : p.clusters)
    if (c.multiplicity == 2) {
      EXPECT_EQ(c.even_dim, 1u);
      EXPECT_EQ(c.odd_dim, 1u);
    }
}

TEST(Parity, TolBelowResidualFloorIsAmbiguous) {
  try {
    parity_classify(double_graph(path_graph(5, BoundarySpec::endpoints())), 1e-30);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClusteringAmbiguous);
  }
}

TEST(Parity, RestrictionsSolveReducedProblems) {
  for (std::size_t i = 0; i < 30; ++i) {
    const auto g = testing::suite_graph(23, i, 9);
    const DoubledGraph dg = double_graph(g);
    const ParityReport p = parity_classify(dg);
    ASSERT_EQ(p.even_count, g.size());
    ASSERT_EQ(p.odd_count, g.interior().size());
    const OperatorSet ops = assemble(g, Normalize::no);
    const Matrix l_r = to_vertex_order(ops.l_r, ops.ordering);
    for (const auto& ev : p.even_vectors) {
      const Vector u = restrict_to_original(dg, ev.vector);
      const Vector lu = l_r * u;
      for (std::size_t k = 0; k < u.size(); ++k) EXPECT_NEAR(lu[k], ev.eigenvalue * u[k], 1e-8);
    }
    if (g.interior().empty()) continue;
    const Matrix l_d = dirichlet_laplacian(g);
    for (const auto& ov : p.odd_vectors) {
      const Vector u = restrict_to_interior(dg, ov.vector);
      const Vector lu = l_d * u;
      for (std::size_t k = 0; k < u.size(); ++k) EXPECT_NEAR(lu[k], ov.eigenvalue * u[k], 1e-8);
    }
  }
}

}  // namespace
}  // namespace reflap
