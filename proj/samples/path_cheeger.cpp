// Reflected spectrum and Cheeger bounds for a path whose endpoints are boundary.
#include <cstdio>
#include <cstdlib>

#include "reflap/reflap.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  const auto g = reflap::path_graph(n, reflap::BoundarySpec::endpoints());

  const auto rs = reflap::reflected_spectrum(g);
  std::printf("eigenvalues:");
  for (double x : rs.eigenvalues()) std::printf(" %.6f", x);
  std::printf("\n");

  const auto r = reflap::verify_theorem(g);
  std::printf("h_R = %lld/%lld, lambda_R = %.6f\n", static_cast<long long>(r.h_r_exact.num()),
              static_cast<long long>(r.h_r_exact.den()), r.lambda_r);
  std::printf("%.6f <= %.6f <= %.6f : %s\n", r.lower, r.h_r, r.upper, r.holds ? "ok" : "violated");
  return r.holds ? 0 : 1;
}
