// Sweep cut of a grid with and without a column boundary.
#include <iostream>

#include "reflap/reflap.hpp"

int main() {
  const auto d = reflap::figure4();
  std::cout << "no boundary:     " << reflap::to_string(d.psi_axis) << " cut, ratio "
            << d.psi_cut.ratio.value() << "\n";
  std::cout << "column boundary: " << reflap::to_string(d.psi_r_axis) << " cut, ratio "
            << d.psi_r_cut.ratio.value() << "\n";
}
