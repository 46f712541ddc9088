// Splits the 2875 lines on a quintic threefold over each degeneration into a
// degree-k and a degree-(5-k) hypersurface.

#include <iostream>

#include "linedegen/linedegen.hpp"

int main() {
  using namespace linedegen;
  const unsigned n = 4;
  const unsigned d = 5;
  std::cout << "lines on a generic quintic threefold: " << integrate(total_class(n, d)) << '\n';
  for (unsigned k = d - 1; k >= 3; --k) {
    const DegenerationReport r = report(n, d, k);
    std::cout << "K of degree " << k << ": " << r.counts->k_lines << " + " << r.counts->l_lines << " = "
              << r.counts->total << (r.sum_matches ? "" : "  (mismatch)") << '\n';
  }
  const WitnessReport w = witness_report(WitnessProblem(n, d, 4));
  std::cout << "explicit witness passes: " << std::boolalpha << w.all_pass() << '\n';
}
