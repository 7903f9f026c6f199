// Prints W_T(d) for every topology with up to three edges, then the kernel
// obtained with every coefficient set to 1.

#include <iostream>

#include "dimerk/dimerk.hpp"

namespace {

void print_laurent(const dimerk::LaurentPoly& p) {
  if (p.is_zero()) {
    std::cout << "0";
    return;
  }
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) std::cout << " + ";
    std::cout << "(" << dimerk::to_string(c) << ")/d^" << -e;
    first = false;
  }
}

}  // namespace

int main() {
  dimerk::EmbeddingCounter counter;
  for (int n = 1; n <= 3; ++n) {
    const auto catalog = dimerk::enumerate_topologies(n);
    dimerk::PsiTable ones;
    for (const auto& t : catalog.entries) {
      ones.values[t.hash] = 1;
      std::cout << "n=" << n << "  " << t.code << "  W = ";
      print_laurent(dimerk::weighted_sum(t, counter));
      std::cout << '\n';
    }
    const auto kernel = dimerk::assemble_kernel(catalog, ones, counter);
    std::cout << "n=" << n << "  kernel with psi = 1: ";
    print_laurent(kernel.value);
    std::cout << (kernel.form.passes_form ? "  (form ok)" : "  (form FAILS)") << "\n\n";
  }
}
