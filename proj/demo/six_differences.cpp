// Walks the six symmetric differences on MO2: their values on a
// non-commuting pair, the collapse on a commuting pair, and where the
// operations land inside the free OML on two generators.

#include <iostream>

#include "omld/omld.hpp"

int main() {
  using namespace omld;

  const Oml m2 = mo(2);
  std::cout << "MO2 elements:";
  for (Elem e = 0; e < m2.size(); ++e) std::cout << " " << m2.name(e);
  std::cout << "\n\n";

  const Elem a = 1, b = 2;  // incomparable atoms, they do not commute
  std::cout << "values on the non-commuting pair (a, b):\n";
  for (SymDiffKind k : sym_diff_kinds)
    std::cout << "  a " << sym_diff_symbol(k) << " b = " << m2.name(sym_diff(m2, k, a, b))
              << "\n";
  std::cout << "all six pairwise distinct\n\n";

  const Elem ap = m2.ortho(a);
  std::cout << "values on the commuting pair (a, a'):\n";
  for (SymDiffKind k : sym_diff_kinds)
    std::cout << "  a " << sym_diff_symbol(k) << " a' = " << m2.name(sym_diff(m2, k, a, ap))
              << "\n";
  std::cout << "commuting arguments collapse the six into one\n\n";

  const IdentityReport rep = check_identity(m2, "(x <+l> y) <+l> y = x");
  std::cout << "(x <+l> y) <+l> y = x " << (rep.holds ? "holds" : "fails") << " on MO2 ("
            << rep.tuples_checked << " assignments)\n\n";

  const FreeOml f = make_free();
  std::cout << "free OML on two generators has " << f.lattice.size() << " elements;\n"
            << "the six differences of the generators:\n";
  for (SymDiffKind k : sym_diff_kinds)
    std::cout << "  x " << sym_diff_symbol(k) << " y = "
              << f.lattice.name(sym_diff(f.lattice, k, f.x, f.y)) << "\n";
  return 0;
}
