#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "omld/catalog.hpp"
#include "omld/check.hpp"
#include "omld/free_oml.hpp"
#include "omld/lattice.hpp"

using namespace omld;

TEST_CASE("the mo2 coordinate behaves like the height-two non-Boolean algebra") {
  for (Mo2Part p : mo2_parts) {
    CHECK(mo2_leq(Mo2Part::Zero, p));
    CHECK(mo2_leq(p, Mo2Part::One));
    CHECK(mo2_ortho(mo2_ortho(p)) == p);
    CHECK(mo2_meet(p, mo2_ortho(p)) == Mo2Part::Zero);
    CHECK(mo2_join(p, mo2_ortho(p)) == Mo2Part::One);
    for (Mo2Part q : mo2_parts) {
      CHECK(mo2_meet(p, q) == mo2_meet(q, p));
      CHECK(mo2_join(p, q) == mo2_join(q, p));
      CHECK(mo2_leq(p, q) == (mo2_meet(p, q) == p));
    }
  }
  // distinct atoms only meet at the bottom
  CHECK(mo2_meet(Mo2Part::X, Mo2Part::Y) == Mo2Part::Zero);
  CHECK(mo2_join(Mo2Part::X, Mo2Part::Yp) == Mo2Part::One);
  CHECK_FALSE(mo2_leq(Mo2Part::X, Mo2Part::Xp));

  CHECK(mo2_part_name(Mo2Part::Zero) == "0");
  CHECK(mo2_part_name(Mo2Part::Xp) == "x'");
  CHECK(mo2_part_name(Mo2Part::One) == "1");
}

TEST_CASE("coordinate indices pack mask and part reversibly") {
  for (int i = 0; i < 96; ++i) {
    const NavaraElement e = nav_element(i);
    CHECK(e.bool_mask < 16);
    CHECK(nav_index(e) == i);
  }
  CHECK(nav_index({0b0110, Mo2Part::Zero}) == 36);
  CHECK(nav_element(41) == NavaraElement{0b0110, Mo2Part::One});
}

TEST_CASE("the free algebra on two generators has 96 elements") {
  const FreeOml f = make_free();
  CHECK(f.lattice.size() == 96);
  CHECK_FALSE(f.lattice.has_names());
  CHECK(f.x == 19);
  CHECK(f.y == 32);
  CHECK(nav_element(f.x) == NavaraElement{0b0011, Mo2Part::X});
  CHECK(nav_element(f.y) == NavaraElement{0b0101, Mo2Part::Y});
  CHECK_FALSE(commutes(f.lattice, f.x, f.y));

  // landmark values of the generator pair
  CHECK(f.lattice.meet(f.x, f.y) == 6);
  CHECK(f.lattice.join(f.x, f.y) == 47);
  CHECK(f.lattice.ortho(f.x) == 75);
  CHECK(commutator(f.lattice, f.x, f.y) == 90);
  CHECK(nav_element(90) == NavaraElement{0b1111, Mo2Part::Zero});
}

TEST_CASE("the free algebra is the product of sixteen Boolean elements with mo2") {
  const FreeOml f = make_free();
  const Oml prod = product(boolean_algebra(4), mo(2));
  CHECK(tables_equal(f.lattice, prod));
}

TEST_CASE("the tabulated operations match the coordinate arithmetic") {
  const FreeOml f = make_free();
  const Oml& L = f.lattice;
  for (int i = 0; i < 96; ++i) {
    const NavaraElement a = nav_element(i);
    CHECK(L.ortho(i) == nav_index(nav_ortho(a)));
    for (int j = 0; j < 96; ++j) {
      const NavaraElement b = nav_element(j);
      CHECK(L.leq(i, j) == nav_leq(a, b));
      CHECK(L.meet(i, j) == nav_index(nav_meet(a, b)));
      CHECK(L.join(i, j) == nav_index(nav_join(a, b)));
    }
  }
}

TEST_CASE("forgetting the mo2 part is a homomorphism onto the Boolean factor") {
  for (int i = 0; i < 96; ++i) {
    const NavaraElement a = nav_element(i);
    CHECK(phi(nav_ortho(a)) == (~phi(a) & 15));
    for (int j = 0; j < 96; ++j) {
      const NavaraElement b = nav_element(j);
      CHECK(phi(nav_meet(a, b)) == (phi(a) & phi(b)));
      CHECK(phi(nav_join(a, b)) == (phi(a) | phi(b)));
    }
  }
}

TEST_CASE("the six differences of the generators fill one fiber") {
  const FreeOml f = make_free();
  const std::vector<NavaraElement> fiber = preimage_sym_diff();
  REQUIRE(fiber.size() == 6);

  std::vector<Elem> fiber_idx;
  for (const NavaraElement& e : fiber) {
    CHECK(e.bool_mask == sym_diff_bool_mask);
    fiber_idx.push_back(nav_index(e));
  }
  CHECK(fiber_idx == std::vector<Elem>{36, 37, 38, 39, 40, 41});

  // every kind lands on its own fiber element, so all six values differ
  std::set<Elem> seen;
  for (SymDiffKind k : sym_diff_kinds) {
    const Elem v = sym_diff(f.lattice, k, f.x, f.y);
    CHECK(v == nav_index({sym_diff_bool_mask, sym_diff_part(k)}));
    seen.insert(v);
  }
  CHECK(seen == std::set<Elem>(fiber_idx.begin(), fiber_idx.end()));

  CHECK(sym_diff_part(SymDiffKind::Nabla) == Mo2Part::Zero);
  CHECK(sym_diff_part(SymDiffKind::Delta) == Mo2Part::One);
  CHECK(sym_diff_part(SymDiffKind::PlusL) == Mo2Part::X);
  CHECK(sym_diff_part(SymDiffKind::PlusR) == Mo2Part::Y);
  CHECK(sym_diff_part(SymDiffKind::PlusLp) == Mo2Part::Xp);
  CHECK(sym_diff_part(SymDiffKind::PlusRp) == Mo2Part::Yp);
}

TEST_CASE("the fiber over the Boolean difference is an mo2 copy inside the free algebra") {
  const FreeOml f = make_free();
  const auto idx = [](Mo2Part p) { return nav_index({sym_diff_bool_mask, p}); };
  for (Mo2Part p : mo2_parts)
    for (Mo2Part q : mo2_parts) {
      CHECK(f.lattice.meet(idx(p), idx(q)) == idx(mo2_meet(p, q)));
      CHECK(f.lattice.join(idx(p), idx(q)) == idx(mo2_join(p, q)));
    }
}

TEST_CASE("every element is a polynomial in the two generators") {
  const FreeOml f = make_free();
  const Assignment env = {{"x", f.x}, {"y", f.y}};
  for (int i = 0; i < 96; ++i) {
    INFO("element " << i);
    CHECK(eval(f.lattice, to_term(nav_element(i)), env) == i);
  }

  const std::vector<Elem> gen = generated_subalgebra(f.lattice, {f.x, f.y});
  CHECK(gen.size() == 96);
}
