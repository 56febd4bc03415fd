#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "omld/omld.hpp"

using namespace omld;

TEST_CASE("mo2 structure") {
  const Oml m2 = mo(2);
  REQUIRE(m2.size() == 6);
  CHECK(m2.bottom() == 0);
  CHECK(m2.top() == 5);
  CHECK(m2.has_names());
  CHECK(m2.name(0) == "0");
  CHECK(m2.name(1) == "a");
  CHECK(m2.name(2) == "b");
  CHECK(m2.name(3) == "a'");
  CHECK(m2.name(4) == "b'");
  CHECK(m2.name(5) == "1");

  CHECK(m2.ortho(1) == 3);
  CHECK(m2.ortho(4) == 2);
  CHECK(m2.meet(1, 2) == 0);
  CHECK(m2.join(1, 2) == 5);
  CHECK(m2.meet(1, 3) == 0);
  CHECK(m2.join(1, 3) == 5);
  CHECK(m2.meet(1, 5) == 1);
  CHECK(m2.join(1, 0) == 1);
  CHECK(m2.leq(0, 4));
  CHECK(m2.leq(4, 5));
  CHECK_FALSE(m2.leq(1, 2));
  CHECK_FALSE(m2.leq(1, 4));
}

TEST_CASE("boolean meet and join are the bit operations") {
  const Oml b3 = boolean_algebra(3);
  REQUIRE(b3.size() == 8);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      CHECK(b3.meet(a, b) == (a & b));
      CHECK(b3.join(a, b) == (a | b));
      CHECK(b3.leq(a, b) == ((a & ~b) == 0));
    }
  for (Elem a = 0; a < 8; ++a) CHECK(b3.ortho(a) == (~a & 7));
}

TEST_CASE("unnamed lattices label elements by index") {
  const Oml b2 = boolean_algebra(2);
  CHECK_FALSE(b2.has_names());
  CHECK(b2.name(3) == "e3");
}

namespace {

AxiomViolation expect_invalid(const RawLattice& raw) {
  try {
    validate(raw);
  } catch (const ValidationError& e) {
    return e.violation();
  }
  FAIL("expected a ValidationError");
  return {};
}

}  // namespace

TEST_CASE("validate reports the first violated axiom") {
  SECTION("antisymmetry failure is NotAPoset") {
    RawLattice raw(2);
    raw.relate(0, 1);
    raw.relate(1, 0);
    raw.ortho = {1, 0};
    const AxiomViolation v = expect_invalid(raw);
    CHECK(v.defect == OmlDefect::NotAPoset);
    CHECK(v.a == 0);
    CHECK(v.b == 1);
  }
  SECTION("missing meet is NotALattice") {
    // two minimal below two maximal elements, so {0,1} has no meet
    RawLattice raw(4);
    raw.relate(0, 2);
    raw.relate(0, 3);
    raw.relate(1, 2);
    raw.relate(1, 3);
    raw.ortho = {2, 3, 0, 1};
    const AxiomViolation v = expect_invalid(raw);
    CHECK(v.defect == OmlDefect::NotALattice);
    CHECK(v.a == 0);
    CHECK(v.b == 1);
  }
  SECTION("ortho must be an involution") {
    RawLattice raw(2);
    raw.relate(0, 1);
    raw.ortho = {1, 1};
    const AxiomViolation v = expect_invalid(raw);
    CHECK(v.defect == OmlDefect::OrthoNotInvolution);
    CHECK(v.a == 0);
  }
  SECTION("ortho must complement") {
    RawLattice raw(2);
    raw.relate(0, 1);
    raw.ortho = {0, 1};
    const AxiomViolation v = expect_invalid(raw);
    CHECK(v.defect == OmlDefect::OrthoNotComplement);
    CHECK(v.a == 0);
  }
  SECTION("ortho must be antitone") {
    // hexagon with the complementation paired across the two chains
    RawLattice raw = benzene();
    raw.ortho = {5, 3, 4, 1, 2, 0};
    const AxiomViolation v = expect_invalid(raw);
    CHECK(v.defect == OmlDefect::OrthoNotAntitone);
    CHECK(v.a == 1);
    CHECK(v.b == 2);
  }
  SECTION("the hexagon is an ortholattice but not orthomodular") {
    try {
      validate(benzene());
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.violation().defect == OmlDefect::NotOrthomodular);
      CHECK(e.violation().a == 1);
      CHECK(e.violation().b == 2);
      CHECK(std::string(e.what()) == "NotOrthomodular witness (a,b)");
    }
  }
  SECTION("malformed input is rejected before the axioms") {
    RawLattice raw(2);
    raw.relate(0, 1);
    raw.ortho = {1, 5};
    CHECK_THROWS_AS(validate(raw), std::invalid_argument);
    raw.ortho = {1, 0};
    raw.names = {"p", "p"};
    CHECK_THROWS_AS(validate(raw), std::invalid_argument);
  }
}

TEST_CASE("orthomodular law holds across the catalog") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b)
        if (L.leq(a, b)) REQUIRE(L.join(a, L.meet(b, L.ortho(a))) == b);
  }
}

TEST_CASE("commutation on mo2") {
  const Oml m2 = mo(2);
  CHECK(commutes(m2, 1, 3));        // complementary pair
  CHECK_FALSE(commutes(m2, 1, 2));  // atoms of different blocks
  CHECK_FALSE(commutes(m2, 1, 4));
  for (Elem a = 0; a < 6; ++a) {
    CHECK(commutes(m2, 0, a));
    CHECK(commutes(m2, a, 5));
    CHECK(commutes(m2, a, a));
  }
}

TEST_CASE("commutes shortcut matches the generated subalgebra definition") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b)
        REQUIRE(commutes(L, a, b) == commutes_by_generation(L, a, b));
  }
}

TEST_CASE("commutation is symmetric and characterized by the commutator") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        REQUIRE(commutes(L, a, b) == commutes(L, b, a));
        REQUIRE(commutator(L, a, b) == commutator(L, b, a));
        REQUIRE(commutes(L, a, b) == L.leq(a, commutator(L, a, b)));
      }
  }
}

TEST_CASE("perspectivity on mo2") {
  const Oml m2 = mo(2);
  REQUIRE(perspective(m2, 1, 2).has_value());
  CHECK(*perspective(m2, 1, 2) == 3);  // least common complement
  CHECK(*perspective(m2, 1, 1) == 2);
  CHECK(*perspective(m2, 0, 0) == 5);
  CHECK_FALSE(perspective(m2, 0, 1).has_value());
  CHECK_FALSE(perspective(m2, 1, 5).has_value());
}

TEST_CASE("perspectivity is symmetric") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b)
        REQUIRE(perspective(L, a, b).has_value() == perspective(L, b, a).has_value());
  }
}

TEST_CASE("generated subalgebras") {
  const Oml m2 = mo(2);
  CHECK(generated_subalgebra(m2, {1}) == std::vector<Elem>{0, 1, 3, 5});
  CHECK(generated_subalgebra(m2, {1, 2}) == std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(generated_subalgebra(m2, std::initializer_list<Elem>{}) == std::vector<Elem>{0, 5});

  const Oml b3 = boolean_algebra(3);
  CHECK(generated_subalgebra(b3, {1}) == std::vector<Elem>{0, 1, 6, 7});
}

TEST_CASE("six symmetric differences on a non-commuting atom pair") {
  const Oml m2 = mo(2);
  CHECK(sym_diff(m2, SymDiffKind::Nabla, 1, 2) == 0);
  CHECK(sym_diff(m2, SymDiffKind::Delta, 1, 2) == 5);
  CHECK(sym_diff(m2, SymDiffKind::PlusL, 1, 2) == 1);
  CHECK(sym_diff(m2, SymDiffKind::PlusR, 1, 2) == 2);
  CHECK(sym_diff(m2, SymDiffKind::PlusLp, 1, 2) == 3);
  CHECK(sym_diff(m2, SymDiffKind::PlusRp, 1, 2) == 4);
}

TEST_CASE("symmetric difference boundary values") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (SymDiffKind k : sym_diff_kinds)
      for (Elem a = 0; a < L.size(); ++a) {
        REQUIRE(sym_diff(L, k, a, a) == L.bottom());
        REQUIRE(sym_diff(L, k, a, L.bottom()) == a);
        REQUIRE(sym_diff(L, k, L.bottom(), a) == a);
        REQUIRE(sym_diff(L, k, a, L.top()) == L.ortho(a));
        REQUIRE(sym_diff(L, k, L.top(), a) == L.ortho(a));
      }
  }
}

TEST_CASE("the six differences collapse exactly on commuting pairs") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        std::set<Elem> values;
        for (SymDiffKind k : sym_diff_kinds) values.insert(sym_diff(L, k, a, b));
        if (commutes(L, a, b)) {
          REQUIRE(values.size() == 1);
        } else {
          REQUIRE(values.size() == 6);
        }
      }
  }
}

TEST_CASE("delta and nabla commute with both arguments, the left difference with its left one") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        const Elem d = sym_diff(L, SymDiffKind::Delta, a, b);
        const Elem n = sym_diff(L, SymDiffKind::Nabla, a, b);
        const Elem pl = sym_diff(L, SymDiffKind::PlusL, a, b);
        REQUIRE(commutes(L, d, a));
        REQUIRE(commutes(L, d, b));
        REQUIRE(commutes(L, n, a));
        REQUIRE(commutes(L, n, b));
        REQUIRE(commutes(L, pl, a));
      }
  }
}

TEST_CASE("the left difference fails to commute with its right argument on non-commuting pairs") {
  for (const auto& [name, L] : standard_catalog()) {
    INFO(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        const Elem pl = sym_diff(L, SymDiffKind::PlusL, a, b);
        REQUIRE(commutes(L, pl, b) == commutes(L, a, b));
      }
  }
}

TEST_CASE("distributivity across the catalog") {
  CHECK(is_distributive(boolean_algebra(0)));
  CHECK(is_distributive(boolean_algebra(4)));
  CHECK(is_distributive(mo(1)));
  CHECK_FALSE(is_distributive(mo(2)));
  CHECK_FALSE(is_distributive(mo(4)));
  CHECK_FALSE(is_distributive(product(boolean_algebra(2), mo(2))));
  CHECK_FALSE(is_distributive(make_free().lattice));
}

TEST_CASE("tables_equal compares operation tables only") {
  CHECK(tables_equal(mo(1), boolean_algebra(2)));  // same tables, different names
  CHECK(tables_equal(mo(2), mo(2)));
  CHECK_FALSE(tables_equal(mo(2), boolean_algebra(3)));
  CHECK_FALSE(tables_equal(boolean_algebra(2), boolean_algebra(3)));
}
