#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "omld/check.hpp"
#include "omld/lattice.hpp"
#include "omld/term.hpp"

namespace omld {

// The free orthomodular lattice on two generators factors as 2^4 x MO2
// (Navara coordinates).  The Boolean factor is the interval below the
// commutator, with atoms x&y, x&y', x'&y, x'&y' in that bit order; the MO2
// factor is the interval below its complement.
enum class Mo2Part : std::uint8_t { Zero, X, Y, Xp, Yp, One };

inline constexpr std::array<Mo2Part, 6> mo2_parts = {
    Mo2Part::Zero, Mo2Part::X, Mo2Part::Y, Mo2Part::Xp, Mo2Part::Yp, Mo2Part::One,
};

inline bool mo2_leq(Mo2Part a, Mo2Part b) {
  return a == b || a == Mo2Part::Zero || b == Mo2Part::One;
}

inline Mo2Part mo2_meet(Mo2Part a, Mo2Part b) {
  if (a == b || b == Mo2Part::One) return a;
  if (a == Mo2Part::One) return b;
  return Mo2Part::Zero;  // distinct atoms
}

inline Mo2Part mo2_join(Mo2Part a, Mo2Part b) {
  if (a == b || b == Mo2Part::Zero) return a;
  if (a == Mo2Part::Zero) return b;
  return Mo2Part::One;
}

inline Mo2Part mo2_ortho(Mo2Part a) {
  switch (a) {
    case Mo2Part::Zero: return Mo2Part::One;
    case Mo2Part::X: return Mo2Part::Xp;
    case Mo2Part::Y: return Mo2Part::Yp;
    case Mo2Part::Xp: return Mo2Part::X;
    case Mo2Part::Yp: return Mo2Part::Y;
    case Mo2Part::One: return Mo2Part::Zero;
  }
  return Mo2Part::Zero;
}

inline std::string_view mo2_part_name(Mo2Part a) {
  switch (a) {
    case Mo2Part::Zero: return "0";
    case Mo2Part::X: return "x";
    case Mo2Part::Y: return "y";
    case Mo2Part::Xp: return "x'";
    case Mo2Part::Yp: return "y'";
    case Mo2Part::One: return "1";
  }
  return "?";
}

struct NavaraElement {
  std::uint8_t bool_mask = 0;  // bit 0: x&y, bit 1: x&y', bit 2: x'&y, bit 3: x'&y'
  Mo2Part mo2 = Mo2Part::Zero;

  bool operator==(const NavaraElement&) const = default;
};

inline constexpr std::array<std::string_view, 4> navara_atom_names = {"xy", "xy'", "x'y", "x'y'"};

inline NavaraElement nav_meet(NavaraElement a, NavaraElement b) {
  return {static_cast<std::uint8_t>(a.bool_mask & b.bool_mask), mo2_meet(a.mo2, b.mo2)};
}

inline NavaraElement nav_join(NavaraElement a, NavaraElement b) {
  return {static_cast<std::uint8_t>(a.bool_mask | b.bool_mask), mo2_join(a.mo2, b.mo2)};
}

inline NavaraElement nav_ortho(NavaraElement a) {
  return {static_cast<std::uint8_t>(~a.bool_mask & 0xF), mo2_ortho(a.mo2)};
}

inline bool nav_leq(NavaraElement a, NavaraElement b) {
  return (a.bool_mask & ~b.bool_mask) == 0 && mo2_leq(a.mo2, b.mo2);
}

inline int nav_index(NavaraElement e) {
  return e.bool_mask * 6 + static_cast<int>(e.mo2);
}

inline NavaraElement nav_element(int index) {
  return {static_cast<std::uint8_t>(index / 6), static_cast<Mo2Part>(index % 6)};
}

// Quotient onto the Boolean factor: forgets the MO2 part.  This is the
// homomorphism onto 2^4 whose value is the subset of the four atoms.
inline int phi(NavaraElement e) { return e.bool_mask; }

// MO2 part each symmetric-difference kind lands on when evaluated at the
// generators; the shared Boolean part is {x&y', x'&y} for all six.
inline Mo2Part sym_diff_part(SymDiffKind k) {
  switch (k) {
    case SymDiffKind::Nabla: return Mo2Part::Zero;
    case SymDiffKind::Delta: return Mo2Part::One;
    case SymDiffKind::PlusL: return Mo2Part::X;
    case SymDiffKind::PlusR: return Mo2Part::Y;
    case SymDiffKind::PlusLp: return Mo2Part::Xp;
    case SymDiffKind::PlusRp: return Mo2Part::Yp;
  }
  return Mo2Part::Zero;
}

inline constexpr std::uint8_t sym_diff_bool_mask = 0b0110;

// The six elements over the Boolean symmetric difference, in element order.
inline std::vector<NavaraElement> preimage_sym_diff() {
  std::vector<NavaraElement> out;
  out.reserve(6);
  for (Mo2Part p : mo2_parts) out.push_back({sym_diff_bool_mask, p});
  return out;
}

struct FreeOml {
  Oml lattice;
  Elem x;
  Elem y;
};

// Builds the 96-element free algebra from the coordinate order and runs it
// through the ordinary validator, so the tabulation is derived independently
// of the componentwise product construction the tests compare it against.
inline FreeOml make_free() {
  RawLattice raw(96);
  for (int i = 0; i < 96; ++i) {
    const NavaraElement a = nav_element(i);
    raw.ortho[i] = nav_index(nav_ortho(a));
    for (int j = 0; j < 96; ++j)
      if (nav_leq(a, nav_element(j))) raw.relate(i, j);
  }
  const Elem x = nav_index({0b0011, Mo2Part::X});
  const Elem y = nav_index({0b0101, Mo2Part::Y});
  return {validate(raw), x, y};
}

// Canonical term for a coordinate pair: the join of its Boolean atoms with
// the MO2 component cut down to the commutator's complement.  Evaluating the
// result at the generators reproduces the element.
inline TermPtr to_term(NavaraElement e) {
  const TermPtr x = term_var("x"), y = term_var("y");
  const TermPtr xp = term_ortho(x), yp = term_ortho(y);
  const std::array<TermPtr, 4> atoms = {
      term_meet(x, y), term_meet(x, yp), term_meet(xp, y), term_meet(xp, yp)};
  const TermPtr commut = term_join(term_join(atoms[0], atoms[1]), term_join(atoms[2], atoms[3]));
  const TermPtr cp = term_ortho(commut);

  TermPtr acc;
  const auto append = [&acc](TermPtr t) {
    acc = acc ? term_join(std::move(acc), std::move(t)) : std::move(t);
  };
  for (int bit = 0; bit < 4; ++bit)
    if (e.bool_mask & (1 << bit)) append(atoms[bit]);
  switch (e.mo2) {
    case Mo2Part::Zero: break;
    case Mo2Part::X: append(term_meet(x, cp)); break;
    case Mo2Part::Y: append(term_meet(y, cp)); break;
    case Mo2Part::Xp: append(term_meet(xp, cp)); break;
    case Mo2Part::Yp: append(term_meet(yp, cp)); break;
    case Mo2Part::One: append(cp); break;
  }
  return acc ? acc : term_zero();
}

}  // namespace omld
