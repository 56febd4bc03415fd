#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omld {

using Elem = int;

inline constexpr int default_max_size = 4096;

// Input description of a finite ordered set with a candidate orthocomplement.
// `order` may hold just the covering relation; validate() takes the
// reflexive-transitive closure before checking anything, so a full order
// relation and a Hasse diagram are equally acceptable.
struct RawLattice {
  int size = 0;
  std::vector<std::uint8_t> order;  // row-major size*size adjacency
  std::vector<Elem> ortho;
  std::vector<std::string> names;  // empty, or one distinct name per element

  RawLattice() = default;
  explicit RawLattice(int n)
      : size(n), order(static_cast<std::size_t>(n) * n, 0), ortho(n, 0) {}

  bool related(Elem a, Elem b) const {
    return order[static_cast<std::size_t>(a) * size + b] != 0;
  }
  void relate(Elem a, Elem b) {
    order[static_cast<std::size_t>(a) * size + b] = 1;
  }
};

enum class OmlDefect {
  NotAPoset,
  NotALattice,
  OrthoNotInvolution,
  OrthoNotComplement,
  OrthoNotAntitone,
  NotOrthomodular,
};

inline std::string_view defect_name(OmlDefect d) {
  switch (d) {
    case OmlDefect::NotAPoset: return "NotAPoset";
    case OmlDefect::NotALattice: return "NotALattice";
    case OmlDefect::OrthoNotInvolution: return "OrthoNotInvolution";
    case OmlDefect::OrthoNotComplement: return "OrthoNotComplement";
    case OmlDefect::OrthoNotAntitone: return "OrthoNotAntitone";
    case OmlDefect::NotOrthomodular: return "NotOrthomodular";
  }
  return "?";
}

// First axiom violated, with the lexicographically least witness.
// b stays -1 for the single-element checks.
struct AxiomViolation {
  OmlDefect defect;
  Elem a = -1;
  Elem b = -1;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(AxiomViolation v, const std::string& what)
      : std::runtime_error(what), violation_(v) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

// A validated orthomodular lattice.  Meet, join and the order are fully
// tabulated, so every query after validation is a plain lookup.
class Oml {
 public:
  int size() const { return size_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem ortho(Elem a) const { return ortho_[a]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(Elem a) const {
    return names_.empty() ? "e" + std::to_string(a) : names_[a];
  }

 private:
  Oml() = default;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * size_ + b;
  }

  int size_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_, ortho_;
  Elem bottom_ = 0, top_ = 0;
  std::vector<std::string> names_;

  friend Oml validate(const RawLattice& raw);
};

namespace detail {

inline std::string elem_label(const std::vector<std::string>& names, Elem a) {
  return names.empty() ? "e" + std::to_string(a) : names[a];
}

[[noreturn]] inline void fail_axiom(const RawLattice& raw, OmlDefect d, Elem a,
                                    Elem b = -1, std::string_view note = {}) {
  std::string msg(defect_name(d));
  msg += " witness (";
  msg += elem_label(raw.names, a);
  if (b >= 0) {
    msg += ",";
    msg += elem_label(raw.names, b);
  }
  msg += ")";
  if (!note.empty()) {
    msg += " ";
    msg += note;
  }
  throw ValidationError({d, a, b}, msg);
}

}  // namespace detail

// Checks the axioms in a fixed order (poset, lattice, ortho involution,
// ortho complement, ortho antitone, orthomodular law) and throws a
// ValidationError carrying the first violation found.  Witness scans run in
// lexicographic element order, so failures are deterministic.
inline Oml validate(const RawLattice& raw) {
  const int n = raw.size;
  if (n < 1) throw std::invalid_argument("lattice needs at least one element");
  if (raw.order.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("order table size mismatch");
  if (static_cast<int>(raw.ortho.size()) != n)
    throw std::invalid_argument("ortho table size mismatch");
  for (Elem a : raw.ortho)
    if (a < 0 || a >= n) throw std::invalid_argument("ortho index out of range");
  if (!raw.names.empty()) {
    if (static_cast<int>(raw.names.size()) != n)
      throw std::invalid_argument("names size mismatch");
    auto sorted = raw.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate element name");
  }

  const int words = (n + 63) / 64;
  const auto row = [words](Elem a) { return static_cast<std::size_t>(a) * words; };

  // up[a] is the bitset of elements above a (after closure).
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n) * words, 0);
  const auto up_test = [&](Elem a, Elem b) {
    return (up[row(a) + b / 64] >> (b % 64)) & 1u;
  };
  const auto up_set = [&](Elem a, Elem b) {
    up[row(a) + b / 64] |= std::uint64_t{1} << (b % 64);
  };
  for (Elem a = 0; a < n; ++a) {
    up_set(a, a);
    for (Elem b = 0; b < n; ++b)
      if (raw.related(a, b)) up_set(a, b);
  }
  for (Elem k = 0; k < n; ++k)
    for (Elem a = 0; a < n; ++a)
      if (up_test(a, k))
        for (int w = 0; w < words; ++w) up[row(a) + w] |= up[row(k) + w];

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && up_test(a, b) && up_test(b, a))
        detail::fail_axiom(raw, OmlDefect::NotAPoset, a, b);

  std::vector<std::uint64_t> down(static_cast<std::size_t>(n) * words, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (up_test(a, b)) down[row(b) + a / 64] |= std::uint64_t{1} << (a % 64);

  std::vector<int> up_count(n, 0), down_count(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (int w = 0; w < words; ++w) {
      up_count[a] += std::popcount(up[row(a) + w]);
      down_count[a] += std::popcount(down[row(a) + w]);
    }

  // A bound g among the common bounds of (a,b) is the meet (join) exactly
  // when its own bound set exhausts the intersection, which popcounts detect
  // without a quadratic dominance scan.
  std::vector<Elem> meet_tab(static_cast<std::size_t>(n) * n, -1);
  std::vector<Elem> join_tab(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::uint64_t> buf(words);
  const auto extremal = [&](const std::vector<std::uint64_t>& rows,
                            const std::vector<int>& counts, Elem a, Elem b) -> Elem {
    int pc = 0;
    for (int w = 0; w < words; ++w) {
      buf[w] = rows[row(a) + w] & rows[row(b) + w];
      pc += std::popcount(buf[w]);
    }
    for (int w = 0; w < words; ++w)
      for (std::uint64_t m = buf[w]; m != 0; m &= m - 1) {
        const Elem c = w * 64 + std::countr_zero(m);
        if (counts[c] == pc) return c;
      }
    return -1;
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem m = extremal(down, down_count, a, b);
      if (m < 0) detail::fail_axiom(raw, OmlDefect::NotALattice, a, b, "(no meet)");
      meet_tab[static_cast<std::size_t>(a) * n + b] = m;
      const Elem j = extremal(up, up_count, a, b);
      if (j < 0) detail::fail_axiom(raw, OmlDefect::NotALattice, a, b, "(no join)");
      join_tab[static_cast<std::size_t>(a) * n + b] = j;
    }

  Elem bottom = 0, top = 0;
  for (Elem a = 0; a < n; ++a) {
    bottom = meet_tab[static_cast<std::size_t>(bottom) * n + a];
    top = join_tab[static_cast<std::size_t>(top) * n + a];
  }

  for (Elem a = 0; a < n; ++a)
    if (raw.ortho[raw.ortho[a]] != a)
      detail::fail_axiom(raw, OmlDefect::OrthoNotInvolution, a);
  for (Elem a = 0; a < n; ++a) {
    const Elem ap = raw.ortho[a];
    if (meet_tab[static_cast<std::size_t>(a) * n + ap] != bottom ||
        join_tab[static_cast<std::size_t>(a) * n + ap] != top)
      detail::fail_axiom(raw, OmlDefect::OrthoNotComplement, a);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (up_test(a, b) && !up_test(raw.ortho[b], raw.ortho[a]))
        detail::fail_axiom(raw, OmlDefect::OrthoNotAntitone, a, b);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (up_test(a, b)) {
        const Elem rel = meet_tab[static_cast<std::size_t>(b) * n + raw.ortho[a]];
        if (join_tab[static_cast<std::size_t>(a) * n + rel] != b)
          detail::fail_axiom(raw, OmlDefect::NotOrthomodular, a, b);
      }

  Oml out;
  out.size_ = n;
  out.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (up_test(a, b)) out.leq_[static_cast<std::size_t>(a) * n + b] = 1;
  out.meet_ = std::move(meet_tab);
  out.join_ = std::move(join_tab);
  out.ortho_ = raw.ortho;
  out.bottom_ = bottom;
  out.top_ = top;
  out.names_ = raw.names;
  return out;
}

// Structural equality of the tabulated data; names are presentation only and
// deliberately ignored.
inline bool tables_equal(const Oml& x, const Oml& y) {
  if (x.size() != y.size() || x.bottom() != y.bottom() || x.top() != y.top())
    return false;
  const int n = x.size();
  for (Elem a = 0; a < n; ++a)
    if (x.ortho(a) != y.ortho(a)) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (x.leq(a, b) != y.leq(a, b) || x.meet(a, b) != y.meet(a, b) ||
          x.join(a, b) != y.join(a, b))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// derived relations
// ---------------------------------------------------------------------------

// Least subalgebra containing the seed: closed under meet, join and ortho,
// with bottom and top included.  Returned sorted ascending.
inline std::vector<Elem> generated_subalgebra(const Oml& L, std::span<const Elem> seed) {
  std::vector<std::uint8_t> in(L.size(), 0);
  std::vector<Elem> out;
  const auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = 1;
      out.push_back(e);
    }
  };
  add(L.bottom());
  add(L.top());
  for (Elem s : seed) {
    if (s < 0 || s >= L.size()) throw std::invalid_argument("seed element out of range");
    add(s);
  }
  // Every freshly discovered element is paired against everything found so
  // far, so the loop reaches a fixpoint exactly when out stops growing.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Elem e = out[i];
    add(L.ortho(e));
    for (std::size_t j = 0; j <= i; ++j) {
      add(L.meet(e, out[j]));
      add(L.join(e, out[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Elem> generated_subalgebra(const Oml& L, std::initializer_list<Elem> seed) {
  return generated_subalgebra(L, std::span<const Elem>(seed.begin(), seed.size()));
}

// Definitional commutativity: a C b iff the subalgebra generated by {a,b}
// is distributive (hence Boolean, being orthocomplemented).
inline bool commutes_by_generation(const Oml& L, Elem a, Elem b) {
  const auto sub = generated_subalgebra(L, {a, b});
  for (Elem x : sub)
    for (Elem y : sub)
      for (Elem z : sub)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

// Same relation as commutes_by_generation; the unit suite checks the
// equivalence exhaustively on the whole catalog before trusting this form.
inline bool commutes(const Oml& L, Elem a, Elem b) {
  return a == L.join(L.meet(a, b), L.meet(a, L.ortho(b)));
}

// Least-index common complement of a and b, if one exists.
inline std::optional<Elem> perspective(const Oml& L, Elem a, Elem b) {
  for (Elem c = 0; c < L.size(); ++c)
    if (L.meet(a, c) == L.bottom() && L.meet(b, c) == L.bottom() &&
        L.join(a, c) == L.top() && L.join(b, c) == L.top())
      return c;
  return std::nullopt;
}

inline Elem commutator(const Oml& L, Elem a, Elem b) {
  const Elem ap = L.ortho(a), bp = L.ortho(b);
  return L.join(L.join(L.meet(a, b), L.meet(a, bp)),
                L.join(L.meet(ap, b), L.meet(ap, bp)));
}

// ---------------------------------------------------------------------------
// the six symmetric differences
// ---------------------------------------------------------------------------

enum class SymDiffKind { Nabla, Delta, PlusL, PlusR, PlusLp, PlusRp };

inline constexpr std::array<SymDiffKind, 6> sym_diff_kinds = {
    SymDiffKind::Nabla,  SymDiffKind::Delta,  SymDiffKind::PlusL,
    SymDiffKind::PlusR,  SymDiffKind::PlusLp, SymDiffKind::PlusRp,
};

// Operator spelling used by the term grammar.
inline std::string_view sym_diff_symbol(SymDiffKind k) {
  switch (k) {
    case SymDiffKind::Nabla: return "<n>";
    case SymDiffKind::Delta: return "<d>";
    case SymDiffKind::PlusL: return "<+l>";
    case SymDiffKind::PlusR: return "<+r>";
    case SymDiffKind::PlusLp: return "<+l'>";
    case SymDiffKind::PlusRp: return "<+r'>";
  }
  return "?";
}

inline std::string_view sym_diff_name(SymDiffKind k) {
  switch (k) {
    case SymDiffKind::Nabla: return "nabla";
    case SymDiffKind::Delta: return "delta";
    case SymDiffKind::PlusL: return "plus_l";
    case SymDiffKind::PlusR: return "plus_r";
    case SymDiffKind::PlusLp: return "plus_l'";
    case SymDiffKind::PlusRp: return "plus_r'";
  }
  return "?";
}

// The six binary operations that agree with the Boolean symmetric difference
// whenever the arguments commute; they differ pairwise otherwise.
inline Elem sym_diff(const Oml& L, SymDiffKind k, Elem a, Elem b) {
  const Elem ap = L.ortho(a), bp = L.ortho(b);
  switch (k) {
    case SymDiffKind::Nabla:
      return L.join(L.meet(a, bp), L.meet(ap, b));
    case SymDiffKind::Delta:
      return L.meet(L.join(a, b), L.join(ap, bp));
    case SymDiffKind::PlusL:
      return L.meet(L.join(a, L.meet(ap, b)), L.join(ap, bp));
    case SymDiffKind::PlusR:
      return L.meet(L.join(L.meet(a, bp), b), L.join(ap, bp));
    case SymDiffKind::PlusLp:
      return L.meet(L.join(a, b), L.join(ap, L.meet(a, bp)));
    case SymDiffKind::PlusRp:
      return L.meet(L.join(a, b), L.join(L.meet(ap, b), bp));
  }
  return -1;
}

inline bool is_distributive(const Oml& L) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

}  // namespace omld
