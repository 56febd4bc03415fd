#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "omld/check.hpp"
#include "omld/lattice.hpp"

namespace omld {

struct PIdeal {
  std::vector<Elem> members;  // ascending, no duplicates
  bool operator==(const PIdeal&) const = default;
};

enum class PIdealDefect {
  MissingBottom,
  NotDownwardClosed,
  NotJoinClosed,
  ConditionFailed,
};

inline const char* p_ideal_defect_name(PIdealDefect d) {
  switch (d) {
    case PIdealDefect::MissingBottom: return "MissingBottom";
    case PIdealDefect::NotDownwardClosed: return "NotDownwardClosed";
    case PIdealDefect::NotJoinClosed: return "NotJoinClosed";
    case PIdealDefect::ConditionFailed: return "ConditionFailed";
  }
  return "?";
}

struct PIdealViolation {
  PIdealDefect defect;
  Elem a = -1;
  Elem b = -1;
};

namespace detail {

inline std::vector<std::uint8_t> member_mask(const Oml& L, std::span<const Elem> subset) {
  std::vector<std::uint8_t> in(L.size(), 0);
  for (Elem e : subset) {
    if (e < 0 || e >= L.size()) throw std::invalid_argument("subset element out of range");
    in[e] = 1;
  }
  return in;
}

}  // namespace detail

// Least violation if the subset is not a p-ideal.  The pair (a,b) means:
// NotDownwardClosed (member, missing smaller element), NotJoinClosed (the two
// members), ConditionFailed (x, i) with x & (i | x') outside the subset.
inline std::optional<PIdealViolation> check_p_ideal(const Oml& L, std::span<const Elem> subset) {
  const auto in = detail::member_mask(L, subset);
  if (!in[L.bottom()]) return PIdealViolation{PIdealDefect::MissingBottom, -1, -1};
  for (Elem i = 0; i < L.size(); ++i) {
    if (!in[i]) continue;
    for (Elem d = 0; d < L.size(); ++d)
      if (L.leq(d, i) && !in[d]) return PIdealViolation{PIdealDefect::NotDownwardClosed, i, d};
  }
  for (Elem i = 0; i < L.size(); ++i) {
    if (!in[i]) continue;
    for (Elem j = 0; j < L.size(); ++j)
      if (in[j] && !in[L.join(i, j)]) return PIdealViolation{PIdealDefect::NotJoinClosed, i, j};
  }
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem i = 0; i < L.size(); ++i) {
      if (!in[i]) continue;
      if (!in[L.meet(x, L.join(i, L.ortho(x)))])
        return PIdealViolation{PIdealDefect::ConditionFailed, x, i};
    }
  return std::nullopt;
}

inline bool is_p_ideal(const Oml& L, std::span<const Elem> subset) {
  return !check_p_ideal(L, subset).has_value();
}

// Same test with the closure condition phrased through the left difference:
// x <+l> (i <+l> x) stays inside.  Must agree with is_p_ideal everywhere.
inline bool is_p_ideal_alt(const Oml& L, std::span<const Elem> subset) {
  const auto in = detail::member_mask(L, subset);
  if (!in[L.bottom()]) return false;
  for (Elem i = 0; i < L.size(); ++i) {
    if (!in[i]) continue;
    for (Elem d = 0; d < L.size(); ++d)
      if (L.leq(d, i) && !in[d]) return false;
    for (Elem j = 0; j < L.size(); ++j)
      if (in[j] && !in[L.join(i, j)]) return false;
  }
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem i = 0; i < L.size(); ++i)
      if (in[i] &&
          !in[sym_diff(L, SymDiffKind::PlusL, x, sym_diff(L, SymDiffKind::PlusL, i, x))])
        return false;
  return true;
}

inline PIdeal p_ideal_closure(const Oml& L, std::span<const Elem> seed) {
  auto in = detail::member_mask(L, seed);
  in[L.bottom()] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem i = 0; i < L.size(); ++i) {
      if (!in[i]) continue;
      for (Elem d = 0; d < L.size(); ++d)
        if (L.leq(d, i) && !in[d]) {
          in[d] = 1;
          changed = true;
        }
      for (Elem j = 0; j < L.size(); ++j) {
        if (!in[j]) continue;
        if (const Elem u = L.join(i, j); !in[u]) {
          in[u] = 1;
          changed = true;
        }
      }
      for (Elem x = 0; x < L.size(); ++x) {
        if (const Elem t = L.meet(x, L.join(i, L.ortho(x))); !in[t]) {
          in[t] = 1;
          changed = true;
        }
      }
    }
  }
  PIdeal out;
  for (Elem e = 0; e < L.size(); ++e)
    if (in[e]) out.members.push_back(e);
  return out;
}

// Every p-ideal is the join of the principal closures of its members, so
// principal closures plus pairwise join closure enumerate all of them.
// Sorted by (size, members).
inline std::vector<PIdeal> all_p_ideals(const Oml& L) {
  std::set<std::vector<Elem>> found;
  for (Elem a = 0; a < L.size(); ++a) {
    const Elem seed[] = {a};
    found.insert(p_ideal_closure(L, seed).members);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<std::vector<Elem>> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<Elem> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        if (found.insert(p_ideal_closure(L, seed).members).second) changed = true;
      }
  }
  std::vector<PIdeal> out;
  for (const auto& m : found) out.push_back(PIdeal{m});
  std::sort(out.begin(), out.end(), [](const PIdeal& x, const PIdeal& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

enum class CongruenceVariant { Delta, PlusL };

struct Congruence {
  // block_of[a] is the least element of a's class, so equal vectors mean
  // equal relations.
  std::vector<Elem> block_of;
  bool operator==(const Congruence&) const = default;
};

inline std::vector<Elem> class_of(const Congruence& theta, Elem a) {
  std::vector<Elem> out;
  for (Elem b = 0; b < static_cast<Elem>(theta.block_of.size()); ++b)
    if (theta.block_of[b] == theta.block_of[a]) out.push_back(b);
  return out;
}

inline std::vector<std::vector<Elem>> congruence_classes(const Congruence& theta) {
  std::map<Elem, std::vector<Elem>> by_rep;
  for (Elem a = 0; a < static_cast<Elem>(theta.block_of.size()); ++a)
    by_rep[theta.block_of[a]].push_back(a);
  std::vector<std::vector<Elem>> out;
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

namespace detail {

inline void require_congruence(const Oml& L, const std::vector<std::uint8_t>& rel) {
  const int n = L.size();
  const auto related = [&](Elem a, Elem b) {
    return rel[static_cast<std::size_t>(a) * n + b] != 0;
  };
  for (Elem a = 0; a < n; ++a)
    if (!related(a, a)) throw std::logic_error("congruence check failed: not reflexive");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (related(a, b) != related(b, a))
        throw std::logic_error("congruence check failed: not symmetric");
      if (!related(a, b)) continue;
      if (!related(L.ortho(a), L.ortho(b)))
        throw std::logic_error("congruence check failed: ortho compatibility");
      for (Elem c = 0; c < n; ++c) {
        if (related(b, c) && !related(a, c))
          throw std::logic_error("congruence check failed: not transitive");
        if (!related(L.meet(a, c), L.meet(b, c)))
          throw std::logic_error("congruence check failed: meet compatibility");
        if (!related(L.join(a, c), L.join(b, c)))
          throw std::logic_error("congruence check failed: join compatibility");
      }
    }
}

}  // namespace detail

// Builds x theta y iff x <d> y lands in I (or x <+l> y, both cut out the same
// relation) and verifies the result really is a congruence before packaging.
inline Congruence congruence_from_pideal(const Oml& L, const PIdeal& I,
                                         CongruenceVariant variant = CongruenceVariant::Delta) {
  if (!is_p_ideal(L, I.members))
    throw std::invalid_argument("congruence_from_pideal: not a p-ideal");
  const int n = L.size();
  const auto in = detail::member_mask(L, I.members);
  const SymDiffKind k =
      variant == CongruenceVariant::Delta ? SymDiffKind::Delta : SymDiffKind::PlusL;
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      rel[static_cast<std::size_t>(a) * n + b] = in[sym_diff(L, k, a, b)];
  detail::require_congruence(L, rel);
  Congruence theta;
  theta.block_of.assign(n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b <= a; ++b)
      if (rel[static_cast<std::size_t>(a) * n + b]) {
        theta.block_of[a] = b;
        break;
      }
  return theta;
}

inline PIdeal kernel(const Oml& L, const Congruence& theta) {
  return PIdeal{class_of(theta, L.bottom())};
}

// Checks the class formulas around a: the class of a is I <+l> a, I comes
// back as [a] <+l> a and as the deltas of class members, and every class has
// the size of I.  The older description {a | (i & a')} is also checked; it
// yields exactly the class members above a, the whole class only when a is
// the least one.
inline bool class_formulas_check(const Oml& L, const PIdeal& I, const Congruence& theta,
                                 Elem a) {
  const std::vector<Elem> cls = class_of(theta, a);
  const std::set<Elem> cls_set(cls.begin(), cls.end());
  std::set<Elem> via_plus;
  for (Elem i : I.members) via_plus.insert(sym_diff(L, SymDiffKind::PlusL, i, a));
  if (via_plus != cls_set) return false;

  // The older description only reaches the class members above a: for x >= a
  // in the class, x = a v (x ^ a') by orthomodularity and x ^ a' lands in I.
  std::set<Elem> via_old, upper;
  for (Elem i : I.members) via_old.insert(L.join(a, L.meet(i, L.ortho(a))));
  for (Elem u : cls)
    if (L.leq(a, u)) upper.insert(u);
  if (via_old != upper) return false;

  std::set<Elem> back_plus, back_delta;
  for (Elem u : cls) {
    back_plus.insert(sym_diff(L, SymDiffKind::PlusL, u, a));
    for (Elem v : cls) back_delta.insert(sym_diff(L, SymDiffKind::Delta, u, v));
  }
  const std::set<Elem> ideal_set(I.members.begin(), I.members.end());
  if (back_plus != ideal_set || back_delta != ideal_set) return false;
  return cls.size() == I.members.size();
}

inline bool class_formulas_check(const Oml& L, const PIdeal& I, Elem a) {
  return class_formulas_check(L, I, congruence_from_pideal(L, I), a);
}

struct KernelReport {
  bool subgroup_ok = false;
  bool normal_ok = false;
  bool order_ideal_ok = false;
  bool is_kernel = false;
};

// The group flavoured kernel conditions: contains 0 and closed under <+l>,
// normal in the x <+l> (i <+l> x) sense, and downward closed.  Together they
// single out exactly the p-ideals.
inline KernelReport kernel_conditions(const Oml& L, std::span<const Elem> subset) {
  const auto in = detail::member_mask(L, subset);
  KernelReport r;
  r.subgroup_ok = in[L.bottom()] != 0;
  for (Elem i = 0; i < L.size() && r.subgroup_ok; ++i) {
    if (!in[i]) continue;
    for (Elem j = 0; j < L.size(); ++j)
      if (in[j] && !in[sym_diff(L, SymDiffKind::PlusL, i, j)]) {
        r.subgroup_ok = false;
        break;
      }
  }
  r.normal_ok = true;
  for (Elem x = 0; x < L.size() && r.normal_ok; ++x)
    for (Elem i = 0; i < L.size(); ++i)
      if (in[i] &&
          !in[sym_diff(L, SymDiffKind::PlusL, x, sym_diff(L, SymDiffKind::PlusL, i, x))]) {
        r.normal_ok = false;
        break;
      }
  r.order_ideal_ok = true;
  for (Elem i = 0; i < L.size() && r.order_ideal_ok; ++i) {
    if (!in[i]) continue;
    for (Elem d = 0; d < L.size(); ++d)
      if (L.leq(d, i) && !in[d]) {
        r.order_ideal_ok = false;
        break;
      }
  }
  r.is_kernel = r.subgroup_ok && r.normal_ok && r.order_ideal_ok;
  return r;
}

struct CaveatFinding {
  std::vector<Elem> members;
  PIdealViolation violation;  // why the subset is not a p-ideal
};

// Looks for a subset that passes the subgroup and order ideal conditions and
// the flipped normality (x <+l> i) <+l> x in S, yet fails to be a p-ideal.
// A hit shows the flipped condition is strictly weaker than the right one.
// Returns the least hit by (size, members).
inline std::optional<CaveatFinding> kernel_caveat_search(const Oml& L) {
  if (L.size() > 24) throw std::length_error("kernel_caveat_search: lattice too large");
  const int n = L.size();
  std::optional<CaveatFinding> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (!(mask >> L.bottom() & 1u)) continue;
    const auto in_mask = [&](Elem e) { return (mask >> e & 1u) != 0; };
    bool ok = true;
    for (Elem i = 0; i < n && ok; ++i) {
      if (!in_mask(i)) continue;
      for (Elem j = 0; j < n && ok; ++j)
        if (in_mask(j) && !in_mask(sym_diff(L, SymDiffKind::PlusL, i, j))) ok = false;
      for (Elem d = 0; d < n && ok; ++d)
        if (L.leq(d, i) && !in_mask(d)) ok = false;
    }
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem i = 0; i < n && ok; ++i)
        if (in_mask(i) &&
            !in_mask(sym_diff(L, SymDiffKind::PlusL, sym_diff(L, SymDiffKind::PlusL, x, i), x)))
          ok = false;
    if (!ok) continue;
    std::vector<Elem> members;
    for (Elem e = 0; e < n; ++e)
      if (in_mask(e)) members.push_back(e);
    const auto violation = check_p_ideal(L, members);
    if (!violation) continue;
    if (best) {
      if (members.size() > best->members.size()) continue;
      if (members.size() == best->members.size() && members >= best->members) continue;
    }
    best = CaveatFinding{std::move(members), *violation};
  }
  return best;
}

struct MalcevCsakanyReport {
  IdentityReport malcev;
  IdentityReport csakany;
};

// m(x,y,z) = (x <+l> y) <+l> z.  Mal'cev wants m(x,z,z) = x and m(x,x,z) = z,
// Csakany wants m(x,y,z) = z exactly when x = y.  Both loops stop at the
// first bad triple in (x,y,z) order.
inline MalcevCsakanyReport malcev_csakany_check(const Oml& L) {
  const int n = L.size();
  std::vector<Elem> plus(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      plus[static_cast<std::size_t>(a) * n + b] = sym_diff(L, SymDiffKind::PlusL, a, b);
  const auto m = [&](Elem x, Elem y, Elem z) {
    return plus[static_cast<std::size_t>(plus[static_cast<std::size_t>(x) * n + y]) * n + z];
  };
  MalcevCsakanyReport r;
  r.malcev.holds = true;
  for (Elem x = 0; x < n && r.malcev.holds; ++x)
    for (Elem y = 0; y < n && r.malcev.holds; ++y)
      for (Elem z = 0; z < n && r.malcev.holds; ++z) {
        ++r.malcev.tuples_checked;
        if ((y == z && m(x, y, z) != x) || (x == y && m(x, y, z) != z)) {
          r.malcev.holds = false;
          r.malcev.counterexample = Assignment{{"x", x}, {"y", y}, {"z", z}};
        }
      }
  r.csakany.holds = true;
  for (Elem x = 0; x < n && r.csakany.holds; ++x)
    for (Elem y = 0; y < n && r.csakany.holds; ++y)
      for (Elem z = 0; z < n && r.csakany.holds; ++z) {
        ++r.csakany.tuples_checked;
        if ((m(x, y, z) == z) != (x == y)) {
          r.csakany.holds = false;
          r.csakany.counterexample = Assignment{{"x", x}, {"y", y}, {"z", z}};
        }
      }
  return r;
}

struct CongruenceSummary {
  int ideals = 0;
  int congruences = 0;
  bool regular = false;
  bool uniform = false;
  bool permutable = false;
};

inline CongruenceSummary congruence_properties(const Oml& L) {
  const std::vector<PIdeal> ideals = all_p_ideals(L);
  std::vector<Congruence> congs;
  congs.reserve(ideals.size());
  for (const PIdeal& I : ideals) congs.push_back(congruence_from_pideal(L, I));

  CongruenceSummary s;
  s.ideals = static_cast<int>(ideals.size());
  {
    std::set<std::vector<Elem>> distinct;
    for (const Congruence& t : congs) distinct.insert(t.block_of);
    s.congruences = static_cast<int>(distinct.size());
  }

  // regular: a class may belong to only one congruence
  s.regular = true;
  std::map<std::vector<Elem>, std::vector<Elem>> owner;
  for (const Congruence& t : congs)
    for (const std::vector<Elem>& cls : congruence_classes(t)) {
      const auto [it, fresh] = owner.emplace(cls, t.block_of);
      if (!fresh && it->second != t.block_of) s.regular = false;
    }

  s.uniform = true;
  for (const Congruence& t : congs) {
    const auto classes = congruence_classes(t);
    for (const auto& cls : classes)
      if (cls.size() != classes.front().size()) s.uniform = false;
  }

  // permutable: theta after phi equals phi after theta, rows kept as bitsets
  const int n = L.size();
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(congs.size());
  for (const Congruence& t : congs) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(n) * words, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (t.block_of[a] == t.block_of[b])
          r[static_cast<std::size_t>(a) * words + b / 64] |= std::uint64_t{1} << (b % 64);
    rows.push_back(std::move(r));
  }
  const auto compose = [&](const std::vector<std::uint64_t>& r1,
                           const std::vector<std::uint64_t>& r2) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n) * words, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (r1[static_cast<std::size_t>(a) * words + b / 64] >> (b % 64) & 1)
          for (int w = 0; w < words; ++w)
            out[static_cast<std::size_t>(a) * words + w] |=
                r2[static_cast<std::size_t>(b) * words + w];
    return out;
  };
  s.permutable = true;
  for (std::size_t i = 0; i < rows.size() && s.permutable; ++i)
    for (std::size_t j = i + 1; j < rows.size() && s.permutable; ++j)
      if (compose(rows[i], rows[j]) != compose(rows[j], rows[i])) s.permutable = false;
  return s;
}

// Independent route to the congruences: scan all set partitions (restricted
// growth strings) and keep those compatible with meet, join and ortho.
// Only for tiny lattices; the partition count explodes past 8 elements.
inline std::vector<Congruence> brute_force_congruences(const Oml& L) {
  if (L.size() > 8) throw std::length_error("brute_force_congruences: lattice too large");
  const int n = L.size();
  std::vector<Congruence> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    std::vector<Elem> first(n, -1);
    Congruence theta;
    theta.block_of.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      if (first[rgs[a]] < 0) first[rgs[a]] = a;
      theta.block_of[a] = first[rgs[a]];
    }
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = a + 1; b < n && ok; ++b) {
        if (theta.block_of[a] != theta.block_of[b]) continue;
        if (theta.block_of[L.ortho(a)] != theta.block_of[L.ortho(b)]) ok = false;
        for (Elem c = 0; c < n && ok; ++c)
          if (theta.block_of[L.meet(a, c)] != theta.block_of[L.meet(b, c)] ||
              theta.block_of[L.join(a, c)] != theta.block_of[L.join(b, c)])
            ok = false;
      }
    if (ok) out.push_back(std::move(theta));

    int pos = n - 1;
    while (pos > 0) {
      int cap = 0;
      for (int q = 0; q < pos; ++q) cap = std::max(cap, rgs[q]);
      if (rgs[pos] <= cap) break;
      --pos;
    }
    if (pos == 0) break;
    ++rgs[pos];
    for (int q = pos + 1; q < n; ++q) rgs[q] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const Congruence& x, const Congruence& y) { return x.block_of < y.block_of; });
  return out;
}

}  // namespace omld
