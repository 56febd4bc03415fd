#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "omld/free_oml.hpp"
#include "omld/lattice.hpp"

namespace omld {

// Powerset algebra 2^k; element index equals its bitmask, so meet and join
// are the bit operations and ortho is complement.
inline Oml boolean_algebra(int k, int max_size = default_max_size) {
  if (k < 0 || k > 16) throw std::invalid_argument("boolean_algebra: k out of range");
  const int n = 1 << k;
  if (n > max_size) throw std::length_error("boolean_algebra: size exceeds limit");
  RawLattice raw(n);
  for (Elem a = 0; a < n; ++a) {
    raw.ortho[a] = ~a & (n - 1);
    for (Elem b = 0; b < n; ++b)
      if ((a & ~b) == 0) raw.relate(a, b);
  }
  return validate(raw);
}

// MO(n): 0 and 1 plus n incomparable complemented pairs a_i, a_i'.
// Indexing: 0 bottom, 1..n the a_i, n+1..2n the a_i', 2n+1 top.
inline Oml mo(int n, int max_size = default_max_size) {
  if (n < 1) throw std::invalid_argument("mo: n must be at least 1");
  const int size = 2 * n + 2;
  if (size > max_size) throw std::length_error("mo: size exceeds limit");
  RawLattice raw(size);
  const Elem top = size - 1;
  for (Elem a = 0; a < size; ++a) {
    raw.relate(a, a);
    raw.relate(0, a);
    raw.relate(a, top);
  }
  raw.ortho[0] = top;
  raw.ortho[top] = 0;
  for (int i = 1; i <= n; ++i) {
    raw.ortho[i] = n + i;
    raw.ortho[n + i] = i;
  }
  if (n <= 26) {
    raw.names.resize(size);
    raw.names[0] = "0";
    raw.names[top] = "1";
    for (int i = 1; i <= n; ++i) {
      raw.names[i] = std::string(1, static_cast<char>('a' + i - 1));
      raw.names[n + i] = raw.names[i] + "'";
    }
  }
  return validate(raw);
}

// Direct product; pair (i,j) sits at index i*B.size()+j and every operation
// acts componentwise.
inline Oml product(const Oml& A, const Oml& B, int max_size = default_max_size) {
  const long long n = static_cast<long long>(A.size()) * B.size();
  if (n > max_size) throw std::length_error("product: size exceeds limit");
  RawLattice raw(static_cast<int>(n));
  const int nb = B.size();
  for (Elem i = 0; i < A.size(); ++i)
    for (Elem j = 0; j < nb; ++j) {
      const Elem a = i * nb + j;
      raw.ortho[a] = A.ortho(i) * nb + B.ortho(j);
      for (Elem k = 0; k < A.size(); ++k)
        for (Elem l = 0; l < nb; ++l)
          if (A.leq(i, k) && B.leq(j, l)) raw.relate(a, k * nb + l);
    }
  return validate(raw);
}

// The hexagon 0 < a < b < 1, 0 < b' < a' < 1 with a<->a', b<->b'.  An
// ortholattice but not orthomodular; validate() rejects it with witness
// (a,b), which makes it the standard negative fixture.
inline RawLattice benzene() {
  RawLattice raw(6);
  raw.names = {"0", "a", "b", "b'", "a'", "1"};
  raw.ortho = {5, 4, 3, 2, 1, 0};
  raw.relate(0, 1);
  raw.relate(1, 2);
  raw.relate(2, 5);
  raw.relate(0, 3);
  raw.relate(3, 4);
  raw.relate(4, 5);
  return raw;
}

// ---------------------------------------------------------------------------
// lattice files
// ---------------------------------------------------------------------------
//
//   oml v1
//   elements: 6
//   names: 0 a b a' b' 1
//   covers: 0 1
//   ortho: 5 3 4 1 2 0
//
// '#' starts a comment, blank lines are skipped, and covers list the Hasse
// diagram one edge per line.  Bottom and top are inferred.

class LatticeFileError : public std::runtime_error {
 public:
  LatticeFileError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline RawLattice read_lattice(std::istream& in) {
  RawLattice raw;
  bool saw_magic = false, saw_elements = false, saw_names = false, saw_ortho = false;
  std::vector<std::pair<Elem, Elem>> covers;
  std::string line;
  int lineno = 0;

  const auto parse_index = [&](const std::string& tok) -> Elem {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw LatticeFileError(lineno, "expected an element index, got '" + tok + "'");
    }
    if (used != tok.size())
      throw LatticeFileError(lineno, "expected an element index, got '" + tok + "'");
    if (v < 0 || v >= raw.size)
      throw LatticeFileError(lineno, "dangling element reference " + tok);
    return v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(std::move(t));
    if (toks.empty()) continue;

    if (!saw_magic) {
      if (toks.size() == 2 && toks[0] == "oml" && toks[1] == "v1") {
        saw_magic = true;
        continue;
      }
      throw LatticeFileError(lineno, "expected 'oml v1' header");
    }

    if (toks[0] == "elements:") {
      if (saw_elements) throw LatticeFileError(lineno, "duplicate elements line");
      if (toks.size() != 2) throw LatticeFileError(lineno, "elements: wants one count");
      int n = 0;
      try {
        n = std::stoi(toks[1]);
      } catch (const std::exception&) {
        n = -1;
      }
      if (n < 1) throw LatticeFileError(lineno, "element count must be positive");
      raw = RawLattice(n);
      saw_elements = true;
      continue;
    }
    if (!saw_elements)
      throw LatticeFileError(lineno, "elements: must precede '" + toks[0] + "'");

    if (toks[0] == "names:") {
      if (saw_names) throw LatticeFileError(lineno, "duplicate names line");
      if (static_cast<int>(toks.size()) - 1 != raw.size)
        throw LatticeFileError(lineno, "names: wants one name per element");
      raw.names.assign(toks.begin() + 1, toks.end());
      for (std::size_t i = 1; i < raw.names.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (raw.names[i] == raw.names[j])
            throw LatticeFileError(lineno, "duplicate name '" + raw.names[i] + "'");
      saw_names = true;
      continue;
    }
    if (toks[0] == "covers:") {
      if (toks.size() != 3) throw LatticeFileError(lineno, "covers: wants two indices");
      const Elem i = parse_index(toks[1]);
      const Elem j = parse_index(toks[2]);
      if (i == j) throw LatticeFileError(lineno, "an element cannot cover itself");
      for (const auto& [pi, pj] : covers)
        if (pi == i && pj == j)
          throw LatticeFileError(lineno, "duplicate cover " + toks[1] + " " + toks[2]);
      covers.emplace_back(i, j);
      raw.relate(i, j);
      continue;
    }
    if (toks[0] == "ortho:") {
      if (saw_ortho) throw LatticeFileError(lineno, "duplicate ortho line");
      if (static_cast<int>(toks.size()) - 1 != raw.size)
        throw LatticeFileError(lineno, "ortho is not a permutation (wrong count)");
      std::vector<std::uint8_t> hit(raw.size, 0);
      for (int i = 0; i < raw.size; ++i) {
        const Elem v = parse_index(toks[i + 1]);
        if (hit[v])
          throw LatticeFileError(lineno, "ortho is not a permutation (repeats " + toks[i + 1] + ")");
        hit[v] = 1;
        raw.ortho[i] = v;
      }
      saw_ortho = true;
      continue;
    }
    throw LatticeFileError(lineno, "unknown directive '" + toks[0] + "'");
  }

  if (!saw_magic) throw LatticeFileError(lineno, "empty file, expected 'oml v1' header");
  if (!saw_elements) throw LatticeFileError(lineno, "missing elements line");
  if (!saw_ortho) throw LatticeFileError(lineno, "missing ortho line");
  return raw;
}

inline RawLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeFileError(0, "cannot open '" + path + "'");
  return read_lattice(in);
}

inline void write_lattice(const Oml& L, std::ostream& out) {
  const int n = L.size();
  out << "oml v1\n";
  out << "elements: " << n << "\n";
  if (L.has_names()) {
    out << "names:";
    for (const std::string& s : L.names()) out << " " << s;
    out << "\n";
  }
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      if (i == j || !L.leq(i, j)) continue;
      bool is_cover = true;
      for (Elem k = 0; k < n && is_cover; ++k)
        if (k != i && k != j && L.leq(i, k) && L.leq(k, j)) is_cover = false;
      if (is_cover) out << "covers: " << i << " " << j << "\n";
    }
  out << "ortho:";
  for (Elem a = 0; a < n; ++a) out << " " << L.ortho(a);
  out << "\n";
}

inline void write_lattice_file(const Oml& L, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LatticeFileError(0, "cannot open '" + path + "' for writing");
  write_lattice(L, out);
}

// ---------------------------------------------------------------------------
// named lattice specs, as the command line spells them
// ---------------------------------------------------------------------------

struct LatticeSpec {
  enum class Kind { Boolean, MO, Free2, Benzene, File, Product };
  Kind kind = Kind::Boolean;
  int param = 0;                     // Boolean, MO
  std::string path;                  // File
  std::vector<LatticeSpec> factors;  // Product (exactly two)
};

namespace detail {

inline int parse_spec_int(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("bad lattice spec '" + std::string(whole) + "'");
  int v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad lattice spec '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw std::invalid_argument("bad lattice spec '" + std::string(whole) + "'");
  }
  return v;
}

inline LatticeSpec parse_lattice_spec_simple(std::string_view text, std::string_view whole) {
  LatticeSpec spec;
  if (text == "free2") {
    spec.kind = LatticeSpec::Kind::Free2;
  } else if (text == "benzene") {
    spec.kind = LatticeSpec::Kind::Benzene;
  } else if (text.starts_with("file:")) {
    spec.kind = LatticeSpec::Kind::File;
    spec.path = std::string(text.substr(5));
  } else if (text.starts_with("bool")) {
    spec.kind = LatticeSpec::Kind::Boolean;
    spec.param = parse_spec_int(text.substr(4), whole);
  } else if (text.starts_with("mo")) {
    spec.kind = LatticeSpec::Kind::MO;
    spec.param = parse_spec_int(text.substr(2), whole);
  } else {
    throw std::invalid_argument("unknown lattice '" + std::string(whole) + "'");
  }
  return spec;
}

}  // namespace detail

// Accepts bool<k>, mo<n>, free2, benzene, file:<path> and one level of
// prod:<spec>,<spec>.
inline LatticeSpec parse_lattice_spec(std::string_view text) {
  if (text.starts_with("prod:")) {
    const std::string_view rest = text.substr(5);
    const std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("prod: wants two comma-separated lattices");
    LatticeSpec spec;
    spec.kind = LatticeSpec::Kind::Product;
    spec.factors.push_back(detail::parse_lattice_spec_simple(rest.substr(0, comma), text));
    spec.factors.push_back(detail::parse_lattice_spec_simple(rest.substr(comma + 1), text));
    return spec;
  }
  return detail::parse_lattice_spec_simple(text, text);
}

inline Oml build_lattice(const LatticeSpec& spec, int max_size = default_max_size) {
  const auto capped = [max_size](const RawLattice& raw, const char* what) {
    if (raw.size > max_size) throw std::length_error(std::string(what) + ": size exceeds limit");
    return validate(raw);
  };
  switch (spec.kind) {
    case LatticeSpec::Kind::Boolean: return boolean_algebra(spec.param, max_size);
    case LatticeSpec::Kind::MO: return mo(spec.param, max_size);
    case LatticeSpec::Kind::Free2: {
      Oml L = make_free().lattice;
      if (L.size() > max_size) throw std::length_error("free2: size exceeds limit");
      return L;
    }
    case LatticeSpec::Kind::Benzene: return capped(benzene(), "benzene");
    case LatticeSpec::Kind::File: return capped(read_lattice_file(spec.path), "lattice file");
    case LatticeSpec::Kind::Product:
      return product(build_lattice(spec.factors[0], max_size),
                     build_lattice(spec.factors[1], max_size), max_size);
  }
  throw std::logic_error("unreachable lattice spec kind");
}

inline Oml build_lattice(std::string_view text, int max_size = default_max_size) {
  return build_lattice(parse_lattice_spec(text), max_size);
}

struct NamedLattice {
  std::string name;
  Oml lattice;
};

// The fixed family every exhaustive check quantifies over.
inline std::vector<NamedLattice> standard_catalog() {
  std::vector<NamedLattice> out;
  for (int k = 0; k <= 4; ++k)
    out.push_back({"bool" + std::to_string(k), boolean_algebra(k)});
  for (int n = 1; n <= 4; ++n)
    out.push_back({"mo" + std::to_string(n), mo(n)});
  out.push_back({"prod:bool2,mo2", product(boolean_algebra(2), mo(2))});
  out.push_back({"free2", make_free().lattice});
  return out;
}

}  // namespace omld
