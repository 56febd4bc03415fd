#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "omld/omld.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string lattice;
  std::string format = "text";
  int max_size = omld::default_max_size;
};

void add_common(CLI::App* sub, Options& opt, bool with_lattice = true) {
  if (with_lattice)
    sub->add_option("--lattice", opt.lattice,
                    "bool<k>, mo<n>, free2, benzene, prod:<a>,<b> or file:<path>")
        ->required();
  sub->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--max-size", opt.max_size, "largest lattice size to build")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// two runs on the same input must produce identical bytes
void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_grid(const omld::Oml& L,
                const std::function<std::string(omld::Elem, omld::Elem)>& cell) {
  const int n = L.size();
  std::size_t w = 1;
  for (omld::Elem a = 0; a < n; ++a) w = std::max(w, L.name(a).size());
  for (omld::Elem a = 0; a < n; ++a)
    for (omld::Elem b = 0; b < n; ++b) w = std::max(w, cell(a, b).size());
  const auto pad = [&](const std::string& s) { return s + std::string(w - s.size(), ' '); };
  const auto flush = [](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << "\n";
  };
  std::string head = pad("");
  for (omld::Elem b = 0; b < n; ++b) head += "  " + pad(L.name(b));
  flush(head);
  for (omld::Elem a = 0; a < n; ++a) {
    std::string line = pad(L.name(a));
    for (omld::Elem b = 0; b < n; ++b) line += "  " + pad(cell(a, b));
    flush(line);
  }
}

std::string member_list(const omld::Oml& L, const std::vector<omld::Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += L.name(xs[i]);
  }
  return out + "}";
}

std::string nav_coord(const omld::NavaraElement& e) {
  std::string out = "({";
  bool first = true;
  for (int b = 0; b < 4; ++b)
    if (e.bool_mask >> b & 1) {
      if (!first) out += ", ";
      out += std::string(omld::navara_atom_names[b]);
      first = false;
    }
  out += "}, ";
  out += std::string(omld::mo2_part_name(e.mo2));
  return out + ")";
}

int cmd_validate(const Options& opt) {
  try {
    const omld::Oml L = omld::build_lattice(opt.lattice, opt.max_size);
    if (opt.format == "json") {
      ordered_json doc;
      doc["valid"] = true;
      doc["elements"] = L.size();
      emit(doc);
    } else {
      std::cout << "valid OML, " << L.size() << " elements\n";
    }
    return 0;
  } catch (const omld::ValidationError& e) {
    if (opt.format == "json") {
      ordered_json doc;
      doc["valid"] = false;
      doc["defect"] = std::string(omld::defect_name(e.violation().defect));
      doc["message"] = e.what();
      emit(doc);
    } else {
      std::cout << "invalid: " << e.what() << "\n";
    }
    return 1;
  }
}

int cmd_identity(const Options& opt, const std::string& equation) {
  const omld::Oml L = omld::build_lattice(opt.lattice, opt.max_size);
  const auto [lhs, rhs] = omld::parse_equation(equation);
  const omld::IdentityReport rep = omld::check_identity(L, lhs, rhs);
  if (opt.format == "json") {
    ordered_json doc;
    doc["lattice"] = opt.lattice;
    doc["equation"] = omld::to_string(lhs) + " = " + omld::to_string(rhs);
    doc["holds"] = rep.holds;
    doc["assignments_checked"] = rep.tuples_checked;
    if (rep.counterexample) {
      ordered_json cx = ordered_json::object();
      for (const auto& [var, val] : *rep.counterexample) cx[var] = L.name(val);
      doc["counterexample"] = cx;
      doc["lhs_value"] = L.name(omld::eval(L, lhs, *rep.counterexample));
      doc["rhs_value"] = L.name(omld::eval(L, rhs, *rep.counterexample));
    }
    emit(doc);
  } else if (rep.holds) {
    std::cout << "holds (" << rep.tuples_checked << " assignments checked)\n";
  } else {
    std::cout << "counterexample:";
    for (const auto& [var, val] : *rep.counterexample)
      std::cout << " " << var << "=" << L.name(val);
    std::cout << "\n";
    std::cout << "lhs = " << L.name(omld::eval(L, lhs, *rep.counterexample)) << "\n";
    std::cout << "rhs = " << L.name(omld::eval(L, rhs, *rep.counterexample)) << "\n";
  }
  return rep.holds ? 0 : 1;
}

int cmd_table(const Options& opt, const std::string& term_text) {
  const omld::Oml L = omld::build_lattice(opt.lattice, opt.max_size);
  const omld::TermPtr t = omld::parse_term(term_text);
  const std::vector<std::string> vars = omld::free_vars(t);
  if (vars.size() != 2)
    throw std::invalid_argument("table wants a term in exactly two variables, got " +
                                std::to_string(vars.size()));
  const int n = L.size();
  std::vector<omld::Elem> vals(static_cast<std::size_t>(n) * n);
  for (omld::Elem a = 0; a < n; ++a)
    for (omld::Elem b = 0; b < n; ++b)
      vals[static_cast<std::size_t>(a) * n + b] =
          omld::eval(L, t, omld::Assignment{{vars[0], a}, {vars[1], b}});
  if (opt.format == "json") {
    ordered_json doc;
    doc["lattice"] = opt.lattice;
    doc["term"] = omld::to_string(t);
    doc["rows_var"] = vars[0];
    doc["cols_var"] = vars[1];
    ordered_json names = ordered_json::array();
    for (omld::Elem a = 0; a < n; ++a) names.push_back(L.name(a));
    doc["elements"] = names;
    ordered_json table = ordered_json::array();
    for (omld::Elem a = 0; a < n; ++a) {
      ordered_json row = ordered_json::array();
      for (omld::Elem b = 0; b < n; ++b)
        row.push_back(L.name(vals[static_cast<std::size_t>(a) * n + b]));
      table.push_back(row);
    }
    doc["table"] = table;
    emit(doc);
  } else {
    std::cout << omld::to_string(t) << " with rows " << vars[0] << ", columns " << vars[1]
              << "\n";
    print_grid(L, [&](omld::Elem a, omld::Elem b) {
      return L.name(vals[static_cast<std::size_t>(a) * n + b]);
    });
  }
  return 0;
}

int cmd_relations(const Options& opt) {
  const omld::Oml L = omld::build_lattice(opt.lattice, opt.max_size);
  const int n = L.size();
  if (opt.format == "json") {
    ordered_json doc;
    doc["lattice"] = opt.lattice;
    ordered_json names = ordered_json::array();
    for (omld::Elem a = 0; a < n; ++a) names.push_back(L.name(a));
    doc["elements"] = names;
    ordered_json cmat = ordered_json::array(), pmat = ordered_json::array();
    for (omld::Elem a = 0; a < n; ++a) {
      ordered_json crow = ordered_json::array(), prow = ordered_json::array();
      for (omld::Elem b = 0; b < n; ++b) {
        crow.push_back(omld::commutes(L, a, b));
        prow.push_back(omld::perspective(L, a, b).has_value());
      }
      cmat.push_back(crow);
      pmat.push_back(prow);
    }
    doc["commutes"] = cmat;
    doc["perspective"] = pmat;
    emit(doc);
  } else {
    std::cout << "commutes:\n";
    print_grid(L, [&](omld::Elem a, omld::Elem b) {
      return std::string(omld::commutes(L, a, b) ? "1" : "0");
    });
    std::cout << "perspective:\n";
    print_grid(L, [&](omld::Elem a, omld::Elem b) {
      return std::string(omld::perspective(L, a, b) ? "1" : "0");
    });
  }
  return 0;
}

int cmd_free(const Options& opt) {
  const omld::FreeOml f = omld::make_free();
  if (opt.format == "json") {
    ordered_json doc;
    doc["elements"] = f.lattice.size();
    doc["x"] = f.lattice.name(f.x);
    doc["y"] = f.lattice.name(f.y);
    ordered_json coords = ordered_json::array();
    for (int i = 0; i < f.lattice.size(); ++i) {
      const omld::NavaraElement e = omld::nav_element(i);
      ordered_json row;
      row["index"] = i;
      ordered_json atoms = ordered_json::array();
      for (int b = 0; b < 4; ++b)
        if (e.bool_mask >> b & 1) atoms.push_back(std::string(omld::navara_atom_names[b]));
      row["atoms"] = atoms;
      row["mo2"] = std::string(omld::mo2_part_name(e.mo2));
      coords.push_back(row);
    }
    doc["coordinates"] = coords;
    ordered_json pre = ordered_json::array();
    for (omld::SymDiffKind k : omld::sym_diff_kinds) {
      const omld::NavaraElement e{omld::sym_diff_bool_mask, omld::sym_diff_part(k)};
      ordered_json row;
      row["index"] = omld::nav_index(e);
      row["kind"] = std::string(omld::sym_diff_name(k));
      row["symbol"] = std::string(omld::sym_diff_symbol(k));
      row["coordinate"] = nav_coord(e);
      pre.push_back(row);
    }
    doc["preimage"] = pre;
    emit(doc);
  } else {
    std::cout << "free OML on two generators: " << f.lattice.size() << " elements\n";
    std::cout << "x = " << f.lattice.name(f.x) << " = " << nav_coord(omld::nav_element(f.x))
              << "\n";
    std::cout << "y = " << f.lattice.name(f.y) << " = " << nav_coord(omld::nav_element(f.y))
              << "\n";
    std::cout << "elements:\n";
    for (int i = 0; i < f.lattice.size(); ++i)
      std::cout << "  " << f.lattice.name(i) << " = " << nav_coord(omld::nav_element(i))
                << "\n";
    std::cout << "preimage of the six symmetric differences:\n";
    for (omld::SymDiffKind k : omld::sym_diff_kinds) {
      const omld::NavaraElement e{omld::sym_diff_bool_mask, omld::sym_diff_part(k)};
      std::string sym(omld::sym_diff_symbol(k));
      sym.resize(5, ' ');
      std::cout << "  " << sym << " " << omld::sym_diff_name(k) << " = "
                << f.lattice.name(omld::nav_index(e)) << " = " << nav_coord(e) << "\n";
    }
  }
  return 0;
}

int cmd_congruences(const Options& opt) {
  const omld::Oml L = omld::build_lattice(opt.lattice, opt.max_size);
  const std::vector<omld::PIdeal> ideals = omld::all_p_ideals(L);
  const omld::CongruenceSummary s = omld::congruence_properties(L);
  if (opt.format == "json") {
    ordered_json doc;
    doc["lattice"] = opt.lattice;
    ordered_json list = ordered_json::array();
    for (const omld::PIdeal& I : ideals) {
      const omld::Congruence theta = omld::congruence_from_pideal(L, I);
      ordered_json entry;
      ordered_json members = ordered_json::array();
      for (omld::Elem e : I.members) members.push_back(L.name(e));
      entry["members"] = members;
      ordered_json classes = ordered_json::array();
      for (const auto& cls : omld::congruence_classes(theta)) {
        ordered_json c = ordered_json::array();
        for (omld::Elem e : cls) c.push_back(L.name(e));
        classes.push_back(c);
      }
      entry["classes"] = classes;
      list.push_back(entry);
    }
    doc["ideals"] = list;
    doc["ideal_count"] = s.ideals;
    doc["congruence_count"] = s.congruences;
    doc["regular"] = s.regular;
    doc["uniform"] = s.uniform;
    doc["permutable"] = s.permutable;
    emit(doc);
  } else {
    for (const omld::PIdeal& I : ideals) {
      const omld::Congruence theta = omld::congruence_from_pideal(L, I);
      std::cout << "p-ideal " << member_list(L, I.members) << " -> classes";
      for (const auto& cls : omld::congruence_classes(theta))
        std::cout << " " << member_list(L, cls);
      std::cout << "\n";
    }
    std::cout << s.ideals << " p-ideals, " << s.congruences << " congruences\n";
    std::cout << std::boolalpha << "regular=" << s.regular << " uniform=" << s.uniform
              << " permutable=" << s.permutable << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite orthomodular lattice toolkit"};
  app.require_subcommand(1);
  Options opt;
  std::string equation, term_text;

  CLI::App* sub_validate = app.add_subcommand("validate", "check the OML axioms");
  add_common(sub_validate, opt);
  CLI::App* sub_identity =
      app.add_subcommand("identity", "test an equation over all assignments");
  add_common(sub_identity, opt);
  sub_identity->add_option("equation", equation, "equation, e.g. \"x <+l> y = y <+l> x\"")
      ->required();
  CLI::App* sub_table =
      app.add_subcommand("table", "print the value table of a two-variable term");
  add_common(sub_table, opt);
  sub_table->add_option("term", term_text, "term, e.g. \"x <d> y\"")->required();
  CLI::App* sub_relations =
      app.add_subcommand("relations", "print the commutes and perspective relations");
  add_common(sub_relations, opt);
  CLI::App* sub_free = app.add_subcommand("free", "inspect the free OML on two generators");
  add_common(sub_free, opt, false);
  CLI::App* sub_congruences =
      app.add_subcommand("congruences", "list p-ideals and congruence properties");
  add_common(sub_congruences, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_validate->parsed()) return cmd_validate(opt);
    if (sub_identity->parsed()) return cmd_identity(opt, equation);
    if (sub_table->parsed()) return cmd_table(opt, term_text);
    if (sub_relations->parsed()) return cmd_relations(opt);
    if (sub_free->parsed()) return cmd_free(opt);
    if (sub_congruences->parsed()) return cmd_congruences(opt);
  } catch (const omld::ValidationError& e) {
    std::cerr << "invalid lattice: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
