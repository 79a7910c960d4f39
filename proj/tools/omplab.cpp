// omplab: command-line front end for the omplab library.
//
// Exit codes: 0 all checks pass, 1 a check failed (report printed),
// 2 usage, parse or structure error, 3 internal error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omplab/omplab.hpp"
#include "omplab/report_json.hpp"

namespace {

using namespace omplab;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A model given on the command line: a .omp/.iop file, or @NAME for a
// catalog entry.
struct Model {
  std::string label;
  std::optional<OrthoPoset> poset;
  IopTable table;
};

Model load(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    auto e = catalog_entry(arg.substr(1));
    if (!e) throw UsageError("unknown catalog entry '" + arg.substr(1) + "'");
    return {e->name, e->structure, implication_table(e->structure)};
  }
  return std::visit(
      [&](auto&& m) -> Model {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OrthoPoset>) return {arg, m, implication_table(m)};
        else return {arg, std::nullopt, m};
      },
      load_model(arg));
}

const OrthoPoset& need_poset(const Model& m) {
  if (!m.poset) throw UsageError(m.label + ": this command needs an orthoposet (.omp) model");
  return *m.poset;
}

std::string set_text(ElementSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : s) {
    if (!first) out += ", ";
    out += x < names.size() ? names[x] : std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string tuple_text(const std::vector<ElementId>& xs, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i] < names.size() ? names[xs[i]] : std::to_string(xs[i]);
  }
  return out + ")";
}

class Output {
public:
  explicit Output(bool json) : json_(json) {}

  bool json() const { return json_; }

  // Prints a report and returns its exit code.
  int report(const ModelReport& r, const std::vector<std::string>& names) {
    if (json_) {
      std::cout << report_to_json(r, names).dump(2) << "\n";
    } else {
      std::cout << r.check << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
      for (const ItemResult& i : r.items) {
        std::cout << "  " << i.label << ": " << (i.pass ? "pass" : "FAIL");
        if (!i.witness.empty()) std::cout << " at " << tuple_text(i.witness, names);
        if (i.pass) std::cout << " (" << i.checked << " checked)";
        if (!i.message.empty()) std::cout << (i.pass ? " " : " - ") << i.message;
        std::cout << "\n";
        for (const NamedSet& v : i.values) std::cout << "    " << v.label << " = " << set_text(v.members, names) << "\n";
      }
    }
    return r.pass() ? kPass : kFail;
  }

  void json_value(const Json& j) { std::cout << j.dump(2) << "\n"; }

private:
  bool json_;
};

std::chrono::milliseconds budget_of(long ms) { return std::chrono::milliseconds{ms}; }

Judgment hypothesis(const std::string& text) {
  if (text.find("|-") != std::string::npos || text.find("~=") != std::string::npos) return parse_judgment(text);
  return Judgment::assertion(parse_formula(text));
}

ElementId resolve(const std::vector<std::string>& names, const std::string& name) {
  for (ElementId i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw UsageError("unknown element '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"omplab: implication calculus for finite orthomodular posets"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");
  app.fallthrough();

  std::string model_arg;
  std::vector<std::string> model_args;
  std::function<int(Output&)> action;

  auto* validate = app.add_subcommand("validate", "Check that an orthoposet is orthomodular");
  validate->add_option("model", model_arg, "Model (.omp or @NAME)")->required();
  validate->callback([&] {
    action = [&](Output& out) {
      const Model m = load(model_arg);
      const OrthoPoset& p = need_poset(m);
      return out.report(validate_omp(p), p.names());
    };
  });

  std::vector<std::string> pair;
  bool table = false;
  auto* arrow_cmd = app.add_subcommand("arrow", "Evaluate the set-valued implication");
  arrow_cmd->add_option("model", model_arg, "Model (.omp, .iop or @NAME)")->required();
  auto* pair_opt = arrow_cmd->add_option("--pair", pair, "Operands x y")->expected(2);
  auto* table_opt = arrow_cmd->add_flag("--table", table, "Print the full table in .iop format");
  pair_opt->excludes(table_opt);
  arrow_cmd->callback([&] {
    action = [&](Output& out) {
      const Model m = load(model_arg);
      const IopTable& t = m.table;
      if (pair.empty()) {
        if (out.json()) {
          Json rows = Json::array();
          for (ElementId x = 0; x < t.size(); ++x)
            for (ElementId y = 0; y < t.size(); ++y) {
              Json members = Json::array();
              for (ElementId z : t.arrow(x, y)) members.push_back(t.name(z));
              rows.push_back(Json{{"x", t.name(x)}, {"y", t.name(y)}, {"result", members}});
            }
          out.json_value(Json{{"arrow", rows}});
        } else {
          std::cout << write_iop(t);
        }
        return kPass;
      }
      const ElementId x = resolve(t.names(), pair[0]);
      const ElementId y = resolve(t.names(), pair[1]);
      if (out.json()) {
        Json members = Json::array();
        for (ElementId z : t.arrow(x, y)) members.push_back(Json{{"index", z}, {"name", t.name(z)}});
        out.json_value(Json{{"x", t.name(x)}, {"y", t.name(y)}, {"result", members}});
      } else {
        std::cout << t.name(x) << " -> " << t.name(y) << " = " << set_text(t.arrow(x, y), t.names()) << "\n";
      }
      return kPass;
    };
  });

  auto* axioms = app.add_subcommand("axioms", "Check (O1)-(O10) on a table or on the table of an orthoposet");
  axioms->add_option("model", model_arg, "Model (.omp, .iop or @NAME)")->required();
  axioms->callback([&] {
    action = [&](Output& out) {
      const Model m = load(model_arg);
      const AxiomReport r = check_axioms(m.table);
      if (out.json()) return out.report(r.to_report(), m.table.names());
      for (std::size_t i = 0; i < r.axioms.size(); ++i) {
        const ItemResult& a = r.axioms[i];
        std::cout << a.label << ": " << (a.pass ? "pass" : "FAIL");
        if (!a.pass) {
          std::cout << " at " << tuple_text(a.witness, m.table.names());
          if (!a.message.empty()) std::cout << " - " << a.message;
        }
        std::cout << "\n";
        if (!a.pass)
          for (const NamedSet& v : a.values) std::cout << "    " << v.label << " = " << set_text(v.members, m.table.names()) << "\n";
      }
      if (r.all_pass()) {
        std::cout << "O1..O10: pass\n";
        return kPass;
      }
      std::cout << "O1..O10: FAIL (";
      bool first = true;
      for (int k : r.failing()) {
        std::cout << (first ? "" : ", ") << kAxiomLabels[k - 1];
        first = false;
      }
      std::cout << ")\n";
      return kFail;
    };
  });

  auto* roundtrip = app.add_subcommand("roundtrip", "Check P(I(P)) = P for .omp, I(P(T)) = T for .iop");
  roundtrip->add_option("model", model_arg, "Model (.omp, .iop or @NAME)")->required();
  roundtrip->callback([&] {
    action = [&](Output& out) {
      const Model m = load(model_arg);
      if (m.poset) return out.report(roundtrip_check(*m.poset), m.poset->names());
      return out.report(roundtrip_iop_check(m.table), m.table.names());
    };
  });

  auto* condc = app.add_subcommand("condc", "Check condition (C) on a table");
  condc->add_option("model", model_arg, "Model (.omp, .iop or @NAME)")->required();
  condc->callback([&] {
    action = [&](Output& out) {
      const Model m = load(model_arg);
      return out.report(condition_c_check(m.table), m.table.names());
    };
  });

  std::string proof_path;
  std::vector<std::string> hyps;
  auto* prove = app.add_subcommand("prove", "Proof checking");
  prove->require_subcommand(1);
  auto* prove_check = prove->add_subcommand("check", "Check a derivation file");
  prove_check->add_option("file", proof_path, "Derivation (.prf)")->required();
  prove_check->add_option("--hyp", hyps, "Extra hypothesis (formula or judgment)");
  prove_check->callback([&] {
    action = [&](Output& out) {
      const Derivation d = parse_derivation(read_file(proof_path));
      std::vector<Judgment> extra;
      for (const auto& h : hyps) extra.push_back(hypothesis(h));
      return out.report(check_derivation(d, extra), {});
    };
  });

  int vars = 3;
  auto* soundness = app.add_subcommand("soundness", "Check every rule of the calculus on a finite model");
  soundness->add_option("model", model_arg, "Model (.omp, .iop or @NAME)")->required();
  soundness->add_option("--vars", vars, "Variables per schema instance")->check(CLI::Range(1, 3));
  soundness->callback([&] {
    action = [&](Output& out) {
      const Model m = load(model_arg);
      return out.report(soundness_check(m.table, vars), m.table.names());
    };
  });

  auto* algsuite = app.add_subcommand("algsuite", "Algebraizability conditions: fixtures and finite models");
  algsuite->add_option("models", model_args, "Models (default: the orthomodular catalog)");
  algsuite->callback([&] {
    action = [&](Output& out) {
      std::vector<NamedTable> models;
      if (model_args.empty())
        for (const auto& e : catalog_omps()) models.push_back({e.name, implication_table(e.structure)});
      for (const auto& a : model_args) {
        Model m = load(a);
        models.push_back({m.label, std::move(m.table)});
      }
      return out.report(algebraizability_suite(models), {});
    };
  });

  std::size_t n = 6;
  std::string out_dir;
  long budget_ms = 0;
  auto* search = app.add_subcommand("search", "Enumeration and searches over small orthoposets");
  search->require_subcommand(1);
  auto add_search_opts = [&](CLI::App* c) {
    c->add_option("--n", n, "Element count bound")->check(CLI::Range(2, 16));
    c->add_option("--budget-ms", budget_ms, "Time budget in milliseconds (0: none)")->check(CLI::NonNegativeNumber);
  };
  auto budget = [&]() -> std::optional<std::chrono::milliseconds> {
    if (budget_ms > 0) return budget_of(budget_ms);
    return std::nullopt;
  };

  auto* enum_cmd = search->add_subcommand("enum", "Enumerate orthoposets on n elements up to isomorphism");
  add_search_opts(enum_cmd);
  enum_cmd->add_option("--out", out_dir, "Write each class as class-NNN.omp into this directory");
  enum_cmd->callback([&] {
    action = [&](Output& out) {
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      Json classes = Json::array();
      std::size_t k = 0;
      const EnumResult r = enumerate_orthoposets(
          n,
          [&](const OrthoPoset& p) {
            ++k;
            const bool omp = validate_omp(p).pass();
            const bool lat = is_lattice(p);
            char file[32];
            std::snprintf(file, sizeof file, "class-%03zu.omp", k);
            if (!out_dir.empty()) {
              std::ofstream f(std::filesystem::path(out_dir) / file, std::ios::binary);
              f << write_omp(p);
            }
            if (out.json()) {
              classes.push_back(Json{{"index", k}, {"orthomodular", omp}, {"lattice", lat}, {"omp", write_omp(p)}});
            } else {
              std::cout << file << ": " << (omp ? "orthomodular" : "not orthomodular") << ", "
                        << (lat ? "lattice" : "not a lattice") << "\n";
            }
          },
          budget());
      if (out.json()) {
        out.json_value(Json{{"n", n}, {"classes", r.count}, {"complete", r.complete}, {"structures", classes}});
      } else {
        std::cout << "n=" << n << " classes=" << r.count << (r.complete ? "" : " (incomplete: budget exhausted)") << "\n";
      }
      return kPass;
    };
  });

  auto* scan = search->add_subcommand("scan", "Orthomodularity versus (O1)-(O10) on every class up to n");
  add_search_opts(scan);
  scan->callback([&] {
    action = [&](Output& out) { return out.report(equivalence_scan(n, budget()), {}); };
  });

  auto* findc = search->add_subcommand("findc", "Search perturbed tables passing (O1)-(O10) but failing (C)");
  findc->add_option("--n", n, "Element count bound")->check(CLI::Range(2, 6));
  findc->callback([&] {
    action = [&](Output& out) {
      const auto t = find_c_violator(n);
      if (out.json()) {
        out.json_value(t ? Json{{"found", true}, {"iop", write_iop(*t)}} : Json{{"found", false}});
      } else if (t) {
        std::cout << "# passes O1..O10, fails (C)\n" << write_iop(*t);
      } else {
        std::cout << "not found for n <= " << n << "\n";
      }
      return kPass;
    };
  });

  std::string entry_name;
  bool as_iop = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Standard models");
  catalog_cmd->require_subcommand(1);
  auto* list = catalog_cmd->add_subcommand("list", "List catalog entries");
  list->callback([&] {
    action = [&](Output& out) {
      Json entries = Json::array();
      for (const auto& e : catalog()) {
        if (out.json()) {
          entries.push_back(Json{{"name", e.name}, {"elements", e.structure.size()}, {"orthomodular", e.is_omp}, {"lattice", e.is_lattice}});
        } else {
          std::cout << e.name << ": " << e.structure.size() << " elements, " << (e.is_omp ? "orthomodular" : "not orthomodular")
                    << ", " << (e.is_lattice ? "lattice" : "not a lattice") << "\n";
        }
      }
      if (out.json()) out.json_value(entries);
      return kPass;
    };
  });
  auto* dump = catalog_cmd->add_subcommand("dump", "Print a catalog entry");
  dump->add_option("name", entry_name, "Entry name")->required();
  dump->add_flag("--iop", as_iop, "Print the implication table instead of the order");
  dump->callback([&] {
    action = [&](Output& out) {
      auto e = catalog_entry(entry_name);
      if (!e) throw UsageError("unknown catalog entry '" + entry_name + "'");
      const std::string text = as_iop ? write_iop(implication_table(e->structure)) : write_omp(e->structure);
      if (out.json()) out.json_value(Json{{"name", e->name}, {as_iop ? "iop" : "omp", text}});
      else std::cout << text;
      return kPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output out(json);
  try {
    return action(out);
  } catch (const UsageError& e) {
    std::cerr << "omplab: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "omplab: parse error: " << e.what() << "\n";
  } catch (const StructureError& e) {
    std::cerr << "omplab: invalid structure: " << e.what() << "\n";
  } catch (const ContractError& e) {
    std::cerr << "omplab: " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "omplab: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
