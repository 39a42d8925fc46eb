#pragma once

// The arity_asp command line. run() takes the arguments after the program
// name and writes to the given streams, so tests drive it in-process.
//
// Exit codes: 0 when the command ran (decisions are reported on stdout),
// 2 for usage, parse and format errors, 3 when a resource cap was exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "arity.hpp"
#include "classifier.hpp"
#include "errors.hpp"
#include "gadgets.hpp"
#include "generate.hpp"
#include "program.hpp"
#include "search.hpp"
#include "semantics.hpp"

namespace arity_asp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

enum class OutputMode { Text, Json };

struct Config {
  Caps caps;
  std::uint64_t seed = 0;
  OutputMode output = OutputMode::Text;
};

/// Parses ARITY_ASP_CAPS="enum,min"; both caps must be positive.
inline Caps caps_from_env(const char* value, Caps caps = {}) {
  if (!value || !*value) return caps;
  std::string s(value);
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw FormatError("ARITY_ASP_CAPS must look like \"enum,min\"");
  auto number = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("ARITY_ASP_CAPS components must be positive integers");
    const auto v = std::stoull(part);
    if (v == 0 || v > 62) throw FormatError("ARITY_ASP_CAPS components must be in 1..62");
    return static_cast<std::size_t>(v);
  };
  caps.enumeration = number(s.substr(0, comma));
  caps.minimality = number(s.substr(comma + 1));
  return caps;
}

namespace detail {

inline std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    else if (!cur.empty() || !out.empty()) throw FormatError("empty atom name in list \"" + list + "\"");
    cur.clear();
  };
  if (list.find_first_not_of(" \t") == std::string::npos) return out;
  for (char c : list) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  for (const auto& n : out)
    if (!is_user_atom_name(n) && !is_reserved_atom_name(n)) throw FormatError("invalid atom name '" + n + "'");
  return out;
}

inline nlohmann::json names_json(const Program& p, const Interpretation& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto a : m.atoms()) arr.push_back(p.name(a));
  return arr;
}

inline nlohmann::json verdict_json(const ComplexityVerdict& v) {
  return {{"label", std::string(to_string(v.label))},
          {"condition", v.condition},
          {"engine", std::string(to_string(v.engine))}};
}

inline std::string task_choices() {
  std::string s;
  for (auto t : kAllTasks) {
    if (!s.empty()) s += '|';
    s += cli_name(t);
  }
  return s;
}

inline TaskKind parse_task(const std::string& name) {
  if (auto t = task_from_cli_name(name)) return *t;
  throw FormatError("unknown task '" + name + "' (expected " + task_choices() + ")");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* caps_env = std::getenv("ARITY_ASP_CAPS")) {
  CLI::App app{"Complexity classification and decision procedures for disjunctive logic programs", "arity_asp"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string task_name, schema_name, arities_path, program_path, atom, model, semantics = "answer", name, input,
                                                                            atoms_list;
  std::size_t gen_atoms = 4, gen_rules = 6;
  std::uint64_t seed = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Complexity of a task for an arity class");
  classify_cmd->add_option("--task", task_name, detail::task_choices())->required();
  classify_cmd->add_option("--schema", schema_name, "implicit|explicit (default: as declared in the file)")
      ->check(CLI::IsMember({"implicit", "explicit"}));
  classify_cmd->add_option("--arities", arities_path, "Arity-set JSON file")->required();

  auto* profile_cmd = app.add_subcommand("profile", "Arity profile of a program and the per-task verdicts");
  profile_cmd->add_option("program", program_path, "Program file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Decide a task on a program");
  solve_cmd->add_option("--task", task_name, detail::task_choices())->required();
  solve_cmd->add_option("--atom", atom, "Query atom for cred|skep|scred|sskep");
  solve_cmd->add_option("program", program_path, "Program file")->required();

  auto* check_cmd = app.add_subcommand("check", "Check a candidate answer set or supported model");
  check_cmd->add_option("--semantics", semantics, "answer|supported")->check(CLI::IsMember({"answer", "supported"}));
  check_cmd->add_option("--model", model, "Comma-separated atoms")->required();
  check_cmd->add_option("program", program_path, "Program file")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Antichain of maximal elements of an implicit arity set");
  normalize_cmd->add_option("--arities", arities_path, "Arity-set JSON file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction construction");
  reduce_cmd
      ->add_option("--name", name, "sat-shape-1..4|eas-r|supp-7|supp-8|pad|fold|chain")
      ->required()
      ->check(CLI::IsMember(
          {"sat-shape-1", "sat-shape-2", "sat-shape-3", "sat-shape-4", "eas-r", "supp-7", "supp-8", "pad", "fold", "chain"}));
  reduce_cmd->add_option("--arities", arities_path, "Explicit arity set (pad)");
  reduce_cmd->add_option("--atom", atom, "Fresh query atom (fold)");
  reduce_cmd->add_option("--atoms", atoms_list, "Comma-separated chain atoms (chain; default: all)");
  reduce_cmd->add_option("input", input, "CNF or program file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Random program over an arity profile");
  gen_cmd->add_option("--profile", arities_path, "Arity-set JSON file")->required();
  gen_cmd->add_option("--atoms", gen_atoms, "Number of atoms")->required();
  gen_cmd->add_option("--rules", gen_rules, "Number of rules")->required();
  gen_cmd->add_option("--seed", seed, "Random seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Config cfg;
    cfg.caps = caps_from_env(caps_env);
    cfg.seed = seed;
    cfg.output = json ? OutputMode::Json : OutputMode::Text;

    if (*classify_cmd) {
      const auto kind = detail::parse_task(task_name);
      AritySet d = load_arity_set(arities_path);
      if (!schema_name.empty()) {
        const Schema s = schema_name == "explicit" ? Schema::Explicit : Schema::Implicit;
        if (s != d.schema()) d = AritySet(d.elements(), s);
      }
      const auto v = classify(kind, d);
      if (cfg.output == OutputMode::Json) {
        auto j = detail::verdict_json(v);
        j["task"] = std::string(to_string(kind));
        out << j.dump() << "\n";
      } else {
        out << describe(v) << "\n";
      }
    } else if (*profile_cmd) {
      const Program p = load_program(program_path);
      const AritySet prof = profile(p);
      const AritySet anti = normalize(prof);
      if (cfg.output == OutputMode::Json) {
        nlohmann::json multiset = nlohmann::json::array();
        for (const auto& [t, count] : arity_multiset(p)) multiset.push_back({{"arity", t.str()}, {"count", count}});
        nlohmann::json verdicts = nlohmann::json::object();
        for (auto t : kAllTasks) verdicts[std::string(to_string(t))] = detail::verdict_json(classify(t, prof));
        out << nlohmann::json{{"multiset", multiset},
                              {"antichain", arity_set_to_json(anti)["arities"]},
                              {"verdicts", verdicts}}
                   .dump()
            << "\n";
      } else {
        out << "multiset:";
        for (const auto& [t, count] : arity_multiset(p)) out << " " << t.str() << "x" << count;
        out << "\nantichain: " << anti.str() << "\n";
        for (auto t : kAllTasks)
          out << to_string(t) << ": " << describe(classify(t, prof)) << ", upper bound for this instance\n";
      }
    } else if (*solve_cmd) {
      const auto kind = detail::parse_task(task_name);
      const Task task = Task::make(kind, atom.empty() ? std::nullopt : std::optional<std::string>(atom));
      if (task.atom && !is_user_atom_name(*task.atom) && !is_reserved_atom_name(*task.atom))
        throw FormatError("invalid atom name '" + *task.atom + "'");
      Program p = load_program(program_path);
      const Decision d = decide(task, p, cfg.caps);
      if (task.atom) p.intern(*task.atom);  // same id decide() assigned
      if (cfg.output == OutputMode::Json) {
        nlohmann::json j{{"answer", d.answer},
                         {"witness", d.witness ? detail::names_json(p, *d.witness) : nlohmann::json(nullptr)},
                         {"engine", std::string(to_string(d.engine_used))},
                         {"verdict", {{"label", std::string(to_string(d.verdict.label))},
                                      {"condition", d.verdict.condition}}}};
        out << j.dump() << "\n";
      } else {
        out << (d.answer ? "YES" : "NO") << "\n";
        out << (d.witness ? interpretation_to_string(p, *d.witness) : std::string("-")) << "\n";
        out << to_string(d.engine_used) << "\n";
      }
    } else if (*check_cmd) {
      Program p = load_program(program_path);
      Interpretation m;
      for (const auto& n : detail::split_names(model)) m.insert(p.intern(n));
      const auto kind = semantics == "supported" ? SemanticsKind::Supported : SemanticsKind::AnswerSet;
      const bool valid = check(p, m, kind, cfg.caps);
      if (cfg.output == OutputMode::Json) out << nlohmann::json{{"valid", valid}}.dump() << "\n";
      else out << (valid ? "VALID" : "INVALID") << "\n";
    } else if (*normalize_cmd) {
      out << arity_set_to_json(normalize(load_arity_set(arities_path))).dump() << "\n";
    } else if (*reduce_cmd) {
      std::string text;
      std::optional<std::string> query;
      if (name.starts_with("sat-shape-")) {
        text = serialize_cnf(gadget_sat_shape(load_cnf(input), name.back() - '0'));
      } else if (name == "eas-r") {
        text = serialize_program(gadget_eas_R(load_cnf(input)));
      } else if (name == "supp-7" || name == "supp-8") {
        text = serialize_program(gadget_supported(load_cnf(input), name == "supp-7" ? 7 : 8));
      } else if (name == "pad") {
        if (arities_path.empty()) throw PreconditionError("reduce --name pad needs --arities");
        text = serialize_program(pad_to_explicit(load_program(input), load_arity_set(arities_path)));
      } else if (name == "fold") {
        if (atom.empty()) throw PreconditionError("reduce --name fold needs --atom");
        if (!is_user_atom_name(atom) && !is_reserved_atom_name(atom))
          throw FormatError("invalid atom name '" + atom + "'");
        text = serialize_program(fold_constraints(load_program(input), atom));
        query = atom;
      } else {
        const Program p = load_program(input);
        std::vector<std::string> chain = detail::split_names(atoms_list);
        if (atoms_list.empty()) {
          for (const auto& r : p.rules())
            if (r.is_constraint() && r.pos.empty() && r.neg.size() == 1) {
              const auto& n = p.name(r.neg.front());
              if (std::find(chain.begin(), chain.end(), n) == chain.end()) chain.push_back(n);
            }
        }
        auto [q, last] = chain_replace(p, chain);
        text = serialize_program(q);
        query = last;
      }
      if (cfg.output == OutputMode::Json) {
        nlohmann::json j{{"output", text}};
        if (query) j["query"] = *query;
        out << j.dump() << "\n";
      } else {
        if (query) out << "% query: " << *query << "\n";
        out << text;
      }
    } else if (*gen_cmd) {
      GenOptions opt;
      opt.atoms = gen_atoms;
      opt.rules = gen_rules;
      opt.seed = cfg.seed;
      const Program p = generate_program(load_arity_set(arities_path), opt);
      if (cfg.output == OutputMode::Json) out << nlohmann::json{{"program", serialize_program(p)}}.dump() << "\n";
      else out << serialize_program(p);
    }
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace arity_asp::cli
