// SPDX-License-Identifier: Apache-2.0

#include "dtt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dtt/derivation_io.hpp"
#include "dtt/dil.hpp"
#include "dtt/kripke.hpp"
#include "dtt/reachability.hpp"
#include "dtt/reduction.hpp"
#include "dtt/text.hpp"
#include "dtt/typing.hpp"

namespace dtt {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)c)) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Strategy parse_strategy(const std::string& s) {
  if (s == "lo") return Strategy::lo();
  if (s.rfind("rand:", 0) == 0)
    return Strategy::random(std::stoull(s.substr(5)));
  throw CLI::ValidationError("--strategy", "expected lo or rand:SEED");
}

// Key: value lines for case-elab input.
std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(s.begin());
      while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
    };
    trim(key);
    trim(value);
    if (!key.empty()) out[key] = value;
  }
  return out;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dualized logic and type theory toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  bool machine = false;

  // check
  auto* cmd_check = app.add_subcommand("check", "Type-check a goal file");
  std::string check_file;
  cmd_check->add_option("file", check_file, "Goal file")->required();

  // normalize
  auto* cmd_norm = app.add_subcommand("normalize", "Normalize a term file");
  std::string norm_file, norm_strategy = "lo";
  bool norm_trace = false;
  std::size_t norm_max = 100000;
  cmd_norm->add_option("file", norm_file, "Term file")->required();
  cmd_norm->add_flag("--trace", norm_trace, "Print one line per step");
  cmd_norm->add_option("--max-steps", norm_max, "Step budget");
  cmd_norm->add_option("--strategy", norm_strategy, "lo or rand:SEED");

  // reach
  auto* cmd_reach = app.add_subcommand("reach", "Decide graph reachability");
  std::string reach_graph, reach_n1, reach_pol, reach_n2;
  cmd_reach->add_option("graph", reach_graph, "Graph (edge list or .)")->required();
  cmd_reach->add_option("from", reach_n1)->required();
  cmd_reach->add_option("pol", reach_pol)->required();
  cmd_reach->add_option("to", reach_n2)->required();

  // dil-check
  auto* cmd_dilcheck = app.add_subcommand("dil-check", "Check a derivation file");
  std::string dilcheck_file, dilcheck_mode = "general";
  cmd_dilcheck->add_option("file", dilcheck_file)->required();
  cmd_dilcheck->add_option("--mode", dilcheck_mode, "general or axiom")
      ->check(CLI::IsMember({"general", "axiom"}));

  // dil-prove
  auto* cmd_prove = app.add_subcommand("dil-prove", "Bounded proof search");
  std::string prove_seq;
  int prove_depth = 8;
  cmd_prove->add_option("sequent", prove_seq)->required();
  cmd_prove->add_option("--depth", prove_depth)->required();

  // l-check
  auto* cmd_lcheck = app.add_subcommand("l-check", "Check a labelled derivation file");
  std::string lcheck_file;
  cmd_lcheck->add_option("file", lcheck_file)->required();

  // translate
  auto* cmd_tr = app.add_subcommand("translate", "Translate between the calculi");
  std::string tr_file, tr_kind = "formula";
  bool tr_to_dil = false, tr_to_l = false;
  cmd_tr->add_option("file", tr_file)->required();
  cmd_tr->add_flag("--to-dil", tr_to_dil);
  cmd_tr->add_flag("--to-l", tr_to_l);
  cmd_tr->add_option("--kind", tr_kind)->check(CLI::IsMember({"formula", "sequent"}));

  // kripke-validate
  auto* cmd_kv = app.add_subcommand("kripke-validate", "Validity over finite models");
  std::string kv_seq, kv_atoms;
  int kv_worlds = 3, kv_jobs = 1;
  cmd_kv->add_option("sequent", kv_seq)->required();
  cmd_kv->add_option("--max-worlds", kv_worlds)->required();
  cmd_kv->add_option("--atoms", kv_atoms, "Comma-separated atom alphabet");
  cmd_kv->add_option("--jobs", kv_jobs, "Parallel model evaluation");

  // case-elab
  auto* cmd_case = app.add_subcommand("case-elab", "Expand the derived case eliminator");
  std::string case_file;
  cmd_case->add_option("file", case_file)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  machine = format == "machine";

  try {
    if (*cmd_check) {
      Goal goal = parse_goal(slurp(check_file));
      CheckResult r = check(goal_of(goal.sequent, goal.term));
      if (r.ok()) {
        out << "ok\n";
        return 0;
      }
      err << (machine ? "error " : "type error: ") << r.error->message << " "
          << r.error->where() << "\n";
      return 1;
    }

    if (*cmd_norm) {
      Term t = parse_term(slurp(norm_file));
      NormalizeResult r = normalize(t, norm_max, parse_strategy(norm_strategy));
      if (norm_trace) {
        for (std::size_t i = 0; i < r.trace.size(); ++i)
          out << (i + 1) << " " << rule_name(r.trace[i].rule) << " "
              << position_text(r.trace[i].position) << " "
              << to_text(r.trace[i].result) << "\n";
      } else {
        out << to_text(r.term) << "\n";
      }
      if (r.budget_exceeded) {
        err << "budget exceeded after " << r.steps() << " steps\n";
        return 1;
      }
      return 0;
    }

    if (*cmd_reach) {
      Graph g = parse_graph(reach_graph);
      Polarity p = parse_polarity(reach_pol);
      bool ok = reaches(g, NodeId{reach_n1}, p, NodeId{reach_n2});
      out << (ok ? "reachable" : "unreachable") << "\n";
      return ok ? 0 : 1;
    }

    if (*cmd_dilcheck) {
      DilDerivation d = read_dil_derivation(slurp(dilcheck_file));
      DilMode mode =
          dilcheck_mode == "axiom" ? DilMode::AxiomCut : DilMode::GeneralCut;
      if (auto e = check_dil(d, mode)) {
        err << (machine ? "invalid " : "invalid derivation: ") << e->message
            << " " << e->where() << "\n";
        return 1;
      }
      out << "valid\n";
      return 0;
    }

    if (*cmd_prove) {
      Sequent s = parse_sequent(prove_seq);
      if (auto d = prove_dil(s, prove_depth)) {
        out << write_dil_derivation(*d);
        return 0;
      }
      out << "not-found depth=" << prove_depth << "\n";
      return 1;
    }

    if (*cmd_lcheck) {
      LDerivation d = read_l_derivation(slurp(lcheck_file));
      if (auto e = check_l(d)) {
        err << (machine ? "invalid " : "invalid derivation: ") << e->message
            << " at path ";
        for (std::size_t i = 0; i < e->path.size(); ++i)
          err << (i ? "." : "") << e->path[i];
        if (e->path.empty()) err << "root";
        err << "\n";
        return 1;
      }
      out << "valid\n";
      return 0;
    }

    if (*cmd_tr) {
      if (tr_to_dil == tr_to_l)
        throw CLI::ValidationError("translate", "pass exactly one of --to-dil/--to-l");
      std::string text = slurp(tr_file);
      if (tr_kind == "formula") {
        if (tr_to_dil)
          out << to_text(d_formula(parse_lformula(text))) << "\n";
        else
          out << to_text(l_formula(parse_formula(text))) << "\n";
      } else {
        if (tr_to_dil) {
          LSequent ls = normalize_empty_right(parse_lsequent(text));
          for (const auto& a : activations(ls)) out << to_text(a) << "\n";
        } else {
          out << to_text(l_sequent(parse_sequent(text))) << "\n";
        }
      }
      return 0;
    }

    if (*cmd_kv) {
      Sequent s = parse_sequent(kv_seq);
      Verdict v = validate(s, kv_worlds, split_commas(kv_atoms), kv_jobs);
      if (v.valid) {
        out << "valid\n";
        return 0;
      }
      out << "countermodel\n";
      // machine format omits the hand-audit evaluation trace
      out << countermodel_report(*v.countermodel, !machine);
      return 1;
    }

    if (*cmd_case) {
      auto kv = parse_kv(slurp(case_file));
      for (const char* key :
           {"scrutinee", "var", "left", "right", "pol", "a", "b", "c", "node"})
        if (!kv.count(key))
          throw std::runtime_error(std::string("case-elab input lacks '") + key +
                                   "'");
      Term result = elaborate_case(
          parse_term(kv["scrutinee"]), kv["var"], parse_term(kv["left"]),
          parse_term(kv["right"]), parse_polarity(kv["pol"]),
          parse_formula(kv["a"]), parse_formula(kv["b"]), parse_formula(kv["c"]),
          NodeId{kv["node"]});
      out << to_text(result) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dtt
