// Command-line front end; talks to the library only through predeq.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "predeq/predeq.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(predeq_status status) {
  return status == PREDEQ_E_INVARIANT || status == PREDEQ_E_INTERNAL ? 2 : 1;
}

// Throws with the library's last error, prefixed by the file for parse errors.
void check(predeq_status status, const std::string& file = "") {
  if (status == PREDEQ_OK) return;
  std::string message = predeq_last_error();
  if (status == PREDEQ_E_PARSE && !file.empty()) message = file + ":" + message;
  throw CliError{exit_code_for(status), message};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

using StructurePtr = std::unique_ptr<predeq_structure, decltype(&predeq_structure_free)>;
using SystemsPtr = std::unique_ptr<predeq_systems, decltype(&predeq_systems_free)>;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (text.empty() || pos != text.size() || text[0] == '-')
    throw CliError{1, "invalid " + what + ": '" + text + "'"};
  return static_cast<std::size_t>(v);
}

struct Source {
  std::string file;
  std::string builtin;  // NAME:SIZE

  StructurePtr load() const {
    if (file.empty() == builtin.empty())
      throw CliError{1, "give exactly one of --structure FILE or --builtin NAME:SIZE"};
    predeq_structure* s = nullptr;
    if (!file.empty()) {
      const auto text = read_file(file);
      check(predeq_structure_parse(text.data(), text.size(), &s), file);
    } else {
      const auto colon = builtin.find(':');
      if (colon == std::string::npos) throw CliError{1, "--builtin expects NAME:SIZE"};
      check(predeq_structure_builtin(builtin.substr(0, colon).c_str(),
                                     parse_size(builtin.substr(colon + 1), "size"), &s));
    }
    return StructurePtr(s, predeq_structure_free);
  }
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("-s,--structure", src.file, "structure file");
  cmd->add_option("--builtin", src.builtin, "builtin structure NAME:SIZE");
}

SystemsPtr load_systems(const predeq_structure* s, const std::string& file) {
  const auto text = read_file(file);
  predeq_systems* out = nullptr;
  check(predeq_systems_parse(s, text.data(), text.size(), &out), file);
  if (predeq_systems_count(out) == 0) {
    predeq_systems_free(out);
    throw CliError{1, file + ": no systems"};
  }
  return SystemsPtr(out, predeq_systems_free);
}

std::size_t pick(const predeq_systems* systems, const std::string& name, std::size_t fallback) {
  if (name.empty()) {
    if (fallback >= predeq_systems_count(systems))
      throw CliError{1, "not enough systems in the file"};
    return fallback;
  }
  const auto i = predeq_systems_find(systems, name.c_str());
  if (i == static_cast<std::size_t>(-1)) throw CliError{1, "no system named '" + name + "'"};
  return i;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine equations over finite predicate structures"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "print the JSON report");
  app.set_version_flag("--version", std::string(predeq_version()));

  Source src;
  std::string systems_file, system_name, second_name, symbol, mode = "exact";
  std::string keep, blocks, extra, selector = "all", order;
  std::vector<std::string> fixes;
  std::size_t depth = 2, p = 1, t = 1, budget = 100;
  bool loops = false, nonstrict = false;
  std::string graph_symbol;
  predeq_scan_caps caps;
  predeq_scan_caps_default(&caps);

  auto* solve = app.add_subcommand("solve", "algebraic set of a system");
  auto* equiv = app.add_subcommand("equiv", "compare two systems");
  auto* minimize = app.add_subcommand("minimize", "equivalent subsystem");
  auto* classify = app.add_subcommand("classify", "shape classes and configurations");
  for (auto* cmd : {solve, equiv, minimize, classify}) {
    add_source(cmd, src);
    cmd->add_option("-f,--systems", systems_file, "systems file")->required();
  }
  for (auto* cmd : {solve, minimize, classify})
    cmd->add_option("--system", system_name, "system name (default: first)");
  equiv->add_option("--first", system_name, "first system (default: first in file)");
  equiv->add_option("--second", second_name, "second system (default: second in file)");
  minimize->add_option("--mode", mode, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* proj = app.add_subcommand("project", "fix positions of a predicate");
  auto* glue = app.add_subcommand("glue", "identify positions of a predicate");
  auto* stair = app.add_subcommand("staircase", "search a staircase pattern");
  auto* clique = app.add_subcommand("clique", "search a clique pattern");
  auto* crit = app.add_subcommand("criterion", "bounded scan over derived predicates");
  for (auto* cmd : {proj, glue, stair, clique, crit}) add_source(cmd, src);
  for (auto* cmd : {proj, glue, stair, clique})
    cmd->add_option("-P,--predicate", symbol, "predicate symbol")->required();
  proj->add_option("--keep", keep, "kept positions, e.g. 1,3");
  proj->add_option("--fix", fixes, "POS=ELEMENT (repeatable or comma separated)")
      ->delimiter(',');
  glue->add_option("--blocks", blocks, "blocks separated by '/', e.g. 1/2,3")->required();
  stair->add_option("-p", p, "width of the a-part");
  stair->add_option("-t", t, "width of the b-part");
  for (auto* cmd : {stair, clique, crit}) cmd->add_option("-d,--depth", depth, "depth");
  crit->add_option("--max-fixed", caps.max_fixed_positions, "fixed positions per projection");
  crit->add_option("--max-fixings", caps.max_fixings_per_subset, "fixing tuples per subset");
  crit->add_option("--max-perms", caps.max_permutations, "orderings per symbol");
  crit->add_option("--extra", extra, "extra fixing candidates, comma separated");
  crit->add_option("--graph", graph_symbol, "analyze this binary symbol as a graph instead");
  crit->add_flag("--loops", loops, "the graph may have loops");

  auto* poset = app.add_subcommand("poset", "cone growth and order patterns");
  poset->add_option("-s,--structure", src.file, "structure file");
  poset->add_option("--builtin", src.builtin, "int-strict or int-nonstrict (streamed)");
  poset->add_option("--order", order, "order symbol of the structure");
  poset->add_flag("--nonstrict", nonstrict, "the order is reflexive");
  poset->add_option("--selector", selector, "all, first, negative, positive, odd-negative");
  poset->add_option("-d,--depth", depth, "depth");
  poset->add_option("--budget", budget, "prefix size");

  auto* gen = app.add_subcommand("gen", "print a builtin structure");
  gen->add_option("--builtin", src.builtin, "NAME:SIZE")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  predeq_report* report = nullptr;
  try {
    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "solve" || name == "equiv" || name == "minimize" || name == "classify") {
      auto s = src.load();
      auto systems = load_systems(s.get(), systems_file);
      const auto first = pick(systems.get(), system_name, 0);
      if (name == "solve") check(predeq_solve(s.get(), systems.get(), first, &report));
      if (name == "equiv")
        check(predeq_equiv(s.get(), systems.get(), first, pick(systems.get(), second_name, 1),
                           &report));
      if (name == "minimize")
        check(predeq_minimize(s.get(), systems.get(), first, mode == "exact", &report));
      if (name == "classify") check(predeq_classify(systems.get(), first, &report));
    } else if (name == "project") {
      auto s = src.load();
      std::vector<std::size_t> kept;
      if (!keep.empty())
        for (const auto& k : split(keep, ',')) kept.push_back(parse_size(k, "position"));
      std::vector<std::size_t> positions;
      std::vector<std::string> elements;
      for (const auto& f : fixes) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw CliError{1, "--fix expects POS=ELEMENT, got '" + f + "'"};
        positions.push_back(parse_size(f.substr(0, eq), "position"));
        elements.push_back(f.substr(eq + 1));
      }
      std::vector<const char*> element_ptrs;
      for (const auto& e : elements) element_ptrs.push_back(e.c_str());
      check(predeq_project(s.get(), symbol.c_str(), keep.empty() ? nullptr : kept.data(),
                           kept.size(), positions.data(), element_ptrs.data(), positions.size(),
                           &report));
    } else if (name == "glue") {
      auto s = src.load();
      std::vector<std::pair<std::size_t, std::size_t>> assigned;  // position, block
      std::size_t label = 0;
      for (const auto& block : split(blocks, '/')) {
        ++label;
        for (const auto& pos : split(block, ','))
          assigned.emplace_back(parse_size(pos, "position"), label);
      }
      std::vector<std::size_t> labels(assigned.size(), 0);
      for (const auto& [pos, block] : assigned) {
        if (pos == 0 || pos > labels.size() || labels[pos - 1] != 0)
          throw CliError{1, "--blocks must list every position 1..n exactly once"};
        labels[pos - 1] = block;
      }
      check(predeq_glue(s.get(), symbol.c_str(), labels.data(), labels.size(), &report));
    } else if (name == "staircase") {
      auto s = src.load();
      check(predeq_staircase(s.get(), symbol.c_str(), p, t, depth, &report));
    } else if (name == "clique") {
      auto s = src.load();
      check(predeq_clique(s.get(), symbol.c_str(), depth, &report));
    } else if (name == "criterion") {
      auto s = src.load();
      if (!graph_symbol.empty()) {
        check(predeq_graph(s.get(), graph_symbol.c_str(), loops ? 1 : 0, depth, &report));
      } else {
        std::vector<std::string> names = extra.empty() ? std::vector<std::string>{} : split(extra, ',');
        std::vector<const char*> ptrs;
        for (const auto& n : names) ptrs.push_back(n.c_str());
        caps.extra_candidates = ptrs.data();
        caps.extra_count = ptrs.size();
        check(predeq_criterion(s.get(), depth, &caps, &report));
      }
    } else if (name == "poset") {
      if (src.file.empty() == src.builtin.empty())
        throw CliError{1, "give exactly one of --structure FILE or --builtin NAME"};
      if (!src.builtin.empty()) {
        check(predeq_poset_builtin(src.builtin.c_str(), selector.c_str(), depth, budget, &report));
      } else {
        if (order.empty()) throw CliError{1, "--order is required with --structure"};
        auto s = src.load();
        check(predeq_poset_structure(s.get(), order.c_str(), nonstrict ? 0 : 1, selector.c_str(),
                                     depth, budget, &report));
      }
    } else if (name == "gen") {
      auto s = src.load();
      check(predeq_gen(s.get(), &report));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }

  std::fputs(json ? predeq_report_json(report) : predeq_report_text(report), stdout);
  predeq_report_free(report);
  return 0;
}
