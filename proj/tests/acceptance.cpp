// One PASS/FAIL line per acceptance criterion.
// usage: acceptance CLI ROOT

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracle.hpp"
#include "predeq/builtins.hpp"
#include "predeq/format.hpp"
#include "predeq/posets.hpp"
#include "predeq/predicate_ops.hpp"
#include "predeq/witness.hpp"

using namespace predeq;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits, in milliseconds.
constexpr double projection_limit_ms = 1.0;
constexpr double gluing_limit_ms = 1000.0;
constexpr double integers_limit_ms = 10'000.0;
constexpr double base_graph_limit_ms = 5'000.0;
constexpr double oracle_limit_ms = 60'000.0;
constexpr double minimize_limit_ms = 30'000.0;
constexpr double refine_limit_ms = 30'000.0;
constexpr double restore_limit_ms = 30'000.0;
constexpr double poset_limit_ms = 10'000.0;
constexpr double parser_limit_ms = 30'000.0;

std::string cli;
std::string root;
int failures = 0;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* id, bool ok, double ms, double limit, const std::string& detail) {
  const bool pass = ok && ms < limit;
  if (!pass) ++failures;
  std::printf("%s %-14s %9.3f ms (limit %.0f) %s%s\n", pass ? "PASS" : "FAIL", id, ms, limit,
              detail.c_str(), ok && !pass ? " [over time limit]" : "");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Structure gamma() { return parse_structure(slurp(root + "/data/gamma.str")); }

std::vector<Tuple> by_name(const Structure& s, const std::vector<std::array<const char*, 2>>& rows) {
  std::vector<Tuple> out;
  for (const auto& r : rows) out.push_back({s.element(r[0]), s.element(r[1])});
  std::sort(out.begin(), out.end());
  return out;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::string& args) {
  const std::string err_file = root + "/build-acceptance-stderr.txt";
  const std::string cmd = cli + " " + args + " 2>" + err_file;
  Run r{0, "", ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", "popen failed"};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  std::remove(err_file.c_str());
  return r;
}

void projection_golden() {
  const auto s = gamma();
  const ProjectionSpec spec{{0, 2}, {{1, s.element("v4")}}};
  (void)project_predicate(s, "E", spec);  // warm-up
  const auto start = Clock::now();
  const auto r = project_predicate(s, "E", spec);
  const double ms = since(start);
  const bool ok = r.tuples() == by_name(s, {{"v2", "v1"}, {"v5", "v5"}});
  report("projection", ok, ms, projection_limit_ms, "{(v2,v1),(v5,v5)}");
}

void gluing_golden() {
  const auto s = gamma();
  const auto start = Clock::now();
  const auto r = glue_predicate(s, "E", Partition::from_blocks({{0}, {1, 2}}, 3));
  const double ms = since(start);
  const bool ok = r.tuples() == by_name(s, {{"v1", "v3"}, {"v3", "v2"}});
  report("gluing", ok, ms, gluing_limit_ms, "{(v1,v3),(v3,v2)}");
}

void integers() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto s = builtin_structure("int-strict", 2 * d + 2);
    const auto scan = criterion_scan(s, d);
    bool clique = false, stair = false;
    for (const auto& f : scan.findings) {
      clique = clique || std::holds_alternative<CliqueWitness>(f.witness);
      if (const auto* w = std::get_if<StaircaseWitness>(&f.witness)) stair = stair || (w->p == 1 && w->t == 1);
    }
    StaircaseWitness expected{"lt", 1, 1, {}};
    for (long i = 1; i <= static_cast<long>(d); ++i)
      expected.rows.push_back({{s.element(std::to_string(-2 * i))}, {s.element(std::to_string(-2 * i - 1))}});
    const bool known = verify_staircase(s, expected);
    if (!(clique && stair && known)) {
      ok = false;
      detail += " d=" + std::to_string(d) + (clique ? "" : " no-clique") + (stair ? "" : " no-staircase") +
                (known ? "" : " a=-2i,b=-2i-1 fails");
    }
  }
  report("integers", ok, since(start), integers_limit_ms,
         ok ? "clique + (1,1)-staircase found, a_i=-2i b_i=-2i-1 verifies, d=2..8" : detail);
}

void base_graph() {
  const auto start = Clock::now();
  bool stairs = true;
  std::string clique_hits;
  for (std::size_t d = 2; d <= 10; ++d) {
    const auto s = builtin_structure("base-graph", d);
    stairs = stairs && find_staircase(s, "E", 1, 1, d).has_value();
    for (std::size_t dd = 2; dd <= s.size(); ++dd)
      if (find_clique(s, "E", dd)) clique_hits += " n=" + std::to_string(d) + ":d'=" + std::to_string(dd);
  }
  const bool ok = stairs && clique_hits.empty();
  std::string detail = stairs ? "staircases found d=2..10" : "staircase missing";
  if (!clique_hits.empty()) detail += "; find_clique succeeded at" + clique_hits;
  report("base-graph", ok, since(start), base_graph_limit_ms, detail);
}

void oracle_equivalence() {
  const auto start = Clock::now();
  auto g = oracle::rng(2024);
  std::size_t mismatches = 0, hits = 0;
  for (int round = 0; round < 200; ++round) {
    const auto n = oracle::uniform(g, 2, 8);
    const double density = 0.3 + 0.4 * static_cast<double>(oracle::uniform(g, 0, 1000)) / 1000.0;
    const auto s = oracle::random_binary(g, n, density);
    for (std::size_t d = 2; d <= 4; ++d) {
      const auto st = find_staircase(s, "R", 1, 1, d);
      const auto cl = find_clique(s, "R", d);
      if (st.has_value() != oracle::staircase_exists(s, "R", d)) ++mismatches;
      if (cl.has_value() != oracle::clique_exists(s, "R", d)) ++mismatches;
      if (st && !verify_staircase(s, *st)) ++mismatches;
      if (cl && !verify_clique(s, *cl)) ++mismatches;
      hits += st.has_value() + cl.has_value();
    }
  }
  report("oracle", mismatches == 0, since(start), oracle_limit_ms,
         "200 structures x depths 2-4, " + std::to_string(hits) + " positives, " +
             std::to_string(mismatches) + " mismatches");
}

void minimization() {
  const auto start = Clock::now();
  auto g = oracle::rng(7);
  std::size_t bad = 0;
  for (int round = 0; round < 100; ++round) {
    const auto n = oracle::uniform(g, 1, 4);
    Structure s("r", oracle::element_names(n), {{"P", 2}, {"T", 3}},
                {oracle::random_relation(g, n, 2, 0.5), oracle::random_relation(g, n, 3, 0.4)});
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < oracle::uniform(g, 1, 2); ++i) vars.push_back("x" + std::to_string(i));
    const auto sys = oracle::random_system(g, s, vars, oracle::uniform(g, 0, 6));
    const auto target = oracle::solutions(s, sys);
    std::size_t minimum = sys.size();
    for (std::uint64_t mask = 0; mask < (1ULL << sys.size()); ++mask)
      if (oracle::solutions(s, sys, mask) == target)
        minimum = std::min<std::size_t>(minimum, static_cast<std::size_t>(__builtin_popcountll(mask)));
    const auto exact = minimize_system(s, sys, MinimizeMode::exact);
    if (exact.size() != minimum || oracle::solutions(s, sys.subsystem(exact)) != target) ++bad;
    const auto greedy = minimize_system(s, sys, MinimizeMode::greedy);
    if (oracle::solutions(s, sys.subsystem(greedy)) != target) ++bad;
    for (std::size_t drop = 0; drop < greedy.size(); ++drop) {
      auto fewer = greedy;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      if (oracle::solutions(s, sys.subsystem(fewer)) == target) ++bad;
    }
  }
  report("minimize", bad == 0, since(start), minimize_limit_ms,
         "100 instances, " + std::to_string(bad) + " violations");
}

void refinement() {
  const auto start = Clock::now();
  auto g = oracle::rng(99);
  std::size_t bad = 0, families_equal = 0, families = 0;
  for (int round = 0; round < 500; ++round) {
    const auto n = oracle::uniform(g, 1, 4);
    const auto len = oracle::uniform(g, 1, 10);
    std::vector<Tuple> d;
    const int family = round % 5;  // 0: identical rows, 1: distinct disjoint columns, else random
    const auto range = oracle::uniform(g, 1, 12);
    Tuple fixed;
    for (std::size_t c = 0; c < n; ++c) fixed.push_back(static_cast<Element>(oracle::uniform(g, 0, range - 1)));
    for (std::size_t i = 0; i < len; ++i) {
      Tuple t;
      for (std::size_t c = 0; c < n; ++c) {
        if (family == 0) t.push_back(fixed[c]);
        else if (family == 1) t.push_back(static_cast<Element>(100 * c + i));
        else t.push_back(static_cast<Element>(oracle::uniform(g, 0, range - 1)));
      }
      d.push_back(t);
    }
    const auto greedy = refine_tuples(d);
    const auto exact = refine_tuples_exact(d);
    if (!oracle::refinement_conditions(d, greedy.rows) || !oracle::refinement_conditions(d, exact.rows)) ++bad;
    if (exact.size() < greedy.size()) ++bad;
    if (family <= 1) {
      ++families;
      if (exact.size() == greedy.size() && greedy.size() == len) ++families_equal;
    }
  }
  const bool ok = bad == 0 && families_equal == families;
  report("refine", ok, since(start), refine_limit_ms,
         "500 sequences, " + std::to_string(bad) + " violations, equality on " +
             std::to_string(families_equal) + "/" + std::to_string(families) + " identical/disjoint cases");
}

void restoration() {
  const auto start = Clock::now();
  auto g = oracle::rng(314);
  std::size_t bad = 0;
  for (int round = 0; round < 100; ++round) {
    const auto c = oracle::planted_case(g, round % 2 == 1);
    try {
      const auto seq = restore_witness(c.structure, c.spec, c.witness);
      bool ok = seq.equations.size() == c.depth && check_kotov_prefix(c.structure, seq.equations, seq.points);
      for (const auto& eq : seq.equations.equations()) ok = ok && std::get<Atom>(eq).predicate == "P";
      if (!ok) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  report("restore", bad == 0, since(start), restore_limit_ms,
         "100 planted cases, " + std::to_string(bad) + " failures");
}

void posets() {
  const auto start = Clock::now();
  std::string detail;
  bool ok = true;

  const auto ints = builtin_stream("int-strict");
  const auto select = named_selector("negative");
  const auto built = cone_to_witness(ints, select, ConeDirection::down, 6, 100);
  const bool witness_ok = built.witness && verify_witness(built.prefix.structure(), *built.witness) &&
                          std::visit([](const auto& w) { return w.depth(); }, *built.witness) == 6;
  bool evidence_ok = false;
  if (witness_ok) {
    const auto ev = witness_to_cone(built.prefix, *built.witness);
    evidence_ok = ev.counterexamples.size() == 31;
    for (const auto& ce : ev.counterexamples) {
      bool in_proposed = ce.proposed.size() < 6;
      for (Element c : ce.proposed) in_proposed = in_proposed && built.prefix.below(ce.element, c);
      bool outside = false;
      for (Element b : ev.generators) outside = outside || !built.prefix.below(ce.element, b);
      evidence_ok = evidence_ok && in_proposed && outside;
    }
  }
  const auto growth = generator_growth(ints, select, ConeDirection::down, 100);
  detail += std::string("Z: witness ") + (witness_ok ? "ok" : "MISSING") + ", counterexamples " +
            (evidence_ok ? "ok" : "BAD") + ", growth " + (growth.stabilized ? "STABILIZED" : "non-stabilizing");
  ok = witness_ok && evidence_ok && !growth.stabilized;

  const Poset lattice(parse_structure(slurp(root + "/data/boolean4.str")), "sub", OrderKind::nonstrict);
  const auto lstream = StreamedPoset::from_poset(lattice);
  std::string fired;
  bool stable = true;
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto r = analyze_poset(lstream, named_selector("all"), d, 16);
    stable = stable && r.growth_down.stabilized && r.growth_up.stabilized;
    if (r.any_detector_fired()) {
      fired += " d=" + std::to_string(d) + ":";
      if (r.staircase_down) fired += "staircase-down";
      if (r.staircase_up) fired += (r.staircase_down ? "," : "") + std::string("staircase-up");
    }
  }
  detail += "; boolean lattice: growth " + std::string(stable ? "stabilizes" : "DOES NOT stabilize");
  if (!fired.empty()) detail += ", detectors fired at" + fired;
  ok = ok && stable && fired.empty();
  report("posets", ok, since(start), poset_limit_ms, detail);
}

void parser() {
  const auto start = Clock::now();
  std::string detail;
  bool ok = true;
  for (const char* name : {"gamma.str", "empty.str", "boolean4.str"}) {
    const auto s = parse_structure(slurp(root + "/data/" + name));
    if (!(parse_structure(print_structure(s)) == s)) {
      ok = false;
      detail += std::string(" round-trip:") + name;
    }
  }
  const auto g = gamma();
  const auto systems = parse_systems(slurp(root + "/data/gamma.sys"), g);
  for (const auto& sys : systems)
    if (!(parse_system(print_system(sys), g) == sys)) {
      ok = false;
      detail += " round-trip:" + sys.name();
    }

  const std::string gamma_path = root + "/data/gamma.str";
  const std::vector<std::pair<std::string, std::string>> goldens{
      {"project_gamma.txt", "project -s " + gamma_path + " -P E --keep 1,3 --fix 2=v4"},
      {"project_gamma.json", "--json project -s " + gamma_path + " -P E --keep 1,3 --fix 2=v4"},
      {"glue_gamma.txt", "glue -s " + gamma_path + " -P E --blocks 1/2,3"},
      {"glue_gamma.json", "--json glue -s " + gamma_path + " -P E --blocks 1/2,3"},
      {"criterion_int.json", "--json criterion --builtin int-strict:6 -d 2"},
      {"poset_int.json", "--json poset --builtin int-strict --selector negative -d 3 --budget 20"},
      {"gen_base3.txt", "gen --builtin base-graph:3"},
  };
  std::size_t matched = 0;
  for (const auto& [file, args] : goldens) {
    const auto r = run_cli(args);
    if (r.code == 0 && r.out == slurp(root + "/tests/golden/" + file)) ++matched;
    else detail += " golden:" + file;
  }
  ok = ok && matched == goldens.size();

  const std::string bad = root + "/tests/malformed/";
  const std::vector<std::pair<std::string, std::string>> malformed{
      {"solve -s " + bad + "tuple_length.str -f " + root + "/data/gamma.sys", "tuple_length.str:5:5:"},
      {"gen -s " + bad + "unknown_element.str", ""},
      {"clique -s " + bad + "unknown_element.str -P E", "unknown_element.str:4:9:"},
      {"clique -s " + bad + "duplicate_element.str -P E", "duplicate_element.str:2:16:"},
      {"clique -s " + bad + "syntax.str -P E", "syntax.str:4:8:"},
      {"solve -s " + gamma_path + " -f " + bad + "undeclared.sys", "undeclared.sys:3:12:"},
  };
  std::size_t rejected = 0;
  for (const auto& [args, where] : malformed) {
    const auto r = run_cli(args);
    if (r.code == 1 && r.out.empty() && r.err.find(where) != std::string::npos) ++rejected;
    else detail += " malformed:[" + args.substr(0, args.find(' ')) + "] exit " + std::to_string(r.code);
  }
  ok = ok && rejected == malformed.size();
  report("parser", ok, since(start), parser_limit_ms,
         "round-trips ok, " + std::to_string(matched) + "/" + std::to_string(goldens.size()) +
             " goldens, " + std::to_string(rejected) + "/" + std::to_string(malformed.size()) +
             " malformed rejected with exit 1" + detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI ROOT\n";
    return 2;
  }
  cli = argv[1];
  root = argv[2];
  const std::array<void (*)(), 10> criteria{projection_golden, gluing_golden, integers, base_graph,
                                            oracle_equivalence, minimization, refinement,
                                            restoration, posets, parser};
  for (auto criterion : criteria) {
    try {
      criterion();
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL (threw: %s)\n", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
