#include "predeq/report.hpp"

#include <sstream>

#include <json.hpp>

#include "predeq/format.hpp"

namespace predeq {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json header(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

json names(const Structure& s, std::span<const Element> tuple) {
  json out = json::array();
  for (Element e : tuple) out.push_back(s.element_name(e));
  return out;
}

std::string tuple_text(const Structure& s, std::span<const Element> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) out += (i ? "," : "") + s.element_name(tuple[i]);
  return out + ")";
}

std::string set_text(const Structure& s, const std::vector<Tuple>& tuples) {
  std::string out = "{";
  for (std::size_t i = 0; i < tuples.size(); ++i) out += (i ? "," : "") + tuple_text(s, tuples[i]);
  return out + "}";
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

std::string list_text(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out;
}

json staircase_json(const Structure& s, const StaircaseWitness& w) {
  json rows = json::array();
  for (const auto& r : w.rows) rows.push_back({{"a", names(s, r.a)}, {"b", names(s, r.b)}});
  return {{"type", "staircase"}, {"symbol", w.symbol}, {"p", w.p},
          {"t", w.t},            {"depth", w.depth()}, {"rows", rows}};
}

json clique_json(const Structure& s, const CliqueWitness& w) {
  return {{"type", "clique"},
          {"symbol", w.symbol},
          {"depth", w.depth()},
          {"sequence", names(s, w.sequence)}};
}

json witness_json(const Structure& s, const Witness& w) {
  if (const auto* st = std::get_if<StaircaseWitness>(&w)) return staircase_json(s, *st);
  return clique_json(s, std::get<CliqueWitness>(w));
}

void staircase_text(std::ostream& out, const Structure& s, const StaircaseWitness& w,
                    const std::string& indent) {
  for (std::size_t i = 0; i < w.rows.size(); ++i)
    out << indent << "row " << i + 1 << ": a=" << tuple_text(s, w.rows[i].a)
        << " b=" << tuple_text(s, w.rows[i].b) << '\n';
}

void clique_text(std::ostream& out, const Structure& s, const CliqueWitness& w,
                 const std::string& indent) {
  out << indent << "sequence: " << tuple_text(s, w.sequence) << '\n';
}

void witness_text(std::ostream& out, const Structure& s, const Witness& w,
                  const std::string& indent) {
  if (const auto* st = std::get_if<StaircaseWitness>(&w)) {
    out << indent << "staircase on " << st->symbol << " split (" << st->p << "," << st->t
        << ") depth " << st->depth() << '\n';
    staircase_text(out, s, *st, indent + "  ");
  } else {
    const auto& c = std::get<CliqueWitness>(w);
    out << indent << "clique on " << c.symbol << " depth " << c.depth() << '\n';
    clique_text(out, s, c, indent + "  ");
  }
}

json spec_json(const Structure& s, const DerivedPredicateSpec& spec) {
  json j;
  j["source"] = spec.source;
  j["result"] = spec.result_name;
  j["reorder"] = spec.reorder ? one_based(*spec.reorder) : json(nullptr);
  if (spec.projection) {
    json fix = json::array();
    for (const auto& f : spec.projection->fixings)
      fix.push_back({{"position", f.position + 1}, {"element", s.element_name(f.element)}});
    j["projection"] = {{"kept", one_based(spec.projection->kept)}, {"fixings", fix}};
  } else {
    j["projection"] = nullptr;
  }
  if (spec.gluing) {
    json blocks = json::array();
    for (const auto& b : spec.gluing->blocks()) blocks.push_back(one_based(b));
    j["gluing"] = blocks;
  } else {
    j["gluing"] = nullptr;
  }
  return j;
}

std::string spec_text(const Structure& s, const DerivedPredicateSpec& spec) {
  std::string out = spec.result_name + " from " + spec.source;
  if (spec.reorder) out += " reorder [" + list_text(*spec.reorder) + "]";
  if (spec.projection) {
    out += " keep [" + list_text(spec.projection->kept) + "]";
    for (const auto& f : spec.projection->fixings)
      out += " fix " + std::to_string(f.position + 1) + "=" + s.element_name(f.element);
  }
  if (spec.gluing) {
    out += " glue {";
    for (std::size_t i = 0; i < spec.gluing->blocks().size(); ++i)
      out += std::string(i ? "," : "") + "{" + list_text(spec.gluing->blocks()[i]) + "}";
    out += "}";
  }
  return out;
}

Report finish(const std::string& command, const std::ostringstream& text, const json& j) {
  return {command, text.str(), dump(j)};
}

json equations_json(const EquationSystem& system, const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices)
    out.push_back({{"index", i + 1}, {"equation", print_equation(system.equations()[i])}});
  return out;
}

const char* direction_name(ConeDirection d) { return d == ConeDirection::down ? "down" : "up"; }

json growth_json(const GrowthReport& g) {
  return {{"direction", direction_name(g.direction)},
          {"prefix_sizes", g.prefix_sizes},
          {"subset_sizes", g.subset_sizes},
          {"chain_lengths", g.chain_lengths},
          {"minimum_generators", g.minimum_generators},
          {"stabilized", g.stabilized}};
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Report report_solve(const Structure& structure, const EquationSystem& system,
                    const AlgebraicSet& solutions) {
  json j = header("solve");
  j["structure"] = structure.name();
  j["system"] = system.name();
  j["variables"] = solutions.variables;
  json pts = json::array();
  for (const auto& p : solutions.points) pts.push_back(names(structure, p));
  j["points"] = pts;
  j["count"] = solutions.points.size();

  std::ostringstream out;
  out << "system " << system.name() << " over " << structure.name() << ": "
      << solutions.points.size() << " solution" << (solutions.points.size() == 1 ? "" : "s")
      << '\n';
  out << "vars (";
  for (std::size_t i = 0; i < solutions.variables.size(); ++i)
    out << (i ? "," : "") << solutions.variables[i];
  out << ")\n";
  for (const auto& p : solutions.points) out << "  " << tuple_text(structure, p) << '\n';
  return finish("solve", out, j);
}

Report report_equiv(const Structure& structure, const EquationSystem& first,
                    const EquationSystem& second, bool equivalent) {
  json j = header("equiv");
  j["structure"] = structure.name();
  j["first"] = first.name();
  j["second"] = second.name();
  j["equivalent"] = equivalent;
  std::ostringstream out;
  out << first.name() << (equivalent ? " is" : " is not") << " equivalent to " << second.name()
      << " over " << structure.name() << '\n';
  return finish("equiv", out, j);
}

Report report_minimize(const EquationSystem& system, MinimizeMode mode,
                       const std::vector<std::size_t>& kept) {
  const char* mode_name = mode == MinimizeMode::exact ? "exact" : "greedy";
  json j = header("minimize");
  j["system"] = system.name();
  j["mode"] = mode_name;
  j["original_size"] = system.size();
  j["kept"] = equations_json(system, kept);
  std::ostringstream out;
  out << "minimize " << system.name() << " (" << mode_name << "): kept " << kept.size() << " of "
      << system.size() << '\n';
  for (auto i : kept) out << "  [" << i + 1 << "] " << print_equation(system.equations()[i]) << '\n';
  return finish("minimize", out, j);
}

Report report_classify(const EquationSystem& system) {
  const auto classes = classify_by_shape(system);
  const auto groups = group_by_configuration(system);
  json j = header("classify");
  j["system"] = system.name();
  j["shapes"] = {{"constants_only", equations_json(system, classes.constants_only)},
                 {"variables_only", equations_json(system, classes.variables_only)},
                 {"mixed", equations_json(system, classes.mixed)}};
  json configs = json::array();
  std::ostringstream out;
  out << "classify " << system.name() << '\n';
  auto shape_line = [&](const char* label, const std::vector<std::size_t>& v) {
    out << "  " << label << ": [" << list_text(v) << "]\n";
  };
  shape_line("S_C ", classes.constants_only);
  shape_line("S_X ", classes.variables_only);
  shape_line("S_XC", classes.mixed);
  out << "configurations: " << groups.size() << '\n';
  for (const auto& [config, members] : groups) {
    json pattern = json::array();
    std::string pattern_text;
    for (std::size_t i = 0; i < config.pattern.size(); ++i) {
      pattern.push_back(config.pattern[i] ? json(*config.pattern[i]) : json(nullptr));
      pattern_text += (i ? "," : "") + (config.pattern[i] ? *config.pattern[i] : std::string("_"));
    }
    const auto bound = configuration_bound(config.pattern.size(), system.variables().size());
    configs.push_back({{"symbol", config.symbol},
                       {"pattern", pattern},
                       {"bound", bound},
                       {"equations", one_based(members)}});
    out << "  " << config.symbol << "(" << pattern_text << "): [" << list_text(members) << "]\n";
  }
  j["configurations"] = configs;
  return finish("classify", out, j);
}

Report report_relation(const std::string& command, const Structure& structure,
                       const DerivedPredicateSpec& spec, const Relation& relation) {
  json j = header(command);
  j["structure"] = structure.name();
  j["spec"] = spec_json(structure, spec);
  j["arity"] = relation.arity();
  json tuples = json::array();
  for (const auto& t : relation.tuples()) tuples.push_back(names(structure, t));
  j["tuples"] = tuples;
  std::ostringstream out;
  out << set_text(structure, relation.tuples()) << '\n';
  return finish(command, out, j);
}

Report report_staircase(const Structure& structure, const std::string& symbol, std::size_t p,
                        std::size_t t, std::size_t depth,
                        const std::optional<StaircaseWitness>& witness) {
  json j = header("staircase");
  j["structure"] = structure.name();
  j["symbol"] = symbol;
  j["p"] = p;
  j["t"] = t;
  j["depth"] = depth;
  j["found"] = witness.has_value();
  j["witness"] = witness ? staircase_json(structure, *witness) : json(nullptr);
  std::ostringstream out;
  out << "staircase " << symbol << " split (" << p << "," << t << ") depth " << depth << ": "
      << (witness ? "found" : "none") << '\n';
  if (witness) staircase_text(out, structure, *witness, "  ");
  return finish("staircase", out, j);
}

Report report_clique(const Structure& structure, const std::string& symbol, std::size_t depth,
                     const std::optional<CliqueWitness>& witness) {
  json j = header("clique");
  j["structure"] = structure.name();
  j["symbol"] = symbol;
  j["depth"] = depth;
  j["found"] = witness.has_value();
  j["witness"] = witness ? clique_json(structure, *witness) : json(nullptr);
  std::ostringstream out;
  out << "clique " << symbol << " depth " << depth << ": " << (witness ? "found" : "none") << '\n';
  if (witness) clique_text(out, structure, *witness, "  ");
  return finish("clique", out, j);
}

Report report_criterion(const Structure& structure, const CriterionReport& report) {
  json j = header("criterion");
  j["structure"] = structure.name();
  j["depth"] = report.depth;
  j["exhaustive"] = report.exhaustive;
  j["derived_predicates"] = report.derived_predicates;
  j["caps"] = {{"max_fixed_positions", report.caps.max_fixed_positions},
               {"max_fixings_per_subset", report.caps.max_fixings_per_subset},
               {"max_permutations", report.caps.max_permutations},
               {"extra_candidates", names(structure, report.caps.extra_candidates)}};
  json findings = json::array();
  std::ostringstream out;
  out << "criterion scan of " << structure.name() << " at depth " << report.depth << '\n';
  out << "derived predicates: " << report.derived_predicates
      << (report.exhaustive ? " (exhaustive within caps)" : " (truncated by caps)") << '\n';
  out << "findings: " << report.findings.size() << '\n';
  for (const auto& f : report.findings) {
    findings.push_back(
        {{"spec", spec_json(structure, f.spec)}, {"witness", witness_json(structure, f.witness)}});
    out << "  " << spec_text(structure, f.spec) << '\n';
    witness_text(out, structure, f.witness, "    ");
  }
  j["findings"] = findings;
  return finish("criterion", out, j);
}

Report report_graph(const Structure& structure, const GraphReport& report) {
  const char* kind = report.kind == GraphKind::simple ? "simple" : "with-loops";
  json j = header("graph");
  j["structure"] = structure.name();
  j["kind"] = kind;
  j["symbol"] = report.symbol;
  j["depth"] = report.depth;
  j["clique_searched"] = report.clique_searched;
  j["clique"] = report.clique ? clique_json(structure, *report.clique) : json(nullptr);
  j["staircase"] = report.staircase ? staircase_json(structure, *report.staircase) : json(nullptr);
  std::ostringstream out;
  out << "graph " << structure.name() << " (" << kind << ") depth " << report.depth << '\n';
  if (!report.clique_searched)
    out << "  clique: not searched\n";
  else
    out << "  clique: " << (report.clique ? "found" : "none") << '\n';
  if (report.clique) clique_text(out, structure, *report.clique, "    ");
  out << "  staircase: " << (report.staircase ? "found" : "none") << '\n';
  if (report.staircase) staircase_text(out, structure, *report.staircase, "    ");
  return finish("graph", out, j);
}

Report report_poset(const std::string& source, const std::string& selector, std::size_t budget,
                    const PosetReport& report) {
  // Witnesses refer to the materialized prefix.
  std::vector<std::string> elements = report.elements;
  std::vector<PredicateSymbol> symbols;
  const Structure prefix("prefix", elements, symbols, {});

  json j = header("poset");
  j["source"] = source;
  j["kind"] = report.kind == OrderKind::strict ? "strict" : "nonstrict";
  j["selector"] = selector;
  j["depth"] = report.depth;
  j["budget"] = budget;
  j["materialized"] = report.materialized;
  auto opt_stair = [&](const std::optional<StaircaseWitness>& w) {
    return w ? staircase_json(prefix, *w) : json(nullptr);
  };
  auto opt_clique = [&](const std::optional<CliqueWitness>& w) {
    return w ? clique_json(prefix, *w) : json(nullptr);
  };
  j["staircase_down"] = opt_stair(report.staircase_down);
  j["staircase_up"] = opt_stair(report.staircase_up);
  j["clique_searched"] = report.clique_searched;
  j["clique_down"] = opt_clique(report.clique_down);
  j["clique_up"] = opt_clique(report.clique_up);
  j["growth_down"] = growth_json(report.growth_down);
  j["growth_up"] = growth_json(report.growth_up);
  j["constructed"] = report.constructed ? witness_json(prefix, *report.constructed) : json(nullptr);
  j["constructed_direction"] =
      report.constructed_direction ? json(direction_name(*report.constructed_direction))
                                   : json(nullptr);
  j["consistent"] = report.consistent;
  j["any_detector_fired"] = report.any_detector_fired();
  j["notes"] = report.notes;

  std::ostringstream out;
  out << "poset " << source << " (" << j["kind"].get<std::string>() << "), selector " << selector
      << ", depth " << report.depth << ", " << report.materialized << " elements\n";
  auto line = [&](const char* label, bool searched, bool found) {
    out << "  " << label << ": " << (!searched ? "not searched" : found ? "found" : "none") << '\n';
  };
  line("staircase down", true, report.staircase_down.has_value());
  if (report.staircase_down) staircase_text(out, prefix, *report.staircase_down, "    ");
  line("staircase up", true, report.staircase_up.has_value());
  if (report.staircase_up) staircase_text(out, prefix, *report.staircase_up, "    ");
  line("clique down", report.clique_searched, report.clique_down.has_value());
  if (report.clique_down) clique_text(out, prefix, *report.clique_down, "    ");
  line("clique up", report.clique_searched, report.clique_up.has_value());
  if (report.clique_up) clique_text(out, prefix, *report.clique_up, "    ");
  for (const auto* g : {&report.growth_down, &report.growth_up})
    out << "  growth " << direction_name(g->direction) << ": chain " << join(g->chain_lengths)
        << (g->stabilized ? " (stabilized)" : " (not stabilized)") << '\n';
  if (report.constructed) {
    out << "  constructed (" << direction_name(*report.constructed_direction) << "):\n";
    witness_text(out, prefix, *report.constructed, "    ");
  }
  out << "  consistent: " << (report.consistent ? "yes" : "no") << '\n';
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
  return finish("poset", out, j);
}

Report report_gen(const Structure& structure) {
  json j = header("gen");
  j["structure"] = structure.name();
  j["elements"] = structure.elements();
  json preds = json::array();
  for (std::size_t i = 0; i < structure.symbols().size(); ++i) {
    json tuples = json::array();
    for (const auto& t : structure.relation(i).tuples()) tuples.push_back(names(structure, t));
    preds.push_back({{"name", structure.symbols()[i].name},
                     {"arity", structure.symbols()[i].arity},
                     {"tuples", tuples}});
  }
  j["predicates"] = preds;
  return {"gen", print_structure(structure), dump(j)};
}

}  // namespace predeq
