#include "predeq/predeq.h"

#include <algorithm>
#include <string>
#include <utility>

#include "predeq/builtins.hpp"
#include "predeq/format.hpp"
#include "predeq/report.hpp"

struct predeq_structure {
  predeq::Structure value;
};

struct predeq_systems {
  std::vector<predeq::EquationSystem> value;
};

struct predeq_report {
  predeq::Report value;
};

namespace {

using namespace predeq;

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

predeq_status fail(predeq_status status, std::string message) {
  last_error = {std::move(message), 0, 0};
  return status;
}

template <class F>
predeq_status guarded(F&& body) {
  last_error = {};
  try {
    return body();
  } catch (const ParseError& e) {
    last_error = {e.what(), e.where().line, e.where().column};
    return PREDEQ_E_PARSE;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invariant_violation) return fail(PREDEQ_E_INVARIANT, e.what());
    if (e.code() == ErrorCode::parse_error) return fail(PREDEQ_E_PARSE, e.what());
    return fail(PREDEQ_E_MODEL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PREDEQ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PREDEQ_E_INTERNAL, e.what());
  } catch (...) {
    return fail(PREDEQ_E_INTERNAL, "unknown exception");
  }
}

predeq_status emit(Report report, predeq_report** out) {
  *out = new predeq_report{std::move(report)};
  return PREDEQ_OK;
}

bool bad_index(const predeq_systems* systems, std::size_t index) {
  return index >= systems->value.size();
}

}  // namespace

extern "C" {

const char* predeq_version(void) { return "1.0.0"; }
const char* predeq_last_error(void) { return last_error.message.c_str(); }
size_t predeq_last_error_line(void) { return last_error.line; }
size_t predeq_last_error_column(void) { return last_error.column; }

predeq_status predeq_structure_parse(const char* text, size_t length, predeq_structure** out) {
  if (!text || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    *out = new predeq_structure{parse_structure(std::string_view(text, length))};
    return PREDEQ_OK;
  });
}

predeq_status predeq_structure_builtin(const char* name, size_t size, predeq_structure** out) {
  if (!name || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    *out = new predeq_structure{builtin_structure(name, size)};
    return PREDEQ_OK;
  });
}

void predeq_structure_free(predeq_structure* structure) { delete structure; }

predeq_status predeq_systems_parse(const predeq_structure* structure, const char* text,
                                   size_t length, predeq_systems** out) {
  if (!structure || !text || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    *out = new predeq_systems{parse_systems(std::string_view(text, length), structure->value)};
    return PREDEQ_OK;
  });
}

size_t predeq_systems_count(const predeq_systems* systems) {
  return systems ? systems->value.size() : 0;
}

size_t predeq_systems_find(const predeq_systems* systems, const char* name) {
  if (!systems || !name) return static_cast<size_t>(-1);
  for (std::size_t i = 0; i < systems->value.size(); ++i)
    if (systems->value[i].name() == name) return i;
  return static_cast<size_t>(-1);
}

void predeq_systems_free(predeq_systems* systems) { delete systems; }

predeq_status predeq_gen(const predeq_structure* structure, predeq_report** out) {
  if (!structure || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] { return emit(report_gen(structure->value), out); });
}

predeq_status predeq_solve(const predeq_structure* structure, const predeq_systems* systems,
                           size_t index, predeq_report** out) {
  if (!structure || !systems || !out) return fail(PREDEQ_E_USAGE, "null argument");
  if (bad_index(systems, index)) return fail(PREDEQ_E_USAGE, "system index out of range");
  return guarded([&] {
    const auto& s = systems->value[index];
    return emit(report_solve(structure->value, s, solve_system(structure->value, s)), out);
  });
}

predeq_status predeq_equiv(const predeq_structure* structure, const predeq_systems* systems,
                           size_t first, size_t second, predeq_report** out) {
  if (!structure || !systems || !out) return fail(PREDEQ_E_USAGE, "null argument");
  if (bad_index(systems, first) || bad_index(systems, second))
    return fail(PREDEQ_E_USAGE, "system index out of range");
  return guarded([&] {
    const auto& a = systems->value[first];
    const auto& b = systems->value[second];
    return emit(report_equiv(structure->value, a, b, systems_equivalent(structure->value, a, b)),
                out);
  });
}

predeq_status predeq_minimize(const predeq_structure* structure, const predeq_systems* systems,
                              size_t index, int exact, predeq_report** out) {
  if (!structure || !systems || !out) return fail(PREDEQ_E_USAGE, "null argument");
  if (bad_index(systems, index)) return fail(PREDEQ_E_USAGE, "system index out of range");
  return guarded([&] {
    const auto mode = exact ? MinimizeMode::exact : MinimizeMode::greedy;
    const auto& s = systems->value[index];
    return emit(report_minimize(s, mode, minimize_system(structure->value, s, mode)), out);
  });
}

predeq_status predeq_classify(const predeq_systems* systems, size_t index, predeq_report** out) {
  if (!systems || !out) return fail(PREDEQ_E_USAGE, "null argument");
  if (bad_index(systems, index)) return fail(PREDEQ_E_USAGE, "system index out of range");
  return guarded([&] { return emit(report_classify(systems->value[index]), out); });
}

predeq_status predeq_project(const predeq_structure* structure, const char* symbol,
                             const size_t* keep, size_t keep_count, const size_t* fix_positions,
                             const char* const* fix_elements, size_t fix_count,
                             predeq_report** out) {
  if (!structure || !symbol || !out || (fix_count && (!fix_positions || !fix_elements)) ||
      (keep_count && !keep))
    return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    const auto& s = structure->value;
    const auto arity = s.symbol(symbol).arity;
    std::vector<Fixing> fixings;
    for (std::size_t i = 0; i < fix_count; ++i) {
      if (fix_positions[i] == 0 || fix_positions[i] > arity)
        return fail(PREDEQ_E_USAGE, "fixed position " + std::to_string(fix_positions[i]) +
                                        " outside 1.." + std::to_string(arity));
      fixings.push_back({fix_positions[i] - 1, s.element(fix_elements[i])});
    }
    std::sort(fixings.begin(), fixings.end());
    auto spec = ProjectionSpec::fixing(arity, fixings);
    if (keep) {
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < keep_count; ++i) {
        if (keep[i] == 0) return fail(PREDEQ_E_USAGE, "positions are 1-based");
        kept.push_back(keep[i] - 1);
      }
      std::sort(kept.begin(), kept.end());
      if (kept != spec.kept)
        return fail(PREDEQ_E_USAGE, "kept positions must be exactly the positions not fixed");
    }
    spec.validate(arity, s.size());
    DerivedPredicateSpec derived{symbol, std::nullopt, spec, std::nullopt,
                                 std::string(symbol) + ".proj"};
    return emit(report_relation("project", s, derived, project(s.relation(symbol), spec)), out);
  });
}

predeq_status predeq_glue(const predeq_structure* structure, const char* symbol,
                          const size_t* labels, size_t count, predeq_report** out) {
  if (!structure || !symbol || !out || (count && !labels))
    return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    const auto& s = structure->value;
    const auto arity = s.symbol(symbol).arity;
    if (count != arity)
      return fail(PREDEQ_E_USAGE, "partition covers " + std::to_string(count) +
                                      " positions but '" + symbol + "' has arity " +
                                      std::to_string(arity));
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < count; ++i) {
      auto it = std::find(seen.begin(), seen.end(), labels[i]);
      if (it == seen.end()) {
        seen.push_back(labels[i]);
        blocks.push_back({i});
      } else {
        blocks[static_cast<std::size_t>(it - seen.begin())].push_back(i);
      }
    }
    auto partition = Partition::from_blocks(blocks, arity);
    DerivedPredicateSpec derived{symbol, std::nullopt, std::nullopt, partition,
                                 std::string(symbol) + ".glue"};
    return emit(report_relation("glue", s, derived, glue(s.relation(symbol), partition)), out);
  });
}

predeq_status predeq_staircase(const predeq_structure* structure, const char* symbol, size_t p,
                               size_t t, size_t depth, predeq_report** out) {
  if (!structure || !symbol || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    auto w = find_staircase(structure->value, symbol, p, t, depth);
    return emit(report_staircase(structure->value, symbol, p, t, depth, w), out);
  });
}

predeq_status predeq_clique(const predeq_structure* structure, const char* symbol, size_t depth,
                            predeq_report** out) {
  if (!structure || !symbol || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    auto w = find_clique(structure->value, symbol, depth);
    return emit(report_clique(structure->value, symbol, depth, w), out);
  });
}

void predeq_scan_caps_default(predeq_scan_caps* caps) {
  if (!caps) return;
  const ScanCaps defaults;
  caps->max_fixed_positions = defaults.max_fixed_positions;
  caps->max_fixings_per_subset = defaults.max_fixings_per_subset;
  caps->max_permutations = defaults.max_permutations;
  caps->extra_candidates = nullptr;
  caps->extra_count = 0;
}

predeq_status predeq_criterion(const predeq_structure* structure, size_t depth,
                               const predeq_scan_caps* caps, predeq_report** out) {
  if (!structure || !out) return fail(PREDEQ_E_USAGE, "null argument");
  if (caps && caps->extra_count && !caps->extra_candidates)
    return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    const auto& s = structure->value;
    ScanCaps c;
    if (caps) {
      c.max_fixed_positions = caps->max_fixed_positions;
      c.max_fixings_per_subset = caps->max_fixings_per_subset;
      c.max_permutations = caps->max_permutations;
      for (std::size_t i = 0; i < caps->extra_count; ++i)
        c.extra_candidates.push_back(s.element(caps->extra_candidates[i]));
    }
    return emit(report_criterion(s, criterion_scan(s, depth, c)), out);
  });
}

predeq_status predeq_graph(const predeq_structure* structure, const char* symbol, int with_loops,
                           size_t depth, predeq_report** out) {
  if (!structure || !symbol || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    const auto kind = with_loops ? GraphKind::with_loops : GraphKind::simple;
    return emit(report_graph(structure->value, graph_analyze(structure->value, symbol, kind, depth)),
                out);
  });
}

predeq_status predeq_poset_builtin(const char* name, const char* selector, size_t depth,
                                   size_t budget, predeq_report** out) {
  if (!name || !selector || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    const auto stream = builtin_stream(name);
    auto report = analyze_poset(stream, named_selector(selector), depth, budget);
    return emit(report_poset(name, selector, budget, report), out);
  });
}

predeq_status predeq_poset_structure(const predeq_structure* structure, const char* symbol,
                                     int strict, const char* selector, size_t depth,
                                     size_t budget, predeq_report** out) {
  if (!structure || !symbol || !selector || !out) return fail(PREDEQ_E_USAGE, "null argument");
  return guarded([&] {
    const Poset poset(structure->value, symbol,
                      strict ? OrderKind::strict : OrderKind::nonstrict);
    const auto stream = StreamedPoset::from_poset(poset);
    auto report = analyze_poset(stream, named_selector(selector), depth, budget);
    return emit(report_poset(structure->value.name(), selector, budget, report), out);
  });
}

const char* predeq_report_text(const predeq_report* report) {
  return report ? report->value.text.c_str() : "";
}

const char* predeq_report_json(const predeq_report* report) {
  return report ? report->value.json.c_str() : "";
}

void predeq_report_free(predeq_report* report) { delete report; }

}  // extern "C"
