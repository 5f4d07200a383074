#include "predeq/posets.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace predeq {

namespace {

std::string kind_name(OrderKind kind) { return kind == OrderKind::strict ? "strict" : "nonstrict"; }

void check_order_axioms(const Relation& rel, std::size_t n, OrderKind kind,
                        const std::string& symbol) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::invalid_argument,
                "'" + symbol + "' is not a " + kind_name(kind) + " order: " + what);
  };
  for (Element x = 0; x < n; ++x) {
    const bool loop = rel.contains(std::array{x, x});
    if (kind == OrderKind::strict && loop) fail("not irreflexive");
    if (kind == OrderKind::nonstrict && !loop) fail("not reflexive");
  }
  for (const auto& t : rel.tuples()) {
    if (t[0] != t[1] && rel.contains(std::array{t[1], t[0]})) fail("not antisymmetric");
    for (Element z = 0; z < n; ++z)
      if (rel.contains(std::array{t[1], z}) && !rel.contains(std::array{t[0], z}))
        fail("not transitive");
  }
}

}  // namespace

Poset::Poset(const Structure& structure, std::string_view symbol, OrderKind kind)
    : structure_(structure), order_symbol_(symbol), dual_symbol_(std::string(symbol) + "^op"),
      kind_(kind) {
  const auto& rel = structure.relation(symbol);
  if (rel.arity() != 2)
    throw Error(ErrorCode::arity_mismatch, "order symbol '" + order_symbol_ + "' must be binary");
  check_order_axioms(rel, structure.size(), kind, order_symbol_);
  std::vector<Tuple> dual;
  for (const auto& t : rel.tuples()) dual.push_back({t[1], t[0]});
  structure_ = Structure(structure.name(), structure.elements(), {{order_symbol_, 2}, {dual_symbol_, 2}},
                         {rel.tuples(), std::move(dual)});
}

bool Poset::below(Element a, Element b) const {
  return structure_.relation(0).contains(std::array{a, b});
}

std::vector<Element> cone(const Poset& poset, std::span<const Element> subset,
                          ConeDirection direction) {
  for (Element a : subset)
    if (a >= poset.size()) throw Error(ErrorCode::unknown_element, "element outside the carrier");
  std::vector<Element> out;
  for (Element x = 0; x < poset.size(); ++x) {
    bool in = std::all_of(subset.begin(), subset.end(), [&](Element a) {
      return direction == ConeDirection::up ? poset.below(a, x) : poset.below(x, a);
    });
    if (in) out.push_back(x);
  }
  return out;
}

std::vector<Element> upper_cone(const Poset& poset, std::span<const Element> subset) {
  return cone(poset, subset, ConeDirection::up);
}

std::vector<Element> lower_cone(const Poset& poset, std::span<const Element> subset) {
  return cone(poset, subset, ConeDirection::down);
}

ConeReport minimal_generators(const Poset& poset, std::span<const Element> subset,
                              ConeDirection direction, GeneratorMode mode) {
  if (subset.empty()) throw Error(ErrorCode::invalid_argument, "generator subset must be nonempty");
  if (mode == GeneratorMode::exact && subset.size() > max_exact_generators)
    throw Error(ErrorCode::limit_exceeded, "exact generator search is capped at " +
                                               std::to_string(max_exact_generators) + " elements");
  ConeReport report;
  report.subset.assign(subset.begin(), subset.end());
  report.direction = direction;
  report.cone = cone(poset, subset, direction);
  const bool exact = mode == GeneratorMode::exact ||
                     (mode == GeneratorMode::automatic && subset.size() <= max_exact_generators);
  report.exact = exact;
  const std::size_t n = subset.size();

  if (!exact) {
    std::vector<Element> kept(subset.begin(), subset.end());
    for (Element a : subset) {
      std::vector<Element> trial;
      std::copy_if(kept.begin(), kept.end(), std::back_inserter(trial),
                   [a](Element e) { return e != a; });
      if (cone(poset, trial, direction) == report.cone) kept = std::move(trial);
    }
    report.generators = std::move(kept);
    return report;
  }

  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> combo(size);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      std::vector<Element> chosen;
      for (std::size_t i : combo) chosen.push_back(subset[i]);
      if (cone(poset, chosen, direction) == report.cone) {
        report.generators = std::move(chosen);
        return report;
      }
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  report.generators.assign(subset.begin(), subset.end());
  return report;
}

namespace {

// Relation R with cone(C) = {x : R(x, c) for all c in C} in the direction.
bool cone_relation(const Poset& poset, ConeDirection direction, Element x, Element c) {
  return direction == ConeDirection::down ? poset.below(x, c) : poset.below(c, x);
}

}  // namespace

std::vector<Element> shrinking_chain(const Poset& poset, std::span<const Element> subset,
                                     ConeDirection direction) {
  std::vector<Element> running(poset.size());
  std::iota(running.begin(), running.end(), 0);
  std::vector<Element> chain;
  for (Element b : subset) {
    if (b >= poset.size()) throw Error(ErrorCode::unknown_element, "element outside the carrier");
    auto before = running.size();
    std::erase_if(running, [&](Element x) { return !cone_relation(poset, direction, x, b); });
    if (running.size() < before) chain.push_back(b);
  }
  return chain;
}

StreamedPoset::StreamedPoset(std::string name, std::string symbol, OrderKind kind,
                             Enumerator enumerator, Oracle oracle)
    : name_(std::move(name)), symbol_(std::move(symbol)), kind_(kind),
      enumerator_(std::move(enumerator)), oracle_(std::move(oracle)) {}

StreamedPoset StreamedPoset::from_poset(const Poset& poset) {
  const auto structure = poset.structure();
  const auto kind = poset.kind();
  const auto symbol = poset.order_symbol();
  auto enumerate = [structure](std::size_t i) -> std::optional<std::string> {
    if (i >= structure.size()) return std::nullopt;
    return structure.element_name(static_cast<Element>(i));
  };
  auto oracle = [structure, symbol](std::string_view a, std::string_view b) {
    return structure.holds(symbol, std::array{structure.element(a), structure.element(b)});
  };
  return StreamedPoset(structure.name(), symbol, kind, enumerate, oracle);
}

Poset StreamedPoset::materialize(std::size_t budget) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < budget; ++i) {
    auto next = enumerator_(i);
    if (!next) break;
    names.push_back(std::move(*next));
  }
  if (names.empty()) throw Error(ErrorCode::invalid_argument, "stream '" + name_ + "' is empty");
  std::vector<Tuple> tuples;
  for (Element a = 0; a < names.size(); ++a)
    for (Element b = 0; b < names.size(); ++b)
      if (oracle_(names[a], names[b])) tuples.push_back({a, b});
  try {
    Structure prefix(name_, std::move(names), {{symbol_, 2}}, {std::move(tuples)});
    return Poset(prefix, symbol_, kind_);
  } catch (const Error& e) {
    throw Error(ErrorCode::invariant_violation,
                "oracle of stream '" + name_ + "' is inconsistent: " + e.what());
  }
}

GrowthReport generator_growth(const StreamedPoset& stream, const Selector& select,
                              ConeDirection direction, std::size_t budget) {
  if (budget < 2) throw Error(ErrorCode::invalid_argument, "growth budget must be at least 2");
  GrowthReport report;
  report.direction = direction;
  constexpr std::size_t steps = 10;
  std::size_t last_request = 0;
  for (std::size_t i = 1; i <= steps; ++i) {
    const std::size_t request = std::max<std::size_t>(2, (budget * i + steps - 1) / steps);
    if (request == last_request) continue;
    last_request = request;
    const Poset prefix = stream.materialize(request);
    const auto subset = select(prefix);
    report.prefix_sizes.push_back(prefix.size());
    report.subset_sizes.push_back(subset.size());
    report.chain_lengths.push_back(shrinking_chain(prefix, subset, direction).size());
    report.minimum_generators.push_back(
        subset.empty() ? 0 : minimal_generators(prefix, subset, direction).generators.size());
  }
  const std::size_t tail = (report.chain_lengths.size() + 2) / 3;
  const auto first = report.chain_lengths.end() - static_cast<std::ptrdiff_t>(tail);
  report.stabilized = std::all_of(first, report.chain_lengths.end(),
                                  [&](std::size_t c) { return c == *first; });
  return report;
}

ConeWitnessResult cone_to_witness(const StreamedPoset& stream, const Selector& select,
                                  ConeDirection direction, std::size_t depth, std::size_t budget) {
  if (depth == 0) throw Error(ErrorCode::invalid_argument, "depth must be at least 1");
  ConeWitnessResult result{stream.materialize(budget), std::nullopt, 0, false};
  const Poset& poset = result.prefix;
  const auto subset = select(poset);

  std::vector<Tuple> pairs;
  if (!subset.empty()) {
    std::vector<Element> running;
    for (Element x = 0; x < poset.size(); ++x)
      if (cone_relation(poset, direction, x, subset.front())) running.push_back(x);
    for (std::size_t i = 1; i < subset.size(); ++i) {
      const Element b = subset[i];
      std::vector<Element> next;
      std::optional<Element> dropped;
      for (Element x : running) {
        if (cone_relation(poset, direction, x, b))
          next.push_back(x);
        else if (!dropped)
          dropped = x;
      }
      if (!dropped) continue;
      pairs.push_back({*dropped, b});
      running = std::move(next);
    }
  }
  result.rows_constructed = pairs.size();
  if (pairs.empty()) {
    result.budget_exhausted = true;
    return result;
  }

  const auto refined = refine_tuples(pairs);
  if (refined.size() < depth) {
    result.budget_exhausted = true;
    return result;
  }
  const std::string& symbol = poset.symbol_for(direction);
  const bool coincide = refined.column_classes.size() == 1;
  if (coincide) {
    CliqueWitness w{symbol, {}};
    for (std::size_t i = 0; i < depth; ++i) w.sequence.push_back(pairs[refined.rows[i]][0]);
    result.witness = std::move(w);
  } else {
    StaircaseWitness w{symbol, 1, 1, {}};
    for (std::size_t i = 0; i < depth; ++i) {
      const auto& row = pairs[refined.rows[i]];
      w.rows.push_back({{row[0]}, {row[1]}});
    }
    result.witness = std::move(w);
  }
  if (!verify_witness(poset.structure(), *result.witness))
    throw Error(ErrorCode::invariant_violation, "constructed witness does not verify");
  return result;
}

ConeEvidence witness_to_cone(const Poset& poset, const Witness& witness) {
  std::vector<Element> as;
  std::vector<Element> bs;
  std::string symbol;
  if (const auto* s = std::get_if<StaircaseWitness>(&witness)) {
    if (s->p != 1 || s->t != 1)
      throw Error(ErrorCode::invalid_argument, "order witnesses have split (1,1)");
    symbol = s->symbol;
    for (const auto& row : s->rows) {
      as.push_back(row.a[0]);
      bs.push_back(row.b[0]);
    }
  } else {
    const auto& c = std::get<CliqueWitness>(witness);
    symbol = c.symbol;
    as = c.sequence;
    bs = c.sequence;
  }
  ConeEvidence evidence;
  if (symbol == poset.order_symbol())
    evidence.direction = ConeDirection::down;
  else if (symbol == poset.dual_symbol())
    evidence.direction = ConeDirection::up;
  else
    throw Error(ErrorCode::invalid_argument, "'" + symbol + "' is not the order of the poset");
  if (!verify_witness(poset.structure(), witness))
    throw Error(ErrorCode::invalid_argument, "witness does not verify");
  evidence.generators = bs;

  const std::size_t d = bs.size();
  const std::size_t proposals = d == 0 ? 0 : d - 1;
  const auto full_cone = cone(poset, bs, evidence.direction);
  for (std::size_t mask = 1; mask < (std::size_t{1} << proposals); ++mask) {
    ConeCounterexample ce;
    std::size_t highest = 0;
    for (std::size_t i = 0; i < proposals; ++i)
      if (mask >> i & 1U) {
        ce.proposed.push_back(bs[i]);
        highest = i;
      }
    ce.element = as[highest + 1];
    const auto proposed_cone = cone(poset, ce.proposed, evidence.direction);
    const bool in_proposed =
        std::binary_search(proposed_cone.begin(), proposed_cone.end(), ce.element);
    const bool in_full = std::binary_search(full_cone.begin(), full_cone.end(), ce.element);
    if (!in_proposed || in_full)
      throw Error(ErrorCode::invariant_violation, "cone counterexample failed re-check");
    evidence.counterexamples.push_back(std::move(ce));
  }
  return evidence;
}

bool PosetReport::any_detector_fired() const {
  return staircase_down || staircase_up || clique_down || clique_up || !growth_down.stabilized ||
         !growth_up.stabilized;
}

PosetReport analyze_poset(const StreamedPoset& stream, const Selector& select, std::size_t depth,
                          std::size_t budget) {
  PosetReport report;
  report.kind = stream.kind();
  report.depth = depth;
  const Poset prefix = stream.materialize(budget);
  report.materialized = prefix.size();
  report.elements = prefix.structure().elements();
  const auto& down = prefix.order_symbol();
  const auto& up = prefix.dual_symbol();
  report.staircase_down = find_staircase(prefix.structure(), down, 1, 1, depth);
  report.staircase_up = find_staircase(prefix.structure(), up, 1, 1, depth);
  report.clique_searched = stream.kind() == OrderKind::strict;
  if (report.clique_searched) {
    report.clique_down = find_clique(prefix.structure(), down, depth);
    report.clique_up = find_clique(prefix.structure(), up, depth);
  } else {
    report.notes.push_back("clique detector disabled: a nonstrict order is reflexive");
  }
  report.growth_down = generator_growth(stream, select, ConeDirection::down, budget);
  report.growth_up = generator_growth(stream, select, ConeDirection::up, budget);

  for (auto direction : {ConeDirection::down, ConeDirection::up}) {
    const auto& growth = direction == ConeDirection::down ? report.growth_down : report.growth_up;
    if (growth.stabilized) continue;
    auto built = cone_to_witness(stream, select, direction, depth, budget);
    if (built.witness) {
      report.constructed = std::move(built.witness);
      report.constructed_direction = direction;
      break;
    }
    report.notes.push_back(std::string("growth ") +
                           (direction == ConeDirection::down ? "down" : "up") +
                           " did not stabilize but the construction ran out of budget");
  }

  auto cross_check = [&](const Witness& w, const char* label) {
    if (!verify_witness(prefix.structure(), w)) {
      report.consistent = false;
      report.notes.push_back(std::string(label) + ": witness does not verify");
      return;
    }
    const auto evidence = witness_to_cone(prefix, w);
    const auto chain = shrinking_chain(prefix, evidence.generators, evidence.direction);
    if (chain.size() < depth) {
      report.consistent = false;
      report.notes.push_back(std::string(label) + ": cone chain shorter than the depth");
    }
  };
  if (report.staircase_down) cross_check(*report.staircase_down, "staircase down");
  if (report.staircase_up) cross_check(*report.staircase_up, "staircase up");
  if (report.clique_down) cross_check(*report.clique_down, "clique down");
  if (report.clique_up) cross_check(*report.clique_up, "clique up");
  if (report.constructed) cross_check(*report.constructed, "constructed");
  return report;
}

namespace {

std::optional<long long> integer_name(std::string_view name) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  return value;
}

Selector integer_selector(std::function<bool(long long)> keep) {
  return [keep = std::move(keep)](const Poset& poset) {
    std::vector<Element> out;
    for (Element e = 0; e < poset.size(); ++e)
      if (auto v = integer_name(poset.structure().element_name(e)); v && keep(*v))
        out.push_back(e);
    return out;
  };
}

}  // namespace

Selector named_selector(std::string_view name) {
  if (name == "all")
    return [](const Poset& poset) {
      std::vector<Element> out(poset.size());
      std::iota(out.begin(), out.end(), 0);
      return out;
    };
  if (name == "first") return [](const Poset&) { return std::vector<Element>{0}; };
  if (name == "negative") return integer_selector([](long long v) { return v < 0; });
  if (name == "positive") return integer_selector([](long long v) { return v > 0; });
  if (name == "odd-negative")
    return integer_selector([](long long v) { return v < 0 && v % 2 != 0; });
  throw Error(ErrorCode::invalid_argument, "unknown selector '" + std::string(name) + "'");
}

}  // namespace predeq
