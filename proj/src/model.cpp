#include "predeq/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "bound.hpp"

namespace predeq {

namespace {

constexpr std::size_t dense_limit = std::size_t{1} << 22;

std::optional<std::size_t> dense_size(std::size_t arity, std::size_t universe) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (universe != 0 && total > dense_limit / universe) return std::nullopt;
    total *= universe;
  }
  return total;
}

std::size_t dense_code(std::span<const Element> tuple, std::size_t universe) {
  std::size_t code = 0;
  for (Element e : tuple) code = code * universe + e;
  return code;
}

}  // namespace

Relation::Relation(std::size_t arity, std::size_t universe_size, std::vector<Tuple> tuples)
    : arity_(arity), universe_size_(universe_size), tuples_(std::move(tuples)) {
  if (arity_ == 0) throw Error(ErrorCode::invalid_argument, "relation arity must be positive");
  for (const auto& t : tuples_) {
    if (t.size() != arity_)
      throw Error(ErrorCode::arity_mismatch, "tuple of length " + std::to_string(t.size()) +
                                                 " in relation of arity " + std::to_string(arity_));
    for (Element e : t)
      if (e >= universe_size_)
        throw Error(ErrorCode::unknown_element, "tuple coordinate outside the universe");
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  if (auto n = dense_size(arity_, universe_size_)) {
    dense_.assign(*n, false);
    for (const auto& t : tuples_) dense_[dense_code(t, universe_size_)] = true;
  }
}

bool Relation::contains(std::span<const Element> tuple) const {
  if (tuple.size() != arity_) return false;
  if (!dense_.empty()) {
    for (Element e : tuple)
      if (e >= universe_size_) return false;
    return dense_[dense_code(tuple, universe_size_)];
  }
  return std::binary_search(tuples_.begin(), tuples_.end(), tuple,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                  b.end());
                            });
}

Structure::Structure(std::string name, std::vector<std::string> elements,
                     std::vector<PredicateSymbol> symbols,
                     std::vector<std::vector<Tuple>> relations)
    : name_(std::move(name)), elements_(std::move(elements)), symbols_(std::move(symbols)) {
  if (elements_.empty()) throw Error(ErrorCode::invalid_argument, "universe must be nonempty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!element_index_.emplace(elements_[i], static_cast<Element>(i)).second)
      throw Error(ErrorCode::invalid_argument, "duplicate element '" + elements_[i] + "'");
  }
  if (relations.size() != symbols_.size())
    throw Error(ErrorCode::invalid_argument, "one tuple list per predicate symbol expected");
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& sym = symbols_[i];
    if (sym.name == equality_symbol)
      throw Error(ErrorCode::invalid_argument, "'=' is reserved for equality");
    if (!seen.insert(sym.name).second)
      throw Error(ErrorCode::invalid_argument, "duplicate predicate symbol '" + sym.name + "'");
    if (sym.arity == 0)
      throw Error(ErrorCode::invalid_argument, "predicate '" + sym.name + "' has arity 0");
    relations_.emplace_back(sym.arity, elements_.size(), std::move(relations[i]));
  }
}

std::optional<Element> Structure::find_element(std::string_view name) const {
  auto it = element_index_.find(std::string(name));
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

Element Structure::element(std::string_view name) const {
  if (auto e = find_element(name)) return *e;
  throw Error(ErrorCode::unknown_element,
              "element '" + std::string(name) + "' is not in the universe of '" + name_ + "'");
}

std::optional<std::size_t> Structure::find_symbol(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Structure::symbol_index(std::string_view name) const {
  if (auto i = find_symbol(name)) return *i;
  throw Error(ErrorCode::unknown_symbol, "unknown predicate symbol '" + std::string(name) + "'");
}

const PredicateSymbol& Structure::symbol(std::string_view name) const {
  return symbols_[symbol_index(name)];
}

const Relation& Structure::relation(std::string_view name) const {
  return relations_[symbol_index(name)];
}

bool Structure::holds(std::string_view symbol, std::span<const Element> tuple) const {
  const auto& rel = relation(symbol);
  if (tuple.size() != rel.arity())
    throw Error(ErrorCode::arity_mismatch, "'" + std::string(symbol) + "' expects " +
                                               std::to_string(rel.arity()) + " arguments");
  return rel.contains(tuple);
}

Structure Structure::with_relation(PredicateSymbol symbol, const Relation& relation) const {
  if (relation.universe_size() != size() || relation.arity() != symbol.arity)
    throw Error(ErrorCode::arity_mismatch, "relation does not fit symbol '" + symbol.name + "'");
  auto symbols = symbols_;
  std::vector<std::vector<Tuple>> tuples;
  for (const auto& r : relations_) tuples.push_back(r.tuples());
  symbols.push_back(std::move(symbol));
  tuples.push_back(relation.tuples());
  return Structure(name_, elements_, std::move(symbols), std::move(tuples));
}

bool Structure::operator==(const Structure& other) const {
  return name_ == other.name_ && elements_ == other.elements_ && symbols_ == other.symbols_ &&
         relations_ == other.relations_;
}

namespace {

template <class F>
void for_each_term(const Equation& eq, F&& f) {
  std::visit(
      [&](const auto& e) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Atom>) {
          for (const auto& t : e.args) f(t);
        } else {
          f(e.lhs);
          f(e.rhs);
        }
      },
      eq);
}

}  // namespace

EquationSystem::EquationSystem(std::string name, std::vector<std::string> variables,
                               std::vector<Equation> equations)
    : name_(std::move(name)), variables_(std::move(variables)), equations_(std::move(equations)) {
  std::set<std::string, std::less<>> declared;
  for (const auto& v : variables_)
    if (!declared.insert(v).second)
      throw Error(ErrorCode::invalid_argument, "duplicate variable '" + v + "'");
  for (const auto& eq : equations_) {
    if (const auto* atom = std::get_if<Atom>(&eq); atom && atom->args.empty())
      throw Error(ErrorCode::arity_mismatch, "atom '" + atom->predicate + "' has no arguments");
    for_each_term(eq, [&](const Term& t) {
      if (const auto* v = std::get_if<Variable>(&t); v && !declared.contains(v->name))
        throw Error(ErrorCode::unassigned_variable,
                    "variable '" + v->name + "' is not declared in system '" + name_ + "'");
    });
  }
}

EquationSystem EquationSystem::subsystem(std::span<const std::size_t> indices) const {
  std::vector<Equation> eqs;
  eqs.reserve(indices.size());
  for (std::size_t i : indices) eqs.push_back(equations_.at(i));
  return EquationSystem(name_, variables_, std::move(eqs));
}

EquationSystem EquationSystem::with_equations(std::vector<Equation> equations) const {
  return EquationSystem(name_, variables_, std::move(equations));
}

namespace detail {

BoundTerm bind_term(const Structure& structure, const Term& term,
                    const std::function<std::optional<std::size_t>(std::string_view)>& slot) {
  if (const auto* v = std::get_if<Variable>(&term)) {
    auto s = slot(v->name);
    if (!s) throw Error(ErrorCode::unassigned_variable, "variable '" + v->name + "' is unassigned");
    return {true, *s};
  }
  return {false, structure.element(std::get<Constant>(term).element)};
}

BoundEquation bind_equation(
    const Structure& structure, const Equation& equation,
    const std::function<std::optional<std::size_t>(std::string_view)>& slot) {
  BoundEquation out;
  if (const auto* atom = std::get_if<Atom>(&equation)) {
    out.symbol = structure.symbol_index(atom->predicate);
    const auto arity = structure.symbols()[*out.symbol].arity;
    if (atom->args.size() != arity)
      throw Error(ErrorCode::arity_mismatch, "'" + atom->predicate + "' expects " +
                                                 std::to_string(arity) + " arguments, got " +
                                                 std::to_string(atom->args.size()));
    for (const auto& t : atom->args) out.args.push_back(bind_term(structure, t, slot));
  } else {
    const auto& eq = std::get<Equality>(equation);
    out.args.push_back(bind_term(structure, eq.lhs, slot));
    out.args.push_back(bind_term(structure, eq.rhs, slot));
  }
  return out;
}

std::vector<BoundEquation> bind_system(const Structure& structure,
                                       const EquationSystem& system) {
  auto slot = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto& vars = system.variables();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
  };
  std::vector<BoundEquation> out;
  out.reserve(system.size());
  for (const auto& eq : system.equations()) out.push_back(bind_equation(structure, eq, slot));
  return out;
}

bool holds(const Structure& structure, const BoundEquation& eq, std::span<const Element> point,
           Tuple& scratch) {
  scratch.resize(eq.args.size());
  for (std::size_t i = 0; i < eq.args.size(); ++i)
    scratch[i] = eq.args[i].variable ? point[eq.args[i].index]
                                     : static_cast<Element>(eq.args[i].index);
  if (!eq.symbol) return scratch[0] == scratch[1];
  return structure.relation(*eq.symbol).contains(scratch);
}

std::size_t point_count(std::size_t universe, std::size_t variables) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < variables; ++i) {
    if (total > max_search_points / universe)
      throw Error(ErrorCode::limit_exceeded,
                  "search space |A|^|X| exceeds " + std::to_string(max_search_points) + " points");
    total *= universe;
  }
  return total;
}

Point decode_point(std::size_t code, std::size_t universe, std::size_t variables) {
  Point p(variables);
  for (std::size_t i = variables; i-- > 0;) {
    p[i] = static_cast<Element>(code % universe);
    code /= universe;
  }
  return p;
}

SolutionMatrix solution_matrix(const Structure& structure, const EquationSystem& system) {
  const auto bound = bind_system(structure, system);
  SolutionMatrix m;
  m.variables = system.variables().size();
  m.points = point_count(structure.size(), m.variables);
  m.words = (m.points + 63) / 64;
  m.rows.assign(bound.size(), std::vector<std::uint64_t>(m.words, 0));
  Point point(m.variables, 0);
  Tuple scratch;
  for (std::size_t code = 0; code < m.points; ++code) {
    for (std::size_t e = 0; e < bound.size(); ++e)
      if (holds(structure, bound[e], point, scratch)) m.rows[e][code / 64] |= 1ULL << (code % 64);
    // odometer in universe order, last variable fastest
    for (std::size_t i = m.variables; i-- > 0;) {
      if (++point[i] < structure.size()) break;
      point[i] = 0;
    }
  }
  return m;
}

std::vector<std::uint64_t> SolutionMatrix::all_points() const {
  std::vector<std::uint64_t> bits(words, ~0ULL);
  if (points % 64 != 0 && words > 0) bits.back() = (1ULL << (points % 64)) - 1;
  return bits;
}

std::vector<std::uint64_t> SolutionMatrix::intersect(std::span<const std::size_t> subset) const {
  auto bits = all_points();
  for (std::size_t e : subset)
    for (std::size_t w = 0; w < words; ++w) bits[w] &= rows[e][w];
  return bits;
}

}  // namespace detail

bool eval_equation(const Structure& structure, const Equation& equation,
                   const Assignment& assignment) {
  std::vector<std::string> names;
  Point point;
  for (const auto& [name, e] : assignment) {
    if (e >= structure.size())
      throw Error(ErrorCode::unknown_element, "assignment of '" + name + "' is outside the universe");
    names.push_back(name);
    point.push_back(e);
  }
  auto slot = [&](std::string_view name) -> std::optional<std::size_t> {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  };
  const auto bound = detail::bind_equation(structure, equation, slot);
  Tuple scratch;
  return detail::holds(structure, bound, point, scratch);
}

AlgebraicSet solve_system(const Structure& structure, const EquationSystem& system) {
  const auto m = detail::solution_matrix(structure, system);
  std::vector<std::size_t> all(system.size());
  std::iota(all.begin(), all.end(), 0);
  const auto bits = m.intersect(all);
  AlgebraicSet out{system.variables(), {}};
  for (std::size_t code = 0; code < m.points; ++code)
    if (bits[code / 64] >> (code % 64) & 1ULL)
      out.points.push_back(detail::decode_point(code, structure.size(), m.variables));
  return out;
}

bool systems_equivalent(const Structure& structure, const EquationSystem& first,
                        const EquationSystem& second) {
  auto a = first.variables();
  auto b = second.variables();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw Error(ErrorCode::invalid_argument, "systems '" + first.name() + "' and '" +
                                                 second.name() + "' have different variable sets");
  // Solve the second system in the first one's variable order.
  const EquationSystem aligned(second.name(), first.variables(), second.equations());
  return solve_system(structure, first) == solve_system(structure, aligned);
}

std::vector<std::size_t> minimize_system(const Structure& structure,
                                         const EquationSystem& system, MinimizeMode mode) {
  const std::size_t n = system.size();
  if (mode == MinimizeMode::exact && n > max_exact_minimize)
    throw Error(ErrorCode::limit_exceeded,
                "exact minimization is capped at " + std::to_string(max_exact_minimize) +
                    " equations; use greedy mode");
  const auto m = detail::solution_matrix(structure, system);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const auto target = m.intersect(all);

  if (mode == MinimizeMode::greedy) {
    std::vector<std::size_t> kept = all;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> trial;
      std::copy_if(kept.begin(), kept.end(), std::back_inserter(trial),
                   [i](std::size_t k) { return k != i; });
      if (m.intersect(trial) == target) kept = std::move(trial);
    }
    return kept;
  }

  // Size order, then lexicographic order within a size.
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> combo(size);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      if (m.intersect(combo) == target) return combo;
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return all;
}

ShapeClasses classify_by_shape(const EquationSystem& system) {
  ShapeClasses out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    bool has_var = false;
    bool has_const = false;
    for_each_term(system.equations()[i], [&](const Term& t) {
      (std::holds_alternative<Variable>(t) ? has_var : has_const) = true;
    });
    if (!has_var)
      out.constants_only.push_back(i);
    else if (!has_const)
      out.variables_only.push_back(i);
    else
      out.mixed.push_back(i);
  }
  return out;
}

Configuration configuration_of(const Equation& equation) {
  Configuration c;
  auto slot = [](const Term& t) -> std::optional<std::string> {
    if (const auto* v = std::get_if<Variable>(&t)) return v->name;
    return std::nullopt;
  };
  if (const auto* atom = std::get_if<Atom>(&equation)) {
    c.symbol = atom->predicate;
    for (const auto& t : atom->args) c.pattern.push_back(slot(t));
  } else {
    const auto& eq = std::get<Equality>(equation);
    c.symbol = std::string(equality_symbol);
    c.pattern = {slot(eq.lhs), slot(eq.rhs)};
  }
  return c;
}

bool same_configuration(const Equation& first, const Equation& second) {
  return configuration_of(first) == configuration_of(second);
}

std::map<Configuration, std::vector<std::size_t>> group_by_configuration(
    const EquationSystem& system) {
  std::map<Configuration, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < system.size(); ++i)
    groups[configuration_of(system.equations()[i])].push_back(i);
  return groups;
}

std::size_t configuration_bound(std::size_t arity, std::size_t variable_count) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= variable_count + 1;
  return total;
}

bool check_kotov_prefix(const Structure& structure, const EquationSystem& sequence,
                        std::span<const Point> points) {
  if (points.size() != sequence.size())
    throw Error(ErrorCode::invalid_argument,
                "kotov prefix: " + std::to_string(sequence.size()) + " equations but " +
                    std::to_string(points.size()) + " points");
  const auto vars = sequence.variables().size();
  for (const auto& p : points) {
    if (p.size() != vars)
      throw Error(ErrorCode::unassigned_variable, "point does not cover the variable set");
    for (Element e : p)
      if (e >= structure.size())
        throw Error(ErrorCode::unknown_element, "point coordinate outside the universe");
  }
  const auto bound = detail::bind_system(structure, sequence);
  Tuple scratch;
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (detail::holds(structure, bound[i], points[i], scratch)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!detail::holds(structure, bound[j], points[i], scratch)) return false;
  }
  return true;
}

}  // namespace predeq
