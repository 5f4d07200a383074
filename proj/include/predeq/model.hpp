#ifndef PREDEQ_MODEL_HPP
#define PREDEQ_MODEL_HPP

// Finite predicate structures and atomic (Diophantine) equations over them.
//
// Elements of a structure double as constant symbols, equality is the
// built-in identity predicate, and every operation here is exhaustive over
// the finite universe.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "predeq/error.hpp"

namespace predeq {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

struct PredicateSymbol {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const PredicateSymbol&) const = default;
};

// A set of equal-length tuples over a universe {0, ..., universe_size - 1}.
// Tuples are kept sorted and unique; membership is O(1) for small relations.
class Relation {
 public:
  Relation(std::size_t arity, std::size_t universe_size, std::vector<Tuple> tuples);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t universe_size() const noexcept { return universe_size_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }

  bool contains(std::span<const Element> tuple) const;

  bool operator==(const Relation& other) const {
    return arity_ == other.arity_ && tuples_ == other.tuples_;
  }

 private:
  std::size_t arity_;
  std::size_t universe_size_;
  std::vector<Tuple> tuples_;
  std::vector<bool> dense_;  // empty when the relation is too large to index densely
};

class Structure {
 public:
  // Validates: nonempty universe, unique element and symbol names, positive
  // arities, tuple lengths and coordinates.
  Structure(std::string name, std::vector<std::string> elements,
            std::vector<PredicateSymbol> symbols, std::vector<std::vector<Tuple>> relations);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element_name(Element e) const { return elements_.at(e); }
  std::optional<Element> find_element(std::string_view name) const;
  Element element(std::string_view name) const;  // throws unknown_element

  const std::vector<PredicateSymbol>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> find_symbol(std::string_view name) const;
  std::size_t symbol_index(std::string_view name) const;  // throws unknown_symbol
  const PredicateSymbol& symbol(std::string_view name) const;
  const Relation& relation(std::size_t index) const { return relations_.at(index); }
  const Relation& relation(std::string_view name) const;

  bool holds(std::string_view symbol, std::span<const Element> tuple) const;

  // Copy with one more relation over the same universe.
  Structure with_relation(PredicateSymbol symbol, const Relation& relation) const;

  bool operator==(const Structure& other) const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, Element> element_index_;
  std::vector<PredicateSymbol> symbols_;
  std::vector<Relation> relations_;
};

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

struct Constant {
  std::string element;
  auto operator<=>(const Constant&) const = default;
};

using Term = std::variant<Variable, Constant>;

struct Atom {
  std::string predicate;
  std::vector<Term> args;
  bool operator==(const Atom&) const = default;
};

struct Equality {
  Term lhs;
  Term rhs;
  bool operator==(const Equality&) const = default;
};

using Equation = std::variant<Atom, Equality>;

inline Term var(std::string name) { return Variable{std::move(name)}; }
inline Term constant(std::string element) { return Constant{std::move(element)}; }

// Ordered variables X plus an ordered list of equations over X.
class EquationSystem {
 public:
  EquationSystem() = default;
  EquationSystem(std::string name, std::vector<std::string> variables,
                 std::vector<Equation> equations);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }
  std::size_t size() const noexcept { return equations_.size(); }

  EquationSystem subsystem(std::span<const std::size_t> indices) const;
  EquationSystem with_equations(std::vector<Equation> equations) const;

  bool operator==(const EquationSystem&) const = default;

 private:
  std::string name_;
  std::vector<std::string> variables_;
  std::vector<Equation> equations_;
};

// A point of A^|X|, indexed like EquationSystem::variables().
using Point = std::vector<Element>;
using Assignment = std::map<std::string, Element, std::less<>>;

struct AlgebraicSet {
  std::vector<std::string> variables;
  std::vector<Point> points;  // lexicographic in universe order

  bool operator==(const AlgebraicSet&) const = default;
};

bool eval_equation(const Structure& structure, const Equation& equation,
                   const Assignment& assignment);

// Upper bound on |A|^|X| accepted by the exhaustive solvers.
inline constexpr std::size_t max_search_points = std::size_t{1} << 24;

AlgebraicSet solve_system(const Structure& structure, const EquationSystem& system);

bool systems_equivalent(const Structure& structure, const EquationSystem& first,
                        const EquationSystem& second);

enum class MinimizeMode { exact, greedy };

inline constexpr std::size_t max_exact_minimize = 20;

// Indices (ascending) of a subsystem equivalent to the input.
std::vector<std::size_t> minimize_system(const Structure& structure,
                                         const EquationSystem& system, MinimizeMode mode);

struct ShapeClasses {
  std::vector<std::size_t> constants_only;  // S_C
  std::vector<std::size_t> variables_only;  // S_X
  std::vector<std::size_t> mixed;           // S_XC
};

ShapeClasses classify_by_shape(const EquationSystem& system);

// Symbol (or "=" for equality) plus, per position, a constant slot (nullopt)
// or the specific variable occupying it.
struct Configuration {
  std::string symbol;
  std::vector<std::optional<std::string>> pattern;

  auto operator<=>(const Configuration&) const = default;
};

inline constexpr std::string_view equality_symbol = "=";

Configuration configuration_of(const Equation& equation);
bool same_configuration(const Equation& first, const Equation& second);
std::map<Configuration, std::vector<std::size_t>> group_by_configuration(
    const EquationSystem& system);

// (|X| + 1)^arity: the number of distinct configurations of one symbol.
std::size_t configuration_bound(std::size_t arity, std::size_t variable_count);

// Finite prefix of the sequence condition: s_i fails at a_i, and s_j holds
// at a_i for every j < i. Equations are read from `sequence` in order.
bool check_kotov_prefix(const Structure& structure, const EquationSystem& sequence,
                        std::span<const Point> points);

}  // namespace predeq

#endif  // PREDEQ_MODEL_HPP
