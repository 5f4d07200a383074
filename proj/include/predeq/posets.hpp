#ifndef PREDEQ_POSETS_HPP
#define PREDEQ_POSETS_HPP

// Base cones of partial orders, their generators, and the constructive
// passage between infinitely generated cones and forbidden patterns.
//
// Infinite posets are explored through StreamedPoset prefixes. "Infinitely
// generated" has no finite test; the reports carry non-stabilizing growth up
// to a budget plus, where possible, a constructed witness.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "predeq/model.hpp"
#include "predeq/witness.hpp"

namespace predeq {

enum class OrderKind { strict, nonstrict };
enum class ConeDirection { up, down };

// One binary order symbol on a finite carrier; the axioms of the tag are
// checked at construction. The structure also carries the dual order under
// `<symbol>^op`, so that upward patterns are ordinary patterns of the dual.
class Poset {
 public:
  Poset(const Structure& structure, std::string_view symbol, OrderKind kind);

  const Structure& structure() const noexcept { return structure_; }
  const std::string& order_symbol() const noexcept { return order_symbol_; }
  const std::string& dual_symbol() const noexcept { return dual_symbol_; }
  OrderKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return structure_.size(); }

  // a <= b (nonstrict) or a < b (strict).
  bool below(Element a, Element b) const;

  // Symbol whose pattern equations x R b describe the given cone direction.
  const std::string& symbol_for(ConeDirection direction) const {
    return direction == ConeDirection::down ? order_symbol_ : dual_symbol_;
  }

 private:
  Structure structure_;
  std::string order_symbol_;
  std::string dual_symbol_;
  OrderKind kind_;
};

std::vector<Element> upper_cone(const Poset& poset, std::span<const Element> subset);
std::vector<Element> lower_cone(const Poset& poset, std::span<const Element> subset);
std::vector<Element> cone(const Poset& poset, std::span<const Element> subset,
                          ConeDirection direction);

enum class GeneratorMode { automatic, exact, greedy };
inline constexpr std::size_t max_exact_generators = 15;

struct ConeReport {
  std::vector<Element> subset;
  ConeDirection direction = ConeDirection::up;
  std::vector<Element> cone;
  std::vector<Element> generators;
  bool exact = true;  // false when generators are only inclusion-minimal
};

// Minimum-cardinality B within the subset with the same cone (exact mode), or
// an inclusion-minimal one by index-order removal (greedy mode). Automatic
// picks exact up to max_exact_generators elements.
ConeReport minimal_generators(const Poset& poset, std::span<const Element> subset,
                              ConeDirection direction,
                              GeneratorMode mode = GeneratorMode::automatic);

// Elements of `subset`, in order, that strictly shrink the running cone
// (starting from the cone of the empty set). Their count is the growth
// measure used by generator_growth.
std::vector<Element> shrinking_chain(const Poset& poset, std::span<const Element> subset,
                                     ConeDirection direction);

class StreamedPoset {
 public:
  // Element name at enumeration index i, or nullopt once the stream ends.
  using Enumerator = std::function<std::optional<std::string>(std::size_t)>;
  // Comparison oracle: does the order relation hold between the two names?
  using Oracle = std::function<bool(std::string_view, std::string_view)>;

  StreamedPoset(std::string name, std::string symbol, OrderKind kind, Enumerator enumerator,
                Oracle oracle);

  static StreamedPoset from_poset(const Poset& poset);

  const std::string& name() const noexcept { return name_; }
  const std::string& symbol() const noexcept { return symbol_; }
  OrderKind kind() const noexcept { return kind_; }

  // First `budget` elements (fewer if the stream ends); throws
  // invariant_violation if the oracle breaks the order axioms on the prefix.
  Poset materialize(std::size_t budget) const;

 private:
  std::string name_;
  std::string symbol_;
  OrderKind kind_;
  Enumerator enumerator_;
  Oracle oracle_;
};

// Chooses the subset A of a materialized prefix, in enumeration order.
using Selector = std::function<std::vector<Element>(const Poset&)>;

struct GrowthReport {
  ConeDirection direction = ConeDirection::down;
  std::vector<std::size_t> prefix_sizes;
  std::vector<std::size_t> subset_sizes;
  std::vector<std::size_t> chain_lengths;       // shrinking_chain size per prefix
  std::vector<std::size_t> minimum_generators;  // minimal_generators size per prefix
  bool stabilized = false;
};

GrowthReport generator_growth(const StreamedPoset& stream, const Selector& select,
                              ConeDirection direction, std::size_t budget);

struct ConeWitnessResult {
  Poset prefix;
  std::optional<Witness> witness;  // over prefix.symbol_for(direction)
  std::size_t rows_constructed = 0;
  bool budget_exhausted = false;
};

// Constructs b_0, (a_1, b_1), (a_2, b_2), ... with a_i in the cone of
// {b_0..b_{i-1}} but not of {b_0..b_i}, refines the pairs, and emits a
// staircase (disjoint columns) or a clique (coincident columns) of the
// requested depth.
ConeWitnessResult cone_to_witness(const StreamedPoset& stream, const Selector& select,
                                  ConeDirection direction, std::size_t depth, std::size_t budget);

struct ConeCounterexample {
  std::vector<Element> proposed;  // a proper generator candidate C of B
  Element element = 0;            // in cone(C) but not in cone(B)
};

struct ConeEvidence {
  ConeDirection direction = ConeDirection::down;
  std::vector<Element> generators;  // B: the b-column (or the clique sequence)
  std::vector<ConeCounterexample> counterexamples;
};

// For a verified binary witness over the order (or its dual): every subset C
// of the first d-1 elements of B is refuted by an element of cone(C) outside
// cone(B). Each counterexample is re-checked against the order.
ConeEvidence witness_to_cone(const Poset& poset, const Witness& witness);

struct PosetReport {
  OrderKind kind = OrderKind::strict;
  std::size_t depth = 0;
  std::size_t materialized = 0;
  std::vector<std::string> elements;  // names of the materialized prefix
  std::optional<StaircaseWitness> staircase_down;
  std::optional<StaircaseWitness> staircase_up;
  bool clique_searched = false;
  std::optional<CliqueWitness> clique_down;
  std::optional<CliqueWitness> clique_up;
  GrowthReport growth_down;
  GrowthReport growth_up;
  std::optional<Witness> constructed;
  std::optional<ConeDirection> constructed_direction;
  bool consistent = true;
  std::vector<std::string> notes;

  bool any_detector_fired() const;
};

PosetReport analyze_poset(const StreamedPoset& stream, const Selector& select, std::size_t depth,
                          std::size_t budget);

// Named selectors: all, first, negative, odd-negative, positive. Integer
// selectors ignore element names that are not integer literals.
Selector named_selector(std::string_view name);

}  // namespace predeq

#endif  // PREDEQ_POSETS_HPP
