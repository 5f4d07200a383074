#ifndef PREDEQ_WITNESS_HPP
#define PREDEQ_WITNESS_HPP

// Forbidden patterns for equational Noetherianity, searched up to a finite
// depth d. A depth-d witness refutes Noetherianity only up to depth d; the
// reports never claim more than that.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "predeq/model.hpp"
#include "predeq/predicate_ops.hpp"

namespace predeq {

// Rows (a^i, b^i) with every coordinate pairwise different, P(a^i ++ b^i)
// false, and P(a^i ++ b^j) true for all j < i.
struct StaircaseWitness {
  struct Row {
    Tuple a;
    Tuple b;
    bool operator==(const Row&) const = default;
  };

  std::string symbol;
  std::size_t p = 0;
  std::size_t t = 0;
  std::vector<Row> rows;

  std::size_t depth() const noexcept { return rows.size(); }
  StaircaseWitness truncated(std::size_t depth) const;
  bool operator==(const StaircaseWitness&) const = default;
};

// Binary symbol, P(a_i, a_i) false and P(a_i, a_j) true for all j < i.
struct CliqueWitness {
  std::string symbol;
  std::vector<Element> sequence;

  std::size_t depth() const noexcept { return sequence.size(); }
  CliqueWitness truncated(std::size_t depth) const;
  bool operator==(const CliqueWitness&) const = default;
};

using Witness = std::variant<StaircaseWitness, CliqueWitness>;

bool verify_staircase(const Structure& structure, const StaircaseWitness& witness);
bool verify_clique(const Structure& structure, const CliqueWitness& witness);
bool verify_witness(const Structure& structure, const Witness& witness);

// Exhaustive DFS; rows are extended in lexicographic universe order, so the
// result is the first depth-d witness in that order.
std::optional<StaircaseWitness> find_staircase(const Structure& structure,
                                               std::string_view symbol, std::size_t p,
                                               std::size_t t, std::size_t depth);
std::optional<CliqueWitness> find_clique(const Structure& structure, std::string_view symbol,
                                         std::size_t depth);

// Equations s_1..s_d and points a_1..a_d in the sequence condition.
struct KotovSequence {
  EquationSystem equations;
  std::vector<Point> points;
};

// Staircase: P(x_1..x_p, b^i) at a^i. Clique: P(x, a_i) at a_i.
KotovSequence witness_to_kotov(const Structure& structure, const Witness& witness);

struct ColumnVerdict {
  enum class Kind { singleton, all_distinct };
  Kind kind = Kind::all_distinct;
  std::optional<Element> value;  // set for singleton columns

  bool operator==(const ColumnVerdict&) const = default;
};

// A subsequence of D where every column is constant or pairwise distinct and
// any two columns coincide row-wise or share no elements.
struct RefinedSequence {
  std::vector<std::size_t> rows;
  std::vector<ColumnVerdict> columns;
  std::vector<std::vector<std::size_t>> column_classes;  // row-wise coincident columns

  std::size_t size() const noexcept { return rows.size(); }
};

bool is_valid_refinement(std::span<const Tuple> sequence, std::span<const std::size_t> rows);

RefinedSequence refine_tuples(std::span<const Tuple> sequence);

inline constexpr std::size_t max_exact_refine = 10;
RefinedSequence refine_tuples_exact(std::span<const Tuple> sequence);

// Expands a witness over spec.result_name (computed from `structure`) back to
// equations over spec.source. The result satisfies the sequence condition but
// need not be pairwise distinct: fixings and glued positions repeat.
KotovSequence restore_witness(const Structure& structure, const DerivedPredicateSpec& spec,
                              const Witness& witness);

struct ScanCaps {
  std::size_t max_fixed_positions = 1;
  std::size_t max_fixings_per_subset = 64;
  std::size_t max_permutations = 24;
  std::vector<Element> extra_candidates;
};

struct Finding {
  DerivedPredicateSpec spec;
  Witness witness;
};

struct CriterionReport {
  std::size_t depth = 0;
  ScanCaps caps;
  std::vector<Finding> findings;
  std::size_t derived_predicates = 0;
  bool exhaustive = true;
};

// Bounded analog of the criterion: for every symbol, reorder, projection and
// exact partition within the caps, look for staircases on P'/I (|I| > 1) and
// cliques on P'/{{1},{2..k}} (|I| = 1, k >= 2).
CriterionReport criterion_scan(const Structure& structure, std::size_t depth,
                               const ScanCaps& caps = {});

enum class GraphKind { simple, with_loops };

struct GraphReport {
  GraphKind kind = GraphKind::simple;
  std::string symbol;
  std::size_t depth = 0;
  bool clique_searched = false;
  std::optional<CliqueWitness> clique;
  std::optional<StaircaseWitness> staircase;
};

GraphReport graph_analyze(const Structure& structure, std::string_view symbol, GraphKind kind,
                          std::size_t depth);

}  // namespace predeq

#endif  // PREDEQ_WITNESS_HPP
