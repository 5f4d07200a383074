#ifndef PREDEQ_PREDICATE_OPS_HPP
#define PREDEQ_PREDICATE_OPS_HPP

// Derived predicates: fixing coordinates (projection), identifying
// coordinates (gluing) and permuting coordinates (reorder).
//
// All positions are 0-based here; the text formats and the CLI use 1-based
// positions and convert at the boundary.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "predeq/model.hpp"

namespace predeq {

struct Fixing {
  std::size_t position = 0;
  Element element = 0;
  auto operator<=>(const Fixing&) const = default;
};

// Kept positions (ascending) become the arguments of the projected predicate
// in that order; every other position is fixed to an element.
struct ProjectionSpec {
  std::vector<std::size_t> kept;
  std::vector<Fixing> fixings;  // ascending by position

  bool operator==(const ProjectionSpec&) const = default;

  // Builds a spec from fixings alone; kept is the complement.
  static ProjectionSpec fixing(std::size_t arity, std::vector<Fixing> fixings);
  void validate(std::size_t arity, std::size_t universe_size) const;
};

// Exact partition of {0, ..., ground_size - 1}. Blocks are sorted, and
// ordered by their least member; block j supplies argument j of the glued
// predicate.
class Partition {
 public:
  static Partition from_blocks(std::vector<std::vector<std::size_t>> blocks,
                               std::size_t ground_size);
  static Partition singletons(std::size_t ground_size);
  static Partition single_block(std::size_t ground_size);
  // {{0}, {1, ..., ground_size - 1}}
  static Partition head_and_rest(std::size_t ground_size);

  // Every exact partition of the ground set, in restricted-growth order.
  static std::vector<Partition> all(std::size_t ground_size);

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t ground_size() const noexcept { return block_of_.size(); }
  std::size_t block_of(std::size_t position) const { return block_of_.at(position); }
  bool is_identity() const noexcept { return blocks_.size() == block_of_.size(); }

  bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// Stages apply in the order reorder -> project -> glue.
struct DerivedPredicateSpec {
  std::string source;
  std::optional<std::vector<std::size_t>> reorder;
  std::optional<ProjectionSpec> projection;
  std::optional<Partition> gluing;
  std::string result_name;

  bool operator==(const DerivedPredicateSpec&) const = default;

  bool is_identity() const;
};

// Reorder semantics: (t[perm[0]], ..., t[perm[n-1]]) is in the result iff t
// is in the source.
Relation reorder(const Relation& relation, std::span<const std::size_t> permutation);
Relation project(const Relation& relation, const ProjectionSpec& spec);
Relation glue(const Relation& relation, const Partition& partition);

Relation reorder_predicate(const Structure& structure, std::string_view symbol,
                           std::span<const std::size_t> permutation);
Relation project_predicate(const Structure& structure, std::string_view symbol,
                           const ProjectionSpec& spec);
Relation glue_predicate(const Structure& structure, std::string_view symbol,
                        const Partition& partition);

std::size_t derived_arity(const DerivedPredicateSpec& spec, std::size_t source_arity);
Relation derive_relation(const Structure& structure, const DerivedPredicateSpec& spec);
Structure derive_structure(const Structure& structure,
                           std::span<const DerivedPredicateSpec> specs);

// For each source position, the derived argument it copies or the element it
// is fixed to. Composing a derived tuple with this layout yields the source
// tuple that decides membership.
struct DerivedArgument {
  std::size_t index = 0;
};
using SourceSlot = std::variant<DerivedArgument, Element>;

std::vector<SourceSlot> source_layout(const DerivedPredicateSpec& spec, std::size_t source_arity);
Tuple expand_to_source(std::span<const SourceSlot> layout, std::span<const Element> derived);

bool is_permutation(std::span<const std::size_t> permutation, std::size_t n);

}  // namespace predeq

#endif  // PREDEQ_PREDICATE_OPS_HPP
