#ifndef PREDEQ_SRC_BOUND_HPP
#define PREDEQ_SRC_BOUND_HPP

// Equations resolved against a concrete structure: symbol indices, element
// indices and variable slots instead of names.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "predeq/model.hpp"

namespace predeq::detail {

struct BoundTerm {
  bool variable = false;
  std::size_t index = 0;  // variable slot or element
};

struct BoundEquation {
  std::optional<std::size_t> symbol;  // nullopt for equality
  std::vector<BoundTerm> args;
};

BoundTerm bind_term(const Structure& structure, const Term& term,
                    const std::function<std::optional<std::size_t>(std::string_view)>& slot);

BoundEquation bind_equation(const Structure& structure, const Equation& equation,
                            const std::function<std::optional<std::size_t>(std::string_view)>& slot);

std::vector<BoundEquation> bind_system(const Structure& structure, const EquationSystem& system);

bool holds(const Structure& structure, const BoundEquation& eq, std::span<const Element> point,
           Tuple& scratch);

std::size_t point_count(std::size_t universe, std::size_t variables);
Point decode_point(std::size_t code, std::size_t universe, std::size_t variables);

// One bitset row per equation over all points of A^|X| (point code is the
// base-|A| number with the last variable as least significant digit).
struct SolutionMatrix {
  std::size_t variables = 0;
  std::size_t points = 0;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  std::vector<std::uint64_t> all_points() const;
  std::vector<std::uint64_t> intersect(std::span<const std::size_t> subset) const;
};

SolutionMatrix solution_matrix(const Structure& structure, const EquationSystem& system);

}  // namespace predeq::detail

#endif  // PREDEQ_SRC_BOUND_HPP
