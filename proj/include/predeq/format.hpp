#ifndef PREDEQ_FORMAT_HPP
#define PREDEQ_FORMAT_HPP

// Line-oriented text formats for structures and equation systems.
//
//   # comment
//   structure gamma
//     elements v1 v2 v3
//     predicate E 3
//       (v1, v1, v2)
//   end
//
//   system s
//     vars x y
//     E(x, v2, y)
//     x = v3
//   end
//
// Identifiers are [A-Za-z_][A-Za-z0-9_-]*; integer literals are accepted as
// element names. The `vars` list ends at the end of its line. Every error is
// reported as a ParseError carrying the line and column of the offending
// token.

#include <string>
#include <string_view>
#include <vector>

#include "predeq/error.hpp"
#include "predeq/model.hpp"

namespace predeq {

struct Located {
  std::string text;
  SourceLocation where;
};

struct StructureDoc {
  Located name;
  std::vector<Located> elements;
  struct Predicate {
    Located name;
    std::size_t arity = 0;
    std::vector<std::vector<Located>> tuples;
    std::vector<SourceLocation> tuple_starts;
  };
  std::vector<Predicate> predicates;
};

StructureDoc parse_structure_doc(std::string_view text);
Structure build_structure(const StructureDoc& doc);

Structure parse_structure(std::string_view text);
std::string print_structure(const Structure& structure);

// Identifiers declared in `vars` are variables; anything else must name an
// element of `structure`.
std::vector<EquationSystem> parse_systems(std::string_view text, const Structure& structure);
EquationSystem parse_system(std::string_view text, const Structure& structure);
std::string print_system(const EquationSystem& system);

std::string print_term(const Term& term);
std::string print_equation(const Equation& equation);

bool is_identifier(std::string_view text);
bool is_integer_literal(std::string_view text);

}  // namespace predeq

#endif  // PREDEQ_FORMAT_HPP
