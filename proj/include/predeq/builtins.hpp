#ifndef PREDEQ_BUILTINS_HPP
#define PREDEQ_BUILTINS_HPP

// Generated example structures.
//   int-strict N     elements -N..N, binary `lt`
//   int-nonstrict N  elements -N..N, binary `le`
//   base-graph N     a1..aN, b1..bN, symmetric `E` with a_i - b_j iff j < i
//   clique-graph N   v1..vN, complete simple graph `E`

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "predeq/model.hpp"
#include "predeq/posets.hpp"

namespace predeq {

std::vector<std::string> builtin_names();
bool is_builtin_poset(std::string_view name);

Structure builtin_structure(std::string_view name, std::size_t size);

// Unbounded int-* stream enumerating 0, -1, 1, -2, 2, ...
StreamedPoset builtin_stream(std::string_view name);

// Order symbol and kind of a builtin poset.
std::string builtin_order_symbol(std::string_view name);
OrderKind builtin_order_kind(std::string_view name);

}  // namespace predeq

#endif  // PREDEQ_BUILTINS_HPP
