#include "predeq/builtins.hpp"

#include <charconv>

namespace predeq {

namespace {

void require_size(std::size_t size) {
  if (size < 1) throw Error(ErrorCode::invalid_argument, "builtin size must be at least 1");
}

[[noreturn]] void unknown(std::string_view name) {
  throw Error(ErrorCode::invalid_argument, "unknown builtin '" + std::string(name) + "'");
}

long long parse_integer(std::string_view text) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::unknown_element, "not an integer element: '" + std::string(text) + "'");
  return v;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"int-strict", "int-nonstrict", "base-graph", "clique-graph"};
}

bool is_builtin_poset(std::string_view name) {
  return name == "int-strict" || name == "int-nonstrict";
}

std::string builtin_order_symbol(std::string_view name) {
  if (name == "int-strict") return "lt";
  if (name == "int-nonstrict") return "le";
  unknown(name);
}

OrderKind builtin_order_kind(std::string_view name) {
  if (name == "int-strict") return OrderKind::strict;
  if (name == "int-nonstrict") return OrderKind::nonstrict;
  unknown(name);
}

Structure builtin_structure(std::string_view name, std::size_t size) {
  if (name == "int-strict" || name == "int-nonstrict") {
    require_size(size);
    const bool strict = name == "int-strict";
    const auto n = static_cast<long long>(size);
    std::vector<std::string> elements;
    for (long long v = -n; v <= n; ++v) elements.push_back(std::to_string(v));
    std::vector<Tuple> order;
    const auto count = static_cast<Element>(elements.size());
    for (Element i = 0; i < count; ++i)
      for (Element j = strict ? i + 1 : i; j < count; ++j) order.push_back({i, j});
    return Structure(std::string(name), std::move(elements),
                     {{builtin_order_symbol(name), 2}}, {std::move(order)});
  }
  if (name == "base-graph") {
    require_size(size);
    std::vector<std::string> elements;
    for (std::size_t i = 1; i <= size; ++i) elements.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= size; ++i) elements.push_back("b" + std::to_string(i));
    std::vector<Tuple> edges;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const auto a = static_cast<Element>(i);
        const auto b = static_cast<Element>(size + j);
        edges.push_back({a, b});
        edges.push_back({b, a});
      }
    return Structure("base-graph", std::move(elements), {{"E", 2}}, {std::move(edges)});
  }
  if (name == "clique-graph") {
    require_size(size);
    std::vector<std::string> elements;
    for (std::size_t i = 1; i <= size; ++i) elements.push_back("v" + std::to_string(i));
    std::vector<Tuple> edges;
    for (Element i = 0; i < size; ++i)
      for (Element j = 0; j < size; ++j)
        if (i != j) edges.push_back({i, j});
    return Structure("clique-graph", std::move(elements), {{"E", 2}}, {std::move(edges)});
  }
  unknown(name);
}

StreamedPoset builtin_stream(std::string_view name) {
  const bool strict = name == "int-strict";
  if (!strict && name != "int-nonstrict") unknown(name);
  auto enumerate = [](std::size_t i) -> std::optional<std::string> {
    // 0, -1, 1, -2, 2, ...
    const auto k = static_cast<long long>((i + 1) / 2);
    return std::to_string(i % 2 == 1 ? -k : k);
  };
  auto oracle = [strict](std::string_view a, std::string_view b) {
    const auto x = parse_integer(a);
    const auto y = parse_integer(b);
    return strict ? x < y : x <= y;
  };
  return StreamedPoset(std::string(name), builtin_order_symbol(name), builtin_order_kind(name),
                       enumerate, oracle);
}

}  // namespace predeq
