#include "predeq/predicate_ops.hpp"

#include <algorithm>
#include <numeric>

namespace predeq {

bool is_permutation(std::span<const std::size_t> permutation, std::size_t n) {
  if (permutation.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : permutation) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

ProjectionSpec ProjectionSpec::fixing(std::size_t arity, std::vector<Fixing> fixings) {
  std::sort(fixings.begin(), fixings.end());
  ProjectionSpec spec;
  std::size_t f = 0;
  for (std::size_t i = 0; i < arity; ++i) {
    if (f < fixings.size() && fixings[f].position == i)
      ++f;
    else
      spec.kept.push_back(i);
  }
  spec.fixings = std::move(fixings);
  return spec;
}

void ProjectionSpec::validate(std::size_t arity, std::size_t universe_size) const {
  if (kept.empty() || kept.size() >= arity)
    throw Error(ErrorCode::invalid_argument,
                "projection must keep between 1 and " + std::to_string(arity - 1) + " positions");
  if (kept.size() + fixings.size() != arity)
    throw Error(ErrorCode::invalid_argument, "kept and fixed positions must partition the arguments");
  std::vector<bool> covered(arity, false);
  auto mark = [&](std::size_t pos) {
    if (pos >= arity)
      throw Error(ErrorCode::invalid_argument, "position " + std::to_string(pos + 1) +
                                                   " out of range for arity " +
                                                   std::to_string(arity));
    if (covered[pos])
      throw Error(ErrorCode::invalid_argument,
                  "position " + std::to_string(pos + 1) + " used twice");
    covered[pos] = true;
  };
  for (std::size_t i = 0; i < kept.size(); ++i) {
    mark(kept[i]);
    if (i > 0 && kept[i] <= kept[i - 1])
      throw Error(ErrorCode::invalid_argument, "kept positions must be ascending");
  }
  for (const auto& f : fixings) {
    mark(f.position);
    if (f.element >= universe_size)
      throw Error(ErrorCode::unknown_element, "fixing element outside the universe");
  }
}

Partition Partition::from_blocks(std::vector<std::vector<std::size_t>> blocks,
                                 std::size_t ground_size) {
  Partition p;
  p.block_of_.assign(ground_size, ground_size);
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::invalid_argument, "partition has an empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t x : b) {
      if (x >= ground_size)
        throw Error(ErrorCode::invalid_argument, "partition member " + std::to_string(x + 1) +
                                                     " exceeds " + std::to_string(ground_size));
      if (p.block_of_[x] != ground_size)
        throw Error(ErrorCode::invalid_argument,
                    "position " + std::to_string(x + 1) + " occurs in two blocks");
      p.block_of_[x] = 0;
    }
  }
  for (std::size_t x = 0; x < ground_size; ++x)
    if (p.block_of_[x] == ground_size)
      throw Error(ErrorCode::invalid_argument,
                  "partition does not cover position " + std::to_string(x + 1));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (std::size_t x : blocks[j]) p.block_of_[x] = j;
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::singletons(std::size_t ground_size) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < ground_size; ++i) blocks.push_back({i});
  return from_blocks(std::move(blocks), ground_size);
}

Partition Partition::single_block(std::size_t ground_size) {
  std::vector<std::size_t> all(ground_size);
  std::iota(all.begin(), all.end(), 0);
  return from_blocks({all}, ground_size);
}

Partition Partition::head_and_rest(std::size_t ground_size) {
  if (ground_size < 2)
    throw Error(ErrorCode::invalid_argument, "head-and-rest partition needs 2 or more positions");
  std::vector<std::size_t> rest(ground_size - 1);
  std::iota(rest.begin(), rest.end(), 1);
  return from_blocks({{0}, rest}, ground_size);
}

std::vector<Partition> Partition::all(std::size_t ground_size) {
  std::vector<Partition> out;
  if (ground_size == 0) return out;
  std::vector<std::size_t> label(ground_size, 0);
  std::vector<std::size_t> prefix_max(ground_size, 0);
  while (true) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < ground_size; ++i) {
      if (label[i] == blocks.size()) blocks.emplace_back();
      blocks[label[i]].push_back(i);
    }
    out.push_back(from_blocks(std::move(blocks), ground_size));
    std::size_t i = ground_size;
    while (--i > 0) {
      if (label[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < ground_size; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return out;
}

bool DerivedPredicateSpec::is_identity() const {
  if (reorder) {
    for (std::size_t i = 0; i < reorder->size(); ++i)
      if ((*reorder)[i] != i) return false;
  }
  return !projection && (!gluing || gluing->is_identity());
}

Relation reorder(const Relation& relation, std::span<const std::size_t> permutation) {
  if (!is_permutation(permutation, relation.arity()))
    throw Error(ErrorCode::invalid_argument, "reorder needs a permutation of 1.." +
                                                 std::to_string(relation.arity()));
  std::vector<Tuple> out;
  out.reserve(relation.size());
  for (const auto& t : relation.tuples()) {
    Tuple r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[permutation[i]];
    out.push_back(std::move(r));
  }
  return Relation(relation.arity(), relation.universe_size(), std::move(out));
}

Relation project(const Relation& relation, const ProjectionSpec& spec) {
  spec.validate(relation.arity(), relation.universe_size());
  std::vector<Tuple> out;
  for (const auto& t : relation.tuples()) {
    bool match = std::all_of(spec.fixings.begin(), spec.fixings.end(),
                             [&](const Fixing& f) { return t[f.position] == f.element; });
    if (!match) continue;
    Tuple r;
    r.reserve(spec.kept.size());
    for (std::size_t k : spec.kept) r.push_back(t[k]);
    out.push_back(std::move(r));
  }
  return Relation(spec.kept.size(), relation.universe_size(), std::move(out));
}

Relation glue(const Relation& relation, const Partition& partition) {
  if (partition.ground_size() != relation.arity())
    throw Error(ErrorCode::arity_mismatch, "partition of " +
                                               std::to_string(partition.ground_size()) +
                                               " positions applied to arity " +
                                               std::to_string(relation.arity()));
  std::vector<Tuple> out;
  for (const auto& t : relation.tuples()) {
    bool consistent = true;
    for (const auto& block : partition.blocks())
      for (std::size_t x : block) consistent = consistent && t[x] == t[block.front()];
    if (!consistent) continue;
    Tuple r;
    r.reserve(partition.size());
    for (const auto& block : partition.blocks()) r.push_back(t[block.front()]);
    out.push_back(std::move(r));
  }
  return Relation(partition.size(), relation.universe_size(), std::move(out));
}

Relation reorder_predicate(const Structure& structure, std::string_view symbol,
                           std::span<const std::size_t> permutation) {
  return reorder(structure.relation(symbol), permutation);
}

Relation project_predicate(const Structure& structure, std::string_view symbol,
                           const ProjectionSpec& spec) {
  return project(structure.relation(symbol), spec);
}

Relation glue_predicate(const Structure& structure, std::string_view symbol,
                        const Partition& partition) {
  return glue(structure.relation(symbol), partition);
}

std::size_t derived_arity(const DerivedPredicateSpec& spec, std::size_t source_arity) {
  std::size_t arity = source_arity;
  if (spec.reorder && spec.reorder->size() != arity)
    throw Error(ErrorCode::arity_mismatch, "reorder length does not match arity");
  if (spec.projection) arity = spec.projection->kept.size();
  if (spec.gluing) {
    if (spec.gluing->ground_size() != arity)
      throw Error(ErrorCode::arity_mismatch, "gluing partition does not match projected arity");
    arity = spec.gluing->size();
  }
  return arity;
}

Relation derive_relation(const Structure& structure, const DerivedPredicateSpec& spec) {
  Relation current = structure.relation(spec.source);
  derived_arity(spec, current.arity());
  if (spec.reorder) current = reorder(current, *spec.reorder);
  if (spec.projection) current = project(current, *spec.projection);
  if (spec.gluing) current = glue(current, *spec.gluing);
  return current;
}

Structure derive_structure(const Structure& structure,
                           std::span<const DerivedPredicateSpec> specs) {
  Structure out = structure;
  for (const auto& spec : specs) {
    if (spec.result_name.empty() || spec.result_name == equality_symbol ||
        out.find_symbol(spec.result_name))
      throw Error(ErrorCode::invalid_argument,
                  "derived symbol name '" + spec.result_name + "' is not fresh");
    auto rel = derive_relation(out, spec);
    out = out.with_relation({spec.result_name, rel.arity()}, rel);
  }
  return out;
}

std::vector<SourceSlot> source_layout(const DerivedPredicateSpec& spec,
                                      std::size_t source_arity) {
  derived_arity(spec, source_arity);
  std::vector<SourceSlot> reordered(source_arity);
  auto argument = [&](std::size_t coordinate) {
    return DerivedArgument{spec.gluing ? spec.gluing->block_of(coordinate) : coordinate};
  };
  if (spec.projection) {
    for (const auto& f : spec.projection->fixings) reordered[f.position] = f.element;
    for (std::size_t c = 0; c < spec.projection->kept.size(); ++c)
      reordered[spec.projection->kept[c]] = argument(c);
  } else {
    for (std::size_t r = 0; r < source_arity; ++r) reordered[r] = argument(r);
  }
  if (!spec.reorder) return reordered;
  std::vector<SourceSlot> layout(source_arity);
  for (std::size_t r = 0; r < source_arity; ++r) layout[(*spec.reorder)[r]] = reordered[r];
  return layout;
}

Tuple expand_to_source(std::span<const SourceSlot> layout, std::span<const Element> derived) {
  Tuple out;
  out.reserve(layout.size());
  for (const auto& slot : layout) {
    if (const auto* arg = std::get_if<DerivedArgument>(&slot))
      out.push_back(derived[arg->index]);
    else
      out.push_back(std::get<Element>(slot));
  }
  return out;
}

}  // namespace predeq
