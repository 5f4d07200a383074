#include "predeq/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace predeq {

namespace {

void require_element(const Structure& structure, Element e) {
  if (e >= structure.size())
    throw Error(ErrorCode::unknown_element, "witness element outside the universe");
}

Tuple concat(const Tuple& a, const Tuple& b) {
  Tuple out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string variable_name(std::size_t i) { return "x" + std::to_string(i + 1); }

// A single-relation structure over the same universe, used to search derived
// predicates without copying every relation of the source.
Structure single_relation(const Structure& structure, const std::string& name,
                          const Relation& relation) {
  return Structure(structure.name(), structure.elements(), {{name, relation.arity()}},
                   {relation.tuples()});
}

}  // namespace

StaircaseWitness StaircaseWitness::truncated(std::size_t depth) const {
  StaircaseWitness out = *this;
  out.rows.resize(std::min(depth, rows.size()));
  return out;
}

CliqueWitness CliqueWitness::truncated(std::size_t depth) const {
  CliqueWitness out = *this;
  out.sequence.resize(std::min(depth, sequence.size()));
  return out;
}

bool verify_staircase(const Structure& structure, const StaircaseWitness& w) {
  const auto& rel = structure.relation(w.symbol);
  if (w.p == 0 || w.t == 0 || w.p + w.t != rel.arity())
    throw Error(ErrorCode::arity_mismatch, "split (" + std::to_string(w.p) + "," +
                                               std::to_string(w.t) + ") does not match arity " +
                                               std::to_string(rel.arity()) + " of '" +
                                               w.symbol + "'");
  std::set<Element> seen;
  std::size_t coordinates = 0;
  for (const auto& row : w.rows) {
    if (row.a.size() != w.p || row.b.size() != w.t)
      throw Error(ErrorCode::arity_mismatch, "staircase row does not match the split");
    for (Element e : row.a) require_element(structure, e), seen.insert(e);
    for (Element e : row.b) require_element(structure, e), seen.insert(e);
    coordinates += w.p + w.t;
  }
  if (seen.size() != coordinates) return false;
  for (std::size_t i = 0; i < w.rows.size(); ++i) {
    if (rel.contains(concat(w.rows[i].a, w.rows[i].b))) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!rel.contains(concat(w.rows[i].a, w.rows[j].b))) return false;
  }
  return true;
}

bool verify_clique(const Structure& structure, const CliqueWitness& w) {
  const auto& rel = structure.relation(w.symbol);
  if (rel.arity() != 2)
    throw Error(ErrorCode::arity_mismatch, "clique needs a binary symbol, '" + w.symbol +
                                               "' has arity " + std::to_string(rel.arity()));
  for (Element e : w.sequence) require_element(structure, e);
  for (std::size_t i = 0; i < w.sequence.size(); ++i) {
    const Element a = w.sequence[i];
    if (rel.contains(std::array{a, a})) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!rel.contains(std::array{a, w.sequence[j]})) return false;
  }
  return true;
}

bool verify_witness(const Structure& structure, const Witness& witness) {
  return std::visit(
      [&](const auto& w) {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, StaircaseWitness>)
          return verify_staircase(structure, w);
        else
          return verify_clique(structure, w);
      },
      witness);
}

namespace {

constexpr std::size_t max_candidate_tuples = std::size_t{1} << 20;

// Ordered tuples of pairwise distinct elements, lexicographic.
void distinct_tuples(std::size_t universe, std::size_t length, const std::vector<bool>& excluded,
                     std::vector<Tuple>& out) {
  Tuple current;
  std::vector<bool> taken = excluded;
  auto rec = [&](auto&& self) -> void {
    if (current.size() == length) {
      out.push_back(current);
      if (out.size() > max_candidate_tuples)
        throw Error(ErrorCode::limit_exceeded, "staircase candidate space too large");
      return;
    }
    for (Element e = 0; e < universe; ++e) {
      if (taken[e]) continue;
      taken[e] = true;
      current.push_back(e);
      self(self);
      current.pop_back();
      taken[e] = false;
    }
  };
  rec(rec);
}

class StaircaseSearch {
 public:
  StaircaseSearch(const Relation& rel, std::size_t universe, std::size_t p, std::size_t t,
                  std::size_t depth)
      : rel_(rel), universe_(universe), p_(p), t_(t), depth_(depth), used_(universe, false) {}

  std::optional<std::vector<StaircaseWitness::Row>> run() {
    std::vector<Tuple> all_a;
    distinct_tuples(universe_, p_, used_, all_a);
    std::vector<const Tuple*> candidates;
    for (const auto& a : all_a) candidates.push_back(&a);
    if (extend(candidates)) return rows_;
    return std::nullopt;
  }

 private:
  bool disjoint_from_used(const Tuple& tuple) const {
    return std::none_of(tuple.begin(), tuple.end(), [&](Element e) { return used_[e]; });
  }

  void mark(const Tuple& tuple, bool value) {
    for (Element e : tuple) used_[e] = value;
  }

  // Candidates are the a-tuples satisfying P(a, b^j) for every row so far.
  bool extend(const std::vector<const Tuple*>& candidates) {
    const std::size_t level = rows_.size();
    if (level == depth_) return true;
    const std::size_t still_needed = depth_ - level - 1;
    for (const Tuple* a : candidates) {
      if (!disjoint_from_used(*a)) continue;
      mark(*a, true);
      std::vector<Tuple> bs;
      distinct_tuples(universe_, t_, used_, bs);
      for (const auto& b : bs) {
        Tuple row = concat(*a, b);
        if (rel_.contains(row)) continue;
        mark(b, true);
        std::vector<const Tuple*> next;
        for (const Tuple* c : candidates) {
          if (!disjoint_from_used(*c)) continue;
          if (rel_.contains(concat(*c, b))) next.push_back(c);
        }
        if (next.size() >= still_needed) {
          rows_.push_back({*a, b});
          if (extend(next)) return true;
          rows_.pop_back();
        }
        mark(b, false);
      }
      mark(*a, false);
    }
    return false;
  }

  const Relation& rel_;
  std::size_t universe_;
  std::size_t p_;
  std::size_t t_;
  std::size_t depth_;
  std::vector<bool> used_;
  std::vector<StaircaseWitness::Row> rows_;
};

bool clique_extend(const Relation& rel, const std::vector<Element>& candidates, std::size_t depth,
                   std::vector<Element>& sequence) {
  if (sequence.size() == depth) return true;
  const std::size_t still_needed = depth - sequence.size() - 1;
  for (Element a : candidates) {
    std::vector<Element> next;
    for (Element x : candidates)
      if (rel.contains(std::array{x, a})) next.push_back(x);
    if (next.size() < still_needed) continue;
    sequence.push_back(a);
    if (clique_extend(rel, next, depth, sequence)) return true;
    sequence.pop_back();
  }
  return false;
}

}  // namespace

std::optional<StaircaseWitness> find_staircase(const Structure& structure,
                                               std::string_view symbol, std::size_t p,
                                               std::size_t t, std::size_t depth) {
  const auto& rel = structure.relation(symbol);
  if (p == 0 || t == 0 || p + t != rel.arity())
    throw Error(ErrorCode::invalid_argument, "split (" + std::to_string(p) + "," +
                                                 std::to_string(t) + ") does not match arity " +
                                                 std::to_string(rel.arity()));
  if (depth == 0) throw Error(ErrorCode::invalid_argument, "depth must be at least 1");
  if (depth * rel.arity() > structure.size()) return std::nullopt;
  StaircaseSearch search(rel, structure.size(), p, t, depth);
  auto rows = search.run();
  if (!rows) return std::nullopt;
  return StaircaseWitness{std::string(symbol), p, t, std::move(*rows)};
}

std::optional<CliqueWitness> find_clique(const Structure& structure, std::string_view symbol,
                                         std::size_t depth) {
  const auto& rel = structure.relation(symbol);
  if (rel.arity() != 2)
    throw Error(ErrorCode::arity_mismatch, "clique search needs a binary symbol, '" +
                                               std::string(symbol) + "' has arity " +
                                               std::to_string(rel.arity()));
  if (depth == 0) throw Error(ErrorCode::invalid_argument, "depth must be at least 1");
  std::vector<Element> candidates;
  for (Element x = 0; x < structure.size(); ++x)
    if (!rel.contains(std::array{x, x})) candidates.push_back(x);
  std::vector<Element> sequence;
  if (!clique_extend(rel, candidates, depth, sequence)) return std::nullopt;
  return CliqueWitness{std::string(symbol), std::move(sequence)};
}

namespace {

// Uniform (p, rows) view of both witness kinds; a clique is the diagonal
// case a^i = b^i with p = t = 1.
struct RowView {
  std::string symbol;
  std::size_t p = 0;
  std::vector<StaircaseWitness::Row> rows;
};

RowView rows_of(const Witness& witness) {
  if (const auto* s = std::get_if<StaircaseWitness>(&witness)) return {s->symbol, s->p, s->rows};
  const auto& c = std::get<CliqueWitness>(witness);
  RowView v{c.symbol, 1, {}};
  for (Element e : c.sequence) v.rows.push_back({{e}, {e}});
  return v;
}

}  // namespace

KotovSequence witness_to_kotov(const Structure& structure, const Witness& witness) {
  if (!verify_witness(structure, witness))
    throw Error(ErrorCode::invalid_argument, "witness does not verify");
  const auto view = rows_of(witness);
  std::vector<std::string> variables;
  for (std::size_t i = 0; i < view.p; ++i) variables.push_back(variable_name(i));
  std::vector<Equation> equations;
  std::vector<Point> points;
  for (const auto& row : view.rows) {
    Atom atom{view.symbol, {}};
    for (const auto& v : variables) atom.args.push_back(var(v));
    for (Element e : row.b) atom.args.push_back(constant(structure.element_name(e)));
    equations.emplace_back(std::move(atom));
    points.push_back(row.a);
  }
  return {EquationSystem(view.symbol + "-sequence", std::move(variables), std::move(equations)),
          std::move(points)};
}

bool is_valid_refinement(std::span<const Tuple> sequence, std::span<const std::size_t> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= sequence.size()) return false;
    if (i > 0 && rows[i] <= rows[i - 1]) return false;
  }
  if (rows.empty()) return true;
  const std::size_t n = sequence[rows.front()].size();
  auto column = [&](std::size_t c) {
    std::vector<Element> out;
    for (std::size_t r : rows) out.push_back(sequence[r][c]);
    return out;
  };
  std::vector<std::vector<Element>> columns;
  for (std::size_t c = 0; c < n; ++c) {
    auto col = column(c);
    std::set<Element> values(col.begin(), col.end());
    if (values.size() != 1 && values.size() != col.size()) return false;
    columns.push_back(std::move(col));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      if (columns[j] == columns[k]) continue;
      std::set<Element> a(columns[j].begin(), columns[j].end());
      for (Element e : columns[k])
        if (a.contains(e)) return false;
    }
  return true;
}

namespace {

void check_sequence(std::span<const Tuple> sequence) {
  if (sequence.empty()) throw Error(ErrorCode::invalid_argument, "tuple sequence is empty");
  for (const auto& t : sequence)
    if (t.size() != sequence.front().size())
      throw Error(ErrorCode::arity_mismatch, "tuples of different lengths in sequence");
}

RefinedSequence describe(std::span<const Tuple> sequence, std::vector<std::size_t> rows) {
  RefinedSequence out;
  out.rows = std::move(rows);
  const std::size_t n = sequence.front().size();
  for (std::size_t c = 0; c < n; ++c) {
    bool constant = !out.rows.empty() &&
                    std::all_of(out.rows.begin(), out.rows.end(), [&](std::size_t r) {
                      return sequence[r][c] == sequence[out.rows.front()][c];
                    });
    if (constant)
      out.columns.push_back({ColumnVerdict::Kind::singleton, sequence[out.rows.front()][c]});
    else
      out.columns.push_back({ColumnVerdict::Kind::all_distinct, std::nullopt});
  }
  std::vector<bool> assigned(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (assigned[j]) continue;
    std::vector<std::size_t> cls{j};
    for (std::size_t k = j + 1; k < n; ++k) {
      bool same = std::all_of(out.rows.begin(), out.rows.end(), [&](std::size_t r) {
        return sequence[r][j] == sequence[r][k];
      });
      if (same && !assigned[k]) {
        cls.push_back(k);
        assigned[k] = true;
      }
    }
    out.column_classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

RefinedSequence refine_tuples(std::span<const Tuple> sequence) {
  check_sequence(sequence);
  const std::size_t n = sequence.front().size();
  std::vector<std::size_t> rows(sequence.size());
  std::iota(rows.begin(), rows.end(), 0);

  // Per column: the larger of "one value" (most frequent) and "all values
  // different" (first occurrence of each value); ties go to one value.
  for (std::size_t c = 0; c < n; ++c) {
    std::map<Element, std::size_t> count;
    std::vector<Element> order;
    for (std::size_t r : rows)
      if (count[sequence[r][c]]++ == 0) order.push_back(sequence[r][c]);
    Element best = order.front();
    for (Element v : order)
      if (count[v] > count[best]) best = v;
    if (count[best] >= order.size()) {
      std::erase_if(rows, [&](std::size_t r) { return sequence[r][c] != best; });
    } else {
      std::set<Element> seen;
      std::erase_if(rows, [&](std::size_t r) { return !seen.insert(sequence[r][c]).second; });
    }
  }

  // Pairwise reconciliation in lexicographic pair order.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      std::vector<std::size_t> equal;
      std::vector<std::size_t> different;
      for (std::size_t r : rows)
        (sequence[r][j] == sequence[r][k] ? equal : different).push_back(r);
      if (different.empty()) continue;
      std::vector<bool> removed(sequence.size(), false);
      for (std::size_t r : different) {
        if (removed[r]) continue;
        for (std::size_t s : different) {
          if (s == r || removed[s]) continue;
          if (sequence[s][k] == sequence[r][j] || sequence[s][j] == sequence[r][k])
            removed[s] = true;
        }
      }
      std::erase_if(different, [&](std::size_t r) { return removed[r]; });
      rows = (!equal.empty() && equal.size() >= different.size()) ? equal : different;
    }
  return describe(sequence, std::move(rows));
}

RefinedSequence refine_tuples_exact(std::span<const Tuple> sequence) {
  check_sequence(sequence);
  if (sequence.size() > max_exact_refine)
    throw Error(ErrorCode::limit_exceeded, "exact refinement is capped at " +
                                               std::to_string(max_exact_refine) + " tuples");
  std::vector<std::size_t> best;
  const std::size_t total = std::size_t{1} << sequence.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < sequence.size(); ++r)
      if (mask >> r & 1U) rows.push_back(r);
    if (rows.size() < best.size()) continue;
    if (!is_valid_refinement(sequence, rows)) continue;
    if (rows.size() > best.size() || rows < best) best = std::move(rows);
  }
  return describe(sequence, std::move(best));
}

KotovSequence restore_witness(const Structure& structure, const DerivedPredicateSpec& spec,
                              const Witness& witness) {
  const auto view = rows_of(witness);
  if (view.symbol != spec.result_name)
    throw Error(ErrorCode::invalid_argument, "witness symbol '" + view.symbol +
                                                 "' does not match derived symbol '" +
                                                 spec.result_name + "'");
  const auto& source = structure.symbol(spec.source);
  const auto derived = derive_relation(structure, spec);
  if (!verify_witness(single_relation(structure, spec.result_name, derived), witness))
    throw Error(ErrorCode::invalid_argument, "witness does not verify over the derived predicate");
  const auto layout = source_layout(spec, source.arity);

  std::vector<std::string> variables;
  for (std::size_t i = 0; i < view.p; ++i) variables.push_back(variable_name(i));
  std::vector<Equation> equations;
  std::vector<Point> points;
  for (const auto& row : view.rows) {
    std::vector<Term> derived_terms;
    for (std::size_t i = 0; i < view.p; ++i) derived_terms.push_back(var(variables[i]));
    for (Element e : row.b) derived_terms.push_back(constant(structure.element_name(e)));
    Atom atom{spec.source, {}};
    for (const auto& slot : layout) {
      if (const auto* arg = std::get_if<DerivedArgument>(&slot))
        atom.args.push_back(derived_terms[arg->index]);
      else
        atom.args.push_back(constant(structure.element_name(std::get<Element>(slot))));
    }
    equations.emplace_back(std::move(atom));
    points.push_back(row.a);
  }
  return {EquationSystem(spec.source + "-restored", std::move(variables), std::move(equations)),
          std::move(points)};
}

namespace {

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

std::size_t power_capped(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

void for_each_combination(std::size_t n, std::size_t size,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> combo(size);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    f(combo);
    std::size_t i = size;
    while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++combo[i - 1];
    for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
  }
}

class CriterionScan {
 public:
  CriterionScan(const Structure& structure, std::size_t depth, const ScanCaps& caps)
      : structure_(structure), depth_(depth), caps_(caps) {
    report_.depth = depth;
    report_.caps = caps;
  }

  CriterionReport run() {
    for (const auto& sym : structure_.symbols()) scan_symbol(sym);
    return std::move(report_);
  }

 private:
  void scan_symbol(const PredicateSymbol& sym) {
    const auto& rel = structure_.relation(sym.name);
    const std::size_t n = sym.arity;
    if (n < 2) return;  // unary predicates carry no forbidden pattern

    std::set<Element> pool_set;
    for (const auto& t : rel.tuples()) pool_set.insert(t.begin(), t.end());
    for (Element e : caps_.extra_candidates) {
      if (e >= structure_.size())
        throw Error(ErrorCode::unknown_element, "extra candidate outside the universe");
      pool_set.insert(e);
    }
    const std::vector<Element> pool(pool_set.begin(), pool_set.end());

    if (caps_.max_fixed_positions + 2 < n) report_.exhaustive = false;
    if (factorial_capped(n, caps_.max_permutations) > caps_.max_permutations)
      report_.exhaustive = false;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t perms_done = 0;
    do {
      if (perms_done++ == caps_.max_permutations) break;
      const bool identity = std::is_sorted(perm.begin(), perm.end());
      const Relation reordered = identity ? rel : reorder(rel, perm);
      const std::size_t max_fixed = std::min(caps_.max_fixed_positions, n - 2);
      for (std::size_t fixed = 0; fixed <= max_fixed; ++fixed) {
        for_each_combination(n, fixed, [&](const std::vector<std::size_t>& positions) {
          scan_fixings(sym, identity ? std::nullopt : std::optional(perm), reordered, positions,
                       pool);
        });
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void scan_fixings(const PredicateSymbol& sym, const std::optional<std::vector<std::size_t>>& perm,
                    const Relation& reordered, const std::vector<std::size_t>& positions,
                    const std::vector<Element>& pool) {
    if (positions.empty()) {
      scan_partitions(sym, perm, std::nullopt, reordered);
      return;
    }
    if (pool.empty()) return;
    if (power_capped(pool.size(), positions.size(), caps_.max_fixings_per_subset) >
        caps_.max_fixings_per_subset)
      report_.exhaustive = false;
    std::vector<std::size_t> digits(positions.size(), 0);
    for (std::size_t done = 0; done < caps_.max_fixings_per_subset; ++done) {
      std::vector<Fixing> fixings;
      for (std::size_t i = 0; i < positions.size(); ++i)
        fixings.push_back({positions[i], pool[digits[i]]});
      auto spec = ProjectionSpec::fixing(reordered.arity(), std::move(fixings));
      scan_partitions(sym, perm, spec, project(reordered, spec));
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == pool.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }

  void scan_partitions(const PredicateSymbol& sym,
                       const std::optional<std::vector<std::size_t>>& perm,
                       const std::optional<ProjectionSpec>& projection, const Relation& projected) {
    if (depth_ >= 2 && projected.empty()) return;
    const std::size_t k = projected.arity();
    for (const auto& partition : Partition::all(k)) {
      DerivedPredicateSpec spec{sym.name, perm, projection, std::nullopt, {}};
      if (partition.size() > 1) {
        const Relation glued = glue(projected, partition);
        spec.gluing = partition;
        for (std::size_t p = 1; p < partition.size(); ++p)
          search(spec, glued, p);
      } else if (k >= 2) {
        auto head = Partition::head_and_rest(k);
        const Relation q = glue(projected, head);
        spec.gluing = head;
        search(spec, q, 0);
      }
    }
  }

  // p == 0 selects the clique search.
  void search(DerivedPredicateSpec spec, const Relation& relation, std::size_t p) {
    if (!searched_.emplace(p, relation.tuples(), relation.arity()).second) return;
    ++report_.derived_predicates;
    if (depth_ >= 2 && relation.empty()) return;
    spec.result_name = spec.source + "." + std::to_string(report_.findings.size() + 1);
    if (spec.gluing && spec.gluing->is_identity()) spec.gluing.reset();
    const auto derived = single_relation(structure_, spec.result_name, relation);
    if (p == 0) {
      if (auto w = find_clique(derived, spec.result_name, depth_))
        report_.findings.push_back({std::move(spec), std::move(*w)});
    } else {
      if (auto w = find_staircase(derived, spec.result_name, p, relation.arity() - p, depth_))
        report_.findings.push_back({std::move(spec), std::move(*w)});
    }
  }

  const Structure& structure_;
  std::size_t depth_;
  ScanCaps caps_;
  CriterionReport report_;
  std::set<std::tuple<std::size_t, std::vector<Tuple>, std::size_t>> searched_;
};

}  // namespace

CriterionReport criterion_scan(const Structure& structure, std::size_t depth,
                               const ScanCaps& caps) {
  if (depth == 0) throw Error(ErrorCode::invalid_argument, "depth must be at least 1");
  if (caps.max_fixed_positions == 0 || caps.max_fixings_per_subset == 0 ||
      caps.max_permutations == 0)
    throw Error(ErrorCode::invalid_argument, "scan caps must be positive");
  return CriterionScan(structure, depth, caps).run();
}

GraphReport graph_analyze(const Structure& structure, std::string_view symbol, GraphKind kind,
                          std::size_t depth) {
  const auto& rel = structure.relation(symbol);
  if (rel.arity() != 2)
    throw Error(ErrorCode::arity_mismatch, "graph analysis needs a binary symbol");
  for (const auto& t : rel.tuples())
    if (!rel.contains(std::array{t[1], t[0]}))
      throw Error(ErrorCode::invalid_argument, "edge relation '" + std::string(symbol) +
                                                   "' is not symmetric");
  for (Element x = 0; x < structure.size(); ++x) {
    const bool loop = rel.contains(std::array{x, x});
    if (kind == GraphKind::simple && loop)
      throw Error(ErrorCode::invalid_argument,
                  "loop at '" + structure.element_name(x) + "' in a graph declared simple");
    if (kind == GraphKind::with_loops && !loop)
      throw Error(ErrorCode::invalid_argument, "missing loop at '" + structure.element_name(x) +
                                                   "' in a graph declared with loops");
  }
  GraphReport report{kind, std::string(symbol), depth, kind == GraphKind::simple, {}, {}};
  if (report.clique_searched) report.clique = find_clique(structure, symbol, depth);
  report.staircase = find_staircase(structure, symbol, 1, 1, depth);
  return report;
}

}  // namespace predeq
