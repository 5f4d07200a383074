#include <doctest.h>

#include "oracle.hpp"
#include "predeq/builtins.hpp"
#include "predeq/format.hpp"
#include "predeq/witness.hpp"

using namespace predeq;

namespace {

// Generic (p, t) staircase oracle over all injective coordinate sequences.
bool staircase_exists_pt(const Structure& s, const std::string& symbol, std::size_t p,
                         std::size_t t, std::size_t d) {
  const std::size_t w = p + t;
  if (w * d > s.size()) return false;
  return oracle::any_injection(s.size(), w * d, [&](const std::vector<Element>& x) {
    auto tuple = [&](std::size_t ai, std::size_t bj) {
      std::vector<Element> out(x.begin() + static_cast<std::ptrdiff_t>(ai * w),
                               x.begin() + static_cast<std::ptrdiff_t>(ai * w + p));
      out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(bj * w + p),
                 x.begin() + static_cast<std::ptrdiff_t>(bj * w + w));
      return out;
    };
    for (std::size_t i = 0; i < d; ++i) {
      if (s.holds(symbol, tuple(i, i))) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (!s.holds(symbol, tuple(i, j))) return false;
    }
    return true;
  });
}

}  // namespace

TEST_CASE("verify rejects repeated coordinates and wrong splits") {
  Structure s("s", {"a", "b", "c", "d"}, {{"R", 2}}, {{{2, 1}}});
  StaircaseWitness ok{"R", 1, 1, {{{0}, {1}}, {{2}, {3}}}};
  CHECK(verify_staircase(s, ok));
  StaircaseWitness repeat{"R", 1, 1, {{{0}, {1}}, {{2}, {1}}}};
  CHECK_FALSE(verify_staircase(s, repeat));
  StaircaseWitness split{"R", 2, 1, {}};
  CHECK_THROWS_AS(verify_staircase(s, split), Error);
  CHECK(verify_clique(s, CliqueWitness{"R", {2, 1}}) == false);
  CHECK(verify_clique(s, CliqueWitness{"R", {1, 2}}));
  CHECK(verify_clique(s, CliqueWitness{"R", {2}}));
}

TEST_CASE("staircase and clique searches agree with brute force") {
  auto g = oracle::rng(41);
  for (int round = 0; round < 120; ++round) {
    const auto n = oracle::uniform(g, 2, 7);
    const double density = 0.3 + 0.4 * static_cast<double>(oracle::uniform(g, 0, 100)) / 100.0;
    const auto s = oracle::random_binary(g, n, density);
    for (std::size_t d = 2; d <= 4; ++d) {
      const auto st = find_staircase(s, "R", 1, 1, d);
      CHECK(st.has_value() == oracle::staircase_exists(s, "R", d));
      if (st) CHECK(verify_staircase(s, *st));
      const auto cl = find_clique(s, "R", d);
      CHECK(cl.has_value() == oracle::clique_exists(s, "R", d));
      if (cl) CHECK(verify_clique(s, *cl));
    }
  }
}

TEST_CASE("ternary staircases agree with brute force") {
  auto g = oracle::rng(43);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 6;
    Structure s("t", oracle::element_names(n), {{"T", 3}}, {oracle::random_relation(g, n, 3, 0.5)});
    for (auto [p, t] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 1}}) {
      const auto w = find_staircase(s, "T", p, t, 2);
      CHECK(w.has_value() == staircase_exists_pt(s, "T", p, t, 2));
      if (w) CHECK(verify_staircase(s, *w));
    }
  }
}

TEST_CASE("witness truncation keeps validity") {
  const auto s = builtin_structure("base-graph", 6);
  const auto w = find_staircase(s, "E", 1, 1, 6);
  REQUIRE(w);
  for (std::size_t d = 0; d <= 6; ++d) CHECK(verify_staircase(s, w->truncated(d)));
}

TEST_CASE("witnesses give the sequence condition") {
  const auto s = builtin_structure("int-strict", 6);
  const auto st = find_staircase(s, "lt", 1, 1, 5);
  REQUIRE(st);
  const auto k1 = witness_to_kotov(s, *st);
  CHECK(k1.equations.size() == 5);
  CHECK(check_kotov_prefix(s, k1.equations, k1.points));
  const auto cl = find_clique(s, "lt", 5);
  REQUIRE(cl);
  const auto k2 = witness_to_kotov(s, *cl);
  CHECK(check_kotov_prefix(s, k2.equations, k2.points));
  CHECK_THROWS_AS(witness_to_kotov(s, CliqueWitness{"lt", {0, 1}}), Error);
}

TEST_CASE("refinement satisfies both conditions and exact is optimal") {
  auto g = oracle::rng(47);
  for (int round = 0; round < 300; ++round) {
    const auto n = oracle::uniform(g, 1, 4);
    const auto len = oracle::uniform(g, 1, 10);
    const auto range = oracle::uniform(g, 1, 12);
    std::vector<Tuple> d;
    for (std::size_t i = 0; i < len; ++i) {
      Tuple t;
      for (std::size_t c = 0; c < n; ++c) t.push_back(static_cast<Element>(oracle::uniform(g, 0, range - 1)));
      d.push_back(t);
    }
    const auto greedy = refine_tuples(d);
    CHECK(greedy.size() >= 1);
    CHECK(std::is_sorted(greedy.rows.begin(), greedy.rows.end()));
    CHECK(oracle::refinement_conditions(d, greedy.rows));
    CHECK(is_valid_refinement(d, greedy.rows));
    const auto exact = refine_tuples_exact(d);
    CHECK(oracle::refinement_conditions(d, exact.rows));
    CHECK(exact.size() == oracle::best_refinement(d));
    CHECK(exact.size() >= greedy.size());
  }
}

TEST_CASE("refinement of all-identical and disjoint distinct families keeps everything") {
  std::vector<Tuple> same(7, Tuple{3, 1, 3});
  CHECK(refine_tuples(same).size() == 7);
  CHECK(refine_tuples_exact(same).size() == 7);
  std::vector<Tuple> distinct;
  for (Element i = 0; i < 8; ++i) distinct.push_back({i, 10 + i, 20 + i});
  CHECK(refine_tuples(distinct).size() == 8);
  CHECK(refine_tuples_exact(distinct).size() == 8);
}

TEST_CASE("restoration of planted witnesses satisfies the sequence condition") {
  auto g = oracle::rng(53);
  for (int round = 0; round < 60; ++round) {
    const auto c = oracle::planted_case(g, round % 2 == 1);
    REQUIRE(verify_witness(derive_structure(c.structure, std::span(&c.spec, 1)), c.witness));
    const auto seq = restore_witness(c.structure, c.spec, c.witness);
    CHECK(seq.equations.size() == c.depth);
    for (const auto& eq : seq.equations.equations()) CHECK(std::get<Atom>(eq).predicate == "P");
    CHECK(check_kotov_prefix(c.structure, seq.equations, seq.points));
  }
}

TEST_CASE("restoration rejects foreign or invalid witnesses") {
  Structure s("s", {"a", "b", "c"}, {{"P", 3}}, {{{0, 1, 1}}});
  DerivedPredicateSpec spec{"P", std::nullopt, std::nullopt, Partition::from_blocks({{0}, {1, 2}}, 3), "Q"};
  CHECK_THROWS_AS(restore_witness(s, spec, CliqueWitness{"R", {0}}), Error);
  CHECK_THROWS_AS(restore_witness(s, spec, CliqueWitness{"Q", {0, 1}}), Error);  // Q(b, a) false
  CHECK_NOTHROW(restore_witness(s, spec, CliqueWitness{"Q", {1}}));
}

TEST_CASE("criterion scan on gamma at depth 2") {
  const auto s = parse_structure(R"(structure gamma
  elements v1 v2 v3 v4 v5
  predicate E 3
    (v1, v1, v2)
    (v1, v3, v3)
    (v2, v4, v1)
    (v3, v2, v2)
    (v5, v4, v5)
end
)");
  const auto r = criterion_scan(s, 2);
  CHECK(r.exhaustive);
  CHECK(r.derived_predicates > 0);
  CHECK_FALSE(r.findings.empty());
  for (const auto& f : r.findings) {
    const auto derived = derive_structure(s, std::span(&f.spec, 1));
    CHECK(verify_witness(derived, f.witness));
    const auto seq = restore_witness(s, f.spec, f.witness);
    CHECK(check_kotov_prefix(s, seq.equations, seq.points));
  }
}

TEST_CASE("criterion scan finds nothing in an empty relation") {
  Structure s("s", oracle::element_names(5), {{"P", 3}}, {{}});
  const auto r = criterion_scan(s, 2);
  CHECK(r.findings.empty());
  CHECK(r.exhaustive);
}

TEST_CASE("criterion scan on the integers finds a clique and a staircase") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto s = builtin_structure("int-strict", 2 * d + 2);
    const auto r = criterion_scan(s, d);
    bool clique = false, stair = false;
    for (const auto& f : r.findings) {
      clique = clique || std::holds_alternative<CliqueWitness>(f.witness);
      if (const auto* w = std::get_if<StaircaseWitness>(&f.witness))
        stair = stair || (w->p == 1 && w->t == 1);
    }
    CHECK(clique);
    CHECK(stair);
  }
}

TEST_CASE("caps truncation clears the exhaustive flag") {
  Structure s("s", oracle::element_names(4), {{"P", 4}}, {{{0, 1, 2, 3}}});
  ScanCaps caps;
  caps.max_permutations = 2;
  CHECK_FALSE(criterion_scan(s, 2, caps).exhaustive);
  caps.max_permutations = 0;
  CHECK_THROWS_AS(criterion_scan(s, 2, caps), Error);
}

TEST_CASE("graph analysis") {
  const auto base = builtin_structure("base-graph", 5);
  const auto r = graph_analyze(base, "E", GraphKind::simple, 5);
  CHECK(r.staircase);
  CHECK_FALSE(r.clique);
  CHECK(r.clique_searched);
  const auto k = builtin_structure("clique-graph", 5);
  const auto rk = graph_analyze(k, "E", GraphKind::simple, 5);
  CHECK(rk.clique);
  Structure asym("a", {"x", "y"}, {{"E", 2}}, {{{0, 1}}});
  CHECK_THROWS_AS(graph_analyze(asym, "E", GraphKind::simple, 2), Error);
  Structure loop("l", {"x"}, {{"E", 2}}, {{{0, 0}}});
  CHECK_THROWS_AS(graph_analyze(loop, "E", GraphKind::simple, 2), Error);
  CHECK_NOTHROW(graph_analyze(loop, "E", GraphKind::with_loops, 2));
}
