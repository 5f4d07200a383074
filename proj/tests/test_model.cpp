#include <doctest.h>

#include "oracle.hpp"
#include "predeq/format.hpp"
#include "predeq/model.hpp"

using namespace predeq;

namespace {

Structure path3() {
  return Structure("p", {"u", "v", "w"}, {{"E", 2}}, {{{0, 1}, {1, 0}, {1, 2}, {2, 1}}});
}

}  // namespace

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(Structure("s", {}, {}, {}), Error);
  CHECK_THROWS_AS(Structure("s", {"a", "a"}, {}, {}), Error);
  CHECK_THROWS_AS(Structure("s", {"a"}, {{"E", 2}}, {{{0}}}), Error);
  CHECK_THROWS_AS(Structure("s", {"a"}, {{"E", 1}}, {{{3}}}), Error);
  CHECK_THROWS_AS(Structure("s", {"a"}, {{"E", 0}}, {{}}), Error);
  const auto s = path3();
  CHECK(s.holds("E", std::vector<Element>{0, 1}));
  CHECK_FALSE(s.holds("E", std::vector<Element>{0, 2}));
  CHECK_THROWS_AS(s.relation("F"), Error);
  CHECK_THROWS_AS(s.element("z"), Error);
}

TEST_CASE("relation dedups and sorts") {
  Relation r(2, 3, {{2, 1}, {0, 1}, {2, 1}});
  CHECK(r.size() == 2);
  CHECK(r.tuples().front() == Tuple{0, 1});
}

TEST_CASE("undeclared variable in a system") {
  CHECK_THROWS_AS(EquationSystem("s", {"x"}, {Atom{"E", {var("x"), var("y")}}}), Error);
  try {
    EquationSystem("s", {"x"}, {Equality{var("z"), var("x")}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unassigned_variable);
  }
}

TEST_CASE("x = x has every point") {
  const auto s = path3();
  EquationSystem sys("t", {"x"}, {Equality{var("x"), var("x")}});
  CHECK(solve_system(s, sys).points.size() == 3);
}

TEST_CASE("empty system is the whole space") {
  const auto s = path3();
  EquationSystem sys("t", {"x", "y"}, {});
  CHECK(solve_system(s, sys).points.size() == 9);
}

TEST_CASE("constant absent from the universe") {
  const auto s = path3();
  EquationSystem sys("t", {"x"}, {Atom{"E", {var("x"), constant("q")}}});
  CHECK_THROWS_AS(solve_system(s, sys), Error);
}

TEST_CASE("solve matches brute force on random instances") {
  auto g = oracle::rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto n = oracle::uniform(g, 1, 4);
    Structure s("r", oracle::element_names(n), {{"P", 2}, {"T", 3}},
                {oracle::random_relation(g, n, 2, 0.5), oracle::random_relation(g, n, 3, 0.4)});
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < oracle::uniform(g, 0, 3); ++i) vars.push_back("x" + std::to_string(i));
    const auto sys = oracle::random_system(g, s, vars, oracle::uniform(g, 0, 5));
    const auto got = solve_system(s, sys);
    CHECK(got.variables == vars);
    CHECK(got.points == oracle::solutions(s, sys));
  }
}

TEST_CASE("equivalence is order independent over variables") {
  const auto s = path3();
  EquationSystem a("a", {"x", "y"}, {Atom{"E", {var("x"), var("y")}}});
  EquationSystem b("b", {"y", "x"}, {Atom{"E", {var("y"), var("x")}}});
  CHECK(systems_equivalent(s, a, b));  // E is symmetric
  EquationSystem c("c", {"x", "y"}, {Atom{"E", {var("x"), constant("v")}}});
  CHECK_FALSE(systems_equivalent(s, a, c));
  EquationSystem d("d", {"x"}, {});
  CHECK_THROWS_AS(systems_equivalent(s, a, d), Error);
}

TEST_CASE("minimize: exact is minimum, greedy is inclusion-minimal") {
  auto g = oracle::rng(23);
  for (int round = 0; round < 100; ++round) {
    const auto n = oracle::uniform(g, 1, 4);
    Structure s("r", oracle::element_names(n), {{"P", 2}},
                {oracle::random_relation(g, n, 2, 0.5)});
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < oracle::uniform(g, 1, 2); ++i) vars.push_back("x" + std::to_string(i));
    const auto sys = oracle::random_system(g, s, vars, oracle::uniform(g, 0, 6));
    const auto target = oracle::solutions(s, sys);
    const std::uint64_t full = (1ULL << sys.size()) - 1;

    std::size_t minimum = sys.size();
    for (std::uint64_t mask = 0; mask <= full; ++mask)
      if (oracle::solutions(s, sys, mask) == target)
        minimum = std::min<std::size_t>(minimum, static_cast<std::size_t>(__builtin_popcountll(mask)));

    const auto exact = minimize_system(s, sys, MinimizeMode::exact);
    CHECK(std::is_sorted(exact.begin(), exact.end()));
    CHECK(exact.size() == minimum);
    CHECK(oracle::solutions(s, sys.subsystem(exact)) == target);

    const auto greedy = minimize_system(s, sys, MinimizeMode::greedy);
    CHECK(oracle::solutions(s, sys.subsystem(greedy)) == target);
    for (std::size_t drop = 0; drop < greedy.size(); ++drop) {
      auto fewer = greedy;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(oracle::solutions(s, sys.subsystem(fewer)) != target);
    }
  }
}

TEST_CASE("minimize keeps a nonredundant system intact") {
  const auto s = path3();
  EquationSystem sys("m", {"x", "y"}, {Atom{"E", {var("x"), var("y")}}, Equality{var("x"), constant("u")}});
  CHECK(minimize_system(s, sys, MinimizeMode::exact) == std::vector<std::size_t>{0, 1});
  EquationSystem dup("d", {"x"}, {Equality{var("x"), constant("u")}, Equality{var("x"), constant("u")}});
  CHECK(minimize_system(s, dup, MinimizeMode::exact).size() == 1);
  CHECK(minimize_system(s, dup, MinimizeMode::greedy).size() == 1);
}

TEST_CASE("shape classes partition the system") {
  const auto s = path3();
  EquationSystem sys("c", {"x", "y"},
                     {Atom{"E", {constant("u"), constant("v")}}, Atom{"E", {var("x"), var("y")}},
                      Atom{"E", {var("x"), constant("w")}}, Equality{var("x"), var("x")},
                      Equality{constant("u"), constant("u")}});
  const auto c = classify_by_shape(sys);
  CHECK(c.constants_only == std::vector<std::size_t>{0, 4});
  CHECK(c.variables_only == std::vector<std::size_t>{1, 3});
  CHECK(c.mixed == std::vector<std::size_t>{2});
}

TEST_CASE("configurations and their bound") {
  const auto s = path3();
  EquationSystem sys("c", {"x", "y"},
                     {Atom{"E", {var("x"), constant("u")}}, Atom{"E", {var("x"), constant("w")}},
                      Atom{"E", {var("y"), constant("u")}}});
  CHECK(same_configuration(sys.equations()[0], sys.equations()[1]));
  CHECK_FALSE(same_configuration(sys.equations()[0], sys.equations()[2]));
  const auto groups = group_by_configuration(sys);
  CHECK(groups.size() == 2);
  std::size_t total = 0;
  for (const auto& [config, members] : groups) total += members.size();
  CHECK(total == 3);
  CHECK(configuration_bound(2, 2) == 9);
  CHECK(configuration_bound(3, 0) == 1);
}

TEST_CASE("configuration count never exceeds the bound") {
  auto g = oracle::rng(5);
  for (int round = 0; round < 50; ++round) {
    Structure s("r", oracle::element_names(3), {{"T", 3}}, {{}});
    std::vector<std::string> vars{"x", "y"};
    const auto sys = oracle::random_system(g, s, vars, 40);
    std::map<std::string, std::size_t> per_symbol;
    for (const auto& [config, members] : group_by_configuration(sys)) ++per_symbol[config.symbol];
    if (per_symbol.count("T")) CHECK(per_symbol["T"] <= configuration_bound(3, 2));
    if (per_symbol.count("=")) CHECK(per_symbol["="] <= configuration_bound(2, 2));
  }
}

TEST_CASE("sequence condition prefix") {
  // u - v - w path; E(x, w) fails at u and holds only at v.
  const auto s = path3();
  EquationSystem seq("k", {"x"},
                     {Atom{"E", {var("x"), constant("v")}}, Atom{"E", {var("x"), constant("w")}}});
  const std::vector<Point> good{{1}, {0}};  // E(v, v) false; then at u: E(u, v) true, E(u, w) false
  CHECK(check_kotov_prefix(s, seq, good));
  const std::vector<Point> bad{{0}, {1}};
  CHECK_FALSE(check_kotov_prefix(s, seq, bad));
}
