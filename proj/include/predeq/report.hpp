#ifndef PREDEQ_REPORT_HPP
#define PREDEQ_REPORT_HPP

// Text and JSON renderings of results. JSON carries "schema": 1 and the
// command name; element names are used throughout and positions are 1-based.

#include <string>
#include <vector>

#include "predeq/model.hpp"
#include "predeq/posets.hpp"
#include "predeq/predicate_ops.hpp"
#include "predeq/witness.hpp"

namespace predeq {

struct Report {
  std::string command;
  std::string text;
  std::string json;
};

Report report_solve(const Structure& structure, const EquationSystem& system,
                    const AlgebraicSet& solutions);
Report report_equiv(const Structure& structure, const EquationSystem& first,
                    const EquationSystem& second, bool equivalent);
Report report_minimize(const EquationSystem& system, MinimizeMode mode,
                       const std::vector<std::size_t>& kept);
Report report_classify(const EquationSystem& system);
Report report_relation(const std::string& command, const Structure& structure,
                       const DerivedPredicateSpec& spec, const Relation& relation);
Report report_staircase(const Structure& structure, const std::string& symbol, std::size_t p,
                        std::size_t t, std::size_t depth,
                        const std::optional<StaircaseWitness>& witness);
Report report_clique(const Structure& structure, const std::string& symbol, std::size_t depth,
                     const std::optional<CliqueWitness>& witness);
Report report_criterion(const Structure& structure, const CriterionReport& report);
Report report_graph(const Structure& structure, const GraphReport& report);
Report report_poset(const std::string& source, const std::string& selector, std::size_t budget,
                    const PosetReport& report);
Report report_gen(const Structure& structure);

}  // namespace predeq

#endif  // PREDEQ_REPORT_HPP
