// Human-made baselines. Both return the full set of orderings they cannot
// discriminate between, so evaluation can score ties honestly.
#pragma once

#include "cadsel/ordering.hpp"
#include "cadsel/problem.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cadsel {

struct HeuristicPrediction {
    std::vector<Ordering> orderings;  // nonempty, distinct, ascending index
    // sotd values for every enumerated ordering; absent for Brown.
    std::optional<std::map<std::uint64_t, std::uint64_t>> scores;
};

// Per-variable criteria, all read off the input system in one pass:
//   1. overall individual degree,
//   2. max total degree of input terms containing the variable,
//   3. number of input terms containing the variable.
// Variables sort ascending by that triple (eliminate lowest first); fully
// tied groups expand to every arrangement.
HeuristicPrediction brown_orderings(const ProblemInstance& problem);

// Sum of total degrees over every monomial of every polynomial across the
// input and all projection levels.
std::uint64_t sotd_value(const ProblemInstance& problem, const Ordering& ordering);

// Evaluates all n! orderings (n <= 6) and returns every minimizer.
HeuristicPrediction sotd_orderings(const ProblemInstance& problem);

}  // namespace cadsel
