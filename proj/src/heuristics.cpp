#include "cadsel/heuristics.hpp"

#include "cadsel/algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cadsel {

HeuristicPrediction brown_orderings(const ProblemInstance& problem) {
    const std::size_t n = problem.nvars();
    struct Criteria {
        std::uint64_t degree = 0;       // overall individual degree
        std::uint64_t max_term_td = 0;  // max total degree of terms containing v
        std::uint64_t term_count = 0;   // number of terms containing v
        auto tie() const { return std::tie(degree, max_term_td, term_count); }
    };
    std::vector<Criteria> crit(n);
    for (const auto& p : problem.polys) {
        for (std::size_t v = 0; v < n; ++v)
            crit[v].degree = std::max<std::uint64_t>(crit[v].degree, p.degree_in(v));
        for (const auto& m : p.monomials()) {
            for (std::size_t v = 0; v < n; ++v) {
                if (m.exponents[v] == 0) continue;
                crit[v].max_term_td = std::max(crit[v].max_term_td, m.total_degree);
                crit[v].term_count += 1;
            }
        }
    }

    std::vector<std::size_t> vars(n);
    for (std::size_t v = 0; v < n; ++v) vars[v] = v;
    std::stable_sort(vars.begin(), vars.end(), [&](std::size_t a, std::size_t b) {
        if (crit[a].tie() != crit[b].tie()) return crit[a].tie() < crit[b].tie();
        return a < b;
    });

    // group fully tied variables, then expand the cartesian product of
    // within-group arrangements
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && crit[vars[j]].tie() == crit[vars[i]].tie()) ++j;
        groups.emplace_back(vars.begin() + i, vars.begin() + j);
        i = j;
    }
    std::vector<std::vector<std::size_t>> sequences = {{}};
    for (auto& group : groups) {
        std::sort(group.begin(), group.end());
        std::vector<std::vector<std::size_t>> arrangements;
        do {
            arrangements.push_back(group);
        } while (std::next_permutation(group.begin(), group.end()));
        std::vector<std::vector<std::size_t>> grown;
        grown.reserve(sequences.size() * arrangements.size());
        for (const auto& prefix : sequences)
            for (const auto& arr : arrangements) {
                auto seq = prefix;
                seq.insert(seq.end(), arr.begin(), arr.end());
                grown.push_back(std::move(seq));
            }
        sequences = std::move(grown);
    }

    HeuristicPrediction out;
    for (auto& seq : sequences) out.orderings.push_back(Ordering::from_sequence(std::move(seq)));
    std::sort(out.orderings.begin(), out.orderings.end(),
              [](const Ordering& a, const Ordering& b) { return a.index < b.index; });
    return out;
}

std::uint64_t sotd_value(const ProblemInstance& problem, const Ordering& ordering) {
    std::uint64_t total = 0;
    for (const auto& level : full_projection(problem, ordering))
        for (const auto& p : level.polys)
            for (const auto& m : p.monomials()) total += m.total_degree;
    return total;
}

HeuristicPrediction sotd_orderings(const ProblemInstance& problem) {
    const std::size_t n = problem.nvars();
    if (n > 6)
        throw std::invalid_argument(
            "sotd enumerates all orderings; refusing past 6 variables");
    HeuristicPrediction out;
    out.scores.emplace();
    std::uint64_t best = UINT64_MAX;
    for (const auto& ord : all_orderings(n)) {
        std::uint64_t v = sotd_value(problem, ord);
        (*out.scores)[ord.index] = v;
        best = std::min(best, v);
    }
    for (const auto& ord : all_orderings(n))
        if ((*out.scores)[ord.index] == best) out.orderings.push_back(ord);
    return out;
}

}  // namespace cadsel
