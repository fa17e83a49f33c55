#pragma once

#include "cadsel/polynomial.hpp"

#include <string>
#include <vector>

namespace cadsel {

// A named system of polynomials over an ordered variable list; the unit a
// selector acts on. Immutable after construction.
struct ProblemInstance {
    std::string id;
    std::vector<std::string> variables;  // n distinct names, n >= 2
    std::vector<Polynomial> polys;       // nonempty, all with nvars == n

    std::size_t nvars() const { return variables.size(); }
    void validate() const;
};

// JSON lines, one record per line: {"id": ..., "vars": [...], "polys": [...]}.
// Blank lines are skipped; ids must be unique; order is preserved.
std::vector<ProblemInstance> parse_problem_file(const std::string& path);
std::vector<ProblemInstance> parse_problem_text(const std::string& text);

std::string problem_to_json_line(const ProblemInstance& p);

}  // namespace cadsel
