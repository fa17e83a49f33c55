#include "cadsel/problem.hpp"

#include "cadsel/io_util.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace cadsel {

void ProblemInstance::validate() const {
    if (id.empty()) throw std::invalid_argument("problem id must be nonempty");
    if (variables.size() < 2)
        throw std::invalid_argument("problem '" + id + "': needs at least 2 variables");
    std::set<std::string> names(variables.begin(), variables.end());
    if (names.size() != variables.size())
        throw std::invalid_argument("problem '" + id + "': duplicate variable names");
    if (polys.empty())
        throw std::invalid_argument("problem '" + id + "': needs at least one polynomial");
    for (const auto& p : polys)
        if (p.nvars() != variables.size())
            throw std::invalid_argument("problem '" + id + "': polynomial arity mismatch");
}

std::vector<ProblemInstance> parse_problem_text(const std::string& text) {
    std::vector<ProblemInstance> out;
    std::set<std::string> seen;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::string where = "line " + std::to_string(li + 1);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(where + ": malformed JSON: " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("vars") || !j.contains("polys"))
            throw std::runtime_error(where + ": record needs id, vars, polys");
        ProblemInstance pi;
        try {
            pi.id = j.at("id").get<std::string>();
            pi.variables = j.at("vars").get<std::vector<std::string>>();
            auto poly_texts = j.at("polys").get<std::vector<std::string>>();
            for (const auto& t : poly_texts)
                pi.polys.push_back(parse_polynomial(t, pi.variables));
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(where + ": bad field type: " + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        try {
            pi.validate();
        } catch (const std::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        if (!seen.insert(pi.id).second)
            throw std::runtime_error(where + ": duplicate problem id '" + pi.id + "'");
        out.push_back(std::move(pi));
    }
    return out;
}

std::vector<ProblemInstance> parse_problem_file(const std::string& path) {
    return parse_problem_text(read_text_file(path));
}

std::string problem_to_json_line(const ProblemInstance& p) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["vars"] = p.variables;
    std::vector<std::string> polys;
    for (const auto& poly : p.polys) polys.push_back(poly.to_string(p.variables));
    j["polys"] = polys;
    return j.dump();
}

}  // namespace cadsel
