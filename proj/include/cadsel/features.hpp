// Systematic scalar features over a polynomial system: a per-monomial base
// measure for one variable, optional sign, aggregation over a polynomial's
// monomials, optional sign, aggregation over the system, optional sign.
// Constant and duplicate columns are pruned on training data only, then
// columns are standardized with training statistics.
#pragma once

#include "cadsel/problem.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cadsel {

enum class BaseMeasure { var_degree, masked_total_degree };
enum class Aggregate { max, sum, average };

struct FeatureDef {
    std::size_t variable = 0;
    BaseMeasure base = BaseMeasure::var_degree;
    bool sign_after_base = false;
    Aggregate poly_agg = Aggregate::max;
    bool sign_after_poly = false;
    Aggregate system_agg = Aggregate::max;
    bool sign_after_system = false;

    std::string name() const;
    bool operator==(const FeatureDef&) const = default;
};

// Full cartesian enumeration, canonical order: variable, base, sign, poly
// aggregate, sign, system aggregate, sign (outermost to innermost).
// n * 144 definitions.
std::vector<FeatureDef> enumerate_feature_defs(std::size_t n);

std::vector<double> compute_features(const ProblemInstance& problem,
                                     const std::vector<FeatureDef>& defs);

struct FeatureMatrix {
    std::vector<std::string> ids;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;  // rows[i] belongs to ids[i]

    std::size_t column_count() const { return column_names.size(); }
};

FeatureMatrix compute_feature_matrix(const std::vector<ProblemInstance>& problems,
                                     const std::vector<FeatureDef>& defs);

struct Reducer {
    std::size_t original_columns = 0;
    std::vector<std::size_t> kept_columns;  // strictly increasing
    std::vector<std::pair<std::size_t, std::size_t>> merged;  // (dropped, kept representative)
    std::vector<std::size_t> dropped_constant;
};

// Drops columns constant across all training rows; merges exact duplicates
// onto the earliest kept column. Train-fitted only.
Reducer fit_reducer(const FeatureMatrix& train);
FeatureMatrix apply_reducer(const Reducer& reducer, const FeatureMatrix& rows);

struct Scaler {
    std::vector<double> mean;
    std::vector<double> stddev;  // strictly positive
};

Scaler fit_scaler(const FeatureMatrix& train);
FeatureMatrix apply_scaler(const Scaler& scaler, const FeatureMatrix& rows);

// CSV with a header of canonical feature names; byte-deterministic.
std::string feature_matrix_to_csv(const FeatureMatrix& m);
FeatureMatrix feature_matrix_from_csv(const std::string& text);

}  // namespace cadsel
