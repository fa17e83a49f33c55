#include "cadsel/features.hpp"

#include "cadsel/io_util.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cadsel {

namespace {

const char* base_name(BaseMeasure b) {
    return b == BaseMeasure::var_degree ? "vdeg" : "mtdeg";
}

const char* agg_name(Aggregate a) {
    switch (a) {
        case Aggregate::max: return "max";
        case Aggregate::sum: return "sum";
        default: return "avg";
    }
}

double sign_of(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

double aggregate(Aggregate a, const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    switch (a) {
        case Aggregate::max: return *std::max_element(values.begin(), values.end());
        case Aggregate::sum: {
            double s = 0;
            for (double v : values) s += v;
            return s;
        }
        default: {
            double s = 0;
            for (double v : values) s += v;
            return s / static_cast<double>(values.size());
        }
    }
}

}  // namespace

std::string FeatureDef::name() const {
    std::string s = "v" + std::to_string(variable) + "." + base_name(base);
    if (sign_after_base) s += ".sgn";
    s += std::string(".") + agg_name(poly_agg);
    if (sign_after_poly) s += ".sgn";
    s += std::string(".") + agg_name(system_agg);
    if (sign_after_system) s += ".sgn";
    return s;
}

std::vector<FeatureDef> enumerate_feature_defs(std::size_t n) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
    static const BaseMeasure bases[] = {BaseMeasure::var_degree, BaseMeasure::masked_total_degree};
    static const Aggregate aggs[] = {Aggregate::max, Aggregate::sum, Aggregate::average};
    static const bool flags[] = {false, true};
    std::vector<FeatureDef> defs;
    defs.reserve(n * 144);
    for (std::size_t v = 0; v < n; ++v)
        for (auto base : bases)
            for (bool s0 : flags)
                for (auto pa : aggs)
                    for (bool s1 : flags)
                        for (auto sa : aggs)
                            for (bool s2 : flags)
                                defs.push_back({v, base, s0, pa, s1, sa, s2});
    return defs;
}

std::vector<double> compute_features(const ProblemInstance& problem,
                                     const std::vector<FeatureDef>& defs) {
    for (const auto& d : defs)
        if (d.variable >= problem.nvars())
            throw std::invalid_argument("feature definition references a missing variable");

    // Monomial degree data is shared across all defs.
    struct MonoInfo {
        std::vector<std::uint32_t> vdeg;
        std::uint64_t tdeg;
    };
    std::vector<std::vector<MonoInfo>> per_poly;
    per_poly.reserve(problem.polys.size());
    for (const auto& p : problem.polys) {
        std::vector<MonoInfo> infos;
        for (const auto& m : p.monomials()) {
            MonoInfo mi;
            mi.vdeg.assign(m.exponents.begin(), m.exponents.end());
            mi.tdeg = m.total_degree;
            infos.push_back(std::move(mi));
        }
        per_poly.push_back(std::move(infos));
    }

    std::vector<double> out;
    out.reserve(defs.size());
    std::vector<double> poly_values, mono_values;
    for (const auto& d : defs) {
        poly_values.clear();
        for (const auto& infos : per_poly) {
            mono_values.clear();
            for (const auto& mi : infos) {
                double base;
                if (d.base == BaseMeasure::var_degree) {
                    base = static_cast<double>(mi.vdeg[d.variable]);
                } else {
                    base = mi.vdeg[d.variable] > 0 ? static_cast<double>(mi.tdeg) : 0.0;
                }
                if (d.sign_after_base) base = sign_of(base);
                mono_values.push_back(base);
            }
            double pv = aggregate(d.poly_agg, mono_values);
            if (d.sign_after_poly) pv = sign_of(pv);
            poly_values.push_back(pv);
        }
        double sv = aggregate(d.system_agg, poly_values);
        if (d.sign_after_system) sv = sign_of(sv);
        out.push_back(sv);
    }
    return out;
}

FeatureMatrix compute_feature_matrix(const std::vector<ProblemInstance>& problems,
                                     const std::vector<FeatureDef>& defs) {
    FeatureMatrix m;
    for (const auto& d : defs) m.column_names.push_back(d.name());
    for (const auto& p : problems) {
        m.ids.push_back(p.id);
        auto row = compute_features(p, defs);
        for (double v : row)
            if (!std::isfinite(v)) throw std::logic_error("non-finite feature value");
        m.rows.push_back(std::move(row));
    }
    return m;
}

Reducer fit_reducer(const FeatureMatrix& train) {
    if (train.rows.size() < 2)
        throw std::invalid_argument("reducer needs at least 2 training rows");
    const std::size_t cols = train.column_count();
    Reducer r;
    r.original_columns = cols;
    // column vector -> earliest kept column index
    std::map<std::vector<double>, std::size_t> seen;
    std::vector<double> col(train.rows.size());
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < train.rows.size(); ++i) col[i] = train.rows[i][c];
        bool constant = std::all_of(col.begin(), col.end(),
                                    [&](double v) { return v == col[0]; });
        if (constant) {
            r.dropped_constant.push_back(c);
            continue;
        }
        auto [it, inserted] = seen.emplace(col, c);
        if (inserted)
            r.kept_columns.push_back(c);
        else
            r.merged.emplace_back(c, it->second);
    }
    if (r.kept_columns.empty())
        throw std::runtime_error("degenerate dataset: every feature column is constant");
    return r;
}

FeatureMatrix apply_reducer(const Reducer& reducer, const FeatureMatrix& rows) {
    if (rows.column_count() != reducer.original_columns)
        throw std::invalid_argument("reducer: column count mismatch");
    FeatureMatrix out;
    out.ids = rows.ids;
    for (std::size_t c : reducer.kept_columns) out.column_names.push_back(rows.column_names[c]);
    for (const auto& row : rows.rows) {
        std::vector<double> nr;
        nr.reserve(reducer.kept_columns.size());
        for (std::size_t c : reducer.kept_columns) nr.push_back(row[c]);
        out.rows.push_back(std::move(nr));
    }
    return out;
}

Scaler fit_scaler(const FeatureMatrix& train) {
    if (train.rows.empty()) throw std::invalid_argument("scaler needs training rows");
    const std::size_t cols = train.column_count();
    const double n = static_cast<double>(train.rows.size());
    Scaler s;
    s.mean.resize(cols);
    s.stddev.resize(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        double sum = 0;
        for (const auto& row : train.rows) sum += row[c];
        double mu = sum / n;
        double var = 0;
        for (const auto& row : train.rows) var += (row[c] - mu) * (row[c] - mu);
        var /= n;
        double sd = std::sqrt(var);
        if (sd <= 0.0)
            throw std::runtime_error("scaler: constant column reached scaling; reducer was skipped");
        s.mean[c] = mu;
        s.stddev[c] = sd;
    }
    return s;
}

FeatureMatrix apply_scaler(const Scaler& scaler, const FeatureMatrix& rows) {
    if (rows.column_count() != scaler.mean.size())
        throw std::invalid_argument("scaler: column count mismatch");
    FeatureMatrix out = rows;
    for (auto& row : out.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            row[c] = (row[c] - scaler.mean[c]) / scaler.stddev[c];
    return out;
}

std::string feature_matrix_to_csv(const FeatureMatrix& m) {
    std::string out = "id";
    for (const auto& name : m.column_names) out += "," + name;
    out += "\n";
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        out += m.ids[i];
        for (double v : m.rows[i]) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

FeatureMatrix feature_matrix_from_csv(const std::string& text) {
    auto lines = split_lines(text);
    // tolerate a leading "# ..." provenance comment
    std::size_t start = 0;
    while (start < lines.size() && (lines[start].empty() || lines[start][0] == '#')) ++start;
    if (start >= lines.size()) throw std::runtime_error("feature CSV: missing header");
    auto header = split_csv_line(lines[start]);
    if (header.empty() || header[0] != "id")
        throw std::runtime_error("feature CSV: header must start with 'id'");
    FeatureMatrix m;
    m.column_names.assign(header.begin() + 1, header.end());
    for (std::size_t li = start + 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        auto cells = split_csv_line(lines[li]);
        if (cells.size() != header.size())
            throw std::runtime_error("feature CSV: row " + std::to_string(li + 1) +
                                     " has wrong cell count");
        m.ids.push_back(cells[0]);
        std::vector<double> row;
        row.reserve(cells.size() - 1);
        for (std::size_t c = 1; c < cells.size(); ++c)
            row.push_back(parse_double(cells[c], "feature CSV row " + std::to_string(li + 1)));
        m.rows.push_back(std::move(row));
    }
    return m;
}

}  // namespace cadsel
