#include "cadsel/dataset.hpp"

#include "cadsel/io_util.hpp"
#include "cadsel/ordering.hpp"
#include "cadsel/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cadsel {

const TimingRow& TimingMatrix::row(const std::string& id) const {
    auto it = rows.find(id);
    if (it == rows.end()) throw std::out_of_range("no timing row for problem '" + id + "'");
    return it->second;
}

double TimingMatrix::time(const std::string& id, std::uint64_t ordering_index) const {
    const auto& r = row(id);
    if (ordering_index >= r.time_s.size())
        throw std::out_of_range("ordering index out of range for problem '" + id + "'");
    return r.time_s[ordering_index];
}

TimingMatrix parse_timings_csv(const std::string& text, std::size_t n) {
    const std::uint64_t n_orderings = factorial(n);
    auto lines = split_lines(text);
    std::size_t start = 0;
    while (start < lines.size() && (lines[start].empty() || lines[start][0] == '#')) ++start;
    if (start >= lines.size()) throw std::runtime_error("timings CSV: missing header");
    auto header = split_csv_line(lines[start]);
    const std::vector<std::string> expected = {"problem_id", "ordering_index", "time_s",
                                               "status",     "phase",          "limit_s"};
    if (header != expected)
        throw std::runtime_error(
            "timings CSV: header must be problem_id,ordering_index,time_s,status,phase,limit_s");

    TimingMatrix m;
    m.nvars = n;
    m.orderings = n_orderings;
    std::map<std::string, std::vector<bool>> filled;
    for (std::size_t li = start + 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        const std::string where = "timings CSV line " + std::to_string(li + 1);
        auto cells = split_csv_line(lines[li]);
        if (cells.size() != 6) throw std::runtime_error(where + ": expected 6 cells");
        const std::string& id = cells[0];
        std::uint64_t oi = parse_u64(cells[1], where + " ordering_index");
        if (oi >= n_orderings)
            throw std::runtime_error(where + ": ordering_index " + std::to_string(oi) +
                                     " out of range for " + std::to_string(n) + " variables");
        double t = parse_double(cells[2], where + " time_s");
        if (!(t > 0)) throw std::runtime_error(where + ": time_s must be positive");
        RunStatus st;
        if (cells[3] == "ok")
            st = RunStatus::ok;
        else if (cells[3] == "timeout")
            st = RunStatus::timeout;
        else
            throw std::runtime_error(where + ": status must be ok or timeout");
        Phase ph;
        if (cells[4] == "train")
            ph = Phase::train;
        else if (cells[4] == "test")
            ph = Phase::test;
        else
            throw std::runtime_error(where + ": phase must be train or test");
        double limit = parse_double(cells[5], where + " limit_s");
        if (!(limit > 0)) throw std::runtime_error(where + ": limit_s must be positive");

        auto it = m.rows.find(id);
        if (it == m.rows.end()) {
            TimingRow row;
            row.time_s.assign(n_orderings, 0.0);
            row.status.assign(n_orderings, RunStatus::ok);
            row.phase = ph;
            row.limit_s = limit;
            it = m.rows.emplace(id, std::move(row)).first;
            filled.emplace(id, std::vector<bool>(n_orderings, false));
            m.ids.push_back(id);
        } else {
            if (it->second.phase != ph)
                throw std::runtime_error(where + ": phase differs within problem '" + id + "'");
            if (it->second.limit_s != limit)
                throw std::runtime_error(where + ": limit_s differs within problem '" + id + "'");
        }
        auto& mask = filled[id];
        if (mask[oi])
            throw std::runtime_error(where + ": duplicate pair (" + id + ", " +
                                     std::to_string(oi) + ")");
        mask[oi] = true;
        it->second.time_s[oi] = t;
        it->second.status[oi] = st;
        if (st == RunStatus::timeout && t != limit)
            throw std::runtime_error(where + ": timeout entry must record the limit (" +
                                     format_double(limit) + " s), got " + format_double(t));
    }
    for (const auto& [id, mask] : filled)
        for (std::uint64_t oi = 0; oi < n_orderings; ++oi)
            if (!mask[oi])
                throw std::runtime_error("timings CSV: problem '" + id +
                                         "' is missing ordering index " + std::to_string(oi));
    if (m.rows.empty()) throw std::runtime_error("timings CSV: no data rows");
    return m;
}

TimingMatrix load_timings(const std::string& path, std::size_t n) {
    return parse_timings_csv(read_text_file(path), n);
}

std::string timings_to_csv(const TimingMatrix& m) {
    std::string out = "problem_id,ordering_index,time_s,status,phase,limit_s\n";
    for (const auto& id : m.ids) {
        const auto& row = m.rows.at(id);
        for (std::uint64_t oi = 0; oi < m.orderings; ++oi) {
            out += id;
            out += "," + std::to_string(oi);
            out += "," + format_double(row.time_s[oi]);
            out += row.status[oi] == RunStatus::ok ? ",ok" : ",timeout";
            out += row.phase == Phase::train ? ",train" : ",test";
            out += "," + format_double(row.limit_s);
            out += "\n";
        }
    }
    return out;
}

CensoringDecision validate_training_censoring(const TimingRow& row, double initial_limit_s) {
    bool all_timeout = std::all_of(row.status.begin(), row.status.end(),
                                   [](RunStatus s) { return s == RunStatus::timeout; });
    CensoringDecision d;
    if (!all_timeout) return d;
    d.kind = CensoringDecision::rerun_at;
    d.new_limit_s = 2.0 * initial_limit_s;
    d.exceeds_observed_bound = d.new_limit_s > 32.0;
    return d;
}

RowLabel label_row(const std::vector<double>& times, double window) {
    if (times.empty()) throw std::invalid_argument("empty timing row");
    RowLabel l;
    double best = *std::min_element(times.begin(), times.end());
    // ties go to the lowest ordering index
    for (std::size_t i = 0; i < times.size(); ++i)
        if (times[i] == best) {
            l.target_class = i;
            break;
        }
    for (std::size_t i = 0; i < times.size(); ++i)
        if (within_window(times[i], best, window)) l.target_set.push_back(i);
    return l;
}

std::map<std::string, RowLabel> label_targets(const TimingMatrix& matrix, double window) {
    std::map<std::string, RowLabel> out;
    for (const auto& [id, row] : matrix.rows) out.emplace(id, label_row(row.time_s, window));
    return out;
}

SplitSpec split_dataset(const std::vector<std::string>& ids, double train_fraction,
                        std::uint64_t seed) {
    if (ids.size() < 2) throw std::invalid_argument("split needs at least 2 ids");
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
        throw std::invalid_argument("train fraction must lie strictly between 0 and 1");
    std::set<std::string> unique(ids.begin(), ids.end());
    if (unique.size() != ids.size()) throw std::invalid_argument("split: duplicate ids");

    std::vector<std::size_t> order(ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(derive_seed(seed, 0x5eedULL, 0x0511ULL));
    rng.shuffle(order);

    std::size_t train_count =
        static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(ids.size())));
    train_count = std::clamp<std::size_t>(train_count, 1, ids.size() - 1);

    std::vector<bool> in_train(ids.size(), false);
    for (std::size_t i = 0; i < train_count; ++i) in_train[order[i]] = true;

    SplitSpec s;
    s.seed = seed;
    for (std::size_t i = 0; i < ids.size(); ++i)
        (in_train[i] ? s.train_ids : s.test_ids).push_back(ids[i]);
    return s;
}

namespace {

// Everything below is keyed off (seed, cluster, problem, ordering) so the
// fixture is reproducible entry by entry.
double unit(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return static_cast<double>(derive_seed(seed, a, b) >> 11) * 0x1.0p-53;
}

}  // namespace

SynthFixture synth_fixture(const SynthSpec& spec, std::uint64_t seed) {
    if (spec.clusters == 0) throw std::invalid_argument("synth: cluster count must be positive");
    if (spec.problems_per_cluster == 0)
        throw std::invalid_argument("synth: problems per cluster must be positive");
    if (spec.nvars < 2 || spec.nvars > 6)
        throw std::invalid_argument("synth: variable count must be in [2, 6]");
    if (spec.noise < 0) throw std::invalid_argument("synth: noise must be non-negative");
    if (spec.trap_factor < 2) throw std::invalid_argument("synth: trap factor must be >= 2");

    const std::size_t n = spec.nvars;
    const std::uint64_t n_ord = factorial(n);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));

    // planted orderings: seeded shuffle of all indices; each even/odd twin
    // pair is arranged so the even (common) cluster holds the lower index,
    // which is what vote tie-breaking falls back to.
    std::vector<std::uint64_t> planted(n_ord);
    for (std::uint64_t i = 0; i < n_ord; ++i) planted[i] = i;
    Rng prng(derive_seed(seed, 0xC1u, 0x57e4));
    prng.shuffle(planted);
    auto planted_of = [&](std::size_t k) { return planted[k % n_ord]; };

    SynthFixture fx;
    fx.timings.nvars = n;
    fx.timings.orderings = n_ord;

    for (std::size_t k = 0; k < spec.clusters; ++k) {
        const bool has_twin = (k % 2 == 0) ? (k + 1 < spec.clusters) : true;
        const bool is_rare = (k % 2 == 1);
        const std::size_t twin = is_rare ? k - 1 : k + 1;

        std::uint64_t own = planted_of(k);
        std::uint64_t twin_own = has_twin ? planted_of(twin) : own;
        if (has_twin && !is_rare && own > twin_own) std::swap(own, twin_own);
        if (has_twin && is_rare && own < twin_own) std::swap(own, twin_own);

        // trap: for common clusters the twin's planted ordering; otherwise a
        // deterministic third ordering
        std::uint64_t trap;
        if (has_twin && !is_rare) {
            trap = twin_own;
        } else {
            trap = (own + 1 + k) % n_ord;
            while (trap == own || (has_twin && trap == twin_own)) trap = (trap + 1) % n_ord;
        }

        const std::uint64_t pair_degree = 2 + (k / 2) * 2;  // twins share the main signature
        const double base_time = 1.0 + 0.05 * static_cast<double>(k);

        for (std::size_t j = 0; j < spec.problems_per_cluster; ++j) {
            ProblemInstance pi;
            pi.id = "c" + std::to_string(k) + "_p" + std::to_string(j);
            pi.variables = names;

            const bool decoy = has_twin && !is_rare && (j % 8 == 7);
            // secondary signature: common clusters cycle 1..3, rare twins
            // (and decoys planted inside their region) cycle 4..5
            std::uint32_t e = (is_rare || decoy) ? static_cast<std::uint32_t>(4 + j % 2)
                                                 : static_cast<std::uint32_t>(1 + j % 3);

            Exponents e1(n, 0);
            e1[0] = static_cast<std::uint32_t>(pair_degree);
            e1[n - 1] = 1;
            Polynomial p1 = Polynomial::monomial(n, e1, 1);
            Exponents e2(n, 0);
            e2[1] = 1;
            p1 = p1 + Polynomial::monomial(n, e2, static_cast<int>(1 + j % 5));

            Exponents e3(n, 0);
            e3[1] = e;
            Polynomial p2 = Polynomial::monomial(n, e3, 1);
            Exponents e4(n, 0);
            e4[0] = 1;
            e4[n - 1] = 1;
            p2 = p2 + Polynomial::monomial(n, e4, 1);

            pi.polys = {p1, p2};
            if (n >= 3) {
                Exponents e5(n, 0);
                e5[2] = 1;
                e5[n - 1] = 1;
                Polynomial p3 = Polynomial::monomial(n, e5, 1);
                p3 = p3 + Polynomial::constant(n, 1);
                pi.polys.push_back(p3);
            }
            pi.validate();

            const std::uint64_t pid = k * 1000003ULL + j;
            TimingRow row;
            row.phase = Phase::train;
            row.limit_s = 64.0;
            row.time_s.assign(n_ord, 0.0);
            row.status.assign(n_ord, RunStatus::ok);

            const double jitter = 1.0 + spec.noise * (2.0 * unit(seed, pid, 0) - 1.0);
            const double row_min = base_time * jitter;
            for (std::uint64_t oi = 0; oi < n_ord; ++oi) {
                double u = unit(seed, pid, oi + 1);
                double t;
                if (oi == own) {
                    t = row_min;
                } else if (oi == trap) {
                    t = row_min * spec.trap_factor * (1.0 + 0.1 * u);
                } else if (has_twin && is_rare && oi == twin_own) {
                    t = row_min * (1.10 + 0.02 * u);  // benign confusion with the twin
                } else if (oi == (own + 2) % n_ord) {
                    t = row_min * (1.08 + 0.05 * u);  // near-optimal
                } else {
                    t = row_min * (3.0 + 3.0 * u);
                }
                row.time_s[oi] = t;
            }
            fx.timings.ids.push_back(pi.id);
            fx.timings.rows.emplace(pi.id, std::move(row));
            fx.problems.push_back(std::move(pi));
        }
    }
    return fx;
}

}  // namespace cadsel
