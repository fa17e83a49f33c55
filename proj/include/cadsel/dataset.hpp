// Timing-matrix ingestion with the censoring protocol, target labeling,
// train/test splitting, and a synthetic fixture generator that stands in
// for a real CAD backend.
#pragma once

#include "cadsel/problem.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cadsel {

enum class RunStatus { ok, timeout };
enum class Phase { train, test };

struct TimingRow {
    std::vector<double> time_s;        // n! entries, ordering-index order
    std::vector<RunStatus> status;     // parallel to time_s
    Phase phase = Phase::train;
    double limit_s = 0;                // cap under which timeouts were recorded
};

struct TimingMatrix {
    std::size_t nvars = 0;
    std::uint64_t orderings = 0;  // n!
    std::vector<std::string> ids; // first-appearance order
    std::map<std::string, TimingRow> rows;

    const TimingRow& row(const std::string& id) const;
    double time(const std::string& id, std::uint64_t ordering_index) const;
};

// CSV columns: problem_id, ordering_index, time_s, status, phase, limit_s.
// Header mandatory; one row per (problem, ordering) pair.
TimingMatrix load_timings(const std::string& path, std::size_t n);
TimingMatrix parse_timings_csv(const std::string& text, std::size_t n);
std::string timings_to_csv(const TimingMatrix& m);

// Training-phase censoring rule: a row where every ordering timed out must
// be rerun at double the limit.
struct CensoringDecision {
    enum Kind { ok, rerun_at } kind = ok;
    double new_limit_s = 0;
    // set when the demanded limit exceeds the 32 s bound observed in practice
    bool exceeds_observed_bound = false;
};
CensoringDecision validate_training_censoring(const TimingRow& row, double initial_limit_s);

// Single source of truth for the relative time window. Inclusive boundary.
inline bool within_window(double time_s, double row_min_s, double window) {
    return time_s <= (1.0 + window) * row_min_s;
}

struct RowLabel {
    std::uint64_t target_class = 0;          // argmin, ties to lowest index
    std::vector<std::uint64_t> target_set;   // ascending; orderings within the window
};
RowLabel label_row(const std::vector<double>& times, double window);

struct LabeledDataset {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> rows;   // post-reduction, post-scaling
    std::vector<int> labels;                 // target class per problem
    std::vector<std::vector<std::uint64_t>> target_sets;
    TimingMatrix timing;
    int n_classes = 0;
};

// Labels every row of the matrix; feature rows are attached by the caller.
std::map<std::string, RowLabel> label_targets(const TimingMatrix& matrix, double window = 0.2);

struct SplitSpec {
    std::uint64_t seed = 0;
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
};
SplitSpec split_dataset(const std::vector<std::string>& ids, double train_fraction,
                        std::uint64_t seed);

// Synthetic benchmark: feature-separable clusters, each with a planted fast
// ordering, near-optimal orderings within 15%, and one trap ordering at
// trap_factor times the minimum. Even/odd cluster pairs are feature twins
// with asymmetric confusion costs, plus a small decoy fraction, so that
// hyperparameter choices genuinely trade accuracy against trap exposure.
struct SynthSpec {
    std::size_t clusters = 4;
    std::size_t problems_per_cluster = 50;
    std::size_t nvars = 4;
    double noise = 0.02;        // relative jitter on the planted base time
    double trap_factor = 20.0;  // trap time as a multiple of the row minimum
};

struct SynthFixture {
    std::vector<ProblemInstance> problems;
    TimingMatrix timings;
};

SynthFixture synth_fixture(const SynthSpec& spec, std::uint64_t seed);

}  // namespace cadsel
