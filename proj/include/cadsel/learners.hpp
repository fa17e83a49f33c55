// Four deterministic classifier families behind one train/predict contract.
// Inputs are standardized feature rows; labels are ordering indices.
// Training is a pure function of (data, hyperparameters, seed).
#pragma once

#include "cadsel/features.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cadsel {

enum class Family { knn, dt, mlp, svm };
std::string family_name(Family f);
Family family_from_name(const std::string& name);

enum class KnnWeighting { uniform, inverse_distance };
enum class SplitCriterion { gini, entropy };
enum class Activation { identity, tanh, relu };

struct KnnParams {
    int k = 1;
    KnnWeighting weighting = KnnWeighting::inverse_distance;
    bool operator==(const KnnParams&) const = default;
};
struct DtParams {
    SplitCriterion criterion = SplitCriterion::gini;
    int max_depth = 1;
    bool operator==(const DtParams&) const = default;
};
struct MlpParams {
    int hidden_size = 10;
    Activation activation = Activation::tanh;
    double l2_alpha = 1e-4;
    double learning_rate = 0.05;
    int max_epochs = 200;
    bool operator==(const MlpParams&) const = default;
};
struct SvmParams {
    double c = 1.0;
    double gamma = 1.0;
    double tolerance = 1e-3;
    int max_passes = 5;
    bool operator==(const SvmParams&) const = default;
};

struct HyperParams {
    Family family = Family::knn;
    std::variant<KnnParams, DtParams, MlpParams, SvmParams> params = KnnParams{};

    void validate() const;
    std::string describe() const;
    bool operator==(const HyperParams&) const = default;
};

// --- fitted parameter blocks -------------------------------------------

struct KnnModel {
    std::vector<std::vector<double>> points;
    std::vector<int> labels;
};

struct DtNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0;
    int left = -1;
    int right = -1;
    int leaf_class = 0;
};
struct DtModel {
    std::vector<DtNode> nodes;  // node 0 is the root
};

struct MlpModel {
    // w1: hidden x input, w2: classes x hidden, row-major
    std::vector<std::vector<double>> w1, w2;
    std::vector<double> b1, b2;
    Activation activation = Activation::tanh;

    std::vector<double> forward(std::span<const double> x) const;  // class probabilities
};

struct SvmBinary {
    int class_id = 0;
    std::vector<double> alpha_y;  // alpha_i * y_i per support vector
    std::vector<std::vector<double>> support;
    double bias = 0;
};
struct SvmModel {
    double gamma = 1.0;
    std::vector<SvmBinary> machines;  // one per class with positive examples
};

struct TrainedModel {
    Family family = Family::knn;
    HyperParams hp;
    std::variant<KnnModel, DtModel, MlpModel, SvmModel> theta;
    // feature pipeline; absent means rows are already reduced+scaled
    std::optional<Reducer> reducer;
    std::optional<Scaler> scaler;
    int n_classes = 0;
    std::uint64_t seed = 0;
};

using Rows = std::vector<std::vector<double>>;

TrainedModel train_knn(const Rows& x, const std::vector<int>& y, const HyperParams& hp,
                       int n_classes, std::uint64_t seed);
TrainedModel train_dt(const Rows& x, const std::vector<int>& y, const HyperParams& hp,
                      int n_classes, std::uint64_t seed);
TrainedModel train_mlp(const Rows& x, const std::vector<int>& y, const HyperParams& hp,
                       int n_classes, std::uint64_t seed);
TrainedModel train_svm(const Rows& x, const std::vector<int>& y, const HyperParams& hp,
                       int n_classes, std::uint64_t seed);
TrainedModel train_model(const Rows& x, const std::vector<int>& y, const HyperParams& hp,
                         int n_classes, std::uint64_t seed);

// Prediction on rows in the model's *fitted* space (reduced + scaled).
int predict_one(const TrainedModel& model, std::span<const double> row);
std::vector<int> predict(const TrainedModel& model, const Rows& rows);

// Prediction on raw feature rows; applies the stored reducer and scaler.
std::vector<int> predict_raw(const TrainedModel& model, const FeatureMatrix& raw);

// MLP internals exposed for gradient verification and the zero-init hook.
struct MlpGradients {
    std::vector<std::vector<double>> w1, w2;
    std::vector<double> b1, b2;
};
double mlp_loss(const MlpModel& m, const Rows& x, const std::vector<int>& y, double l2_alpha);
MlpGradients mlp_gradients(const MlpModel& m, const Rows& x, const std::vector<int>& y,
                           double l2_alpha);
MlpModel mlp_init(std::size_t inputs, std::size_t hidden, std::size_t classes,
                  Activation act, std::uint64_t seed);

double gini_impurity(std::span<const std::size_t> class_counts);
double entropy_impurity(std::span<const std::size_t> class_counts);
double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);
double svm_dual_objective(const std::vector<double>& alpha, const std::vector<int>& y_pm1,
                          const Rows& x, double gamma);

// Versioned JSON with all floating-point numbers as decimal strings.
std::string model_to_json(const TrainedModel& m, const std::string& config_hash);
TrainedModel model_from_json(const std::string& text);
void save_model(const TrainedModel& m, const std::string& path, const std::string& config_hash);
TrainedModel load_model(const std::string& path);

}  // namespace cadsel
