#pragma once

#include <cstdint>
#include <vector>

#include "lfqa/error.hpp"

namespace lfqa {

struct Hyperparams {
    double c = 1.0;       // box penalty, > 0
    double gamma = 1.0;   // RBF width, > 0
    double epsilon = 0.1; // insensitivity tube half-width, >= 0
};

/// Per-feature affine map onto [-1, 1] fitted from training minima and
/// maxima. Degenerate features (max == min) map to 0. Identity scaling is
/// representable as min = -1, max = 1 per feature.
struct ScalingParams {
    std::vector<double> feature_min;
    std::vector<double> feature_max;
};

ScalingParams scale_fit(const std::vector<std::vector<double>>& train_rows);
std::vector<double> scale_apply(const ScalingParams& params,
                                const std::vector<double>& row);
ScalingParams identity_scaling(std::size_t dim);

struct SvrModel {
    std::vector<std::vector<double>> support_vectors; // scaled feature rows
    std::vector<double> dual_coefs;                   // alpha_i - alpha*_i, in [-C, C]
    std::vector<int> support_indices;                 // rows of the training set (diagnostic)
    double bias = 0.0;
    Hyperparams params;
    ScalingParams scaling;
};

/// Trains epsilon-insensitive support vector regression with an RBF
/// kernel. Features are scaled to [-1, 1] by training min/max (unless
/// `scale` is false), then the dual problem is solved by sequential
/// minimal optimization on maximal-violating pairs until the largest KKT
/// violation drops below `tolerance`.
///
/// Throws NonFiniteInputError for NaN/inf inputs and DidNotConvergeError
/// when the pair-update cap (1e7) is reached first.
SvrModel svr_train(const std::vector<std::vector<double>>& features,
                   const std::vector<double>& targets, const Hyperparams& hp,
                   bool scale = true, double tolerance = 1e-3);

double svr_predict(const SvrModel& model, const std::vector<double>& features);

struct HyperparamGrid {
    std::vector<double> c_values;
    std::vector<double> gamma_values;
    double epsilon = 0.1;

    /// C in 2^-5..2^15 (steps of 2^2), gamma in 2^-15..2^3, epsilon 0.1.
    static HyperparamGrid defaults();
};

/// Exhaustive grid search maximizing k-fold cross-validated rank
/// correlation (computed once over the pooled out-of-fold predictions).
/// Folds are dealt round-robin from a seeded shuffle, so the result is a
/// pure function of (inputs, grid, folds, seed). Ties and degenerate
/// candidates resolve toward smaller C, then smaller gamma.
Hyperparams grid_search_cv(const std::vector<std::vector<double>>& features,
                           const std::vector<double>& targets,
                           const HyperparamGrid& grid, int folds,
                           std::uint64_t seed, bool scale = true);

}  // namespace lfqa
