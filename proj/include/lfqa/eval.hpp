#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfqa/metrics.hpp"
#include "lfqa/svr.hpp"

namespace lfqa {

struct EvalDataset {
    std::vector<std::vector<double>> features;
    std::vector<double> mos;
    std::vector<std::string> scenes;  // may be empty unless splitting by scene
};

struct TrialMetrics {
    double srocc = 0.0;
    double lcc = 0.0;
    double rmse = 0.0;
};

struct TrialReport {
    std::vector<TrialMetrics> per_trial;
    double median_srocc = 0.0;
    double median_lcc = 0.0;
    double median_rmse = 0.0;
    int trial_count = 0;
    std::uint64_t seed = 0;
};

enum class SplitBy { Row, Scene };

struct TrialOptions {
    int trials = 1000;
    double train_fraction = 0.8;
    std::uint64_t seed = 0;
    HyperparamGrid grid = HyperparamGrid::defaults();
    int cv_folds = 5;
    SplitBy split_by = SplitBy::Row;
    /// Fit a 4-parameter logistic mapping on each trial's test predictions
    /// before computing LCC and RMSE (rank correlation always uses raw
    /// predictions).
    bool logistic_map = false;
};

/// Four-parameter logistic curve fitted by least squares (Nelder-Mead);
/// the standard monotone mapping used to align objective predictions with
/// subjective scales before linear-correlation statistics.
std::vector<double> fit_logistic_map(const std::vector<double>& predictions,
                                     const std::vector<double>& targets);

/// Repeated random train/test evaluation. Trial t draws its own RNG
/// substream from (seed, t), shuffles the rows (or scenes), trains
/// scaling + grid search + SVR on the training side only, and scores the
/// held-out side. Trials run concurrently; the report orders them by
/// index, so output is independent of scheduling. Medians use the lower
/// median for even trial counts.
TrialReport run_trials(const EvalDataset& dataset, const TrialOptions& options);

}  // namespace lfqa
