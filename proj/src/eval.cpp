#include "lfqa/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "lfqa/parallel.hpp"
#include "lfqa/rng.hpp"

namespace lfqa {

namespace {

double logistic_value(const std::vector<double>& p, double x) {
    const double width = std::max(std::abs(p[3]), 1e-12);
    const double arg = std::clamp(-(x - p[2]) / width, -700.0, 700.0);
    return (p[0] - p[1]) / (1.0 + std::exp(arg)) + p[1];
}

double logistic_sse(const std::vector<double>& p, const std::vector<double>& x,
                    const std::vector<double>& y) {
    double sse = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = logistic_value(p, x[i]) - y[i];
        sse += d * d;
    }
    return sse;
}

// Nelder-Mead simplex minimization, deterministic: fixed start, fixed
// iteration budget, index-based tie handling.
std::vector<double> nelder_mead(std::vector<double> start,
                                const std::vector<double>& x,
                                const std::vector<double>& y) {
    const std::size_t dim = start.size();
    std::vector<std::vector<double>> simplex{start};
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<double> vertex = start;
        vertex[k] += vertex[k] != 0.0 ? 0.1 * vertex[k] : 0.1;
        simplex.push_back(vertex);
    }
    std::vector<double> value(simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) value[i] = logistic_sse(simplex[i], x, y);

    for (int iter = 0; iter < 600; ++iter) {
        std::vector<std::size_t> rank(simplex.size());
        std::iota(rank.begin(), rank.end(), std::size_t{0});
        std::stable_sort(rank.begin(), rank.end(),
                         [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
        const std::size_t best = rank.front();
        const std::size_t worst = rank.back();
        const std::size_t second_worst = rank[rank.size() - 2];
        if (value[worst] - value[best] < 1e-12 * (1.0 + std::abs(value[best]))) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i : rank)
            if (i != worst)
                for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double factor) {
            std::vector<double> p(dim);
            for (std::size_t k = 0; k < dim; ++k)
                p[k] = centroid[k] + factor * (simplex[worst][k] - centroid[k]);
            return p;
        };

        const std::vector<double> reflected = blend(-1.0);
        const double f_reflected = logistic_sse(reflected, x, y);
        if (f_reflected < value[best]) {
            const std::vector<double> expanded = blend(-2.0);
            const double f_expanded = logistic_sse(expanded, x, y);
            if (f_expanded < f_reflected) {
                simplex[worst] = expanded;
                value[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                value[worst] = f_reflected;
            }
        } else if (f_reflected < value[second_worst]) {
            simplex[worst] = reflected;
            value[worst] = f_reflected;
        } else {
            const std::vector<double> contracted = blend(0.5);
            const double f_contracted = logistic_sse(contracted, x, y);
            if (f_contracted < value[worst]) {
                simplex[worst] = contracted;
                value[worst] = f_contracted;
            } else {
                for (std::size_t i : rank) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < dim; ++k)
                        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                    value[i] = logistic_sse(simplex[i], x, y);
                }
            }
        }
    }

    const std::size_t best = static_cast<std::size_t>(
        std::min_element(value.begin(), value.end()) - value.begin());
    return simplex[best];
}

struct Split {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

Split split_rows(std::size_t n, double fraction, CounterRng rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    const auto train_count = static_cast<std::size_t>(std::clamp<long long>(
        std::llround(static_cast<double>(n) * fraction), 1, static_cast<long long>(n) - 1));
    Split split;
    split.train.assign(order.begin(), order.begin() + train_count);
    split.test.assign(order.begin() + train_count, order.end());
    return split;
}

Split split_scenes(const std::vector<std::string>& scenes, double fraction, CounterRng rng) {
    std::vector<std::string> unique;
    for (const std::string& s : scenes)
        if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
    if (unique.size() < 2)
        throw TooFewSamplesError("scene-exclusive split needs at least 2 scenes, got " +
                                 std::to_string(unique.size()));
    rng.shuffle(unique);
    const auto train_count = static_cast<std::size_t>(std::clamp<long long>(
        std::llround(static_cast<double>(unique.size()) * fraction), 1,
        static_cast<long long>(unique.size()) - 1));
    const std::set<std::string> train_scenes(unique.begin(), unique.begin() + train_count);

    Split split;
    for (std::size_t i = 0; i < scenes.size(); ++i) {
        if (train_scenes.count(scenes[i]))
            split.train.push_back(i);
        else
            split.test.push_back(i);
    }
    return split;
}

}  // namespace

std::vector<double> fit_logistic_map(const std::vector<double>& predictions,
                                     const std::vector<double>& targets) {
    if (predictions.size() != targets.size() || predictions.size() < 4)
        throw TooFewSamplesError("logistic fit needs at least 4 aligned samples");
    const auto [y_lo, y_hi] = std::minmax_element(targets.begin(), targets.end());
    double x_mean = 0.0;
    for (double v : predictions) x_mean += v;
    x_mean /= static_cast<double>(predictions.size());
    double x_var = 0.0;
    for (double v : predictions) x_var += (v - x_mean) * (v - x_mean);
    x_var /= static_cast<double>(predictions.size());
    const double x_std = std::sqrt(x_var);

    std::vector<double> start{*y_hi, *y_lo, x_mean, x_std > 0.0 ? x_std / 4.0 : 1.0};
    return nelder_mead(std::move(start), predictions, targets);
}

TrialReport run_trials(const EvalDataset& dataset, const TrialOptions& options) {
    const std::size_t n = dataset.features.size();
    if (options.trials < 1) throw TooFewSamplesError("need at least 1 trial");
    if (!(options.train_fraction > 0.0) || !(options.train_fraction < 1.0))
        throw TooFewSamplesError("train fraction must be in (0, 1)");
    if (n < 5 || dataset.mos.size() != n)
        throw TooFewSamplesError("need at least 5 aligned dataset rows, got " +
                                 std::to_string(n));
    if (options.split_by == SplitBy::Scene && dataset.scenes.size() != n)
        throw TooFewSamplesError("scene split needs a scene label per row");

    TrialReport report;
    report.trial_count = options.trials;
    report.seed = options.seed;
    report.per_trial.resize(static_cast<std::size_t>(options.trials));

    const CounterRng root(options.seed);
    parallel_for(static_cast<std::size_t>(options.trials), [&](std::size_t trial) {
        const CounterRng trial_rng = root.substream(trial);
        const Split split =
            options.split_by == SplitBy::Row
                ? split_rows(n, options.train_fraction, trial_rng.substream(0))
                : split_scenes(dataset.scenes, options.train_fraction, trial_rng.substream(0));
        if (split.train.size() < 2 || split.test.size() < 2)
            throw TooFewSamplesError("split left fewer than 2 rows on one side (train " +
                                     std::to_string(split.train.size()) + ", test " +
                                     std::to_string(split.test.size()) + ")");

        std::vector<std::vector<double>> train_x;
        std::vector<double> train_y;
        train_x.reserve(split.train.size());
        for (std::size_t i : split.train) {
            train_x.push_back(dataset.features[i]);
            train_y.push_back(dataset.mos[i]);
        }

        const Hyperparams hp =
            grid_search_cv(train_x, train_y, options.grid, options.cv_folds,
                           trial_rng.substream(1).key());
        const SvrModel model = svr_train(train_x, train_y, hp);

        std::vector<double> predictions, truth;
        predictions.reserve(split.test.size());
        for (std::size_t i : split.test) {
            predictions.push_back(svr_predict(model, dataset.features[i]));
            truth.push_back(dataset.mos[i]);
        }

        TrialMetrics metrics;
        metrics.srocc = srocc(predictions, truth);
        if (options.logistic_map) {
            const std::vector<double> params = fit_logistic_map(predictions, truth);
            std::vector<double> mapped(predictions.size());
            for (std::size_t i = 0; i < predictions.size(); ++i)
                mapped[i] = logistic_value(params, predictions[i]);
            metrics.lcc = lcc(mapped, truth);
            metrics.rmse = rmse(mapped, truth);
        } else {
            metrics.lcc = lcc(predictions, truth);
            metrics.rmse = rmse(predictions, truth);
        }
        report.per_trial[trial] = metrics;
    });

    std::vector<double> srocc_values, lcc_values, rmse_values;
    for (const TrialMetrics& m : report.per_trial) {
        srocc_values.push_back(m.srocc);
        lcc_values.push_back(m.lcc);
        rmse_values.push_back(m.rmse);
    }
    report.median_srocc = lower_median(std::move(srocc_values));
    report.median_lcc = lower_median(std::move(lcc_values));
    report.median_rmse = lower_median(std::move(rmse_values));
    return report;
}

}  // namespace lfqa
