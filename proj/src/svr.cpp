#include "lfqa/svr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lfqa/metrics.hpp"
#include "lfqa/rng.hpp"

namespace lfqa {

namespace {

constexpr std::size_t kMaxPairUpdates = 10'000'000;
constexpr std::size_t kGramCacheLimit = 4096;
constexpr double kCurvatureFloor = 1e-12;

double rbf_kernel(const std::vector<double>& x, const std::vector<double>& y, double gamma) {
    double dist2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        dist2 += d * d;
    }
    return std::exp(-gamma * dist2);
}

void validate_inputs(const std::vector<std::vector<double>>& features,
                     const std::vector<double>& targets, const Hyperparams& hp) {
    if (features.size() < 2)
        throw EmptyTrainingSetError("SVR needs at least 2 training samples, got " +
                                    std::to_string(features.size()));
    if (features.size() != targets.size())
        throw DimensionMismatchError("feature rows and targets differ: " +
                                     std::to_string(features.size()) + " vs " +
                                     std::to_string(targets.size()));
    const std::size_t dim = features.front().size();
    if (dim == 0) throw EmptyTrainingSetError("feature rows are empty");
    for (const auto& row : features) {
        if (row.size() != dim)
            throw DimensionMismatchError("inconsistent feature dimensions");
        for (double v : row)
            if (!std::isfinite(v)) throw NonFiniteInputError("non-finite feature value");
    }
    for (double y : targets)
        if (!std::isfinite(y)) throw NonFiniteInputError("non-finite target value");
    if (!(hp.c > 0.0) || !std::isfinite(hp.c) || !(hp.gamma > 0.0) ||
        !std::isfinite(hp.gamma) || hp.epsilon < 0.0 || !std::isfinite(hp.epsilon))
        throw InvalidHyperparamsError("need C > 0, gamma > 0, epsilon >= 0");
}

/// Kernel values by row, cached as a full Gram matrix for small problems
/// and recomputed on demand otherwise.
class KernelTable {
public:
    KernelTable(const std::vector<std::vector<double>>& rows, double gamma)
        : rows_(rows), gamma_(gamma), n_(rows.size()) {
        if (n_ <= kGramCacheLimit) {
            gram_.resize(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i) {
                gram_[i * n_ + i] = 1.0;
                for (std::size_t j = i + 1; j < n_; ++j) {
                    const double k = rbf_kernel(rows_[i], rows_[j], gamma_);
                    gram_[i * n_ + j] = k;
                    gram_[j * n_ + i] = k;
                }
            }
        }
    }

    double at(std::size_t i, std::size_t j) const {
        if (!gram_.empty()) return gram_[i * n_ + j];
        return i == j ? 1.0 : rbf_kernel(rows_[i], rows_[j], gamma_);
    }

private:
    const std::vector<std::vector<double>>& rows_;
    double gamma_;
    std::size_t n_;
    std::vector<double> gram_;
};

}  // namespace

ScalingParams scale_fit(const std::vector<std::vector<double>>& train_rows) {
    if (train_rows.empty()) throw EmptyTrainingSetError("scaling fit on an empty training set");
    const std::size_t dim = train_rows.front().size();
    ScalingParams params;
    params.feature_min.assign(dim, std::numeric_limits<double>::infinity());
    params.feature_max.assign(dim, -std::numeric_limits<double>::infinity());
    for (const auto& row : train_rows) {
        if (row.size() != dim)
            throw DimensionMismatchError("inconsistent feature dimensions in scaling fit");
        for (std::size_t k = 0; k < dim; ++k) {
            params.feature_min[k] = std::min(params.feature_min[k], row[k]);
            params.feature_max[k] = std::max(params.feature_max[k], row[k]);
        }
    }
    return params;
}

std::vector<double> scale_apply(const ScalingParams& params, const std::vector<double>& row) {
    if (row.size() != params.feature_min.size())
        throw DimensionMismatchError("row has " + std::to_string(row.size()) +
                                     " features, scaling expects " +
                                     std::to_string(params.feature_min.size()));
    std::vector<double> scaled(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
        const double lo = params.feature_min[k];
        const double hi = params.feature_max[k];
        scaled[k] = hi > lo ? -1.0 + 2.0 * (row[k] - lo) / (hi - lo) : 0.0;
    }
    return scaled;
}

ScalingParams identity_scaling(std::size_t dim) {
    ScalingParams params;
    params.feature_min.assign(dim, -1.0);
    params.feature_max.assign(dim, 1.0);
    return params;
}

SvrModel svr_train(const std::vector<std::vector<double>>& features,
                   const std::vector<double>& targets, const Hyperparams& hp,
                   bool scale, double tolerance) {
    validate_inputs(features, targets, hp);
    const std::size_t n = features.size();
    const double c = hp.c;

    ScalingParams scaling =
        scale ? scale_fit(features) : identity_scaling(features.front().size());
    std::vector<std::vector<double>> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = scale_apply(scaling, features[i]);

    const KernelTable kernel(x, hp.gamma);

    // Dual variables z = (alpha_0..alpha_{n-1}, alpha*_0..alpha*_{n-1});
    // the first block carries equality-constraint sign +1, the second -1.
    // The gradient of the dual objective at z = 0 is the linear term.
    std::vector<double> z(2 * n, 0.0);
    std::vector<double> grad(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        grad[i] = hp.epsilon - targets[i];
        grad[n + i] = hp.epsilon + targets[i];
    }
    const auto sign_of = [n](std::size_t k) { return k < n ? 1.0 : -1.0; };
    const auto row_of = [n](std::size_t k) { return k < n ? k : k - n; };

    std::size_t iterations = 0;
    for (;; ++iterations) {
        if (iterations >= kMaxPairUpdates)
            throw DidNotConvergeError("SMO hit the pair-update cap (" +
                                      std::to_string(kMaxPairUpdates) + ")");

        // Maximal violating pair over the signed gradient v_k = a_k * g_k:
        // the constraint multiplier must sit above every v_k whose variable
        // can move "down" and below every v_k whose variable can move "up".
        double v_max = -std::numeric_limits<double>::infinity();
        double v_min = std::numeric_limits<double>::infinity();
        std::size_t arg_max = 2 * n, arg_min = 2 * n;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            const bool is_alpha = k < n;
            const double v = sign_of(k) * grad[k];
            const bool in_low = is_alpha ? z[k] > 0.0 : z[k] < c;
            const bool in_up = is_alpha ? z[k] < c : z[k] > 0.0;
            if (in_low && v > v_max) {
                v_max = v;
                arg_max = k;
            }
            if (in_up && v < v_min) {
                v_min = v;
                arg_min = k;
            }
        }
        if (arg_max >= 2 * n || arg_min >= 2 * n || v_max - v_min < tolerance) break;

        const std::size_t i = arg_max;
        const std::size_t j = arg_min;
        const std::size_t ri = row_of(i);
        const std::size_t rj = row_of(j);
        const double ai = sign_of(i);
        const double aj = sign_of(j);

        double eta = kernel.at(ri, ri) + kernel.at(rj, rj) - 2.0 * kernel.at(ri, rj);
        if (eta < kCurvatureFloor) eta = kCurvatureFloor;

        // Step along d_i = a_i * t, d_j = -a_j * t (keeps the equality
        // constraint); the unconstrained optimum is negative here.
        double t = -(v_max - v_min) / eta;
        const double lo_i = ai > 0.0 ? -z[i] : z[i] - c;
        const double hi_i = ai > 0.0 ? c - z[i] : z[i];
        const double lo_j = aj > 0.0 ? z[j] - c : -z[j];
        const double hi_j = aj > 0.0 ? z[j] : c - z[j];
        t = std::clamp(t, std::max(lo_i, lo_j), std::min(hi_i, hi_j));

        z[i] = std::clamp(z[i] + ai * t, 0.0, c);
        z[j] = std::clamp(z[j] - aj * t, 0.0, c);

        for (std::size_t k = 0; k < 2 * n; ++k)
            grad[k] += sign_of(k) * t * (kernel.at(row_of(k), ri) - kernel.at(row_of(k), rj));
    }

    // Constraint multiplier: averaged over free variables when any exist,
    // otherwise the midpoint of the feasible interval.
    double nu;
    {
        double free_sum = 0.0;
        std::size_t free_count = 0;
        double low = -std::numeric_limits<double>::infinity();
        double up = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < 2 * n; ++k) {
            const bool is_alpha = k < n;
            const double v = sign_of(k) * grad[k];
            if (z[k] > 0.0 && z[k] < c) {
                free_sum += v;
                ++free_count;
            }
            if (is_alpha ? z[k] > 0.0 : z[k] < c) low = std::max(low, v);
            if (is_alpha ? z[k] < c : z[k] > 0.0) up = std::min(up, v);
        }
        nu = free_count > 0 ? free_sum / static_cast<double>(free_count) : (low + up) / 2.0;
    }

    SvrModel model;
    model.params = hp;
    model.scaling = std::move(scaling);
    model.bias = -nu;
    for (std::size_t i = 0; i < n; ++i) {
        const double beta = z[i] - z[n + i];
        if (beta != 0.0) {
            model.support_vectors.push_back(x[i]);
            model.dual_coefs.push_back(beta);
            model.support_indices.push_back(static_cast<int>(i));
        }
    }
    return model;
}

double svr_predict(const SvrModel& model, const std::vector<double>& features) {
    const std::vector<double> x = scale_apply(model.scaling, features);
    double value = model.bias;
    for (std::size_t i = 0; i < model.support_vectors.size(); ++i)
        value += model.dual_coefs[i] * rbf_kernel(model.support_vectors[i], x, model.params.gamma);
    return value;
}

HyperparamGrid HyperparamGrid::defaults() {
    HyperparamGrid grid;
    for (int e = -5; e <= 15; e += 2) grid.c_values.push_back(std::ldexp(1.0, e));
    for (int e = -15; e <= 3; e += 2) grid.gamma_values.push_back(std::ldexp(1.0, e));
    grid.epsilon = 0.1;
    return grid;
}

Hyperparams grid_search_cv(const std::vector<std::vector<double>>& features,
                           const std::vector<double>& targets,
                           const HyperparamGrid& grid, int folds,
                           std::uint64_t seed, bool scale) {
    if (folds < 2) throw InvalidHyperparamsError("cross-validation needs at least 2 folds");
    if (grid.c_values.empty() || grid.gamma_values.empty())
        throw InvalidHyperparamsError("empty hyperparameter grid");
    if (features.size() != targets.size())
        throw DimensionMismatchError("feature rows and targets differ");

    const std::size_t n = features.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    CounterRng rng(seed);
    rng.shuffle(order);
    std::vector<int> fold_of(n);
    for (std::size_t pos = 0; pos < n; ++pos)
        fold_of[order[pos]] = static_cast<int>(pos % static_cast<std::size_t>(folds));

    std::vector<double> c_sorted = grid.c_values;
    std::vector<double> gamma_sorted = grid.gamma_values;
    std::sort(c_sorted.begin(), c_sorted.end());
    std::sort(gamma_sorted.begin(), gamma_sorted.end());

    double best_score = -std::numeric_limits<double>::infinity();
    Hyperparams best{c_sorted.front(), gamma_sorted.front(), grid.epsilon};

    for (double c : c_sorted) {
        for (double gamma : gamma_sorted) {
            const Hyperparams hp{c, gamma, grid.epsilon};
            std::vector<double> oof_pred, oof_true;
            oof_pred.reserve(n);
            oof_true.reserve(n);
            bool viable = true;
            for (int f = 0; f < folds && viable; ++f) {
                std::vector<std::vector<double>> train_x;
                std::vector<double> train_y;
                std::vector<std::size_t> held_out;
                for (std::size_t i = 0; i < n; ++i) {
                    if (fold_of[i] == f) {
                        held_out.push_back(i);
                    } else {
                        train_x.push_back(features[i]);
                        train_y.push_back(targets[i]);
                    }
                }
                if (held_out.empty()) continue;
                if (train_x.size() < 2) {
                    viable = false;
                    break;
                }
                const SvrModel model = svr_train(train_x, train_y, hp, scale);
                for (std::size_t i : held_out) {
                    oof_pred.push_back(svr_predict(model, features[i]));
                    oof_true.push_back(targets[i]);
                }
            }
            if (!viable || oof_pred.size() < 2) continue;

            double score;
            try {
                score = srocc(oof_pred, oof_true);
            } catch (const DegenerateInputError&) {
                continue;  // constant predictions rank worse than any real score
            }
            if (score > best_score) {
                best_score = score;
                best = hp;
            }
        }
    }
    return best;
}

}  // namespace lfqa
