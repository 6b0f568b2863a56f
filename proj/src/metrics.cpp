#include "lfqa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lfqa {

namespace {

void check_pair(const std::vector<double>& a, const std::vector<double>& b,
                std::size_t min_len, const char* what) {
    if (a.size() != b.size())
        throw DimensionMismatchError(std::string(what) + ": sequence lengths differ (" +
                                     std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()) + ")");
    if (a.size() < min_len)
        throw DegenerateInputError(std::string(what) + " needs at least " +
                                   std::to_string(min_len) + " samples");
}

double pearson(const std::vector<double>& a, const std::vector<double>& b,
               const char* what) {
    const double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= n;
    mean_b /= n;

    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a <= 0.0 || var_b <= 0.0)
        throw DegenerateInputError(std::string(what) + ": an input has zero variance");
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // tie block spans sorted positions [i, j]; mid-rank is their average
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double srocc(const std::vector<double>& a, const std::vector<double>& b) {
    check_pair(a, b, 2, "SROCC");
    return pearson(average_ranks(a), average_ranks(b), "SROCC");
}

double lcc(const std::vector<double>& a, const std::vector<double>& b) {
    check_pair(a, b, 2, "LCC");
    return pearson(a, b, "LCC");
}

double rmse(const std::vector<double>& a, const std::vector<double>& b) {
    check_pair(a, b, 1, "RMSE");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

double lower_median(std::vector<double> values) {
    if (values.empty()) throw EmptySequenceError("median of an empty sequence");
    const std::size_t k = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + k, values.end());
    return values[k];
}

}  // namespace lfqa
