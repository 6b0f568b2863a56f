#pragma once

#include <vector>

#include "lfqa/error.hpp"

namespace lfqa {

/// Average ranks (1-based), ties receive the mean of the ranks they span.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Spearman rank-order correlation: Pearson correlation of mid-ranked
/// sequences. Throws DegenerateInputError when either input has fewer
/// than two distinct values.
double srocc(const std::vector<double>& a, const std::vector<double>& b);

/// Pearson linear correlation on raw values.
double lcc(const std::vector<double>& a, const std::vector<double>& b);

/// Root-mean-square of elementwise differences.
double rmse(const std::vector<double>& a, const std::vector<double>& b);

/// Median with the lower-median convention for even counts.
double lower_median(std::vector<double> values);

}  // namespace lfqa
