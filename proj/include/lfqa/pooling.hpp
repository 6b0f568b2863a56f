#pragma once

#include <array>
#include <string>
#include <vector>

#include "lfqa/entropy.hpp"
#include "lfqa/light_field.hpp"
#include "lfqa/texture.hpp"

namespace lfqa {

/// Fixed order of the 14 per-light-field features. ulbp_0..ulbp_5 are the
/// rotation-invariant uniform pattern classes 0..5 (popcount bins then the
/// non-uniform class). This order is written into feature caches and model
/// files so producers and consumers can cross-check each other.
inline constexpr std::array<const char*, 14> kFeatureNames = {
    "mean_ie", "skew_ie", "mean_fe", "skew_fe",
    "ulbp_0",  "ulbp_1",  "ulbp_2",  "ulbp_3", "ulbp_4", "ulbp_5",
    "mean_sie", "skew_sie", "mean_sfe", "skew_sfe",
};

struct FeatureVector {
    std::array<double, 14> values{};
};

struct MeanSkew {
    double mean = 0.0;
    double skew = 0.0;
};

/// Keeps the central `keep` fraction of the values by rank: sorts
/// ascending and drops floor(n*(1-keep)/2) items from each end.
std::vector<double> percentile_pool(std::vector<double> values, double keep);

/// Arithmetic mean and population moment skewness m3 / m2^(3/2).
/// Zero-variance input (including fewer than 3 values) has skew 0.
MeanSkew mean_skew(const std::vector<double>& values);

/// Pooled entropy statistics: trim each entropy sequence to its central
/// 60% (or `keep`), then take mean and skew of both.
/// Order: mean(IE), skew(IE), mean(FE), skew(FE).
std::array<double, 4> ged_features(const std::vector<EntropyPair>& entropies,
                                   double keep = 0.6);

struct UlbpFeatures {
    std::array<double, 6> bins{};
    /// Set when no micro-lens image exceeded the range threshold and the
    /// average fell back to all of them.
    bool fallback = false;
};

/// Bin-wise average of the histograms whose micro-lens range exceeds the
/// threshold; flat content below the threshold is excluded as texturally
/// uninformative. If nothing passes, averages everything and flags it.
UlbpFeatures ulbp_features(const std::vector<UlbpHistogram>& histograms,
                           const std::vector<int>& ranges, int threshold = 20);

/// Entropy statistics of the non-overlapping 8x8-pixel tiles of one
/// sub-aperture image (partial border tiles are discarded), pooled the
/// same way as ged_features.
/// Order: mean(SIE), skew(SIE), mean(SFE), skew(SFE).
std::array<double, 4> spatial_quality_features(const SubApertureImage& sai,
                                               double keep = 0.6);

struct ExtractConfig {
    double keep = 0.6;        // central fraction retained by percentile pooling
    int range_threshold = 20; // gray-value selector for the ULBP average
    enum class SaiMode { Central, All } sai_mode = SaiMode::Central;
};

struct ExtractionResult {
    FeatureVector features;
    bool ulbp_fallback = false;
};

/// Full per-light-field descriptor: entropy and texture statistics over
/// every micro-lens image plus spatial statistics of the central
/// sub-aperture view (or the average over all views).
ExtractionResult extract_feature_vector(const LightField& lf,
                                        const ExtractConfig& config = {});

std::string sai_mode_name(ExtractConfig::SaiMode mode);
ExtractConfig::SaiMode sai_mode_from_name(const std::string& name);

}  // namespace lfqa
