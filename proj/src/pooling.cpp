#include "lfqa/pooling.hpp"

#include <algorithm>
#include <cmath>

namespace lfqa {

std::vector<double> percentile_pool(std::vector<double> values, double keep) {
    if (values.empty()) throw EmptySequenceError("percentile pooling of an empty sequence");
    if (!(keep > 0.0) || keep > 1.0)
        throw EmptySequenceError("keep fraction must be in (0, 1], got " + std::to_string(keep));
    std::sort(values.begin(), values.end());
    const std::size_t drop = static_cast<std::size_t>(
        std::floor(static_cast<double>(values.size()) * (1.0 - keep) / 2.0));
    return std::vector<double>(values.begin() + drop, values.end() - drop);
}

MeanSkew mean_skew(const std::vector<double>& values) {
    if (values.empty()) throw TooFewValuesError("mean/skew of an empty sequence");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;

    double m2 = 0.0;
    double m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;

    const double denom = std::pow(m2, 1.5);
    return MeanSkew{mean, denom > 0.0 ? m3 / denom : 0.0};
}

std::array<double, 4> ged_features(const std::vector<EntropyPair>& entropies, double keep) {
    if (entropies.empty()) throw EmptySequenceError("no entropy pairs to pool");
    std::vector<double> image_entropies, frequency_entropies;
    image_entropies.reserve(entropies.size());
    frequency_entropies.reserve(entropies.size());
    for (const EntropyPair& pair : entropies) {
        image_entropies.push_back(pair.image_entropy);
        frequency_entropies.push_back(pair.frequency_entropy);
    }
    const MeanSkew ie = mean_skew(percentile_pool(std::move(image_entropies), keep));
    const MeanSkew fe = mean_skew(percentile_pool(std::move(frequency_entropies), keep));
    return {ie.mean, ie.skew, fe.mean, fe.skew};
}

UlbpFeatures ulbp_features(const std::vector<UlbpHistogram>& histograms,
                           const std::vector<int>& ranges, int threshold) {
    if (histograms.empty()) throw EmptySequenceError("no ULBP histograms to pool");
    if (histograms.size() != ranges.size())
        throw DimensionMismatchError("histogram/range counts differ: " +
                                     std::to_string(histograms.size()) + " vs " +
                                     std::to_string(ranges.size()));

    UlbpFeatures result;
    std::size_t selected = 0;
    for (std::size_t i = 0; i < histograms.size(); ++i) {
        if (ranges[i] > threshold) {
            for (int k = 0; k < 6; ++k) result.bins[k] += histograms[i].bins[k];
            ++selected;
        }
    }
    if (selected == 0) {
        result.fallback = true;
        for (const UlbpHistogram& h : histograms)
            for (int k = 0; k < 6; ++k) result.bins[k] += h.bins[k];
        selected = histograms.size();
    }
    for (int k = 0; k < 6; ++k) result.bins[k] /= static_cast<double>(selected);
    return result;
}

std::array<double, 4> spatial_quality_features(const SubApertureImage& sai, double keep) {
    constexpr int kBlock = 8;
    const GrayImage& img = sai.image;
    if (img.rows < kBlock || img.cols < kBlock)
        throw TooSmallImageError("spatial features need at least one 8x8 block, image is " +
                                 std::to_string(img.rows) + "x" + std::to_string(img.cols));

    std::vector<double> block_image_entropies;
    std::vector<double> block_frequency_entropies;
    for (int r0 = 0; r0 + kBlock <= img.rows; r0 += kBlock) {
        for (int c0 = 0; c0 + kBlock <= img.cols; c0 += kBlock) {
            GrayImage block(kBlock, kBlock);
            for (int r = 0; r < kBlock; ++r)
                for (int c = 0; c < kBlock; ++c)
                    block.at(r, c) = img.at(r0 + r, c0 + c);
            block_image_entropies.push_back(image_entropy(block));
            block_frequency_entropies.push_back(frequency_entropy(block));
        }
    }

    const MeanSkew sie = mean_skew(percentile_pool(std::move(block_image_entropies), keep));
    const MeanSkew sfe = mean_skew(percentile_pool(std::move(block_frequency_entropies), keep));
    return {sie.mean, sie.skew, sfe.mean, sfe.skew};
}

ExtractionResult extract_feature_vector(const LightField& lf, const ExtractConfig& config) {
    std::vector<EntropyPair> entropies;
    std::vector<UlbpHistogram> histograms;
    std::vector<int> ranges;
    const std::size_t sites = static_cast<std::size_t>(lf.num_s()) * lf.num_t();
    entropies.reserve(sites);
    histograms.reserve(sites);
    ranges.reserve(sites);

    for_each_mli(lf, [&](const MicroLensImage& mli) {
        entropies.push_back(mli_global_entropy(mli));
        histograms.push_back(ulbp_histogram(mli));
        ranges.push_back(mli_range(mli));
    });

    const std::array<double, 4> ged = ged_features(entropies, config.keep);
    const UlbpFeatures ulbp = ulbp_features(histograms, ranges, config.range_threshold);

    std::array<double, 4> sq{};
    if (config.sai_mode == ExtractConfig::SaiMode::Central) {
        sq = spatial_quality_features(
            extract_sai(lf, lf.num_u() / 2, lf.num_v() / 2), config.keep);
    } else {
        for (int u = 0; u < lf.num_u(); ++u) {
            for (int v = 0; v < lf.num_v(); ++v) {
                const std::array<double, 4> view_sq =
                    spatial_quality_features(extract_sai(lf, u, v), config.keep);
                for (int k = 0; k < 4; ++k) sq[k] += view_sq[k];
            }
        }
        const double views = static_cast<double>(lf.num_u()) * lf.num_v();
        for (int k = 0; k < 4; ++k) sq[k] /= views;
    }

    ExtractionResult result;
    result.ulbp_fallback = ulbp.fallback;
    for (int k = 0; k < 4; ++k) result.features.values[k] = ged[k];
    for (int k = 0; k < 6; ++k) result.features.values[4 + k] = ulbp.bins[k];
    for (int k = 0; k < 4; ++k) result.features.values[10 + k] = sq[k];
    return result;
}

std::string sai_mode_name(ExtractConfig::SaiMode mode) {
    return mode == ExtractConfig::SaiMode::Central ? "central" : "all";
}

ExtractConfig::SaiMode sai_mode_from_name(const std::string& name) {
    if (name == "central") return ExtractConfig::SaiMode::Central;
    if (name == "all") return ExtractConfig::SaiMode::All;
    throw ParseError("unknown SAI mode '" + name + "' (expected central|all)");
}

}  // namespace lfqa
