#include "lfqa/texture.hpp"

#include <algorithm>
#include <string>

namespace lfqa {

int lbp_riu2_code(std::uint8_t center, const std::array<std::uint8_t, 4>& neighbors) {
    std::array<int, 4> bits;
    for (int p = 0; p < 4; ++p) bits[p] = neighbors[p] >= center ? 1 : 0;

    int transitions = 0;
    int ones = 0;
    for (int p = 0; p < 4; ++p) {
        ones += bits[p];
        if (bits[p] != bits[(p + 1) % 4]) ++transitions;
    }
    return transitions <= 2 ? ones : 5;
}

UlbpHistogram ulbp_histogram(const MicroLensImage& mli) {
    const GrayImage& img = mli.image;
    if (img.rows < 3 || img.cols < 3)
        throw TooSmallMliError("ULBP needs at least a 3x3 micro-lens image, got " +
                               std::to_string(img.rows) + "x" + std::to_string(img.cols));

    std::array<std::size_t, 6> counts{};
    for (int u = 1; u < img.rows - 1; ++u) {
        for (int v = 1; v < img.cols - 1; ++v) {
            const std::array<std::uint8_t, 4> neighbors = {
                img.at(u, v + 1), img.at(u - 1, v), img.at(u, v - 1), img.at(u + 1, v)};
            ++counts[lbp_riu2_code(img.at(u, v), neighbors)];
        }
    }

    const double total = static_cast<double>(img.rows - 2) * (img.cols - 2);
    UlbpHistogram histogram;
    for (int k = 0; k < 6; ++k)
        histogram.bins[k] = static_cast<double>(counts[k]) / total;
    return histogram;
}

int mli_range(const MicroLensImage& mli) {
    const auto [lo, hi] = std::minmax_element(mli.image.pixels.begin(), mli.image.pixels.end());
    return static_cast<int>(*hi) - static_cast<int>(*lo);
}

}  // namespace lfqa
