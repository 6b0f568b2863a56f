#pragma once

#include <array>
#include <cstdint>

#include "lfqa/light_field.hpp"

namespace lfqa {

/// Probabilities of the six rotation-invariant uniform pattern classes
/// (4 neighbors at radius 1: popcounts 0..4 for uniform codes, class 5
/// for the non-uniform rest).
struct UlbpHistogram {
    std::array<double, 6> bins{};
};

/// Rotation-invariant uniform LBP class of one pixel. Neighbors are the
/// four axis-aligned samples in circular order (right, up, left, down).
/// A neighbor >= center yields bit 1; a circular bit string with at most
/// two transitions maps to its popcount, anything else to class 5.
int lbp_riu2_code(std::uint8_t center, const std::array<std::uint8_t, 4>& neighbors);

/// Pattern-class histogram over all interior pixels of the micro-lens
/// image, normalized to probabilities. Needs at least a 3x3 image so an
/// interior exists; no border padding is applied.
UlbpHistogram ulbp_histogram(const MicroLensImage& mli);

/// Max minus min pixel value, in [0, 255].
int mli_range(const MicroLensImage& mli);

}  // namespace lfqa
