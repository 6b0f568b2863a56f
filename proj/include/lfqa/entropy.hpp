#pragma once

#include "lfqa/light_field.hpp"

namespace lfqa {

/// Image and frequency entropy of one micro-lens image, both in bits.
struct EntropyPair {
    double image_entropy = 0.0;
    double frequency_entropy = 0.0;
};

/// Shannon entropy of the 256-bin gray-level histogram, in bits.
/// Zero-probability bins contribute nothing (0*log 0 := 0).
double image_entropy(const GrayImage& block);

/// Orthonormal 2-D type-II DCT. Energy is preserved: the sum of squared
/// coefficients equals the sum of squared input values.
Matd dct2(const Matd& block);

/// Entropy of the spectral probability map: squared DCT coefficients
/// normalized over all coefficients except DC. Excluding DC makes the
/// result invariant to constant offsets. A block with no AC energy has
/// frequency entropy 0.
double frequency_entropy(const Matd& block);
double frequency_entropy(const GrayImage& block);

EntropyPair mli_global_entropy(const MicroLensImage& mli);

}  // namespace lfqa
