#include "lfqa/entropy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace lfqa {

namespace {

// 1-D orthonormal DCT-II basis: row k of the returned table holds
// a_k * cos(pi * (2m + 1) * k / (2n)) for m = 0..n-1.
std::vector<double> dct_basis(int n) {
    std::vector<double> table(static_cast<std::size_t>(n) * n);
    const double a0 = std::sqrt(1.0 / n);
    const double ak = std::sqrt(2.0 / n);
    for (int k = 0; k < n; ++k) {
        const double scale = (k == 0) ? a0 : ak;
        for (int m = 0; m < n; ++m) {
            table[static_cast<std::size_t>(k) * n + m] =
                scale * std::cos(std::numbers::pi * (2 * m + 1) * k / (2.0 * n));
        }
    }
    return table;
}

}  // namespace

double image_entropy(const GrayImage& block) {
    if (block.empty()) throw EmptyBlockError("image entropy of an empty block");
    std::array<std::size_t, 256> histogram{};
    for (std::uint8_t value : block.pixels) ++histogram[value];
    const double total = static_cast<double>(block.size());
    double entropy = 0.0;
    for (std::size_t count : histogram) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / total;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

Matd dct2(const Matd& block) {
    if (block.empty()) throw EmptyBlockError("DCT of an empty block");
    const int rows = block.rows;
    const int cols = block.cols;
    const std::vector<double> row_basis = dct_basis(cols);
    const std::vector<double> col_basis = dct_basis(rows);

    // Separable transform: rows first, then columns.
    Matd partial(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int k = 0; k < cols; ++k) {
            double acc = 0.0;
            for (int m = 0; m < cols; ++m)
                acc += block.at(r, m) * row_basis[static_cast<std::size_t>(k) * cols + m];
            partial.at(r, k) = acc;
        }
    }
    Matd coeffs(rows, cols);
    for (int c = 0; c < cols; ++c) {
        for (int k = 0; k < rows; ++k) {
            double acc = 0.0;
            for (int m = 0; m < rows; ++m)
                acc += partial.at(m, c) * col_basis[static_cast<std::size_t>(k) * rows + m];
            coeffs.at(k, c) = acc;
        }
    }
    return coeffs;
}

double frequency_entropy(const Matd& block) {
    if (block.size() < 2)
        throw EmptyBlockError("frequency entropy needs at least 2 coefficients");
    const Matd coeffs = dct2(block);

    double ac_energy = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        ac_energy += coeffs.values[i] * coeffs.values[i];
    if (ac_energy <= 0.0) return 0.0;

    double entropy = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        const double p = coeffs.values[i] * coeffs.values[i] / ac_energy;
        if (p > 0.0) entropy -= p * std::log2(p);
    }
    return entropy;
}

double frequency_entropy(const GrayImage& block) {
    if (block.empty()) throw EmptyBlockError("frequency entropy of an empty block");
    Matd values(block.rows, block.cols);
    for (std::size_t i = 0; i < block.size(); ++i)
        values.values[i] = static_cast<double>(block.pixels[i]);
    return frequency_entropy(values);
}

EntropyPair mli_global_entropy(const MicroLensImage& mli) {
    return EntropyPair{image_entropy(mli.image), frequency_entropy(mli.image)};
}

}  // namespace lfqa
