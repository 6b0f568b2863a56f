#include "lfqa/light_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lfqa {

LightField::LightField(int num_u, int num_v, int num_s, int num_t,
                       std::vector<std::uint8_t> data)
    : num_u_(num_u), num_v_(num_v), num_s_(num_s), num_t_(num_t),
      data_(std::move(data)) {
    if (num_u_ < 2 || num_v_ < 2)
        throw DimensionMismatchError("light field needs at least a 2x2 angular grid, got " +
                                     std::to_string(num_u_) + "x" + std::to_string(num_v_));
    if (num_s_ < 1 || num_t_ < 1)
        throw DimensionMismatchError("light field needs positive spatial extents");
    const std::size_t expected = static_cast<std::size_t>(num_u_) * num_v_ * num_s_ * num_t_;
    if (data_.size() != expected)
        throw DimensionMismatchError("light field data has " + std::to_string(data_.size()) +
                                     " elements, expected " + std::to_string(expected));
}

LightField LightField::constant(int num_u, int num_v, int num_s, int num_t,
                                std::uint8_t value) {
    std::vector<std::uint8_t> data(
        static_cast<std::size_t>(num_u) * num_v * num_s * num_t, value);
    return LightField(num_u, num_v, num_s, num_t, std::move(data));
}

std::uint8_t to_grayscale(int r, int g, int b) {
    const double luma = 0.299 * r + 0.587 * g + 0.114 * b;
    const long rounded = std::lround(luma);
    return static_cast<std::uint8_t>(std::clamp(rounded, 0L, 255L));
}

SubApertureImage extract_sai(const LightField& lf, int u, int v) {
    if (u < 0 || u >= lf.num_u() || v < 0 || v >= lf.num_v())
        throw IndexOutOfRangeError("view (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") outside " + std::to_string(lf.num_u()) + "x" +
                                   std::to_string(lf.num_v()) + " angular grid");
    SubApertureImage sai;
    sai.u = u;
    sai.v = v;
    sai.image = GrayImage(lf.num_s(), lf.num_t());
    for (int s = 0; s < lf.num_s(); ++s)
        for (int t = 0; t < lf.num_t(); ++t)
            sai.image.at(s, t) = lf.at(u, v, s, t);
    return sai;
}

MicroLensImage extract_mli(const LightField& lf, int s, int t) {
    if (s < 0 || s >= lf.num_s() || t < 0 || t >= lf.num_t())
        throw IndexOutOfRangeError("site (" + std::to_string(s) + "," + std::to_string(t) +
                                   ") outside " + std::to_string(lf.num_s()) + "x" +
                                   std::to_string(lf.num_t()) + " spatial grid");
    MicroLensImage mli;
    mli.s = s;
    mli.t = t;
    mli.image = GrayImage(lf.num_u(), lf.num_v());
    for (int u = 0; u < lf.num_u(); ++u)
        for (int v = 0; v < lf.num_v(); ++v)
            mli.image.at(u, v) = lf.at(u, v, s, t);
    return mli;
}

}  // namespace lfqa
