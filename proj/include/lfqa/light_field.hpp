#pragma once

#include <cstdint>
#include <vector>

#include "lfqa/error.hpp"

namespace lfqa {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int r, int c, std::uint8_t fill = 0)
        : rows(r), cols(c), pixels(static_cast<std::size_t>(r) * c, fill) {}

    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    bool empty() const { return pixels.empty(); }
    std::size_t size() const { return pixels.size(); }
};

/// Dense 2-D double matrix, row-major. Used for transform-domain blocks.
struct Matd {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    Matd() = default;
    Matd(int r, int c, double fill = 0.0)
        : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }
};

/// Spatial slice at a fixed angular position (one viewpoint).
struct SubApertureImage {
    int u = 0;
    int v = 0;
    GrayImage image;  // num_s x num_t
};

/// Angular slice at a fixed spatial site: the same scene point seen from
/// every direction.
struct MicroLensImage {
    int s = 0;
    int t = 0;
    GrayImage image;  // num_u x num_v
};

/// Immutable 4-D grayscale light field indexed (u, v, s, t), where u/v are
/// angular coordinates and s/t spatial ones. Element layout is row-major in
/// that index order, so each sub-aperture view is a contiguous plane.
///
/// Construction requires at least a 2x2 angular grid. The feature pipeline
/// additionally needs spatial extents of at least 8 (one full spatial
/// block); that is enforced at ingestion and by the spatial-feature
/// operations, not here, so that small fields remain constructible for
/// slicing.
class LightField {
public:
    LightField(int num_u, int num_v, int num_s, int num_t,
               std::vector<std::uint8_t> data);

    static LightField constant(int num_u, int num_v, int num_s, int num_t,
                               std::uint8_t value);

    int num_u() const { return num_u_; }
    int num_v() const { return num_v_; }
    int num_s() const { return num_s_; }
    int num_t() const { return num_t_; }

    std::uint8_t at(int u, int v, int s, int t) const {
        return data_[index(u, v, s, t)];
    }

    const std::vector<std::uint8_t>& data() const { return data_; }

private:
    std::size_t index(int u, int v, int s, int t) const {
        return ((static_cast<std::size_t>(u) * num_v_ + v) * num_s_ + s) * num_t_ + t;
    }

    int num_u_, num_v_, num_s_, num_t_;
    std::vector<std::uint8_t> data_;
};

/// ITU-R BT.601 luma with round-half-up, clamped to [0, 255].
std::uint8_t to_grayscale(int r, int g, int b);

SubApertureImage extract_sai(const LightField& lf, int u, int v);
MicroLensImage extract_mli(const LightField& lf, int s, int t);

/// Visits every micro-lens image in row-major site order:
/// (0,0), (0,1), ..., (0,T-1), (1,0), ...
template <typename Fn>
void for_each_mli(const LightField& lf, Fn&& fn) {
    for (int s = 0; s < lf.num_s(); ++s)
        for (int t = 0; t < lf.num_t(); ++t)
            fn(extract_mli(lf, s, t));
}

}  // namespace lfqa
