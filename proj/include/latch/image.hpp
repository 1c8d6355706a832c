#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latch {

/// Grayscale raster. Intensities are real-valued in [0, 255], stored
/// row-major with pixel centers at integer coordinates (0..width-1,
/// 0..height-1). Immutable once built, safe to share across threads.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> data; // width * height values, row-major

    Image() = default;
    Image(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0.0) {}
    Image(int w, int h, std::vector<double> values)
        : width(w), height(h), data(std::move(values)) {}

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    const double* row(int y) const { return data.data() + static_cast<std::size_t>(y) * width; }

    bool same_size(const Image& other) const {
        return width == other.width && height == other.height;
    }
};

/// Parse a binary PGM ("P5", maxval <= 255). Header comments ("#") are
/// honored. Throws NotPGM / UnsupportedDepth / Truncated / Malformed.
Image load_pgm(const std::string& bytes);

/// Serialize as binary PGM with maxval 255. Intensities are rounded half
/// away from zero, so load_pgm(save_pgm(im)) == im for integer-valued images.
std::string save_pgm(const Image& image);

Image load_pgm_file(const std::string& path);
void save_pgm_file(const Image& image, const std::string& path);

/// Bilinear blend of the four surrounding pixel centers. Requires
/// 0 <= x <= width-1 and 0 <= y <= height-1; exact at integer coordinates.
double sample_bilinear(const Image& image, double x, double y);

/// Similarity transform about the image center: rotate by angle, scale,
/// then translate. Used both to warp images and as the ground-truth point
/// map for the evaluation harness.
struct SimilarityTransform {
    double angle = 0.0; // radians
    double scale = 1.0;
    double tx = 0.0;
    double ty = 0.0;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Forward map of a point under the transform, for an image of the given
/// size (the rotation center is the image center).
Point forward_point(const SimilarityTransform& t, int width, int height, Point p);

/// Inverse-mapped resampling of the whole frame. Output has the input's
/// dimensions; samples falling outside the input are 0. Throws BadScale.
Image warp_similarity(const Image& image, const SimilarityTransform& t);
Image warp_similarity(const Image& image, double angle, double scale, double tx, double ty);

} // namespace latch
