// Renders the deterministic structured scene committed as the golden test
// image: mid-range background, sharp high-contrast primitives concentrated
// away from the borders (inside the descriptor margin), integer intensities
// in [55, 225] so +30 / -50 brightness shifts survive without clamping.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "latch/image.hpp"
#include "latch/rng.hpp"

using latch::Image;
using latch::Rng;

namespace {

constexpr int kSize = 256;
constexpr double kInner = 60.0; // primitive centers stay this far from edges

double pick_value(Rng& rng) {
    return rng.bounded(2) == 0 ? 55.0 + 30.0 * rng.unit() : 185.0 + 40.0 * rng.unit();
}

void fill_disc(Image& img, double cx, double cy, double r, double value) {
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r * r) img.at(x, y) = value;
        }
}

void fill_rect(Image& img, double cx, double cy, double hw, double hh, double angle,
               double value) {
    const double c = std::cos(angle), s = std::sin(angle);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx, dy = y - cy;
            const double u = c * dx + s * dy, v = -s * dx + c * dy;
            if (std::abs(u) <= hw && std::abs(v) <= hh) img.at(x, y) = value;
        }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2 || argc > 3) {
        std::fprintf(stderr, "usage: make_golden <out.pgm> [seed]\n");
        return 1;
    }
    const std::uint64_t seed = argc == 3 ? std::strtoull(argv[2], nullptr, 10) : 7;
    Rng rng(seed);

    Image img;
    img.width = kSize;
    img.height = kSize;
    img.data.assign(static_cast<std::size_t>(kSize) * kSize, 0.0);

    // smooth background from a coarse lattice
    constexpr int kCoarse = 6;
    double lattice[kCoarse][kCoarse];
    for (auto& row : lattice)
        for (double& v : row) v = 95.0 + 70.0 * rng.unit();
    for (int y = 0; y < kSize; ++y)
        for (int x = 0; x < kSize; ++x) {
            const double gx = x * (kCoarse - 1.0) / (kSize - 1.0);
            const double gy = y * (kCoarse - 1.0) / (kSize - 1.0);
            const int x0 = std::min(static_cast<int>(gx), kCoarse - 2);
            const int y0 = std::min(static_cast<int>(gy), kCoarse - 2);
            const double fx = gx - x0, fy = gy - y0;
            const double top = (1 - fx) * lattice[y0][x0] + fx * lattice[y0][x0 + 1];
            const double bottom = (1 - fx) * lattice[y0 + 1][x0] + fx * lattice[y0 + 1][x0 + 1];
            img.at(x, y) = (1 - fy) * top + fy * bottom;
        }

    const auto center_x = [&] { return kInner + (kSize - 2.0 * kInner) * rng.unit(); };
    const auto center_y = [&] { return kInner + (kSize - 2.0 * kInner) * rng.unit(); };

    for (int i = 0; i < 20; ++i)
        fill_disc(img, center_x(), center_y(), 4.0 + 9.0 * rng.unit(), pick_value(rng));
    for (int i = 0; i < 28; ++i)
        fill_rect(img, center_x(), center_y(), 4.0 + 9.0 * rng.unit(), 4.0 + 9.0 * rng.unit(),
                  6.283185307179586 * rng.unit(), pick_value(rng));
    for (int i = 0; i < 22; ++i) { // small axis-aligned squares, crisp corners
        const double half = 2.0 + 3.0 * rng.unit();
        fill_rect(img, center_x(), center_y(), half, half, 0.0, pick_value(rng));
    }

    for (double& v : img.data) v = std::clamp(std::round(v), 55.0, 225.0);
    latch::save_pgm_file(img, argv[1]);
    std::printf("wrote %dx%d golden image (seed %llu) to %s\n", kSize, kSize,
                static_cast<unsigned long long>(seed), argv[1]);
    return 0;
}
