// Generates a synthetic multi-view patch dataset in the grid layout the
// trainer ingests: 1024x1024 PGM files holding 16x16 cells of 64x64
// patches, plus info.txt with one "<point_id> <aux>" line per patch.
// Views of the same point come from one rendered scene re-sampled under
// small rotation, scale, shift, brightness, contrast and noise jitter,
// mimicking orientation-normalized keypoint patches from real imagery.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "latch/image.hpp"
#include "latch/rng.hpp"

using latch::Image;
using latch::Rng;

namespace {

constexpr int kCanvas = 128;   // per-point scene, window sampled from center
constexpr int kPatch = 64;
constexpr int kGridCells = 16; // patches per grid row/column

// A small textured scene: smooth background plus a handful of primitives.
Image render_scene(Rng& rng) {
    Image scene;
    scene.width = kCanvas;
    scene.height = kCanvas;
    scene.data.assign(static_cast<std::size_t>(kCanvas) * kCanvas, 0.0);

    // low-frequency background from a coarse random lattice
    constexpr int kCoarse = 5;
    double lattice[kCoarse][kCoarse];
    for (auto& row : lattice)
        for (double& v : row) v = 70.0 + 120.0 * rng.unit();
    for (int y = 0; y < kCanvas; ++y) {
        for (int x = 0; x < kCanvas; ++x) {
            const double gx = x * (kCoarse - 1.0) / (kCanvas - 1.0);
            const double gy = y * (kCoarse - 1.0) / (kCanvas - 1.0);
            const int x0 = std::min(static_cast<int>(gx), kCoarse - 2);
            const int y0 = std::min(static_cast<int>(gy), kCoarse - 2);
            const double fx = gx - x0, fy = gy - y0;
            const double top = (1 - fx) * lattice[y0][x0] + fx * lattice[y0][x0 + 1];
            const double bottom = (1 - fx) * lattice[y0 + 1][x0] + fx * lattice[y0 + 1][x0 + 1];
            scene.at(x, y) = (1 - fy) * top + fy * bottom;
        }
    }

    const int primitives = 4 + static_cast<int>(rng.bounded(5));
    for (int i = 0; i < primitives; ++i) {
        const double value = 30.0 + 195.0 * rng.unit();
        const double cx = 24.0 + (kCanvas - 48.0) * rng.unit();
        const double cy = 24.0 + (kCanvas - 48.0) * rng.unit();
        if (rng.bounded(2) == 0) { // disc
            const double r = 4.0 + 14.0 * rng.unit();
            for (int y = 0; y < kCanvas; ++y)
                for (int x = 0; x < kCanvas; ++x) {
                    const double dx = x - cx, dy = y - cy;
                    if (dx * dx + dy * dy <= r * r) scene.at(x, y) = value;
                }
        } else { // rotated rectangle
            const double hw = 4.0 + 12.0 * rng.unit();
            const double hh = 4.0 + 12.0 * rng.unit();
            const double a = 6.283185307179586 * rng.unit();
            const double c = std::cos(a), s = std::sin(a);
            for (int y = 0; y < kCanvas; ++y)
                for (int x = 0; x < kCanvas; ++x) {
                    const double dx = x - cx, dy = y - cy;
                    const double u = c * dx + s * dy, v = -s * dx + c * dy;
                    if (std::abs(u) <= hw && std::abs(v) <= hh) scene.at(x, y) = value;
                }
        }
    }
    return scene;
}

// One jittered 64x64 view of the scene center.
Image render_view(const Image& scene, Rng& rng) {
    const double angle = 0.25 * rng.gaussian();           // radians, sd ~14 deg
    const double scale = 0.92 + 0.16 * rng.unit();
    const double shift_x = -1.5 + 3.0 * rng.unit();
    const double shift_y = -1.5 + 3.0 * rng.unit();
    const double brightness = -18.0 + 36.0 * rng.unit();
    const double contrast = 0.9 + 0.2 * rng.unit();
    const double noise = 3.5 * rng.unit();

    const double c = std::cos(angle), s = std::sin(angle);
    const double center = (kCanvas - 1) / 2.0;
    const double half = (kPatch - 1) / 2.0;

    Image view;
    view.width = kPatch;
    view.height = kPatch;
    view.data.resize(static_cast<std::size_t>(kPatch) * kPatch);
    for (int v = 0; v < kPatch; ++v) {
        for (int u = 0; u < kPatch; ++u) {
            const double du = (u - half) * scale;
            const double dv = (v - half) * scale;
            const double sx = center + shift_x + c * du - s * dv;
            const double sy = center + shift_y + s * du + c * dv;
            double value = latch::sample_bilinear(scene, sx, sy);
            value = 128.0 + contrast * (value - 128.0) + brightness + noise * rng.gaussian();
            view.at(u, v) = std::clamp(std::round(value), 0.0, 255.0);
        }
    }
    return view;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::fprintf(stderr, "usage: make_synth_patches <out-dir> <points> <seed>\n");
        return 1;
    }
    const std::filesystem::path out_dir = argv[1];
    const int points = std::atoi(argv[2]);
    const std::uint64_t seed = std::strtoull(argv[3], nullptr, 10);
    std::filesystem::create_directories(out_dir);

    Rng rng(seed);
    std::vector<Image> patches;
    std::vector<long> labels;
    for (int point = 0; point < points; ++point) {
        const Image scene = render_scene(rng);
        const int views = 2 + static_cast<int>(rng.bounded(4));
        for (int v = 0; v < views; ++v) {
            patches.push_back(render_view(scene, rng));
            labels.push_back(point);
        }
    }

    const int per_grid = kGridCells * kGridCells;
    const int grids = (static_cast<int>(patches.size()) + per_grid - 1) / per_grid;
    for (int g = 0; g < grids; ++g) {
        Image grid;
        grid.width = kGridCells * kPatch;
        grid.height = kGridCells * kPatch;
        grid.data.assign(static_cast<std::size_t>(grid.width) * grid.height, 0.0);
        for (int cell = 0; cell < per_grid; ++cell) {
            const std::size_t index = static_cast<std::size_t>(g) * per_grid + cell;
            if (index >= patches.size()) break;
            const int ox = (cell % kGridCells) * kPatch;
            const int oy = (cell / kGridCells) * kPatch;
            for (int y = 0; y < kPatch; ++y)
                for (int x = 0; x < kPatch; ++x)
                    grid.at(ox + x, oy + y) = patches[index].at(x, y);
        }
        char name[32];
        std::snprintf(name, sizeof(name), "patches%04d.pgm", g);
        latch::save_pgm_file(grid, (out_dir / name).string());
    }

    std::string info;
    for (long label : labels) info += std::to_string(label) + " 0\n";
    FILE* f = std::fopen((out_dir / "info.txt").string().c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "cannot write info.txt\n");
        return 1;
    }
    std::fwrite(info.data(), 1, info.size(), f);
    std::fclose(f);

    std::printf("wrote %zu patches of %d points in %d grids to %s\n", patches.size(), points,
                grids, out_dir.string().c_str());
    return 0;
}
