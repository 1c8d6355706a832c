#include "latch/detect.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "latch/errors.hpp"

namespace latch {

namespace {

// Radius-3 Bresenham circle, clockwise from 12 o'clock.
constexpr int kCircleX[16] = {0, 1, 2, 3, 3, 3, 2, 1, 0, -1, -2, -3, -3, -3, -2, -1};
constexpr int kCircleY[16] = {-3, -3, -2, -1, 0, 1, 2, 3, 3, 3, 2, 1, 0, -1, -2, -3};

struct ArcResult {
    bool fired = false;
    double score = 0.0;
};

// Runs the segment test at (x, y) and, when it fires, scores the maximal
// contiguous qualifying arc. At most one polarity can reach arc length 9
// (two disjoint arcs of 9 needs 18 of 16 pixels).
ArcResult evaluate_arc(const Image& image, int x, int y, double threshold) {
    const double center = image.at(x, y);
    const double hi = center + threshold;
    const double lo = center - threshold;

    bool bright[16];
    bool dark[16];
    for (int i = 0; i < 16; ++i) {
        const double v = image.at(x + kCircleX[i], y + kCircleY[i]);
        bright[i] = v > hi;
        dark[i] = v < lo;
    }

    ArcResult result;
    for (const bool* mask : {bright, dark}) {
        // Longest circular run; scanning 2 laps covers the wraparound.
        int best_len = 0, best_start = 0, run = 0;
        for (int i = 0; i < 32; ++i) {
            if (mask[i % 16]) {
                ++run;
                if (run > best_len) {
                    best_len = run;
                    best_start = i - run + 1;
                }
            } else {
                run = 0;
            }
        }
        if (best_len > 16) best_len = 16;
        if (best_len < 9) continue;

        result.fired = true;
        for (int i = best_start; i < best_start + best_len; ++i) {
            const int idx = ((i % 16) + 16) % 16;
            result.score +=
                std::abs(image.at(x + kCircleX[idx], y + kCircleY[idx]) - center) - threshold;
        }
        break;
    }
    return result;
}

} // namespace

double corner_score(const Image& image, int x, int y, double threshold) {
    if (x < kFastBorder || y < kFastBorder || x >= image.width - kFastBorder ||
        y >= image.height - kFastBorder)
        raise(ErrorCode::OutOfBounds, "corner_score needs a 3-pixel border margin");
    return evaluate_arc(image, x, y, threshold).score;
}

std::vector<Keypoint> fast_detect(const Image& image, double threshold, bool do_nms) {
    if (image.width < 7 || image.height < 7)
        raise(ErrorCode::ImageTooSmall, "FAST needs at least a 7x7 image");

    const int x_end = image.width - kFastBorder;
    const int y_end = image.height - kFastBorder;

    // Score field over the testable region; 0 means "did not fire".
    Image scores(image.width, image.height);
    for (int y = kFastBorder; y < y_end; ++y)
        for (int x = kFastBorder; x < x_end; ++x)
            scores.at(x, y) = evaluate_arc(image, x, y, threshold).score;

    std::vector<Keypoint> keypoints;
    for (int y = kFastBorder; y < y_end; ++y) {
        for (int x = kFastBorder; x < x_end; ++x) {
            const double s = scores.at(x, y);
            if (s <= 0.0) continue;
            if (do_nms) {
                bool is_max = true;
                for (int dy = -1; dy <= 1 && is_max; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = x + dx, ny = y + dy;
                        if (nx < kFastBorder || ny < kFastBorder || nx >= x_end || ny >= y_end)
                            continue;
                        const double ns = scores.at(nx, ny);
                        // Ties keep the lexicographically smallest (y, x).
                        if (ns > s || (ns == s && (ny < y || (ny == y && nx < x)))) {
                            is_max = false;
                            break;
                        }
                    }
                }
                if (!is_max) continue;
            }
            keypoints.push_back(Keypoint{static_cast<double>(x), static_cast<double>(y), 0.0, s});
        }
    }
    return keypoints; // row-major scan already yields (y, x) ascending
}

Keypoint orient(const Image& image, const Keypoint& keypoint, int radius) {
    if (!(keypoint.x - radius >= 0.0 && keypoint.y - radius >= 0.0 &&
          keypoint.x + radius <= image.width - 1 && keypoint.y + radius <= image.height - 1))
        raise(ErrorCode::TooCloseToBorder, "orientation disc leaves the image");

    const bool integer_center = keypoint.x == std::floor(keypoint.x) &&
                                keypoint.y == std::floor(keypoint.y);
    double m10 = 0.0, m01 = 0.0;
    for (int v = -radius; v <= radius; ++v) {
        for (int u = -radius; u <= radius; ++u) {
            if (u * u + v * v > radius * radius) continue;
            double intensity;
            if (integer_center) {
                intensity = image.at(static_cast<int>(keypoint.x) + u,
                                     static_cast<int>(keypoint.y) + v);
            } else {
                intensity = sample_bilinear(image, keypoint.x + u, keypoint.y + v);
            }
            m10 += u * intensity;
            m01 += v * intensity;
        }
    }

    Keypoint out = keypoint;
    out.theta = (m10 == 0.0 && m01 == 0.0) ? 0.0 : std::atan2(m01, m10);
    return out;
}

std::vector<Keypoint> detect_and_orient(const Image& image, double threshold, bool do_nms,
                                        int radius) {
    std::vector<Keypoint> oriented;
    for (const Keypoint& k : fast_detect(image, threshold, do_nms)) {
        if (k.x - radius >= 0.0 && k.y - radius >= 0.0 && k.x + radius <= image.width - 1 &&
            k.y + radius <= image.height - 1)
            oriented.push_back(orient(image, k, radius));
    }
    return oriented;
}

std::string format_keypoints(const std::vector<Keypoint>& keypoints) {
    std::string out = "x\ty\ttheta\tscore\n";
    char line[128];
    for (const Keypoint& k : keypoints) {
        std::snprintf(line, sizeof(line), "%.9g\t%.9g\t%.9g\t%.9g\n", k.x, k.y, k.theta, k.score);
        out += line;
    }
    return out;
}

std::vector<Keypoint> parse_keypoints(const std::string& text) {
    std::vector<Keypoint> keypoints;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) { // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        Keypoint k;
        if (std::sscanf(line.c_str(), "%lf\t%lf\t%lf\t%lf", &k.x, &k.y, &k.theta, &k.score) != 4)
            raise(ErrorCode::Malformed, "bad keypoint line '" + line + "'");
        keypoints.push_back(k);
    }
    return keypoints;
}

void save_keypoints_file(const std::vector<Keypoint>& keypoints, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "' for writing");
    const std::string text = format_keypoints(keypoints);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::vector<Keypoint> load_keypoints_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_keypoints(buf.str());
}

} // namespace latch
