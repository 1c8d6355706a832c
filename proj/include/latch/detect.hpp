#pragma once

#include <string>
#include <vector>

#include "latch/image.hpp"

namespace latch {

/// Detected corner. theta is in (-pi, pi], 0 until an orientation pass runs.
struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double score = 0.0;
};

inline constexpr int kFastBorder = 3;            // Bresenham circle radius
inline constexpr int kDefaultFastThreshold = 20; // 8-bit intensity units
inline constexpr int kOrientationRadius = 15;    // intensity-centroid disc

/// FAST-9 segment test: a pixel fires when >= 9 contiguous pixels on the
/// 16-pixel radius-3 circle are all brighter than center + threshold or all
/// darker than center - threshold. With do_nms, only 3x3 local maxima of
/// corner_score survive (ties keep the smallest (y, x)). Pixels within 3 of
/// the border are never tested. Output is sorted by (y, x) ascending, theta 0.
std::vector<Keypoint> fast_detect(const Image& image, double threshold, bool do_nms);

/// Sum of |I(circle) - I(center)| - threshold over the maximal contiguous
/// arc of qualifying pixels; 0 when the segment test fails.
double corner_score(const Image& image, int x, int y, double threshold);

/// Intensity-centroid orientation: theta = atan2(m01, m10) with moments
/// m_pq = sum u^p v^q I(x+u, y+v) over the disc u^2 + v^2 <= radius^2.
/// The disc must lie inside the image.
Keypoint orient(const Image& image, const Keypoint& keypoint, int radius = kOrientationRadius);

/// fast_detect followed by orient; detections whose orientation disc does
/// not fit in the image are dropped.
std::vector<Keypoint> detect_and_orient(const Image& image, double threshold, bool do_nms,
                                        int radius = kOrientationRadius);

/// Keypoint TSV: one header line, then "x<TAB>y<TAB>theta<TAB>score" per
/// keypoint, 9 significant digits, LF line endings.
std::string format_keypoints(const std::vector<Keypoint>& keypoints);
std::vector<Keypoint> parse_keypoints(const std::string& text);
void save_keypoints_file(const std::vector<Keypoint>& keypoints, const std::string& path);
std::vector<Keypoint> load_keypoints_file(const std::string& path);

} // namespace latch
