#pragma once

#include <cstdint>
#include <string>

#include "latch/image.hpp"
#include "latch/pattern.hpp"

namespace latch {

/// Radius (pixels) within which a matched keypoint counts as correct.
inline constexpr double kEvalCorrectRadius = 2.0;

struct EvalOptions {
    double rotate_degrees = 0.0;
    double noise_sigma = 0.0;     // Gaussian, 8-bit intensity units
    double brightness_delta = 0.0;
    double threshold = 20.0;      // FAST threshold
    std::uint64_t seed = 0;
    int workers = 0;
};

struct StageTimings {
    long long detect_us = 0;
    long long orient_us = 0;
    long long describe_us = 0;
    long long match_us = 0;
};

/// Outcome of one synthetic-transformation run. keypoint_count is the
/// oriented detection count on the original image. A ground-truth
/// correspondence exists for a probe when some transformed keypoint lies
/// within 2 px of its forward-mapped position; recall = correct / matchable,
/// precision = correct / matched (0 when the denominator is 0).
/// median_true_distance is the median Hamming distance over ground-truth
/// pairs (probe vs spatially nearest in-radius gallery keypoint);
/// median_random_distance covers all non-corresponding probe x gallery
/// pairs. Everything except the timings is reproducible for a fixed seed.
struct EvalReport {
    int keypoint_count = 0;
    int matched_count = 0;
    int correct_count = 0;
    double recall = 0.0;
    double precision = 0.0;
    double median_true_distance = 0.0;
    double median_random_distance = 0.0;
    StageTimings timings;
};

/// Transform the image (rotate about the center, add brightness, add seeded
/// Gaussian noise, clamp once to [0, 255]) and measure how well descriptor
/// matching recovers the known correspondence. Throws NoKeypoints when
/// either side has no describable keypoints.
EvalReport run_eval(const Image& image, const TripletPattern& pattern,
                    const EvalOptions& options);

/// JSON serialization with a stable key order.
std::string format_report(const EvalReport& report);
void save_report_file(const EvalReport& report, const std::string& path);

} // namespace latch
