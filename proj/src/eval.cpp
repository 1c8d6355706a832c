#include "latch/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "latch/descriptor.hpp"
#include "latch/detect.hpp"
#include "latch/errors.hpp"
#include "latch/match.hpp"
#include "latch/rng.hpp"

namespace latch {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_us(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

/// detect + orient with the two stages timed separately.
std::vector<Keypoint> timed_detect(const Image& image, double threshold, StageTimings& t) {
    auto start = Clock::now();
    std::vector<Keypoint> raw = fast_detect(image, threshold, true);
    t.detect_us += elapsed_us(start);

    start = Clock::now();
    std::vector<Keypoint> oriented;
    for (const Keypoint& k : raw) {
        if (k.x - kOrientationRadius >= 0.0 && k.y - kOrientationRadius >= 0.0 &&
            k.x + kOrientationRadius <= image.width - 1 &&
            k.y + kOrientationRadius <= image.height - 1)
            oriented.push_back(orient(image, k));
    }
    t.orient_us += elapsed_us(start);
    return oriented;
}

double median(std::vector<int>& values) {
    if (values.empty()) return 0.0;
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    const int upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const int lower = *std::max_element(values.begin(),
                                        values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

} // namespace

EvalReport run_eval(const Image& image, const TripletPattern& pattern,
                    const EvalOptions& options) {
    if (!std::isfinite(options.rotate_degrees) || !std::isfinite(options.noise_sigma) ||
        !std::isfinite(options.brightness_delta))
        raise(ErrorCode::Malformed, "transform parameters must be finite");

    EvalReport report;

    // original side
    const std::vector<Keypoint> original_keypoints =
        timed_detect(image, options.threshold, report.timings);
    report.keypoint_count = static_cast<int>(original_keypoints.size());

    // transformed side
    const SimilarityTransform transform{options.rotate_degrees * 3.141592653589793 / 180.0,
                                        1.0, 0.0, 0.0};
    Image transformed = warp_similarity(image, transform);
    if (options.brightness_delta != 0.0)
        for (double& p : transformed.data) p += options.brightness_delta;
    if (options.noise_sigma != 0.0) {
        Rng rng(options.seed);
        for (double& p : transformed.data) p += options.noise_sigma * rng.gaussian();
    }
    if (options.brightness_delta != 0.0 || options.noise_sigma != 0.0)
        for (double& p : transformed.data) p = std::clamp(p, 0.0, 255.0);

    const std::vector<Keypoint> transformed_keypoints =
        timed_detect(transformed, options.threshold, report.timings);

    // descriptors
    auto start = Clock::now();
    const auto probes = describe_all(image, original_keypoints, pattern, options.workers);
    const auto gallery = describe_all(transformed, transformed_keypoints, pattern,
                                      options.workers);
    report.timings.describe_us += elapsed_us(start);

    if (probes.empty())
        raise(ErrorCode::NoKeypoints, "no describable keypoints in the original image");
    if (gallery.empty())
        raise(ErrorCode::NoKeypoints, "no describable keypoints in the transformed image");

    std::vector<Descriptor> probe_descriptors, gallery_descriptors;
    probe_descriptors.reserve(probes.size());
    for (const auto& [k, d] : probes) probe_descriptors.push_back(d);
    gallery_descriptors.reserve(gallery.size());
    for (const auto& [k, d] : gallery) gallery_descriptors.push_back(d);

    start = Clock::now();
    const std::vector<MatchPair> matches =
        match_brute_force(probe_descriptors, gallery_descriptors, {.workers = options.workers});
    report.timings.match_us += elapsed_us(start);

    // ground truth: forward-map each probe, find the nearest gallery keypoint
    std::vector<int> nearest_gallery(probes.size(), -1); // -1 = not matchable
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const Point mapped = forward_point(transform, image.width, image.height,
                                           {probes[p].first.x, probes[p].first.y});
        double best = std::numeric_limits<double>::infinity();
        int best_g = -1;
        for (std::size_t g = 0; g < gallery.size(); ++g) {
            const double dx = gallery[g].first.x - mapped.x;
            const double dy = gallery[g].first.y - mapped.y;
            const double dist = std::sqrt(dx * dx + dy * dy);
            if (dist <= kEvalCorrectRadius && dist < best) {
                best = dist;
                best_g = static_cast<int>(g);
            }
        }
        nearest_gallery[p] = best_g;
    }

    int matchable = 0;
    std::vector<int> true_distances;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        if (nearest_gallery[p] < 0) continue;
        ++matchable;
        true_distances.push_back(hamming(probe_descriptors[p],
                                         gallery_descriptors[static_cast<std::size_t>(
                                             nearest_gallery[p])]));
    }

    report.matched_count = static_cast<int>(matches.size());
    for (const MatchPair& m : matches) {
        const auto p = static_cast<std::size_t>(m.probe_index);
        const Point mapped = forward_point(transform, image.width, image.height,
                                           {probes[p].first.x, probes[p].first.y});
        const double dx = gallery[static_cast<std::size_t>(m.gallery_index)].first.x - mapped.x;
        const double dy = gallery[static_cast<std::size_t>(m.gallery_index)].first.y - mapped.y;
        if (std::sqrt(dx * dx + dy * dy) <= kEvalCorrectRadius) ++report.correct_count;
    }

    std::vector<int> random_distances;
    random_distances.reserve(probes.size() * gallery.size());
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const Point mapped = forward_point(transform, image.width, image.height,
                                           {probes[p].first.x, probes[p].first.y});
        for (std::size_t g = 0; g < gallery.size(); ++g) {
            const double dx = gallery[g].first.x - mapped.x;
            const double dy = gallery[g].first.y - mapped.y;
            if (std::sqrt(dx * dx + dy * dy) <= kEvalCorrectRadius) continue;
            random_distances.push_back(hamming(probe_descriptors[p], gallery_descriptors[g]));
        }
    }

    report.recall = matchable > 0 ? static_cast<double>(report.correct_count) / matchable : 0.0;
    report.precision = report.matched_count > 0
                           ? static_cast<double>(report.correct_count) / report.matched_count
                           : 0.0;
    report.median_true_distance = median(true_distances);
    report.median_random_distance = median(random_distances);
    return report;
}

std::string format_report(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["keypoint_count"] = report.keypoint_count;
    j["matched_count"] = report.matched_count;
    j["correct_count"] = report.correct_count;
    j["recall"] = report.recall;
    j["precision"] = report.precision;
    j["median_true_distance"] = report.median_true_distance;
    j["median_random_distance"] = report.median_random_distance;
    j["timings_us"] = {{"detect", report.timings.detect_us},
                       {"orient", report.timings.orient_us},
                       {"describe", report.timings.describe_us},
                       {"match", report.timings.match_us}};
    return j.dump(2) + "\n";
}

void save_report_file(const EvalReport& report, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "' for writing");
    const std::string text = format_report(report);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

} // namespace latch
