// Python bindings. Images cross the boundary as 2d float arrays (row-major,
// intensities in [0, 255]), keypoints as (N, 4) float64 [x, y, theta, score],
// descriptors as (N, descriptor_bytes) uint8, matches as (N, 4) int32
// [probe, gallery, distance, second_distance]. Patterns travel as the text
// format produced by the trainer, so results compose in memory without
// temporary files.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latch/descriptor.hpp"
#include "latch/detect.hpp"
#include "latch/errors.hpp"
#include "latch/eval.hpp"
#include "latch/image.hpp"
#include "latch/match.hpp"
#include "latch/pattern.hpp"

namespace py = pybind11;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ByteArray = py::array_t<std::uint8_t, py::array::c_style>;

latch::Image image_from_array(const DoubleArray& a) {
    if (a.ndim() != 2) throw py::value_error("image must be a 2d array");
    const int height = static_cast<int>(a.shape(0));
    const int width = static_cast<int>(a.shape(1));
    if (width <= 0 || height <= 0) throw py::value_error("image must be non-empty");
    latch::Image image(width, height);
    std::memcpy(image.data.data(), a.data(), image.data.size() * sizeof(double));
    return image;
}

py::array_t<double> array_from_image(const latch::Image& image) {
    py::array_t<double> a({image.height, image.width});
    std::memcpy(a.mutable_data(), image.data.data(), image.data.size() * sizeof(double));
    return a;
}

std::vector<latch::Keypoint> keypoints_from_array(const DoubleArray& a) {
    if (a.ndim() != 2 || a.shape(1) < 2 || a.shape(1) > 4)
        throw py::value_error("keypoints must be (N, 2..4): x, y[, theta[, score]]");
    const auto view = a.unchecked<2>();
    const py::ssize_t cols = a.shape(1);
    std::vector<latch::Keypoint> keypoints(static_cast<std::size_t>(a.shape(0)));
    for (py::ssize_t i = 0; i < a.shape(0); ++i) {
        keypoints[i].x = view(i, 0);
        keypoints[i].y = view(i, 1);
        if (cols > 2) keypoints[i].theta = view(i, 2);
        if (cols > 3) keypoints[i].score = view(i, 3);
    }
    return keypoints;
}

py::array_t<double> array_from_keypoints(const std::vector<latch::Keypoint>& keypoints) {
    py::array_t<double> a({static_cast<py::ssize_t>(keypoints.size()), py::ssize_t{4}});
    auto view = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < keypoints.size(); ++i) {
        view(i, 0) = keypoints[i].x;
        view(i, 1) = keypoints[i].y;
        view(i, 2) = keypoints[i].theta;
        view(i, 3) = keypoints[i].score;
    }
    return a;
}

std::vector<latch::Descriptor> descriptors_from_array(const ByteArray& a, const char* what) {
    if (a.ndim() != 2)
        throw py::value_error(std::string(what) + " must be a (N, descriptor_bytes) uint8 array");
    const auto view = a.unchecked<2>();
    std::vector<latch::Descriptor> descriptors(static_cast<std::size_t>(a.shape(0)));
    for (py::ssize_t i = 0; i < a.shape(0); ++i) {
        descriptors[i].bytes.resize(static_cast<std::size_t>(a.shape(1)));
        for (py::ssize_t j = 0; j < a.shape(1); ++j) descriptors[i].bytes[j] = view(i, j);
    }
    return descriptors;
}

latch::TripletPattern pattern_from_text(const std::optional<std::string>& text) {
    return text ? latch::parse_pattern(*text) : latch::default_pattern();
}

py::array_t<double> py_load_pgm(const std::string& path) {
    return array_from_image(latch::load_pgm_file(path));
}

void py_save_pgm(const DoubleArray& image, const std::string& path) {
    latch::save_pgm_file(image_from_array(image), path);
}

py::array_t<double> py_detect(const DoubleArray& image, double threshold, bool nms, bool orient) {
    const latch::Image im = image_from_array(image);
    return array_from_keypoints(orient ? latch::detect_and_orient(im, threshold, nms)
                                       : latch::fast_detect(im, threshold, nms));
}

py::tuple py_describe(const DoubleArray& image, const DoubleArray& keypoints,
                      const std::optional<std::string>& pattern, int workers) {
    const latch::Image im = image_from_array(image);
    const latch::TripletPattern pat = pattern_from_text(pattern);
    const auto records = latch::describe_all(im, keypoints_from_array(keypoints), pat, workers);

    std::vector<latch::Keypoint> kept(records.size());
    const py::ssize_t bytes = pat.bit_count / 8;
    py::array_t<std::uint8_t> descriptors({static_cast<py::ssize_t>(records.size()), bytes});
    auto view = descriptors.mutable_unchecked<2>();
    for (std::size_t i = 0; i < records.size(); ++i) {
        kept[i] = records[i].first;
        for (py::ssize_t j = 0; j < bytes; ++j) view(i, j) = records[i].second.bytes[j];
    }
    return py::make_tuple(array_from_keypoints(kept), descriptors);
}

py::array_t<int> py_match(const ByteArray& probes, const ByteArray& gallery,
                          std::optional<double> ratio, bool cross_check,
                          std::optional<int> max_distance, int workers) {
    latch::MatchOptions options;
    options.ratio = ratio;
    options.cross_check = cross_check;
    options.max_distance = max_distance;
    options.workers = workers;
    const auto matches = latch::match_brute_force(descriptors_from_array(probes, "probes"),
                                                  descriptors_from_array(gallery, "gallery"),
                                                  options);

    py::array_t<int> a({static_cast<py::ssize_t>(matches.size()), py::ssize_t{4}});
    auto view = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < matches.size(); ++i) {
        view(i, 0) = matches[i].probe_index;
        view(i, 1) = matches[i].gallery_index;
        view(i, 2) = matches[i].distance;
        view(i, 3) = matches[i].second_distance;
    }
    return a;
}

int py_hamming(const ByteArray& a, const ByteArray& b) {
    if (a.ndim() != 1 || b.ndim() != 1)
        throw py::value_error("hamming expects two 1d uint8 arrays");
    latch::Descriptor da, db;
    da.bytes.assign(a.data(), a.data() + a.shape(0));
    db.bytes.assign(b.data(), b.data() + b.shape(0));
    return latch::hamming(da, db);
}

py::dict py_evaluate(const DoubleArray& image, double rotate, double noise, double brightness,
                     double threshold, std::uint64_t seed, int workers,
                     const std::optional<std::string>& pattern) {
    latch::EvalOptions options;
    options.rotate_degrees = rotate;
    options.noise_sigma = noise;
    options.brightness_delta = brightness;
    options.threshold = threshold;
    options.seed = seed;
    options.workers = workers;
    const latch::EvalReport report =
        latch::run_eval(image_from_array(image), pattern_from_text(pattern), options);

    py::dict timings;
    timings["detect"] = report.timings.detect_us;
    timings["orient"] = report.timings.orient_us;
    timings["describe"] = report.timings.describe_us;
    timings["match"] = report.timings.match_us;
    py::dict d;
    d["keypoint_count"] = report.keypoint_count;
    d["matched_count"] = report.matched_count;
    d["correct_count"] = report.correct_count;
    d["recall"] = report.recall;
    d["precision"] = report.precision;
    d["median_true_distance"] = report.median_true_distance;
    d["median_random_distance"] = report.median_random_distance;
    d["timings_us"] = timings;
    return d;
}

std::string py_train(const std::string& dataset_dir, std::size_t candidates, int bits,
                     double corr_threshold, std::uint64_t seed, std::size_t max_pairs,
                     int workers) {
    const latch::PatchDataset dataset = latch::ingest_brown_dir(dataset_dir);
    const auto pairs = latch::make_pairs(dataset, max_pairs, seed);
    const auto pool = latch::sample_candidates(candidates, latch::kDefaultPatchSize, seed);
    const latch::TripletPattern pattern =
        latch::select_triplets(pool, dataset, pairs, bits, corr_threshold,
                               latch::WeightMask::seven_by_seven(), workers);
    return latch::format_pattern(pattern);
}

py::array_t<double> py_warp(const DoubleArray& image, double angle, double scale, double tx,
                            double ty) {
    return array_from_image(latch::warp_similarity(image_from_array(image), angle, scale, tx, ty));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Learned triplet binary descriptors: FAST detection, description, "
              "Hamming matching, pattern training and evaluation";

    m.attr("descriptor_bits") = latch::kDefaultBitCount;
    m.attr("descriptor_bytes") = latch::kDefaultBitCount / 8;
    m.attr("window_margin") = latch::kWindowMargin;
    m.attr("orientation_radius") = latch::kOrientationRadius;

    m.def("load_pgm", &py_load_pgm, py::arg("path"),
          "Load a binary PGM as a (height, width) float64 array.");
    m.def("save_pgm", &py_save_pgm, py::arg("image"), py::arg("path"),
          "Write a 2d array (values in [0, 255]) as a binary PGM.");
    m.def("detect", &py_detect, py::arg("image"), py::arg("threshold") = 20.0,
          py::arg("nms") = true, py::arg("orient") = true,
          "FAST-9 corners as an (N, 4) array [x, y, theta, score]. With orient, "
          "theta is the intensity-centroid angle and detections whose orientation "
          "disc leaves the image are dropped.");
    m.def("describe", &py_describe, py::arg("image"), py::arg("keypoints"),
          py::arg("pattern") = py::none(), py::arg("workers") = 0,
          "Binary descriptors for the keypoints that keep the 46 px window margin. "
          "Returns (kept_keypoints, descriptors); pattern is pattern-file text, "
          "None for the built-in arrangement.");
    m.def("match", &py_match, py::arg("probes"), py::arg("gallery"),
          py::arg("ratio") = py::none(), py::arg("cross_check") = false,
          py::arg("max_distance") = py::none(), py::arg("workers") = 0,
          "Brute-force Hamming matches as an (N, 4) int32 array "
          "[probe, gallery, distance, second_distance].");
    m.def("hamming", &py_hamming, py::arg("a"), py::arg("b"),
          "Hamming distance between two equal-length uint8 descriptor rows.");
    m.def("evaluate", &py_evaluate, py::arg("image"), py::arg("rotate") = 0.0,
          py::arg("noise") = 0.0, py::arg("brightness") = 0.0, py::arg("threshold") = 20.0,
          py::arg("seed") = 0, py::arg("workers") = 0, py::arg("pattern") = py::none(),
          "Synthetic-transformation benchmark; returns the report as a dict.");
    m.def("train", &py_train, py::arg("dataset_dir"), py::arg("candidates") = 50000,
          py::arg("bits") = 512, py::arg("corr_threshold") = 0.2, py::arg("seed") = 0,
          py::arg("max_pairs") = 50000, py::arg("workers") = 0,
          "Learn a triplet pattern from a patch dataset directory; returns the "
          "pattern as text for describe()/save.");
    m.def("warp", &py_warp, py::arg("image"), py::arg("angle"), py::arg("scale") = 1.0,
          py::arg("tx") = 0.0, py::arg("ty") = 0.0,
          "Similarity warp about the image center (angle in radians).");
    m.def("default_pattern", [] { return latch::format_pattern(latch::default_pattern()); },
          "Text of the built-in 512-triplet pattern.");
}
