#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "latch/cli.hpp"
#include "latch/descriptor.hpp"
#include "latch/detect.hpp"
#include "latch/errors.hpp"
#include "latch/eval.hpp"
#include "latch/image.hpp"
#include "latch/pattern.hpp"
#include "latch/rng.hpp"
#include "test_util.hpp"

using latch::EvalOptions;
using latch::EvalReport;
using latch::Image;

namespace {

bool same_quality(const EvalReport& a, const EvalReport& b) {
    return a.keypoint_count == b.keypoint_count && a.matched_count == b.matched_count &&
           a.correct_count == b.correct_count && a.recall == b.recall &&
           a.precision == b.precision && a.median_true_distance == b.median_true_distance &&
           a.median_random_distance == b.median_random_distance;
}

int cli(const std::vector<std::string>& args) { return latch::cli::run(args); }

} // namespace

TEST_CASE("identity eval recovers every keypoint exactly") {
    latch::Rng rng(151);
    const Image img = testutil::structured_image(rng, 192, 192);
    const EvalReport r = latch::run_eval(img, latch::default_pattern(), {});
    CHECK(r.keypoint_count > 10);
    CHECK(r.matched_count > 0);
    CHECK(r.matched_count <= r.keypoint_count);
    CHECK(r.correct_count == r.matched_count);
    CHECK(r.recall == 1.0);
    CHECK(r.precision == 1.0);
    CHECK(r.median_true_distance == 0.0);
    CHECK(r.median_random_distance > 50.0);
}

TEST_CASE("brightness shift changes nothing but the pixel values") {
    latch::Rng rng(157);
    const Image img = testutil::structured_image(rng, 192, 192);
    const EvalReport base = latch::run_eval(img, latch::default_pattern(), {});
    EvalOptions bright;
    bright.brightness_delta = 30.0;
    const EvalReport shifted = latch::run_eval(img, latch::default_pattern(), bright);
    CHECK(same_quality(base, shifted));
    EvalOptions dark;
    dark.brightness_delta = -50.0;
    CHECK(same_quality(base, latch::run_eval(img, latch::default_pattern(), dark)));
}

TEST_CASE("rotation eval keeps true distances well below random") {
    latch::Rng rng(163);
    const Image img = testutil::structured_image(rng, 256, 256);
    EvalOptions opt;
    opt.rotate_degrees = 30.0;
    const EvalReport r = latch::run_eval(img, latch::default_pattern(), opt);
    CHECK(r.keypoint_count > 20);
    CHECK(r.recall > 0.3);
    CHECK(r.median_random_distance - r.median_true_distance > 50.0);
}

TEST_CASE("noisy eval is reproducible for a fixed seed") {
    latch::Rng rng(167);
    const Image img = testutil::structured_image(rng, 192, 192);
    EvalOptions opt;
    opt.rotate_degrees = 10.0;
    opt.noise_sigma = 4.0;
    opt.seed = 9;
    const EvalReport a = latch::run_eval(img, latch::default_pattern(), opt);
    const EvalReport b = latch::run_eval(img, latch::default_pattern(), opt);
    CHECK(same_quality(a, b));
    CHECK(a.recall > 0.2); // noise hurts but must not destroy matching
}

TEST_CASE("eval throws NoKeypoints on featureless input") {
    Image flat(128, 128);
    for (double& v : flat.data) v = 120.0;
    CHECK_THROWS_AS(latch::run_eval(flat, latch::default_pattern(), {}), latch::Error);
}

TEST_CASE("report JSON carries a stable key order") {
    EvalReport r;
    r.keypoint_count = 257;
    r.matched_count = 200;
    r.correct_count = 190;
    r.recall = 0.95;
    r.precision = 0.9025;
    r.median_true_distance = 12.0;
    r.median_random_distance = 211.5;
    r.timings.detect_us = 1000;
    r.timings.orient_us = 2000;
    r.timings.describe_us = 3000;
    r.timings.match_us = 4000;
    const std::string text = latch::format_report(r);
    CHECK(text.back() == '\n');

    const char* keys[] = {"keypoint_count", "matched_count",        "correct_count",
                          "recall",         "precision",            "median_true_distance",
                          "median_random_distance",                 "timings_us"};
    std::size_t last = 0;
    for (const char* key : keys) {
        const std::size_t pos = text.find(std::string("\"") + key + "\"");
        REQUIRE(pos != std::string::npos);
        CHECK(pos > last);
        last = pos;
    }
    for (const char* key : {"detect", "orient", "describe", "match"}) {
        const std::size_t pos = text.find(std::string("\"") + key + "\"");
        REQUIRE(pos != std::string::npos);
        CHECK(pos > last);
        last = pos;
    }

    const auto j = nlohmann::json::parse(text);
    CHECK(j["keypoint_count"] == 257);
    CHECK(j["recall"] == 0.95);
    CHECK(j["median_random_distance"] == 211.5);
    CHECK(j["timings_us"]["match"] == 4000);
}

TEST_CASE("cli detect is a thin wrapper over the library") {
    const auto dir = testutil::scratch_dir("cli_detect");
    latch::Rng rng(173);
    const Image img = testutil::structured_image(rng, 96, 96);
    latch::save_pgm_file(img, (dir / "img.pgm").string());

    REQUIRE(cli({"detect", "--image", (dir / "img.pgm").string(), "--out",
                 (dir / "kp.tsv").string()}) == 0);
    CHECK(testutil::read_file(dir / "kp.tsv") ==
          latch::format_keypoints(latch::detect_and_orient(img, 20.0, true)));

    REQUIRE(cli({"detect", "--image", (dir / "img.pgm").string(), "--no-nms", "--threshold",
                 "15", "--out", (dir / "kp_all.tsv").string()}) == 0);
    CHECK(testutil::read_file(dir / "kp_all.tsv") ==
          latch::format_keypoints(latch::detect_and_orient(img, 15.0, false)));

    // featureless input still yields a valid, header-only file
    Image flat(64, 64);
    for (double& v : flat.data) v = 90.0;
    latch::save_pgm_file(flat, (dir / "flat.pgm").string());
    REQUIRE(cli({"detect", "--image", (dir / "flat.pgm").string(), "--out",
                 (dir / "flat.tsv").string()}) == 0);
    CHECK(testutil::read_file(dir / "flat.tsv") == "x\ty\ttheta\tscore\n");
}

TEST_CASE("cli describe, match and eval compose into a pipeline") {
    const auto dir = testutil::scratch_dir("cli_pipeline");
    latch::Rng rng(179);
    const Image img = testutil::structured_image(rng, 192, 192);
    latch::save_pgm_file(img, (dir / "img.pgm").string());

    REQUIRE(cli({"detect", "--image", (dir / "img.pgm").string(), "--out",
                 (dir / "kp.tsv").string()}) == 0);
    REQUIRE(cli({"describe", "--image", (dir / "img.pgm").string(), "--keypoints",
                 (dir / "kp.tsv").string(), "--out", (dir / "d.bin").string()}) == 0);

    const auto records = latch::load_descriptor_file((dir / "d.bin").string());
    REQUIRE(records.size() > 5);
    for (const auto& [kp, d] : records) CHECK(d.bytes.size() == 64);

    // self-match: every probe finds itself at distance zero
    REQUIRE(cli({"match", "--probe", (dir / "d.bin").string(), "--gallery",
                 (dir / "d.bin").string(), "--out", (dir / "m.tsv").string()}) == 0);
    const std::string matches = testutil::read_file(dir / "m.tsv");
    std::size_t lines = 0;
    std::size_t pos = 0;
    while ((pos = matches.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == records.size());
    CHECK(matches.find("\t0\t") != std::string::npos);

    REQUIRE(cli({"match", "--probe", (dir / "d.bin").string(), "--gallery",
                 (dir / "d.bin").string(), "--ratio", "0.9", "--cross-check",
                 "--max-distance", "200", "--workers", "2", "--out",
                 (dir / "m_filtered.tsv").string()}) == 0);

    REQUIRE(cli({"eval", "--image", (dir / "img.pgm").string(), "--rotate", "20", "--seed",
                 "3", "--out", (dir / "report.json").string()}) == 0);
    const auto j = nlohmann::json::parse(testutil::read_file(dir / "report.json"));
    CHECK(j["keypoint_count"].get<int>() > 10);
    CHECK(j["recall"].get<double>() > 0.3);
    CHECK(j["timings_us"].contains("describe"));
}

TEST_CASE("cli describe drops margin violators silently") {
    const auto dir = testutil::scratch_dir("cli_margin");
    latch::Rng rng(181);
    const Image img = testutil::structured_image(rng, 96, 96);
    latch::save_pgm_file(img, (dir / "img.pgm").string());
    // 96x96 leaves room only for x, y in [46, 49]; these all sit outside
    latch::save_keypoints_file({{5.0, 5.0, 0.0, 1.0}, {90.0, 50.0, 0.0, 1.0}},
                               (dir / "kp.tsv").string());
    REQUIRE(cli({"describe", "--image", (dir / "img.pgm").string(), "--keypoints",
                 (dir / "kp.tsv").string(), "--out", (dir / "d.bin").string()}) == 0);
    CHECK(latch::load_descriptor_file((dir / "d.bin").string()).empty());
}

TEST_CASE("cli train learns a reproducible pattern from a patch directory") {
    const auto dir = testutil::scratch_dir("cli_train");
    latch::Rng rng(191);

    // 32 points x 2 identical views, packed into one grid image
    Image grid(1024, 1024);
    std::string info;
    for (int point = 0; point < 32; ++point) {
        const Image patch = testutil::random_image(rng, 64, 64, 20, 235);
        for (int view = 0; view < 2; ++view) {
            const int cell = point * 2 + view;
            const int row = cell / 16, col = cell % 16;
            for (int y = 0; y < 64; ++y)
                for (int x = 0; x < 64; ++x)
                    grid.at(col * 64 + x, row * 64 + y) = patch.at(x, y);
            info += std::to_string(point) + " 0\n";
        }
    }
    latch::save_pgm_file(grid, (dir / "patches0000.pgm").string());
    testutil::write_file(dir / "info.txt", info);

    const std::vector<std::string> train_args = {
        "train",  "--dataset", dir.string(), "--candidates", "300", "--bits", "8",
        "--corr-threshold", "1.0", "--seed", "5", "--out", (dir / "p1.pat").string()};
    REQUIRE(cli(train_args) == 0);
    auto again = train_args;
    again.back() = (dir / "p2.pat").string();
    REQUIRE(cli(again) == 0);
    CHECK(testutil::read_file(dir / "p1.pat") == testutil::read_file(dir / "p2.pat"));

    const latch::TripletPattern p = latch::load_pattern_file((dir / "p1.pat").string());
    CHECK(p.bit_count == 8);
    CHECK(p.patch_size == 8);
    CHECK(p.mask == latch::WeightMask::seven_by_seven());
}

TEST_CASE("cli exit codes separate usage, data and internal failures") {
    const auto dir = testutil::scratch_dir("cli_codes");
    latch::Rng rng(193);
    const Image img = testutil::structured_image(rng, 96, 96);
    latch::save_pgm_file(img, (dir / "img.pgm").string());
    const std::string out = (dir / "out").string();

    CHECK(cli({}) == 1);                                     // missing subcommand
    CHECK(cli({"detect", "--image", (dir / "img.pgm").string()}) == 1); // missing --out
    CHECK(cli({"detect", "--image", (dir / "img.pgm").string(), "--frobnicate", "--out",
               out}) == 1);
    CHECK(cli({"--help"}) == 0);

    CHECK(cli({"detect", "--image", (dir / "missing.pgm").string(), "--out", out}) == 2);
    CHECK(cli({"detect", "--image", (dir / "img.pgm").string(), "--threshold", "0", "--out",
               out}) == 1);

    // a PGM that is really a text file fails with a data error
    testutil::write_file(dir / "fake.pgm", "hello world\n");
    CHECK(cli({"detect", "--image", (dir / "fake.pgm").string(), "--out", out}) == 2);

    testutil::write_file(dir / "bad.pat", "garbage\n");
    latch::save_keypoints_file({{48.0, 48.0, 0.0, 1.0}}, (dir / "kp.tsv").string());
    CHECK(cli({"describe", "--image", (dir / "img.pgm").string(), "--keypoints",
               (dir / "kp.tsv").string(), "--pattern", (dir / "bad.pat").string(), "--out",
               out}) == 2);

    // ratio outside (0, 1] is a usage error before any file is touched
    CHECK(cli({"match", "--probe", out, "--gallery", out, "--ratio", "1.5", "--out", out}) ==
          1);
    CHECK(cli({"match", "--probe", out, "--gallery", out, "--ratio", "0", "--out", out}) == 1);
    CHECK(cli({"match", "--probe", out, "--gallery", out, "--max-distance", "-3", "--out",
               out}) == 1);
    CHECK(cli({"train", "--dataset", dir.string(), "--bits", "12", "--out", out}) == 1);
    CHECK(cli({"eval", "--image", (dir / "img.pgm").string(), "--noise", "-1", "--out",
               out}) == 1);

    // descriptors of different widths cannot be matched
    latch::Rng drng(197);
    latch::save_descriptor_file({{{50.0, 50.0, 0.0, 1.0}, testutil::random_descriptor(drng, 64)}},
                                (dir / "wide.bin").string());
    latch::save_descriptor_file({{{50.0, 50.0, 0.0, 1.0}, testutil::random_descriptor(drng, 32)}},
                                (dir / "narrow.bin").string());
    CHECK(cli({"match", "--probe", (dir / "wide.bin").string(), "--gallery",
               (dir / "narrow.bin").string(), "--out", out}) == 2);

    // featureless image: eval has no keypoints to work with
    Image flat(128, 128);
    for (double& v : flat.data) v = 100.0;
    latch::save_pgm_file(flat, (dir / "flat.pgm").string());
    CHECK(cli({"eval", "--image", (dir / "flat.pgm").string(), "--out", out}) == 2);
}
