#include <doctest.h>

#include <cmath>

#include "latch/detect.hpp"
#include "latch/errors.hpp"
#include "latch/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using latch::Error;
using latch::Image;
using latch::Keypoint;

namespace {

Image uniform_image(int w, int h, double value) {
    Image img;
    img.width = w;
    img.height = h;
    img.data.assign(static_cast<std::size_t>(w) * h, value);
    return img;
}

Image bright_square_image() {
    Image img = uniform_image(32, 32, 0.0);
    for (int y = 12; y <= 19; ++y)
        for (int x = 12; x <= 19; ++x) img.at(x, y) = 255.0;
    return img;
}

} // namespace

TEST_CASE("uniform image yields no detections") {
    CHECK(latch::fast_detect(uniform_image(32, 32, 77.0), 20.0, true).empty());
    CHECK(latch::fast_detect(uniform_image(32, 32, 77.0), 1.0, false).empty());
}

TEST_CASE("too small images are rejected") {
    CHECK_THROWS_AS(latch::fast_detect(uniform_image(6, 32, 0.0), 20.0, true), Error);
}

TEST_CASE("bright square: corners fire, edge midpoints do not") {
    const Image img = bright_square_image();
    const auto detections = latch::fast_detect(img, 20.0, false);

    // full agreement with the arc-enumeration oracle over every pixel
    std::vector<Keypoint> expected;
    for (int y = 3; y < img.height - 3; ++y)
        for (int x = 3; x < img.width - 3; ++x)
            if (oracle::segment_test(img, x, y, 20.0).fired)
                expected.push_back({static_cast<double>(x), static_cast<double>(y), 0.0, 0.0});
    REQUIRE(detections.size() == expected.size());
    for (std::size_t i = 0; i < detections.size(); ++i) {
        CHECK(detections[i].x == expected[i].x);
        CHECK(detections[i].y == expected[i].y);
    }

    const auto contains = [&](double x, double y) {
        for (const Keypoint& k : detections)
            if (k.x == x && k.y == y) return true;
        return false;
    };
    CHECK(contains(12, 12));
    CHECK(contains(19, 12));
    CHECK(contains(12, 19));
    CHECK(contains(19, 19));
    CHECK_FALSE(contains(15, 12)); // top edge midpoint area
    CHECK_FALSE(contains(16, 12));
    CHECK_FALSE(contains(12, 15));
    CHECK_FALSE(contains(19, 16));

    CHECK(latch::fast_detect(img, 255.0, false).empty());
}

TEST_CASE("corner_score: closed-form example and oracle equivalence") {
    Image img = uniform_image(9, 9, 0.0);
    for (int i = 0; i < 16; ++i) {
        static constexpr int cx[16] = {0, 1, 2, 3, 3, 3, 2, 1, 0, -1, -2, -3, -3, -3, -2, -1};
        static constexpr int cy[16] = {-3, -3, -2, -1, 0, 1, 2, 3, 3, 3, 2, 1, 0, -1, -2, -3};
        img.at(4 + cx[i], 4 + cy[i]) = 255.0;
    }
    CHECK(latch::corner_score(img, 4, 4, 20.0) == 16.0 * 235.0);
    CHECK(latch::corner_score(uniform_image(9, 9, 50.0), 4, 4, 20.0) == 0.0);
    CHECK_THROWS_AS(latch::corner_score(img, 2, 4, 20.0), Error);

    latch::Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const Image nbhd = testutil::random_image(rng, 7, 7, 0, 255);
        const auto ref = oracle::segment_test(nbhd, 3, 3, 20.0);
        CHECK(latch::corner_score(nbhd, 3, 3, 20.0) == ref.score);
    }
}

TEST_CASE("nms keeps 3x3 maxima with lexicographic ties") {
    latch::Rng rng(43);
    const Image img = testutil::structured_image(rng, 64, 64);
    const auto kept = latch::fast_detect(img, 20.0, true);
    const auto all = latch::fast_detect(img, 20.0, false);
    CHECK(kept.size() <= all.size());
    CHECK_FALSE(kept.empty());

    // no two survivors within Chebyshev distance 1
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            const double d = std::max(std::abs(kept[i].x - kept[j].x),
                                      std::abs(kept[i].y - kept[j].y));
            CHECK(d > 1.0);
        }

    // survivors are maxima of the dense score field; ties break toward
    // the smallest (y, x)
    for (const Keypoint& k : kept) {
        const int x = static_cast<int>(k.x), y = static_cast<int>(k.y);
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int nx = x + dx, ny = y + dy;
                if (nx < 3 || ny < 3 || nx >= img.width - 3 || ny >= img.height - 3) continue;
                const double ns = latch::corner_score(img, nx, ny, 20.0);
                if (ns > k.score) FAIL("neighbor outscores a survivor");
                if (ns == k.score && (ny < y || (ny == y && nx < x)))
                    FAIL("tie should have suppressed this survivor");
            }
    }
}

TEST_CASE("detection output is sorted by (y, x) and translation-equivariant") {
    latch::Rng rng(47);
    const Image img = testutil::structured_image(rng, 48, 48);
    const auto base = latch::fast_detect(img, 20.0, true);
    REQUIRE_FALSE(base.empty());
    for (std::size_t i = 1; i < base.size(); ++i) {
        const bool ordered = base[i - 1].y < base[i].y ||
                             (base[i - 1].y == base[i].y && base[i - 1].x < base[i].x);
        CHECK(ordered);
    }

    Image shifted = uniform_image(img.width + 8, img.height + 8, img.at(0, 0));
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) shifted.at(x + 5, y + 3) = img.at(x, y);
    const auto moved = latch::fast_detect(shifted, 20.0, true);
    // every original interior detection reappears at the offset position
    for (const Keypoint& k : base) {
        if (k.x < 3 || k.y < 3 || k.x >= img.width - 3 || k.y >= img.height - 3) continue;
        bool found = false;
        for (const Keypoint& m : moved)
            if (m.x == k.x + 5 && m.y == k.y + 3 && m.score == k.score) found = true;
        CHECK(found);
    }
}

TEST_CASE("orientation: constant disc, ramps, rotation equivariance") {
    const Image flat = uniform_image(40, 40, 99.0);
    CHECK(latch::orient(flat, {20, 20, 0, 0}).theta == 0.0);

    Image ramp_x = uniform_image(40, 40, 0.0);
    for (int y = 0; y < 40; ++y)
        for (int x = 0; x < 40; ++x) ramp_x.at(x, y) = 100.0 + (x - 20);
    CHECK(latch::orient(ramp_x, {20, 20, 0, 0}).theta == 0.0);

    Image ramp_y = uniform_image(40, 40, 0.0);
    for (int y = 0; y < 40; ++y)
        for (int x = 0; x < 40; ++x) ramp_y.at(x, y) = 100.0 + (y - 20);
    CHECK(latch::orient(ramp_y, {20, 20, 0, 0}).theta ==
          doctest::Approx(3.141592653589793 / 2.0));

    CHECK_THROWS_AS(latch::orient(ramp_x, {10, 20, 0, 0}), Error);

    // rotating the disc contents by a quarter turn adds pi/2 to theta
    latch::Rng rng(53);
    Image patch = uniform_image(41, 41, 128.0);
    for (int y = 0; y < 41; ++y)
        for (int x = 0; x < 41; ++x) {
            const int dx = x - 20, dy = y - 20;
            if (dx * dx + dy * dy <= 15 * 15)
                patch.at(x, y) = static_cast<double>(rng.bounded(256));
        }
    const double theta = latch::orient(patch, {20, 20, 0, 0}).theta;
    const Image turned = latch::warp_similarity(patch, {3.141592653589793 / 2.0, 1.0, 0.0, 0.0});
    const double turned_theta = latch::orient(turned, {20, 20, 0, 0}).theta;
    double expected = theta + 3.141592653589793 / 2.0;
    if (expected > 3.141592653589793) expected -= 2.0 * 3.141592653589793;
    CHECK(turned_theta == doctest::Approx(expected));
}

TEST_CASE("keypoint tsv round trip") {
    std::vector<Keypoint> kps = {{12.25, 7.5, -0.123456789, 3760.0},
                                 {100.0, 200.0, 3.14159265, 42.5}};
    const std::string text = latch::format_keypoints(kps);
    CHECK(text.substr(0, text.find('\n')) == "x\ty\ttheta\tscore");
    const auto back = latch::parse_keypoints(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].x == 12.25);
    CHECK(back[0].y == 7.5);
    CHECK(back[0].theta == doctest::Approx(-0.123456789).epsilon(1e-9));
    CHECK(back[0].score == 3760.0);
    CHECK(back[1].theta == doctest::Approx(3.14159265).epsilon(1e-9));

    CHECK(latch::format_keypoints({}) == "x\ty\ttheta\tscore\n");
}

TEST_CASE("detect_and_orient drops keypoints whose disc leaves the image") {
    latch::Rng rng(59);
    Image img = testutil::structured_image(rng, 64, 64);
    // plant a corner close to the border: detectable (>=3px) but not
    // orientable (<15px)
    for (int y = 4; y <= 8; ++y)
        for (int x = 4; x <= 8; ++x) img.at(x, y) = 255.0;

    const auto raw = latch::fast_detect(img, 20.0, true);
    bool has_border_corner = false;
    for (const Keypoint& k : raw)
        if (k.x < 15 || k.y < 15) has_border_corner = true;
    REQUIRE(has_border_corner);

    const auto oriented = latch::detect_and_orient(img, 20.0, true);
    CHECK(oriented.size() < raw.size());
    for (const Keypoint& k : oriented) {
        CHECK(k.x >= 15);
        CHECK(k.y >= 15);
        CHECK(k.x <= img.width - 16);
        CHECK(k.y <= img.height - 16);
    }
}
