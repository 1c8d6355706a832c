#include <doctest.h>

#include "latch/errors.hpp"
#include "latch/match.hpp"
#include "latch/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using latch::Descriptor;
using latch::Error;
using latch::MatchOptions;
using latch::MatchPair;

namespace {

Descriptor from_bytes(std::initializer_list<std::uint8_t> bytes) {
    Descriptor d;
    d.bytes.assign(bytes);
    return d;
}

// 512-bit descriptor with exactly the first `ones` bits set.
Descriptor with_ones(int ones) {
    Descriptor d;
    d.bytes.assign(64, 0);
    for (int t = 0; t < ones; ++t) d.set_bit(static_cast<std::size_t>(t), true);
    return d;
}

bool same_matches(const std::vector<MatchPair>& a, const std::vector<MatchPair>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].probe_index != b[i].probe_index || a[i].gallery_index != b[i].gallery_index ||
            a[i].distance != b[i].distance || a[i].second_distance != b[i].second_distance)
            return false;
    return true;
}

} // namespace

TEST_CASE("hamming counts differing bits") {
    CHECK(latch::hamming(from_bytes({0x00}), from_bytes({0x00})) == 0);
    CHECK(latch::hamming(from_bytes({0xff}), from_bytes({0x00})) == 8);
    CHECK(latch::hamming(from_bytes({0b1010'1010}), from_bytes({0b0101'0101})) == 8);
    CHECK(latch::hamming(from_bytes({0x0f, 0xf0}), from_bytes({0x00, 0xf0})) == 4);
    CHECK(latch::hamming(with_ones(512), with_ones(0)) == 512);
    CHECK(latch::hamming(with_ones(200), with_ones(137)) == 63);
    CHECK_THROWS_AS(latch::hamming(from_bytes({0x00}), from_bytes({0x00, 0x00})), Error);

    latch::Rng rng(109);
    for (int trial = 0; trial < 200; ++trial) {
        const Descriptor a = testutil::random_descriptor(rng);
        const Descriptor b = testutil::random_descriptor(rng);
        CHECK(latch::hamming(a, b) == oracle::hamming_bits(a, b));
        CHECK(latch::hamming(a, b) == latch::hamming(b, a));
        CHECK(latch::hamming(a, a) == 0);
    }

    // lengths that are not a multiple of 8 bytes exercise the tail path
    latch::Rng tail_rng(113);
    for (int trial = 0; trial < 50; ++trial) {
        const Descriptor a = testutil::random_descriptor(tail_rng, 13);
        const Descriptor b = testutil::random_descriptor(tail_rng, 13);
        CHECK(latch::hamming(a, b) == oracle::hamming_bits(a, b));
    }
}

TEST_CASE("knn2 returns best and runner-up with index ties downward") {
    const std::vector<Descriptor> gallery = {with_ones(10), with_ones(3), with_ones(7),
                                             with_ones(3)};
    const Descriptor probe = with_ones(0);
    const auto r = latch::knn2(probe, gallery);
    CHECK(r.best_index == 1); // distance 3, first of the tied pair
    CHECK(r.best_distance == 3);
    CHECK(r.second_distance == 3); // the tied duplicate is the runner-up

    // singleton gallery: runner-up is the T+1 sentinel
    const auto single = latch::knn2(probe, {with_ones(9)});
    CHECK(single.best_index == 0);
    CHECK(single.best_distance == 9);
    CHECK(single.second_distance == 513);

    latch::Rng rng(127);
    std::vector<Descriptor> random_gallery;
    for (int g = 0; g < 40; ++g) random_gallery.push_back(testutil::random_descriptor(rng));
    for (int trial = 0; trial < 50; ++trial) {
        const Descriptor p = testutil::random_descriptor(rng);
        const auto got = latch::knn2(p, random_gallery);
        int best = 0;
        for (int g = 1; g < 40; ++g)
            if (oracle::hamming_bits(p, random_gallery[g]) <
                oracle::hamming_bits(p, random_gallery[best]))
                best = g;
        int second = 513;
        for (int g = 0; g < 40; ++g) {
            if (g == best) continue;
            second = std::min(second, oracle::hamming_bits(p, random_gallery[g]));
        }
        CHECK(got.best_index == best);
        CHECK(got.best_distance == oracle::hamming_bits(p, random_gallery[best]));
        CHECK(got.second_distance == second);
    }
}

TEST_CASE("ratio test uses strict less-than, so exact ties are rejected") {
    // both gallery entries at distance 4: 4 < 1.0 * 4 is false
    const std::vector<Descriptor> gallery = {with_ones(4), with_ones(4)};
    MatchOptions opt;
    opt.ratio = 1.0;
    opt.workers = 1;
    CHECK(latch::match_brute_force({with_ones(0)}, gallery, opt).empty());

    // distances 4 and 9: 4 < 0.5 * 9 holds
    const std::vector<Descriptor> spread = {with_ones(4), with_ones(9)};
    opt.ratio = 0.5;
    const auto kept = latch::match_brute_force({with_ones(0)}, spread, opt);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].gallery_index == 0);
    CHECK(kept[0].distance == 4);
    CHECK(kept[0].second_distance == 9);

    // 4 < 0.4 * 9 = 3.6 fails
    opt.ratio = 0.4;
    CHECK(latch::match_brute_force({with_ones(0)}, spread, opt).empty());

    // singleton gallery passes the ratio against the sentinel 513
    opt.ratio = 0.8;
    CHECK(latch::match_brute_force({with_ones(0)}, {with_ones(400)}, opt).size() == 1);
}

TEST_CASE("max_distance is inclusive") {
    MatchOptions opt;
    opt.workers = 1;
    opt.max_distance = 7;
    const std::vector<Descriptor> gallery = {with_ones(7)};
    CHECK(latch::match_brute_force({with_ones(0)}, gallery, opt).size() == 1);
    opt.max_distance = 6;
    CHECK(latch::match_brute_force({with_ones(0)}, gallery, opt).empty());
}

TEST_CASE("cross-check keeps only mutual nearest neighbors") {
    // probe 0 -> gallery 0 (distance 1) and gallery 0's nearest probe is 0:
    // mutual. probe 1 -> gallery 0 (distance 2) loses the reverse check.
    const std::vector<Descriptor> probes = {with_ones(1), with_ones(2)};
    const std::vector<Descriptor> gallery = {with_ones(0), with_ones(30)};
    MatchOptions opt;
    opt.cross_check = true;
    opt.workers = 1;
    const auto got = latch::match_brute_force(probes, gallery, opt);
    REQUIRE(got.size() == 1);
    CHECK(got[0].probe_index == 0);
    CHECK(got[0].gallery_index == 0);
    CHECK(got[0].distance == 1);

    MatchOptions open;
    open.workers = 1;
    CHECK(latch::match_brute_force(probes, gallery, open).size() == 2);
}

TEST_CASE("matcher agrees with the reference on every filter combination") {
    latch::Rng rng(131);
    std::vector<Descriptor> probes, gallery;
    for (int i = 0; i < 60; ++i) probes.push_back(testutil::random_descriptor(rng));
    for (int i = 0; i < 45; ++i) gallery.push_back(testutil::random_descriptor(rng));
    // clone a few gallery entries to force distance ties
    gallery[10] = gallery[3];
    gallery[44] = gallery[7];
    probes[5] = gallery[3];

    for (int combo = 0; combo < 8; ++combo) {
        MatchOptions opt;
        if (combo & 1) opt.ratio = 0.9;
        if (combo & 2) opt.cross_check = true;
        if (combo & 4) opt.max_distance = 250;
        opt.workers = 1;
        const auto expected = oracle::reference_match(probes, gallery, opt);
        const auto got = latch::match_brute_force(probes, gallery, opt);
        CHECK(same_matches(got, expected));

        for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(got[i - 1].probe_index < got[i].probe_index);

        opt.workers = 2;
        CHECK(same_matches(latch::match_brute_force(probes, gallery, opt), expected));
        opt.workers = 8;
        CHECK(same_matches(latch::match_brute_force(probes, gallery, opt), expected));
    }
}

TEST_CASE("match edge cases and tsv output") {
    CHECK(latch::match_brute_force({}, {with_ones(1)}).empty());
    CHECK_THROWS_AS(latch::match_brute_force({with_ones(1)}, {}), Error);

    const std::vector<MatchPair> matches = {{0, 3, 12, 40}, {2, 1, 0, 513}};
    CHECK(latch::format_matches(matches) == "0\t3\t12\t40\n2\t1\t0\t513\n");
    CHECK(latch::format_matches({}).empty());

    const auto dir = testutil::scratch_dir("match_tsv");
    latch::save_matches_file(matches, (dir / "m.tsv").string());
    CHECK(testutil::read_file(dir / "m.tsv") == "0\t3\t12\t40\n2\t1\t0\t513\n");
}
