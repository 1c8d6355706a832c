#include "latch/match.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "latch/errors.hpp"
#include "parallel.hpp"

namespace latch {

int hamming(const Descriptor& a, const Descriptor& b) {
    if (a.bytes.size() != b.bytes.size())
        raise(ErrorCode::LengthMismatch, "descriptor lengths differ: " +
                                             std::to_string(a.bytes.size()) + " vs " +
                                             std::to_string(b.bytes.size()));
    const std::size_t n = a.bytes.size();
    const std::size_t words = n / 8;
    int total = 0;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t x, y;
        std::memcpy(&x, a.bytes.data() + w * 8, 8);
        std::memcpy(&y, b.bytes.data() + w * 8, 8);
        total += std::popcount(x ^ y);
    }
    for (std::size_t i = words * 8; i < n; ++i)
        total += std::popcount(static_cast<unsigned>(a.bytes[i] ^ b.bytes[i]));
    return total;
}

Knn2Result knn2(const Descriptor& probe, const std::vector<Descriptor>& gallery) {
    if (gallery.empty()) raise(ErrorCode::EmptyGallery, "knn2 needs a nonempty gallery");
    const int sentinel = static_cast<int>(probe.bit_count()) + 1;
    Knn2Result r;
    r.best_distance = sentinel;
    r.second_distance = sentinel;
    for (std::size_t g = 0; g < gallery.size(); ++g) {
        const int d = hamming(probe, gallery[g]);
        if (d < r.best_distance) {
            r.second_distance = r.best_distance;
            r.best_distance = d;
            r.best_index = static_cast<int>(g);
        } else if (d < r.second_distance) {
            r.second_distance = d;
        }
    }
    return r;
}

std::vector<MatchPair> match_brute_force(const std::vector<Descriptor>& probes,
                                         const std::vector<Descriptor>& gallery,
                                         const MatchOptions& options) {
    if (gallery.empty()) raise(ErrorCode::EmptyGallery, "matching needs a nonempty gallery");
    if (probes.empty()) return {};

    std::vector<Knn2Result> forward(probes.size());
    parallel_for(probes.size(), options.workers,
                 [&](std::size_t p) { forward[p] = knn2(probes[p], gallery); });

    std::vector<int> reverse_best;
    if (options.cross_check) {
        reverse_best.assign(gallery.size(), -1);
        parallel_for(gallery.size(), options.workers,
                     [&](std::size_t g) { reverse_best[g] = knn2(gallery[g], probes).best_index; });
    }

    std::vector<MatchPair> matches;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const Knn2Result& r = forward[p];
        if (options.ratio && !(r.best_distance < *options.ratio * r.second_distance)) continue;
        if (options.max_distance && r.best_distance > *options.max_distance) continue;
        if (options.cross_check && reverse_best[static_cast<std::size_t>(r.best_index)] !=
                                       static_cast<int>(p))
            continue;
        matches.push_back({static_cast<int>(p), r.best_index, r.best_distance,
                           r.second_distance});
    }
    return matches;
}

std::string format_matches(const std::vector<MatchPair>& matches) {
    std::string out;
    char line[96];
    for (const MatchPair& m : matches) {
        std::snprintf(line, sizeof(line), "%d\t%d\t%d\t%d\n", m.probe_index, m.gallery_index,
                      m.distance, m.second_distance);
        out += line;
    }
    return out;
}

void save_matches_file(const std::vector<MatchPair>& matches, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "' for writing");
    const std::string text = format_matches(matches);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

} // namespace latch
