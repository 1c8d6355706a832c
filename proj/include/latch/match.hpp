#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latch/descriptor.hpp"

namespace latch {

/// One accepted correspondence. second_distance is the runner-up gallery
/// distance, or T+1 when the gallery holds a single entry.
struct MatchPair {
    int probe_index = 0;
    int gallery_index = 0;
    int distance = 0;
    int second_distance = 0;
};

struct MatchOptions {
    std::optional<double> ratio;      // accept iff distance < ratio * second
    bool cross_check = false;         // mutual nearest neighbor
    std::optional<int> max_distance;  // accept iff distance <= max
    int workers = 0;                  // 0 = all cores
};

/// Number of differing bits (word-level popcount). Lengths must match.
int hamming(const Descriptor& a, const Descriptor& b);

struct Knn2Result {
    int best_index = -1;
    int best_distance = 0;
    int second_distance = 0;
};

/// Best and second-best gallery distances for one probe; distance ties go
/// to the smallest gallery index.
Knn2Result knn2(const Descriptor& probe, const std::vector<Descriptor>& gallery);

/// Deterministic brute-force matcher with optional ratio, cross-check and
/// distance-cutoff filters. Output sorted by probe index; identical for any
/// worker count.
std::vector<MatchPair> match_brute_force(const std::vector<Descriptor>& probes,
                                         const std::vector<Descriptor>& gallery,
                                         const MatchOptions& options = {});

/// Match TSV: "probe<TAB>gallery<TAB>distance<TAB>second_distance", LF.
std::string format_matches(const std::vector<MatchPair>& matches);
void save_matches_file(const std::vector<MatchPair>& matches, const std::string& path);

} // namespace latch
