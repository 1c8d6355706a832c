#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latch/image.hpp"

namespace latch {

inline constexpr int kWindowSize = 64;     // oriented sampling window side
inline constexpr int kDefaultPatchSize = 8;
inline constexpr int kDefaultBitCount = 512;

/// One descriptor bit's sampling geometry: the top-left corners of three
/// KxK patches inside the 64x64 window. The anchor patch is compared
/// against each companion.
struct Triplet {
    int ax = 0, ay = 0; // anchor
    int bx = 0, by = 0; // companion 1
    int cx = 0, cy = 0; // companion 2

    bool operator==(const Triplet&) const = default;
};

/// Per-pixel non-negative weights applied to squared differences inside
/// each patch. A zero weight removes the pixel entirely, which is how the
/// 7x7 patch variant is expressed on an 8x8 grid.
struct WeightMask {
    int size = kDefaultPatchSize;
    std::vector<double> weights; // size * size, row-major

    double at(int x, int y) const { return weights[static_cast<std::size_t>(y) * size + x]; }

    static WeightMask ones(int size = kDefaultPatchSize);
    /// All-ones on the top-left 7x7 sub-grid, zero on the last row/column.
    static WeightMask seven_by_seven();

    bool operator==(const WeightMask&) const = default;
};

/// The learned arrangement: an ordered list of T triplets plus the shared
/// weight mask. T must be a multiple of 8 (descriptors are packed bytes).
struct TripletPattern {
    int bit_count = kDefaultBitCount; // T
    int patch_size = kDefaultPatchSize; // K
    std::vector<Triplet> triplets;
    WeightMask mask;

    bool operator==(const TripletPattern&) const = default;
};

/// Labeled 64x64 training windows; equal ids mark views of the same
/// physical point.
struct PatchDataset {
    std::vector<Image> patches;
    std::vector<long> labels;

    std::size_t size() const { return patches.size(); }
};

/// (i, j, same?) index pair into a PatchDataset.
struct PatchPair {
    std::size_t i = 0;
    std::size_t j = 0;
    bool same = false;
};

/// Packed bit-vector, one bit per dataset patch, used during training.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= bit; else words_[i >> 6] &= ~bit;
    }
    std::size_t count() const;
    /// popcount(a AND b); lengths must match.
    static std::size_t and_count(const BitVector& a, const BitVector& b);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// --- pattern file format -----------------------------------------------
//
// Text, LF line endings:
//   LATCHPAT v1 T=<bits> K=<patch>
//   ax ay bx by cx cy            (T lines)
//   WEIGHTS                      (optional)
//   <K rows of K reals>          (present only with WEIGHTS)
// A missing WEIGHTS section means an all-ones mask.

TripletPattern parse_pattern(const std::string& text);
std::string format_pattern(const TripletPattern& pattern);
TripletPattern load_pattern_file(const std::string& path);
void save_pattern_file(const TripletPattern& pattern, const std::string& path);

/// The trained 512-triplet arrangement shipped with the library (8x8
/// patches, 7x7-emulating mask). Byte-stable across releases.
const TripletPattern& default_pattern();

// --- dataset ingestion ---------------------------------------------------

/// A named file payload, as listed from a dataset directory.
struct NamedBlob {
    std::string name;
    std::string bytes;
};

/// Ingest a patch dataset stored as 1024x1024 grayscale PGM grids (16x16
/// cells of 64x64 patches, row-major) plus an info file with one
/// "<point_id> <aux>" line per patch. Patches are truncated to the info
/// line count; grid files are consumed in name order.
PatchDataset ingest_brown(const std::vector<NamedBlob>& files);
PatchDataset ingest_brown_dir(const std::string& directory);

// --- training ------------------------------------------------------------

/// Up to max_pairs/2 positive pairs (consecutive same-label patches first,
/// then seeded random same-label draws) and an equal number of seeded
/// random different-label pairs.
std::vector<PatchPair> make_pairs(const PatchDataset& dataset, std::size_t max_pairs,
                                  std::uint64_t seed);

/// `count` distinct candidate triplets with coordinates uniform in
/// [0, 64-K]; degenerate (companion1 == companion2) and duplicate draws
/// are rejected and resampled.
std::vector<Triplet> sample_candidates(std::size_t count, int patch_size, std::uint64_t seed);

/// Evaluates the triplet's bit on every (upright) patch of the dataset.
BitVector triplet_bits(const Triplet& triplet, const WeightMask& mask,
                       const PatchDataset& dataset);

/// Fraction of pairs whose bit equality agrees with the same/not-same label.
double triplet_quality(const BitVector& bits, const std::vector<PatchPair>& pairs);

/// Pearson correlation of two {0,1} sequences; 0 when either is constant.
double bit_correlation(const BitVector& a, const BitVector& b);

/// Greedy decorrelated selection: walk candidates in quality order and
/// accept those whose |correlation| against every accepted bit-vector stays
/// within corr_threshold, relaxing the threshold by 0.05 whenever a full
/// walk leaves fewer than T accepted. Constant-bit candidates are skipped.
TripletPattern select_triplets(const std::vector<Triplet>& candidates,
                               const PatchDataset& dataset,
                               const std::vector<PatchPair>& pairs, int bit_count,
                               double corr_threshold, const WeightMask& mask,
                               int workers = 0);

} // namespace latch
