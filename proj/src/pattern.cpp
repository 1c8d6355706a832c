#include "latch/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "latch/descriptor.hpp"
#include "latch/errors.hpp"
#include "latch/rng.hpp"
#include "parallel.hpp"

namespace latch {

WeightMask WeightMask::ones(int size) {
    WeightMask mask;
    mask.size = size;
    mask.weights.assign(static_cast<std::size_t>(size) * size, 1.0);
    return mask;
}

WeightMask WeightMask::seven_by_seven() {
    WeightMask mask = ones(kDefaultPatchSize);
    for (int i = 0; i < kDefaultPatchSize; ++i) {
        mask.weights[static_cast<std::size_t>(7) * kDefaultPatchSize + i] = 0.0;
        mask.weights[static_cast<std::size_t>(i) * kDefaultPatchSize + 7] = 0.0;
    }
    return mask;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::and_count(const BitVector& a, const BitVector& b) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k)
        c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
    return c;
}

// --- pattern file ----------------------------------------------------------

namespace {

void check_triplet(const Triplet& t, int patch_size) {
    const int max_coord = kWindowSize - patch_size;
    for (int c : {t.ax, t.ay, t.bx, t.by, t.cx, t.cy}) {
        if (c < 0 || c > max_coord)
            raise(ErrorCode::CoordinateOutOfRange,
                  "coordinate " + std::to_string(c) + " outside [0, " +
                      std::to_string(max_coord) + "]");
    }
    if (t.bx == t.cx && t.by == t.cy)
        raise(ErrorCode::DegenerateTriplet, "companion patches coincide at (" +
                                                std::to_string(t.bx) + ", " +
                                                std::to_string(t.by) + ")");
}

} // namespace

TripletPattern parse_pattern(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::BadHeader, "empty pattern file");

    int bit_count = 0, patch_size = 0;
    if (std::sscanf(line.c_str(), "LATCHPAT v1 T=%d K=%d", &bit_count, &patch_size) != 2)
        raise(ErrorCode::BadHeader, "bad header line '" + line + "'");
    if (bit_count <= 0 || bit_count % 8 != 0)
        raise(ErrorCode::BadHeader, "T must be a positive multiple of 8, got " +
                                        std::to_string(bit_count));
    if (patch_size < 1 || patch_size > kWindowSize)
        raise(ErrorCode::BadHeader, "K out of range: " + std::to_string(patch_size));

    TripletPattern pattern;
    pattern.bit_count = bit_count;
    pattern.patch_size = patch_size;
    pattern.triplets.reserve(bit_count);

    bool weights_section = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "WEIGHTS") {
            weights_section = true;
            break;
        }
        if (static_cast<int>(pattern.triplets.size()) == bit_count)
            raise(ErrorCode::BadTripletCount, "more than T=" + std::to_string(bit_count) +
                                                  " triplet lines");
        Triplet t;
        if (std::sscanf(line.c_str(), "%d %d %d %d %d %d", &t.ax, &t.ay, &t.bx, &t.by, &t.cx,
                        &t.cy) != 6)
            raise(ErrorCode::BadTripletCount, "bad triplet line '" + line + "'");
        check_triplet(t, patch_size);
        pattern.triplets.push_back(t);
    }
    if (static_cast<int>(pattern.triplets.size()) != bit_count)
        raise(ErrorCode::BadTripletCount,
              "expected " + std::to_string(bit_count) + " triplets, got " +
                  std::to_string(pattern.triplets.size()));

    if (!weights_section) {
        pattern.mask = WeightMask::ones(patch_size);
        return pattern;
    }

    pattern.mask.size = patch_size;
    pattern.mask.weights.clear();
    for (int row = 0; row < patch_size; ++row) {
        if (!std::getline(in, line))
            raise(ErrorCode::BadHeader, "truncated WEIGHTS section");
        std::istringstream ls(line);
        for (int col = 0; col < patch_size; ++col) {
            double w;
            if (!(ls >> w) || !std::isfinite(w) || w < 0.0)
                raise(ErrorCode::BadHeader, "bad weight in row " + std::to_string(row));
            pattern.mask.weights.push_back(w);
        }
    }
    if (std::none_of(pattern.mask.weights.begin(), pattern.mask.weights.end(),
                     [](double w) { return w > 0.0; }))
        raise(ErrorCode::BadHeader, "weight mask is all zeros");
    return pattern;
}

std::string format_pattern(const TripletPattern& pattern) {
    std::string out = "LATCHPAT v1 T=" + std::to_string(pattern.bit_count) +
                      " K=" + std::to_string(pattern.patch_size) + "\n";
    char buf[96];
    for (const Triplet& t : pattern.triplets) {
        std::snprintf(buf, sizeof(buf), "%d %d %d %d %d %d\n", t.ax, t.ay, t.bx, t.by, t.cx,
                      t.cy);
        out += buf;
    }
    if (pattern.mask != WeightMask::ones(pattern.patch_size)) {
        out += "WEIGHTS\n";
        for (int row = 0; row < pattern.patch_size; ++row) {
            for (int col = 0; col < pattern.patch_size; ++col) {
                std::snprintf(buf, sizeof(buf), "%.17g", pattern.mask.at(col, row));
                out += buf;
                out += (col + 1 == pattern.patch_size) ? "\n" : " ";
            }
        }
    }
    return out;
}

TripletPattern load_pattern_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::BadHeader, "cannot open pattern file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_pattern(buf.str());
}

void save_pattern_file(const TripletPattern& pattern, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::BadHeader, "cannot open '" + path + "' for writing");
    const std::string text = format_pattern(pattern);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

// --- dataset ingestion -------------------------------------------------------

PatchDataset ingest_brown(const std::vector<NamedBlob>& files) {
    const NamedBlob* info = nullptr;
    std::vector<const NamedBlob*> grids;
    for (const NamedBlob& f : files) {
        if (f.name.size() >= 8 && f.name.substr(f.name.size() - 8) == "info.txt") {
            info = &f;
        } else if (f.name.size() >= 4 && f.name.substr(f.name.size() - 4) == ".pgm") {
            grids.push_back(&f);
        }
    }
    if (!info) raise(ErrorCode::MissingInfo, "no info.txt in dataset listing");
    std::sort(grids.begin(), grids.end(),
              [](const NamedBlob* a, const NamedBlob* b) { return a->name < b->name; });

    std::vector<long> labels;
    {
        std::istringstream in(info->bytes);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            long id;
            char trailing;
            // First column is the 3D point id; the rest is ignored.
            const int n = std::sscanf(line.c_str(), "%ld%c", &id, &trailing);
            if (n < 1 || (n == 2 && !std::isspace(static_cast<unsigned char>(trailing))))
                raise(ErrorCode::LabelParse,
                      "bad info line " + std::to_string(line_no) + ": '" + line + "'");
            labels.push_back(id);
        }
    }

    const std::size_t slots = grids.size() * 256;
    if (labels.size() > slots)
        raise(ErrorCode::MissingInfo, "info lists " + std::to_string(labels.size()) +
                                          " patches but grids hold only " +
                                          std::to_string(slots));

    PatchDataset dataset;
    dataset.labels = labels;
    dataset.patches.reserve(labels.size());
    for (std::size_t g = 0; g < grids.size() && dataset.patches.size() < labels.size(); ++g) {
        const Image grid = load_pgm(grids[g]->bytes);
        if (grid.width != 1024 || grid.height != 1024)
            raise(ErrorCode::GridSizeMismatch, grids[g]->name + " is " +
                                                   std::to_string(grid.width) + "x" +
                                                   std::to_string(grid.height) +
                                                   ", expected 1024x1024");
        for (int cell = 0; cell < 256 && dataset.patches.size() < labels.size(); ++cell) {
            const int row = cell / 16, col = cell % 16;
            Image patch(kWindowSize, kWindowSize);
            for (int y = 0; y < kWindowSize; ++y)
                for (int x = 0; x < kWindowSize; ++x)
                    patch.at(x, y) = grid.at(col * kWindowSize + x, row * kWindowSize + y);
            dataset.patches.push_back(std::move(patch));
        }
    }
    return dataset;
}

PatchDataset ingest_brown_dir(const std::string& directory) {
    namespace fs = std::filesystem;
    std::vector<NamedBlob> files;
    if (!fs::is_directory(directory))
        raise(ErrorCode::MissingInfo, "'" + directory + "' is not a directory");
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream f(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        files.push_back(NamedBlob{entry.path().filename().string(), buf.str()});
    }
    return ingest_brown(files);
}

// --- training ---------------------------------------------------------------

std::vector<PatchPair> make_pairs(const PatchDataset& dataset, std::size_t max_pairs,
                                  std::uint64_t seed) {
    const std::size_t n = dataset.size();

    // Label groups with at least two members supply the positives.
    std::vector<std::vector<std::size_t>> groups;
    {
        std::vector<std::pair<long, std::size_t>> by_label(n);
        for (std::size_t i = 0; i < n; ++i) by_label[i] = {dataset.labels[i], i};
        std::sort(by_label.begin(), by_label.end());
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && by_label[j].first == by_label[i].first) ++j;
            if (j - i >= 2) {
                std::vector<std::size_t> g;
                for (std::size_t k = i; k < j; ++k) g.push_back(by_label[k].second);
                std::sort(g.begin(), g.end());
                groups.push_back(std::move(g));
            }
            i = j;
        }
    }
    if (groups.empty()) raise(ErrorCode::NoPositives, "no label occurs twice");

    bool has_negative = false;
    for (std::size_t i = 1; i < n; ++i)
        if (dataset.labels[i] != dataset.labels[0]) { has_negative = true; break; }
    if (!has_negative) raise(ErrorCode::NoNegatives, "dataset has a single label");

    Rng rng(seed);
    const std::size_t target = max_pairs / 2;
    std::vector<PatchPair> pairs;

    // Consecutive same-label pairs first, then seeded same-label draws.
    for (std::size_t i = 0; i + 1 < n && pairs.size() < target; ++i)
        if (dataset.labels[i] == dataset.labels[i + 1])
            pairs.push_back(PatchPair{i, i + 1, true});
    while (pairs.size() < target) {
        const auto& g = groups[rng.bounded(static_cast<std::uint32_t>(groups.size()))];
        const std::size_t i = g[rng.bounded(static_cast<std::uint32_t>(g.size()))];
        std::size_t j = g[rng.bounded(static_cast<std::uint32_t>(g.size()))];
        while (j == i) j = g[rng.bounded(static_cast<std::uint32_t>(g.size()))];
        pairs.push_back(PatchPair{i, j, true});
    }

    const std::size_t positives = pairs.size();
    while (pairs.size() < 2 * positives) {
        const std::size_t i = rng.bounded(static_cast<std::uint32_t>(n));
        std::size_t j = rng.bounded(static_cast<std::uint32_t>(n));
        while (dataset.labels[i] == dataset.labels[j])
            j = rng.bounded(static_cast<std::uint32_t>(n));
        pairs.push_back(PatchPair{i, j, false});
    }
    return pairs;
}

std::vector<Triplet> sample_candidates(std::size_t count, int patch_size, std::uint64_t seed) {
    Rng rng(seed);
    const std::uint32_t range = static_cast<std::uint32_t>(kWindowSize - patch_size + 1);
    std::set<std::tuple<int, int, int, int, int, int>> seen;
    std::vector<Triplet> candidates;
    candidates.reserve(count);
    while (candidates.size() < count) {
        Triplet t;
        t.ax = static_cast<int>(rng.bounded(range));
        t.ay = static_cast<int>(rng.bounded(range));
        t.bx = static_cast<int>(rng.bounded(range));
        t.by = static_cast<int>(rng.bounded(range));
        t.cx = static_cast<int>(rng.bounded(range));
        t.cy = static_cast<int>(rng.bounded(range));
        if (t.bx == t.cx && t.by == t.cy) continue;
        if (!seen.insert({t.ax, t.ay, t.bx, t.by, t.cx, t.cy}).second) continue;
        candidates.push_back(t);
    }
    return candidates;
}

namespace {

std::vector<Window64> upright_windows(const PatchDataset& dataset) {
    std::vector<Window64> windows;
    windows.reserve(dataset.size());
    for (const Image& patch : dataset.patches)
        windows.push_back(Window64::from_image(patch));
    return windows;
}

BitVector triplet_bits_over(const Triplet& triplet, const WeightMask& mask,
                            const std::vector<Window64>& windows) {
    BitVector bits(windows.size());
    for (std::size_t i = 0; i < windows.size(); ++i)
        bits.set(i, triplet_bit(windows[i], triplet, mask));
    return bits;
}

} // namespace

BitVector triplet_bits(const Triplet& triplet, const WeightMask& mask,
                       const PatchDataset& dataset) {
    BitVector bits(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const Window64 window = Window64::from_image(dataset.patches[i]);
        bits.set(i, triplet_bit(window, triplet, mask));
    }
    return bits;
}

double triplet_quality(const BitVector& bits, const std::vector<PatchPair>& pairs) {
    if (pairs.empty()) raise(ErrorCode::EmptyPairs, "quality needs at least one pair");
    std::size_t agree = 0;
    for (const PatchPair& p : pairs)
        if ((bits.get(p.i) == bits.get(p.j)) == p.same) ++agree;
    return static_cast<double>(agree) / static_cast<double>(pairs.size());
}

double bit_correlation(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size())
        raise(ErrorCode::LengthMismatch, "bit-vector lengths differ: " +
                                             std::to_string(a.size()) + " vs " +
                                             std::to_string(b.size()));
    const double n = static_cast<double>(a.size());
    const double na = static_cast<double>(a.count());
    const double nb = static_cast<double>(b.count());
    const double va = na * (n - na);
    const double vb = nb * (n - nb);
    if (va == 0.0 || vb == 0.0) return 0.0; // constant vector convention
    const double nab = static_cast<double>(BitVector::and_count(a, b));
    return (n * nab - na * nb) / std::sqrt(va * vb);
}

TripletPattern select_triplets(const std::vector<Triplet>& candidates,
                               const PatchDataset& dataset,
                               const std::vector<PatchPair>& pairs, int bit_count,
                               double corr_threshold, const WeightMask& mask, int workers) {
    if (candidates.size() < static_cast<std::size_t>(bit_count))
        raise(ErrorCode::InsufficientCandidates,
              std::to_string(candidates.size()) + " candidates for T=" +
                  std::to_string(bit_count));

    // Bit-vectors and qualities for the whole pool (read-only dataset, so
    // this parallelizes cleanly; selection below is sequential).
    const std::vector<Window64> windows = upright_windows(dataset);
    std::vector<BitVector> bits(candidates.size());
    std::vector<double> quality(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t i) {
        bits[i] = triplet_bits_over(candidates[i], mask, windows);
        quality[i] = triplet_quality(bits[i], pairs);
    });

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (quality[a] != quality[b]) return quality[a] > quality[b];
        return a < b;
    });

    // Constant bits carry no signal and have correlation 0 by convention;
    // they are never eligible.
    std::vector<std::size_t> pool;
    pool.reserve(order.size());
    for (std::size_t idx : order) {
        const std::size_t ones = bits[idx].count();
        if (ones == 0 || ones == bits[idx].size()) continue;
        pool.push_back(idx);
    }

    // Cached popcounts make each correlation an AND-popcount plus a few
    // multiplies (Pearson of {0,1} sequences reduces to counts).
    std::vector<double> ones_count(candidates.size());
    for (std::size_t i : pool) ones_count[i] = static_cast<double>(bits[i].count());
    const double n = static_cast<double>(dataset.size());
    auto correlation = [&](std::size_t x, std::size_t y) {
        const double na = ones_count[x], nb = ones_count[y];
        const double va = na * (n - na), vb = nb * (n - nb);
        const double nab = static_cast<double>(BitVector::and_count(bits[x], bits[y]));
        return (n * nab - na * nb) / std::sqrt(va * vb); // same form as bit_correlation
    };

    std::vector<std::size_t> accepted;
    std::vector<char> taken(candidates.size(), 0);
    double threshold = corr_threshold;
    while (accepted.size() < static_cast<std::size_t>(bit_count) && threshold <= 1.0 + 1e-9) {
        for (std::size_t idx : pool) {
            if (taken[idx]) continue;
            bool ok = true;
            for (std::size_t a : accepted) {
                if (std::abs(correlation(idx, a)) > threshold) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            taken[idx] = 1;
            accepted.push_back(idx);
            if (accepted.size() == static_cast<std::size_t>(bit_count)) break;
        }
        if (accepted.size() < static_cast<std::size_t>(bit_count)) threshold += 0.05;
    }
    if (accepted.size() < static_cast<std::size_t>(bit_count))
        raise(ErrorCode::InsufficientCandidates,
              "only " + std::to_string(accepted.size()) + " decorrelated triplets of " +
                  std::to_string(bit_count) + " requested");

    TripletPattern pattern;
    pattern.bit_count = bit_count;
    pattern.patch_size = mask.size;
    pattern.mask = mask;
    pattern.triplets.reserve(accepted.size());
    for (std::size_t idx : accepted) pattern.triplets.push_back(candidates[idx]);
    return pattern;
}

} // namespace latch
