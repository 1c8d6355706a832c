#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latch/detect.hpp"
#include "latch/image.hpp"
#include "latch/pattern.hpp"

namespace latch {

/// Margin a keypoint must keep from every image edge before its window can
/// be sampled: ceil(31.5 * sqrt(2)) plus one pixel of bilinear guard.
inline constexpr int kWindowMargin = 46;

/// Upright, rotation-normalized 64x64 intensity window around a keypoint.
struct Window64 {
    std::array<double, kWindowSize * kWindowSize> data{};

    double at(int u, int v) const { return data[static_cast<std::size_t>(v) * kWindowSize + u]; }
    double& at(int u, int v) { return data[static_cast<std::size_t>(v) * kWindowSize + u]; }

    /// View a 64x64 image (e.g. a training patch) as an upright window.
    static Window64 from_image(const Image& image);
};

/// Packed binary descriptor, bit t in byte t/8 at position t%8 (LSB first).
struct Descriptor {
    std::vector<std::uint8_t> bytes;

    bool bit(std::size_t t) const { return (bytes[t >> 3] >> (t & 7)) & 1u; }
    void set_bit(std::size_t t, bool v) {
        const std::uint8_t b = static_cast<std::uint8_t>(1u << (t & 7));
        if (v) bytes[t >> 3] |= b; else bytes[t >> 3] &= static_cast<std::uint8_t>(~b);
    }
    std::size_t bit_count() const { return bytes.size() * 8; }

    bool operator==(const Descriptor&) const = default;
};

/// Resample the rotated 64x64 rectangle around the keypoint into an upright
/// window: window(u, v) = I(x + cos(theta) du - sin(theta) dv,
///                          y + sin(theta) du + cos(theta) dv),
/// du = u - 31.5, dv = v - 31.5, bilinear. Requires the 46-pixel margin.
Window64 extract_window(const Image& image, const Keypoint& keypoint);

bool keypoint_in_margin(const Image& image, const Keypoint& keypoint);

/// One LATCH bit: with D(P, Q) = sum mask(i,j) (P(i,j) - Q(i,j))^2 over the
/// KxK patches at the triplet's corners, the bit is 1 iff
/// D(anchor, companion1) > D(anchor, companion2). Ties give 0.
bool triplet_bit(const Window64& window, const Triplet& triplet, const WeightMask& mask);

/// Full descriptor for one keypoint. Throws TooCloseToBorder outside the
/// margin.
Descriptor describe(const Image& image, const Keypoint& keypoint, const TripletPattern& pattern);

/// Batch extraction: keypoints violating the margin are silently dropped,
/// the rest keep their input order. Output is identical for any worker
/// count (workers = 0 means all cores).
std::vector<std::pair<Keypoint, Descriptor>> describe_all(const Image& image,
                                                          const std::vector<Keypoint>& keypoints,
                                                          const TripletPattern& pattern,
                                                          int workers = 0);

// --- descriptor file format ----------------------------------------------
//
// Binary, little-endian: magic "LTCH", u32 version=1, u32 count,
// u32 descriptor_bytes, u32 reserved=0; then per record f32 x, y, theta,
// score followed by the raw descriptor bytes.

std::string format_descriptor_file(const std::vector<std::pair<Keypoint, Descriptor>>& records);
std::vector<std::pair<Keypoint, Descriptor>> parse_descriptor_file(const std::string& bytes);
void save_descriptor_file(const std::vector<std::pair<Keypoint, Descriptor>>& records,
                          const std::string& path);
std::vector<std::pair<Keypoint, Descriptor>> load_descriptor_file(const std::string& path);

} // namespace latch
