#include "latch/descriptor.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "latch/errors.hpp"
#include "parallel.hpp"

namespace latch {

Window64 Window64::from_image(const Image& image) {
    if (image.width != kWindowSize || image.height != kWindowSize)
        raise(ErrorCode::GridSizeMismatch, "window source must be 64x64, got " +
                                               std::to_string(image.width) + "x" +
                                               std::to_string(image.height));
    Window64 window;
    std::memcpy(window.data.data(), image.data.data(), sizeof(double) * window.data.size());
    return window;
}

bool keypoint_in_margin(const Image& image, const Keypoint& keypoint) {
    return keypoint.x - kWindowMargin >= 0.0 && keypoint.y - kWindowMargin >= 0.0 &&
           keypoint.x + kWindowMargin <= image.width - 1 &&
           keypoint.y + kWindowMargin <= image.height - 1;
}

Window64 extract_window(const Image& image, const Keypoint& keypoint) {
    if (!keypoint_in_margin(image, keypoint))
        raise(ErrorCode::TooCloseToBorder,
              "keypoint (" + std::to_string(keypoint.x) + ", " + std::to_string(keypoint.y) +
                  ") violates the " + std::to_string(kWindowMargin) + "-pixel margin");

    const double c = std::cos(keypoint.theta);
    const double s = std::sin(keypoint.theta);
    const double half = (kWindowSize - 1) / 2.0; // grid centered on the keypoint

    Window64 window;
    for (int v = 0; v < kWindowSize; ++v) {
        const double dv = v - half;
        for (int u = 0; u < kWindowSize; ++u) {
            const double du = u - half;
            window.at(u, v) = sample_bilinear(image, keypoint.x + c * du - s * dv,
                                              keypoint.y + s * du + c * dv);
        }
    }
    return window;
}

bool triplet_bit(const Window64& window, const Triplet& triplet, const WeightMask& mask) {
    const int k = mask.size;
    const double* anchor = &window.data[static_cast<std::size_t>(triplet.ay) * kWindowSize +
                                        triplet.ax];
    const double* comp1 = &window.data[static_cast<std::size_t>(triplet.by) * kWindowSize +
                                       triplet.bx];
    const double* comp2 = &window.data[static_cast<std::size_t>(triplet.cy) * kWindowSize +
                                       triplet.cx];
    const double* weight = mask.weights.data();

    double d1 = 0.0, d2 = 0.0;
    for (int row = 0; row < k; ++row) {
        for (int col = 0; col < k; ++col) {
            const double w = weight[col];
            const double a = anchor[col];
            const double e1 = a - comp1[col];
            const double e2 = a - comp2[col];
            d1 += w * e1 * e1;
            d2 += w * e2 * e2;
        }
        anchor += kWindowSize;
        comp1 += kWindowSize;
        comp2 += kWindowSize;
        weight += k;
    }
    return d1 > d2;
}

Descriptor describe(const Image& image, const Keypoint& keypoint,
                    const TripletPattern& pattern) {
    const Window64 window = extract_window(image, keypoint);
    Descriptor descriptor;
    descriptor.bytes.assign(static_cast<std::size_t>(pattern.bit_count) / 8, 0);
    for (int t = 0; t < pattern.bit_count; ++t)
        if (triplet_bit(window, pattern.triplets[t], pattern.mask))
            descriptor.bytes[t >> 3] |= static_cast<std::uint8_t>(1u << (t & 7));
    return descriptor;
}

std::vector<std::pair<Keypoint, Descriptor>> describe_all(const Image& image,
                                                          const std::vector<Keypoint>& keypoints,
                                                          const TripletPattern& pattern,
                                                          int workers) {
    std::vector<std::size_t> kept;
    kept.reserve(keypoints.size());
    for (std::size_t i = 0; i < keypoints.size(); ++i)
        if (keypoint_in_margin(image, keypoints[i])) kept.push_back(i);

    std::vector<std::pair<Keypoint, Descriptor>> out(kept.size());
    parallel_for(kept.size(), workers, [&](std::size_t slot) {
        const Keypoint& k = keypoints[kept[slot]];
        out[slot] = {k, describe(image, k, pattern)};
    });
    return out;
}

// --- descriptor file -----------------------------------------------------

namespace {

constexpr char kMagic[4] = {'L', 'T', 'C', 'H'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_f32(std::string& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
}

std::uint32_t get_u32(const std::string& in, std::size_t& pos) {
    if (pos + 4 > in.size()) raise(ErrorCode::Truncated, "descriptor file ends mid-field");
    const auto b = [&](int i) {
        return static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i]));
    };
    const std::uint32_t v = b(0) | (b(1) << 8) | (b(2) << 16) | (b(3) << 24);
    pos += 4;
    return v;
}

float get_f32(const std::string& in, std::size_t& pos) {
    const std::uint32_t bits = get_u32(in, pos);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

} // namespace

std::string format_descriptor_file(const std::vector<std::pair<Keypoint, Descriptor>>& records) {
    const std::size_t descriptor_bytes = records.empty() ? 0 : records[0].second.bytes.size();
    std::string out(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(records.size()));
    put_u32(out, static_cast<std::uint32_t>(descriptor_bytes));
    put_u32(out, 0);
    for (const auto& [keypoint, descriptor] : records) {
        put_f32(out, static_cast<float>(keypoint.x));
        put_f32(out, static_cast<float>(keypoint.y));
        put_f32(out, static_cast<float>(keypoint.theta));
        put_f32(out, static_cast<float>(keypoint.score));
        out.append(reinterpret_cast<const char*>(descriptor.bytes.data()),
                   descriptor.bytes.size());
    }
    return out;
}

std::vector<std::pair<Keypoint, Descriptor>> parse_descriptor_file(const std::string& bytes) {
    std::size_t pos = 0;
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        raise(ErrorCode::BadHeader, "not a descriptor file (bad magic)");
    pos = 4;
    const std::uint32_t version = get_u32(bytes, pos);
    if (version != kVersion)
        raise(ErrorCode::BadHeader, "unsupported descriptor file version " +
                                        std::to_string(version));
    const std::uint32_t count = get_u32(bytes, pos);
    const std::uint32_t descriptor_bytes = get_u32(bytes, pos);
    get_u32(bytes, pos); // reserved

    std::vector<std::pair<Keypoint, Descriptor>> records;
    records.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        Keypoint k;
        k.x = get_f32(bytes, pos);
        k.y = get_f32(bytes, pos);
        k.theta = get_f32(bytes, pos);
        k.score = get_f32(bytes, pos);
        if (pos + descriptor_bytes > bytes.size())
            raise(ErrorCode::Truncated, "descriptor file ends mid-record");
        Descriptor d;
        d.bytes.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                       bytes.begin() + static_cast<std::ptrdiff_t>(pos + descriptor_bytes));
        pos += descriptor_bytes;
        records.emplace_back(k, std::move(d));
    }
    return records;
}

void save_descriptor_file(const std::vector<std::pair<Keypoint, Descriptor>>& records,
                          const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "' for writing");
    const std::string bytes = format_descriptor_file(records);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::pair<Keypoint, Descriptor>> load_descriptor_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_descriptor_file(buf.str());
}

} // namespace latch
