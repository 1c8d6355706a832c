#include "latch/image.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "latch/errors.hpp"

namespace latch {

namespace {

// Reads the next header token, skipping whitespace and "#" comments.
std::string next_token(const std::string& bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        char c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else {
            break;
        }
    }
    std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])) &&
           bytes[pos] != '#') {
        ++pos;
    }
    return bytes.substr(start, pos - start);
}

int parse_int(const std::string& token, const char* what) {
    if (token.empty()) raise(ErrorCode::Malformed, std::string("missing ") + what);
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            raise(ErrorCode::Malformed, std::string("non-numeric ") + what + " '" + token + "'");
    }
    long v = 0;
    try {
        v = std::stol(token);
    } catch (const std::exception&) {
        raise(ErrorCode::Malformed, std::string("unparsable ") + what + " '" + token + "'");
    }
    return static_cast<int>(v);
}

} // namespace

Image load_pgm(const std::string& bytes) {
    std::size_t pos = 0;
    const std::string magic = next_token(bytes, pos);
    if (magic != "P5") raise(ErrorCode::NotPGM, "expected magic 'P5', got '" + magic + "'");

    const int width = parse_int(next_token(bytes, pos), "width");
    const int height = parse_int(next_token(bytes, pos), "height");
    const int maxval = parse_int(next_token(bytes, pos), "maxval");
    if (width < 1 || height < 1) raise(ErrorCode::Malformed, "non-positive dimensions");
    if (maxval < 1) raise(ErrorCode::Malformed, "maxval must be >= 1");
    if (maxval > 255) raise(ErrorCode::UnsupportedDepth, "maxval > 255 not supported");

    // Exactly one whitespace byte separates the header from the payload.
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
        raise(ErrorCode::Malformed, "missing separator before payload");
    ++pos;

    const std::size_t count = static_cast<std::size_t>(width) * height;
    if (bytes.size() - pos < count)
        raise(ErrorCode::Truncated, "payload has " + std::to_string(bytes.size() - pos) +
                                        " bytes, need " + std::to_string(count));

    Image image(width, height);
    for (std::size_t i = 0; i < count; ++i)
        image.data[i] = static_cast<double>(static_cast<unsigned char>(bytes[pos + i]));
    return image;
}

std::string save_pgm(const Image& image) {
    std::string out = "P5\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n255\n";
    out.reserve(out.size() + image.data.size());
    for (double v : image.data) {
        long b = std::lround(v); // rounds half away from zero
        if (b < 0) b = 0;
        if (b > 255) b = 255;
        out.push_back(static_cast<char>(static_cast<unsigned char>(b)));
    }
    return out;
}

Image load_pgm_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_pgm(buf.str());
}

void save_pgm_file(const Image& image, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(ErrorCode::Malformed, "cannot open '" + path + "' for writing");
    const std::string bytes = save_pgm(image);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) raise(ErrorCode::Malformed, "write failed for '" + path + "'");
}

double sample_bilinear(const Image& image, double x, double y) {
    if (!(x >= 0.0 && x <= image.width - 1 && y >= 0.0 && y <= image.height - 1))
        raise(ErrorCode::OutOfBounds, "sample (" + std::to_string(x) + ", " +
                                          std::to_string(y) + ") outside image");
    int x0 = static_cast<int>(std::floor(x));
    int y0 = static_cast<int>(std::floor(y));
    if (x0 > image.width - 2) x0 = image.width - 2;   // x == width-1 lands here
    if (y0 > image.height - 2) y0 = image.height - 2; // same for the last row
    if (x0 < 0) x0 = 0; // width == 1
    if (y0 < 0) y0 = 0;
    const int x1 = x0 + 1 < image.width ? x0 + 1 : x0;
    const int y1 = y0 + 1 < image.height ? y0 + 1 : y0;
    const double fx = x - x0;
    const double fy = y - y0;
    const double top = (1.0 - fx) * image.at(x0, y0) + fx * image.at(x1, y0);
    const double bottom = (1.0 - fx) * image.at(x0, y1) + fx * image.at(x1, y1);
    return (1.0 - fy) * top + fy * bottom;
}

namespace {

// cos/sin with quarter-turn values snapped exactly to {-1, 0, 1}, so that
// multiples of pi/2 act as exact lattice permutations.
void rotation_terms(double angle, double& c, double& s) {
    c = std::cos(angle);
    s = std::sin(angle);
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    if (std::abs(c - 1.0) < 1e-15) c = 1.0;
    if (std::abs(c + 1.0) < 1e-15) c = -1.0;
    if (std::abs(s - 1.0) < 1e-15) s = 1.0;
    if (std::abs(s + 1.0) < 1e-15) s = -1.0;
}

} // namespace

Point forward_point(const SimilarityTransform& t, int width, int height, Point p) {
    double c, s;
    rotation_terms(t.angle, c, s);
    const double cx = (width - 1) / 2.0;
    const double cy = (height - 1) / 2.0;
    const double dx = p.x - cx;
    const double dy = p.y - cy;
    return Point{t.scale * (c * dx - s * dy) + cx + t.tx,
                 t.scale * (s * dx + c * dy) + cy + t.ty};
}

Image warp_similarity(const Image& image, const SimilarityTransform& t) {
    if (!(t.scale > 0.0) || !std::isfinite(t.scale))
        raise(ErrorCode::BadScale, "scale must be finite and > 0");
    double c, s;
    rotation_terms(t.angle, c, s);
    const double cx = (image.width - 1) / 2.0;
    const double cy = (image.height - 1) / 2.0;

    Image out(image.width, image.height);
    for (int v = 0; v < image.height; ++v) {
        for (int u = 0; u < image.width; ++u) {
            // Inverse map: undo translation, then rotate by -angle / scale.
            const double dx = (u - t.tx) - cx;
            const double dy = (v - t.ty) - cy;
            const double sx = (c * dx + s * dy) / t.scale + cx;
            const double sy = (-s * dx + c * dy) / t.scale + cy;
            if (sx >= 0.0 && sx <= image.width - 1 && sy >= 0.0 && sy <= image.height - 1)
                out.at(u, v) = sample_bilinear(image, sx, sy);
        }
    }
    return out;
}

Image warp_similarity(const Image& image, double angle, double scale, double tx, double ty) {
    return warp_similarity(image, SimilarityTransform{angle, scale, tx, ty});
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPGM: return "NotPGM";
        case ErrorCode::UnsupportedDepth: return "UnsupportedDepth";
        case ErrorCode::Truncated: return "Truncated";
        case ErrorCode::Malformed: return "Malformed";
        case ErrorCode::OutOfBounds: return "OutOfBounds";
        case ErrorCode::BadScale: return "BadScale";
        case ErrorCode::ImageTooSmall: return "ImageTooSmall";
        case ErrorCode::TooCloseToBorder: return "TooCloseToBorder";
        case ErrorCode::BadHeader: return "BadHeader";
        case ErrorCode::BadTripletCount: return "BadTripletCount";
        case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case ErrorCode::DegenerateTriplet: return "DegenerateTriplet";
        case ErrorCode::MissingInfo: return "MissingInfo";
        case ErrorCode::GridSizeMismatch: return "GridSizeMismatch";
        case ErrorCode::LabelParse: return "LabelParse";
        case ErrorCode::NoPositives: return "NoPositives";
        case ErrorCode::NoNegatives: return "NoNegatives";
        case ErrorCode::EmptyPairs: return "EmptyPairs";
        case ErrorCode::InsufficientCandidates: return "InsufficientCandidates";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptyGallery: return "EmptyGallery";
        case ErrorCode::NoKeypoints: return "NoKeypoints";
    }
    return "UnknownError";
}

} // namespace latch
