// Converts a trained pattern file into the C++ table compiled in as
// default_pattern(). Usage: freeze_pattern <pattern-file> > pattern_default.cpp

#include <cstdio>

#include "latch/pattern.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: freeze_pattern <pattern-file>\n");
        return 1;
    }
    latch::TripletPattern p;
    try {
        p = latch::load_pattern_file(argv[1]);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    if (p.mask != latch::WeightMask::seven_by_seven()) {
        std::fprintf(stderr, "error: expected the shipped 7x7 mask\n");
        return 1;
    }

    std::printf("#include \"latch/pattern.hpp\"\n\n");
    std::printf("namespace latch {\n\nnamespace {\n\n");
    std::printf("// Trained triplet table (%d bits, %dx%d patches, 7x7 mask), frozen from\n",
                p.bit_count, p.patch_size, p.patch_size);
    std::printf("// the synthetic multi-view training run. Six values per bit:\n");
    std::printf("// anchor x, y; companion1 x, y; companion2 x, y.\n");
    std::printf("constexpr short kDefaultTriplets[%d][6] = {\n", p.bit_count);
    for (int i = 0; i < p.bit_count; ++i) {
        const latch::Triplet& t = p.triplets[static_cast<std::size_t>(i)];
        std::printf("    {%d, %d, %d, %d, %d, %d},\n", t.ax, t.ay, t.bx, t.by, t.cx, t.cy);
    }
    std::printf("};\n\n} // namespace\n\n");
    std::printf("const TripletPattern& default_pattern() {\n");
    std::printf("    static const TripletPattern pattern = [] {\n");
    std::printf("        TripletPattern p;\n");
    std::printf("        p.bit_count = %d;\n", p.bit_count);
    std::printf("        p.patch_size = %d;\n", p.patch_size);
    std::printf("        p.mask = WeightMask::seven_by_seven();\n");
    std::printf("        p.triplets.reserve(%d);\n", p.bit_count);
    std::printf("        for (const auto& t : kDefaultTriplets)\n");
    std::printf("            p.triplets.push_back({t[0], t[1], t[2], t[3], t[4], t[5]});\n");
    std::printf("        return p;\n");
    std::printf("    }();\n");
    std::printf("    return pattern;\n");
    std::printf("}\n\n} // namespace latch\n");
    return 0;
}
