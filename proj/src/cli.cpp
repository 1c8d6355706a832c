#include "latch/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latch/descriptor.hpp"
#include "latch/detect.hpp"
#include "latch/errors.hpp"
#include "latch/eval.hpp"
#include "latch/image.hpp"
#include "latch/match.hpp"
#include "latch/pattern.hpp"

namespace latch::cli {

namespace {

constexpr std::size_t kTrainMaxPairs = 50000;

struct Options {
    std::string image;
    std::string keypoints;
    std::string pattern = "default";
    std::string probe;
    std::string gallery;
    std::string dataset;
    std::string out;
    double threshold = kDefaultFastThreshold;
    bool no_nms = false;
    double ratio = 0.0;
    bool cross_check = false;
    int max_distance = 0;
    std::size_t candidates = 50000;
    int bits = kDefaultBitCount;
    double corr_threshold = 0.2;
    std::uint64_t seed = 0;
    double rotate = 0.0;
    double noise = 0.0;
    double brightness = 0.0;
    int workers = 0;
};

TripletPattern load_pattern_arg(const std::string& arg) {
    if (arg == "default") return default_pattern();
    return load_pattern_file(arg);
}

void cmd_detect(const Options& opt) {
    const Image image = load_pgm_file(opt.image);
    const std::vector<Keypoint> keypoints = detect_and_orient(image, opt.threshold, !opt.no_nms);
    save_keypoints_file(keypoints, opt.out);
}

void cmd_describe(const Options& opt) {
    const Image image = load_pgm_file(opt.image);
    const std::vector<Keypoint> keypoints = load_keypoints_file(opt.keypoints);
    const TripletPattern pattern = load_pattern_arg(opt.pattern);
    save_descriptor_file(describe_all(image, keypoints, pattern, opt.workers), opt.out);
}

void cmd_match(const Options& opt, bool have_ratio, bool have_max_distance) {
    const auto probe_records = load_descriptor_file(opt.probe);
    const auto gallery_records = load_descriptor_file(opt.gallery);
    std::vector<Descriptor> probes, gallery;
    probes.reserve(probe_records.size());
    for (const auto& [k, d] : probe_records) probes.push_back(d);
    gallery.reserve(gallery_records.size());
    for (const auto& [k, d] : gallery_records) gallery.push_back(d);

    MatchOptions options;
    if (have_ratio) options.ratio = opt.ratio;
    options.cross_check = opt.cross_check;
    if (have_max_distance) options.max_distance = opt.max_distance;
    options.workers = opt.workers;
    save_matches_file(match_brute_force(probes, gallery, options), opt.out);
}

void cmd_train(const Options& opt) {
    const PatchDataset dataset = ingest_brown_dir(opt.dataset);
    const std::vector<PatchPair> pairs = make_pairs(dataset, kTrainMaxPairs, opt.seed);
    const std::vector<Triplet> candidates =
        sample_candidates(opt.candidates, kDefaultPatchSize, opt.seed);
    const TripletPattern pattern =
        select_triplets(candidates, dataset, pairs, opt.bits, opt.corr_threshold,
                        WeightMask::seven_by_seven(), opt.workers);
    save_pattern_file(pattern, opt.out);
}

void cmd_eval(const Options& opt) {
    const Image image = load_pgm_file(opt.image);
    const TripletPattern pattern = load_pattern_arg(opt.pattern);
    EvalOptions options;
    options.rotate_degrees = opt.rotate;
    options.noise_sigma = opt.noise;
    options.brightness_delta = opt.brightness;
    options.threshold = opt.threshold;
    options.seed = opt.seed;
    options.workers = opt.workers;
    const EvalReport report = run_eval(image, pattern, options);
    save_report_file(report, opt.out);
    std::cout << format_report(report);
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

} // namespace

int run(int argc, const char* const* argv) {
    Options opt;
    CLI::App app{"LATCH binary descriptors: detect, describe, match, train, eval"};
    app.require_subcommand(1);

    CLI::App* detect = app.add_subcommand("detect", "FAST keypoints with orientation");
    detect->add_option("--image", opt.image, "input PGM image")->required();
    detect->add_option("--threshold", opt.threshold, "FAST threshold")->capture_default_str();
    detect->add_flag("--no-nms", opt.no_nms, "keep all segment-test hits");
    detect->add_option("--out", opt.out, "keypoint TSV to write")->required();

    CLI::App* describe = app.add_subcommand("describe", "extract binary descriptors");
    describe->add_option("--image", opt.image, "input PGM image")->required();
    describe->add_option("--keypoints", opt.keypoints, "keypoint TSV")->required();
    describe->add_option("--pattern", opt.pattern, "pattern file or 'default'")->capture_default_str();
    describe->add_option("--out", opt.out, "descriptor file to write")->required();
    describe->add_option("--workers", opt.workers, "threads, 0 = all cores")->capture_default_str();

    CLI::App* match = app.add_subcommand("match", "brute-force Hamming matching");
    match->add_option("--probe", opt.probe, "probe descriptor file")->required();
    match->add_option("--gallery", opt.gallery, "gallery descriptor file")->required();
    CLI::Option* ratio_opt =
        match->add_option("--ratio", opt.ratio, "Lowe ratio test threshold in (0, 1]");
    match->add_flag("--cross-check", opt.cross_check, "mutual nearest neighbor only");
    CLI::Option* max_distance_opt =
        match->add_option("--max-distance", opt.max_distance, "distance cutoff in bits");
    match->add_option("--out", opt.out, "match TSV to write")->required();
    match->add_option("--workers", opt.workers, "threads, 0 = all cores")->capture_default_str();

    CLI::App* train = app.add_subcommand("train", "learn a triplet pattern");
    train->add_option("--dataset", opt.dataset, "patch dataset directory")->required();
    train->add_option("--candidates", opt.candidates, "candidate triplets to sample")->capture_default_str();
    train->add_option("--bits", opt.bits, "descriptor length T")->capture_default_str();
    train->add_option("--corr-threshold", opt.corr_threshold,
                      "initial decorrelation threshold")->capture_default_str();
    train->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    train->add_option("--out", opt.out, "pattern file to write")->required();
    train->add_option("--workers", opt.workers, "threads, 0 = all cores")->capture_default_str();

    CLI::App* eval = app.add_subcommand("eval", "synthetic-transformation benchmark");
    eval->add_option("--image", opt.image, "input PGM image")->required();
    eval->add_option("--rotate", opt.rotate, "rotation in degrees")->capture_default_str();
    eval->add_option("--noise", opt.noise, "Gaussian noise sigma")->capture_default_str();
    eval->add_option("--brightness", opt.brightness, "additive brightness delta")->capture_default_str();
    eval->add_option("--threshold", opt.threshold, "FAST threshold")->capture_default_str();
    eval->add_option("--pattern", opt.pattern, "pattern file or 'default'")->capture_default_str();
    eval->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    eval->add_option("--out", opt.out, "JSON report to write")->required();
    eval->add_option("--workers", opt.workers, "threads, 0 = all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // Range checks CLI11 does not express well; all are usage errors.
    if (ratio_opt->count() > 0 && !(opt.ratio > 0.0 && opt.ratio <= 1.0))
        return usage_error("--ratio must be in (0, 1]");
    if (max_distance_opt->count() > 0 && opt.max_distance < 0)
        return usage_error("--max-distance must be >= 0");
    if (opt.threshold <= 0.0) return usage_error("--threshold must be > 0");
    if (opt.workers < 0) return usage_error("--workers must be >= 0");
    if (opt.bits <= 0 || opt.bits % 8 != 0)
        return usage_error("--bits must be a positive multiple of 8");
    if (opt.corr_threshold < 0.0) return usage_error("--corr-threshold must be >= 0");
    if (opt.noise < 0.0) return usage_error("--noise must be >= 0");

    try {
        if (detect->parsed()) cmd_detect(opt);
        else if (describe->parsed()) cmd_describe(opt);
        else if (match->parsed())
            cmd_match(opt, ratio_opt->count() > 0, max_distance_opt->count() > 0);
        else if (train->parsed()) cmd_train(opt);
        else if (eval->parsed()) cmd_eval(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("latch");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace latch::cli
