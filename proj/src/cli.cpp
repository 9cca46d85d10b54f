/**
 * @file cli.cpp
 * @brief Subcommands enhance, stats, report and verify
 */
#include "logimg/cli.hpp"

#include "logimg/enhance.hpp"
#include "logimg/error.hpp"
#include "logimg/image_io.hpp"
#include "logimg/reference_cases.hpp"
#include "logimg/report.hpp"
#include "logimg/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace logimg {

namespace {

namespace fs = std::filesystem;

Algorithm parse_algorithm(const std::string& s) {
    if (s == "A" || s == "a") return Algorithm::a;
    if (s == "B" || s == "b") return Algorithm::b;
    throw InvalidArgument("--algo must be A or B, got '" + s + "'");
}

ColorVec parse_k(const std::string& s) {
    std::array<double, 3> v{};
    std::istringstream is(s);
    std::string item;
    std::size_t n = 0;
    while (std::getline(is, item, ',')) {
        if (n == 3) throw InvalidArgument("--k takes exactly three comma-separated values");
        std::size_t used = 0;
        try {
            v[n] = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidArgument("--k: cannot parse '" + item + "'");
        if (!(v[n] > -1.0 && v[n] < 1.0)) throw InvalidArgument("--k components must lie strictly inside (-1, 1)");
        ++n;
    }
    if (n != 3) throw InvalidArgument("--k takes exactly three comma-separated values");
    return ColorVec::make(v[0], v[1], v[2]);
}

bool same_file(const fs::path& a, const fs::path& b) {
    std::error_code ec;
    if (fs::equivalent(a, b, ec)) return true;
    return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

void write_text(const std::string& text, const std::string& dest, std::ostream& out) {
    if (dest == "-") {
        out << text;
        return;
    }
    std::ofstream f(dest, std::ios::trunc);
    if (!f) throw IoError("cannot open '" + dest + "' for writing");
    f << text;
    if (!f) throw IoError("write error on '" + dest + "'");
}

struct EnhanceArgs {
    std::string algo;
    std::optional<double> alpha, beta;
    std::string k;
    std::string in, out, json;
    unsigned threads = 0;
};

int cmd_enhance(const EnhanceArgs& a, std::ostream& out) {
    const bool manual = a.alpha || a.beta || !a.k.empty();
    if (manual == !a.algo.empty()) {
        throw InvalidArgument("enhance: give either --algo or all of --alpha, --beta, --k");
    }
    if (manual && (!a.alpha || !a.beta || a.k.empty())) {
        throw InvalidArgument("enhance: manual mode needs --alpha, --beta and --k");
    }
    if (manual && !a.json.empty()) {
        throw InvalidArgument("enhance: --json is only available with --algo");
    }
    if (same_file(a.in, a.out)) {
        throw InvalidArgument("enhance: --out must differ from --in");
    }
    const Parallelism par = a.threads == 0 ? Parallelism::hardware() : Parallelism{a.threads};

    if (manual) {
        const AffineParams params{*a.alpha, *a.beta, parse_k(a.k)};
        const RasterImage f = load_image(a.in);
        save_image(apply_affine(f, params, par), a.out);
        return kExitOk;
    }
    const Algorithm algo = parse_algorithm(a.algo);
    format_from_extension(a.out);
    const RasterImage f = load_image(a.in);
    const EnhanceResult res = enhance_auto(f, algo, par);
    save_image(res.image, a.out);
    if (!a.json.empty()) {
        write_text(to_json(make_stats_report(f)) + "\n", a.json, out);
    }
    return kExitOk;
}

int cmd_stats(const std::string& in, const std::string& json, std::ostream& out) {
    const RasterImage f = load_image(in);
    write_text(to_json(make_stats_report(f)) + "\n", json.empty() ? "-" : json, out);
    return kExitOk;
}

int cmd_report(const std::string& algo_name, const std::string& in, const std::string& csv, std::ostream& out) {
    const Algorithm algo = parse_algorithm(algo_name);
    if (same_file(in, csv)) {
        throw InvalidArgument("report: --out must differ from --in");
    }
    const RasterImage f = load_image(in);
    const EnhanceResult res = enhance_auto(f, algo, Parallelism::hardware());
    write_text(histogram_csv(histogram(f), histogram(res.image)), csv, out);
    return kExitOk;
}

int print_checks(const char* title, const std::vector<CheckResult>& checks, std::ostream& out) {
    int failed = 0;
    out << title << '\n';
    for (const CheckResult& c : checks) {
        out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail << '\n';
        failed += c.passed ? 0 : 1;
    }
    out << "  " << checks.size() - static_cast<std::size_t>(failed) << '/' << checks.size() << " passed\n";
    return failed;
}

int cmd_verify(const AxiomOptions& opts, std::ostream& out) {
    if (opts.samples == 0) throw InvalidArgument("verify: --samples must be positive");
    if (!(opts.tolerance >= 0.0)) throw InvalidArgument("verify: --tolerance must be non-negative");
    out << "samples " << opts.samples << ", seed " << opts.seed << ", tolerance " << opts.tolerance << '\n';
    int failed = print_checks("algebra properties", run_axiom_checks(opts), out);
    failed += print_checks("reference parameters (+/-0.005)", run_reference_regressions(kReferenceTolerance), out);
    out << (failed == 0 ? "verify: OK\n" : "verify: FAILED\n");
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Color image enhancement in a bounded logarithmic color space", "logimg"};
    app.require_subcommand(1);

    EnhanceArgs ea;
    double alpha = 0.0, beta = 0.0;
    auto* enhance = app.add_subcommand("enhance", "Enhance an image with algorithm A/B or manual parameters");
    enhance->add_option("--algo", ea.algo, "A (constant translation) or B (translation along the mean)");
    auto* alpha_opt = enhance->add_option("--alpha", alpha, "Manual scale");
    auto* beta_opt = enhance->add_option("--beta", beta, "Manual translation amount");
    enhance->add_option("--k", ea.k, "Manual translation vector r,g,b in (-1,1)");
    enhance->add_option("--in", ea.in, "Input image (PNG or PPM)")->required();
    enhance->add_option("--out", ea.out, "Output image (.png or .ppm)")->required();
    enhance->add_option("--json", ea.json, "Write the statistics report to a path, or - for stdout");
    enhance->add_option("--threads", ea.threads, "Worker threads (0 = all cores)");

    std::string st_in, st_json;
    auto* stats = app.add_subcommand("stats", "Print channel statistics and both parameter sets as JSON");
    stats->add_option("--in", st_in, "Input image")->required();
    stats->add_option("--json", st_json, "Output path, or - for stdout (default)");

    std::string rp_algo, rp_in, rp_out;
    auto* report = app.add_subcommand("report", "Write before/after channel histograms as CSV");
    report->add_option("--algo", rp_algo, "A or B")->required();
    report->add_option("--in", rp_in, "Input image")->required();
    report->add_option("--out", rp_out, "CSV output path, or - for stdout")->required();

    AxiomOptions vo;
    auto* verify = app.add_subcommand("verify", "Run the algebra property suite and reference regressions");
    verify->add_option("--samples", vo.samples, "Random samples per property")->capture_default_str();
    verify->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
    verify->add_option("--tolerance", vo.tolerance, "Tolerance for the algebra properties")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "logimg: " << e.what() << '\n';
        return kExitUsage;
    }
    if (*alpha_opt) ea.alpha = alpha;
    if (*beta_opt) ea.beta = beta;

    try {
        if (*enhance) return cmd_enhance(ea, out);
        if (*stats) return cmd_stats(st_in, st_json, out);
        if (*report) return cmd_report(rp_algo, rp_in, rp_out, out);
        if (*verify) return cmd_verify(vo, out);
    } catch (const InvalidArgument& e) {
        err << "logimg: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ZeroMeanNorm& e) {
        err << "logimg: " << e.what() << '\n';
        return kExitUndefined;
    } catch (const SingularSystem& e) {
        err << "logimg: " << e.what() << '\n';
        return kExitUndefined;
    } catch (const Error& e) {
        err << "logimg: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace logimg
