/**
 * @file acceptance.cpp
 * @brief Acceptance criteria; prints one PASS/FAIL line per criterion
 *
 * Usage: logimg_acceptance [--criterion N]   (N in 1..7, default: all)
 */
#include "logimg/enhance.hpp"
#include "logimg/image_io.hpp"
#include "logimg/reference_cases.hpp"
#include "logimg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace logimg;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1. Reference parameters within +/-0.005, under 1 s.
Outcome reference_regression() {
    const auto t0 = Clock::now();
    const auto results = run_reference_regressions(kReferenceTolerance);
    const double elapsed = seconds_since(t0);
    std::size_t ok = 0;
    std::string failures;
    for (const auto& r : results) {
        std::printf("      %s %-10s %s\n", r.passed ? "ok  " : "FAIL", r.name.c_str(), r.detail.c_str());
        if (r.passed) {
            ++ok;
        } else {
            failures += " " + r.name;
        }
    }
    const bool pass = ok == 8 && results.size() == 8 && elapsed < 1.0;
    return {pass, fmt("%zu/8 pairs within 0.005 in %.3f s%s%s", ok, elapsed, failures.empty() ? "" : "; failing:",
                      failures.c_str())};
}

// 2. Algorithm A's k is (tanh 1)^3 and prints as 0.762.
Outcome translation_constant() {
    const ImageStats s = reference_cases()[0].stats();
    const AffineParams p = solve_params(s, Algorithm::a);
    bool pass = true;
    std::string printed;
    for (std::size_t c = 0; c < 3; ++c) {
        pass = pass && p.k[c].value() == std::tanh(1.0);
        const std::string v = fmt("%.3f", p.k[c].value());
        pass = pass && v == "0.762";
        printed += (c ? "," : "") + v;
    }
    return {pass, "k_A = (" + printed + ")"};
}

// 3. Property suite, 1e4 samples at 1e-9, under 5 s.
Outcome axiom_suite() {
    const auto t0 = Clock::now();
    AxiomOptions opts;
    opts.samples = 10000;
    opts.tolerance = 1e-9;
    const auto results = run_axiom_checks(opts);
    const double elapsed = seconds_since(t0);
    std::size_t ok = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++ok;
        } else {
            std::printf("      FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
        }
    }
    return {ok == results.size() && elapsed < 5.0,
            fmt("%zu/%zu properties at 1e-9 over %zu samples in %.2f s", ok, results.size(), opts.samples, elapsed)};
}

// 4. Closed form vs exhaustive grid, within one step, under 30 s.
Outcome oracle_equivalence() {
    constexpr double kHalfwidth = 4.0;
    constexpr double kStep = 0.001;
    const auto t0 = Clock::now();

    std::vector<LsqSystem> systems;
    for (const auto& rc : reference_cases()) {
        systems.push_back(build_system_a(rc.stats()));
        systems.push_back(build_system_b(rc.stats()));
    }
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    std::size_t random_count = 0;
    while (random_count < 20) {
        ImageStats s;
        for (std::size_t c = 0; c < 3; ++c) {
            std::array<double, 3> v{u(rng), u(rng), u(rng)};
            std::sort(v.begin(), v.end());
            s.v1[c] = LogScalar::make(v[0]);
            s.v0[c] = LogScalar::make(v[1]);
            s.v2[c] = LogScalar::make(v[2]);
        }
        const LsqSystem sys = (random_count % 2 == 0) ? build_system_a(s) : build_system_b(s);
        const LsqSolution sol = solve_mmse(sys);
        // Keep systems whose optimum lies inside the searched grid.
        if (std::abs(sol.alpha) > kHalfwidth - 0.1 || std::abs(sol.beta) > kHalfwidth - 0.1) continue;
        systems.push_back(sys);
        ++random_count;
    }

    std::size_t ok = 0;
    double worst = 0.0;
    for (const auto& sys : systems) {
        const LsqSolution closed = solve_mmse(sys);
        const LsqSolution grid = mmse_oracle(sys, kHalfwidth, kStep);
        const double dev = std::max(std::abs(closed.alpha - grid.alpha), std::abs(closed.beta - grid.beta));
        worst = std::max(worst, dev);
        if (dev <= kStep * (1.0 + 1e-9)) {
            ++ok;
        } else {
            // Show that the grid node nearest the closed form scores worse than
            // the grid minimum while the closed form beats both.
            const double na = std::round(closed.alpha / kStep) * kStep, nb = std::round(closed.beta / kStep) * kStep;
            const NormalEquations n = normal_equations(sys);
            std::printf("      off by %.2e: closed (%.6f, %.6f) grid min (%.3f, %.3f); c_vv %.4f c_uu %.4f c_vu %.4f\n"
                        "        rss closed %.10f <= grid min %.10f < nearest node %.10f\n",
                        dev, closed.alpha, closed.beta, grid.alpha, grid.beta, n.c_vv, n.c_uu, n.c_vu,
                        residual_sum_squares(sys, closed.alpha, closed.beta),
                        residual_sum_squares(sys, grid.alpha, grid.beta), residual_sum_squares(sys, na, nb));
        }
    }
    const double elapsed = seconds_since(t0);
    return {ok == systems.size() && elapsed < 30.0,
            fmt("%zu/%zu systems within one step (worst %.2e) in %.1f s", ok, systems.size(), worst, elapsed)};
}

// 5. Codec round trip and symmetry over all codes.
Outcome codec() {
    int bad = 0;
    for (int c = 0; c < 256; ++c) {
        if (encode_channel(decode_channel(c)) != c) ++bad;
        if (decode_channel(c).value() != -decode_channel(255 - c).value()) ++bad;
    }
    return {bad == 0, fmt("256 codes, %d violations", bad)};
}

RasterImage dark_image() {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> code(10, 90);
    constexpr int w = 96, h = 64;
    std::vector<std::uint8_t> rgb(static_cast<std::size_t>(w * h * 3));
    for (auto& c : rgb) c = static_cast<std::uint8_t>(code(rng));
    return RasterImage::from_codes(w, h, rgb);
}

std::vector<std::size_t> argsort(const RasterImage& f, std::size_t c) {
    std::vector<std::size_t> idx(f.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return f[a][c] < f[b][c]; });
    return idx;
}

// 6. Algorithm A on a dark image: mean moves toward mid-gray, spread grows,
// channel order is preserved.
Outcome end_to_end() {
    const RasterImage f = dark_image();
    const ImageStats before = compute_stats(f);
    bool dark = true;
    for (std::size_t c = 0; c < 3; ++c) dark = dark && before.v0[c].value() < -0.4;

    const EnhanceResult r = enhance_auto(f, Algorithm::a);
    const ImageStats after = compute_stats(r.image);
    const bool toward_center = norm3(after.v0) < norm3(before.v0);
    bool spread = true, order = r.params.alpha > 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        spread = spread && (after.v2[c].value() - after.v1[c].value()) > (before.v2[c].value() - before.v1[c].value());
        order = order && argsort(f, c) == argsort(r.image, c);
    }
    return {dark && toward_center && spread && order,
            fmt("dark=%d |v0| %.4f -> %.4f, spread grows=%d, alpha=%.4f, order preserved=%d", dark, norm3(before.v0),
                norm3(after.v0), spread, r.params.alpha, order)};
}

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 7. Repeated and parallel runs give byte-identical files.
Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / "logimg_acceptance";
    fs::create_directories(dir);
    RasterImage f = dark_image();
    std::vector<std::uint8_t> alpha(f.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = static_cast<std::uint8_t>(i);
    f.set_alpha(alpha);

    bool same = true;
    for (const char* ext : {".png", ".ppm"}) {
        std::vector<std::string> outputs;
        const std::vector<Parallelism> runs = {Parallelism::sequential(), Parallelism::sequential(), Parallelism{4},
                                               Parallelism{7}};
        for (std::size_t i = 0; i < runs.size(); ++i) {
            for (Algorithm algo : {Algorithm::a, Algorithm::b}) {
                const fs::path p = dir / ("run" + std::to_string(i) + std::string(to_string(algo)) + ext);
                save_image(enhance_auto(f, algo, runs[i]).image, p);
                outputs.push_back(file_bytes(p));
            }
        }
        for (std::size_t i = 2; i < outputs.size(); ++i) same = same && outputs[i] == outputs[i % 2];
    }
    return {same, "sequential x2, 4 and 7 threads, PNG and PPM, algorithms A and B"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    const std::vector<Criterion> criteria = {
        {1, "reference parameter regression", reference_regression},
        {2, "algorithm A translation constant", translation_constant},
        {3, "algebra property suite", axiom_suite},
        {4, "closed form vs grid oracle", oracle_equivalence},
        {5, "channel codec", codec},
        {6, "end-to-end enhancement of a dark image", end_to_end},
        {7, "determinism", determinism},
    };
    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        Outcome o{false, "exception"};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d. %s: %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.passed ? 0 : 1;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
