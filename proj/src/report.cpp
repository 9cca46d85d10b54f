/**
 * @file report.cpp
 */
#include "logimg/report.hpp"

#include "logimg/error.hpp"

#include "json.hpp"

#include <sstream>

namespace logimg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json triple(const ColorVec& v) { return ordered_json::array({v.r.value(), v.g.value(), v.b.value()}); }

AlgorithmOutcome attempt(const ImageStats& stats, Algorithm algo) {
    AlgorithmOutcome out;
    try {
        out.params = solve_params(stats, algo);
    } catch (const ZeroMeanNorm& e) {
        out.error = e.what();
    } catch (const SingularSystem& e) {
        out.error = e.what();
    }
    return out;
}

void put_outcome(ordered_json& j, const AlgorithmOutcome& o, const char* alpha, const char* beta, const char* k) {
    if (o.params) {
        j[alpha] = o.params->alpha;
        j[beta] = o.params->beta;
        j[k] = triple(o.params->k);
    } else {
        j[alpha] = nullptr;
        j[beta] = nullptr;
        j[k] = nullptr;
    }
}

}  // namespace

StatsReport make_stats_report(const RasterImage& f) {
    StatsReport r;
    r.width = f.width();
    r.height = f.height();
    r.stats = compute_stats(f);
    r.a = attempt(r.stats, Algorithm::a);
    r.b = attempt(r.stats, Algorithm::b);
    return r;
}

std::string to_json(const StatsReport& report, int indent) {
    ordered_json j;
    j["v0"] = triple(report.stats.v0);
    j["v1"] = triple(report.stats.v1);
    j["v2"] = triple(report.stats.v2);
    put_outcome(j, report.a, "alpha_a", "beta_a", "k_a");
    put_outcome(j, report.b, "alpha_b", "beta_b", "k_b");
    j["width"] = report.width;
    j["height"] = report.height;
    j["lower_counts"] = report.stats.lower_counts;
    j["upper_counts"] = report.stats.upper_counts;
    j["error_a"] = report.a.error ? ordered_json(*report.a.error) : ordered_json(nullptr);
    j["error_b"] = report.b.error ? ordered_json(*report.b.error) : ordered_json(nullptr);
    return j.dump(indent);
}

ChannelHistogram histogram(const RasterImage& f) {
    ChannelHistogram h{};
    const std::vector<std::uint8_t> codes = f.to_codes();
    for (std::size_t i = 0; i < codes.size(); ++i) {
        ++h[i % 3][codes[i]];
    }
    return h;
}

std::string histogram_csv(const ChannelHistogram& before, const ChannelHistogram& after) {
    std::ostringstream os;
    os << "code,r_before,g_before,b_before,r_after,g_after,b_after\n";
    for (std::size_t c = 0; c < 256; ++c) {
        os << c << ',' << before[0][c] << ',' << before[1][c] << ',' << before[2][c] << ',' << after[0][c] << ','
           << after[1][c] << ',' << after[2][c] << '\n';
    }
    return os.str();
}

}  // namespace logimg
