#include "siet/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "siet/errors.hpp"

namespace siet {

namespace {

constexpr double kLn2 = 0.6931471805599453;

struct EpsilonConfig {
    double epsilon = 0.0;
    double radius = 0.0;
    std::vector<Layer> layers;
    Constellation cst;
    double rate_achievable_bits = 0.0;
};

std::string format_p(const LayerProbabilities& probs) {
    std::ostringstream os;
    os << "p=(";
    for (std::size_t c = 0; c < probs.p.size(); ++c) os << (c ? "," : "") << probs.p[c];
    os << ")";
    return os.str();
}

// Layers for one epsilon: equal radii from the DEP requirement, inner
// amplitudes at the minimal legal spacing. Returns nullopt (with a reason)
// when an inner ring collapses or cannot hold a disk.
std::optional<EpsilonConfig> make_config(int n, int layer_count, double amplitude1,
                                         PackingMode mode, double epsilon, double sigma2,
                                         const std::optional<std::vector<int>>& fixed_counts,
                                         std::string& reason) {
    if (fixed_counts && static_cast<int>(fixed_counts->size()) != layer_count)
        throw DomainError("fixed layer counts length differs from layer count");

    EpsilonConfig cfg;
    cfg.epsilon = epsilon;
    cfg.radius = min_radius_for_dep(epsilon, n, sigma2);

    double amplitude = amplitude1;
    for (int c = 0; c < layer_count; ++c) {
        if (c > 0) amplitude -= 2.0 * cfg.radius;
        const double limit =
            fixed_counts ? 0.0 : (mode == PackingMode::strict ? cfg.radius : cfg.radius / 2.0);
        if (amplitude <= limit) {
            reason = "inner ring " + std::to_string(c + 1) + " collapsed (amplitude " +
                     std::to_string(amplitude) + " vs radius " + std::to_string(cfg.radius) + ")";
            return std::nullopt;
        }
        Layer ly;
        ly.amplitude = amplitude;
        ly.radius = cfg.radius;
        ly.count = fixed_counts ? (*fixed_counts)[c]
                                : max_symbols_per_layer(amplitude, cfg.radius, mode);
        cfg.layers.push_back(ly);
    }
    cfg.cst = build_constellation(cfg.layers);
    try {
        cfg.rate_achievable_bits = achievable_rate_geometric(cfg.cst);
    } catch (const RadiusTooLarge&) {
        // fixed layer counts can pin rings smaller than the disks allow
        reason = "radius " + std::to_string(cfg.radius) + " too large for the packing bound";
        return std::nullopt;
    }
    return cfg;
}

SweepPoint evaluate_point(int n, const EpsilonConfig& cfg, const LayerProbabilities& probs,
                          double sigma2, const EnergyModel& model) {
    const SymbolType type = counts_from_layer_probs(n, probs, cfg.layers);

    SweepPoint pt;
    pt.probs = probs;
    pt.epsilon = cfg.epsilon;
    for (const auto& ly : cfg.layers) {
        pt.radii.push_back(ly.radius);
        pt.amplitudes.push_back(ly.amplitude);
        pt.layer_sizes.push_back(ly.count);
    }

    const CodewordCount count = count_codewords(type);
    pt.rate_nats = count.log_nats / n;
    pt.rate_bits = pt.rate_nats / kLn2;
    pt.rate_stirling_nats = rate_upper_stirling(type).nats;
    pt.rate_achievable_bits = cfg.rate_achievable_bits;

    pt.energy_total = constant_composition_energy(type, cfg.cst, model);
    pt.energy_per_cu = pt.energy_total / n;
    // Outage at the code's own deliverable energy B = e_C (strict indicator).
    pt.eop = outage_probability(EnergyProfile({pt.energy_total}), pt.energy_total);

    pt.dep_lower = dep_lower_bound_log_count(count.log_nats, type, cfg.cst, sigma2);
    std::vector<int> usage(cfg.layers.size(), 0);
    for (std::size_t c = 0; c < cfg.layers.size(); ++c)
        usage[c] = static_cast<int>(std::lround(probs.p[c] * n));
    pt.dep_achievable = achievable_dep_cc(usage, cfg.layers, sigma2);
    pt.dep_bound_kind = DepBoundKind::achievable;
    return pt;
}

void sort_points(std::vector<SweepPoint>& points) {
    std::sort(points.begin(), points.end(), [](const SweepPoint& a, const SweepPoint& b) {
        if (a.energy_total != b.energy_total) return a.energy_total < b.energy_total;
        return std::lexicographical_compare(a.probs.p.begin(), a.probs.p.end(),
                                            b.probs.p.begin(), b.probs.p.end());
    });
}

}  // namespace

SweepResult sweep_region(int n, int layer_count, double amplitude1, PackingMode mode,
                         const std::vector<double>& epsilon_grid,
                         const std::vector<LayerProbabilities>& p_grid, double sigma2,
                         const EnergyModel& model,
                         const std::optional<std::vector<int>>& fixed_layer_counts) {
    if (epsilon_grid.empty() || p_grid.empty()) throw GridEmpty();

    SweepResult result;
    for (double eps : epsilon_grid) {
        std::string reason;
        const auto cfg = make_config(n, layer_count, amplitude1, mode, eps, sigma2,
                                     fixed_layer_counts, reason);
        if (!cfg) {
            result.skipped.push_back("epsilon=" + std::to_string(eps) + ": " + reason);
            continue;
        }
        for (const auto& probs : p_grid) {
            try {
                result.points.push_back(evaluate_point(n, *cfg, probs, sigma2, model));
            } catch (const NonIntegralType& e) {
                result.skipped.push_back("epsilon=" + std::to_string(eps) + " " + format_p(probs) +
                                         ": " + e.what());
            }
        }
    }
    sort_points(result.points);
    return result;
}

SweepResult sweep_region_auto_p(int n, int layer_count, double amplitude1, PackingMode mode,
                                const std::vector<double>& epsilon_grid, double sigma2,
                                const EnergyModel& model, int grid_stride,
                                const std::optional<std::vector<int>>& fixed_layer_counts) {
    if (epsilon_grid.empty()) throw GridEmpty();

    SweepResult result;
    for (double eps : epsilon_grid) {
        std::string reason;
        const auto cfg = make_config(n, layer_count, amplitude1, mode, eps, sigma2,
                                     fixed_layer_counts, reason);
        if (!cfg) {
            result.skipped.push_back("epsilon=" + std::to_string(eps) + ": " + reason);
            continue;
        }
        for_each_integral_layer_counts(cfg->layers, n, grid_stride,
                                       [&](const std::vector<int>& m) -> bool {
                                           LayerProbabilities probs;
                                           for (int v : m)
                                               probs.p.push_back(static_cast<double>(v) / n);
                                           result.points.push_back(
                                               evaluate_point(n, *cfg, probs, sigma2, model));
                                           return true;
                                       });
    }
    sort_points(result.points);
    return result;
}

std::vector<SweepPoint> frontier(const std::vector<SweepPoint>& points) {
    if (points.empty()) throw EmptyInput("frontier requires at least one point");

    std::vector<SweepPoint> out;
    for (const auto& candidate : points) {
        const bool dominated = std::any_of(points.begin(), points.end(), [&](const SweepPoint& p) {
            return p.rate_nats >= candidate.rate_nats && p.energy_total >= candidate.energy_total &&
                   (p.rate_nats > candidate.rate_nats || p.energy_total > candidate.energy_total);
        });
        if (!dominated) out.push_back(candidate);
    }
    sort_points(out);
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepPoint>& points, int layer_count) {
    std::string csv;
    for (int c = 1; c <= layer_count; ++c) csv += "p_" + std::to_string(c) + ",";
    csv += "epsilon,";
    for (int c = 1; c <= layer_count; ++c) csv += "r_" + std::to_string(c) + ",";
    for (int c = 1; c <= layer_count; ++c) csv += "A_" + std::to_string(c) + ",";
    for (int c = 1; c <= layer_count; ++c) csv += "L_" + std::to_string(c) + ",";
    csv +=
        "rate_bits,rate_nats,rate_stirling,rate_achievable_bits,"
        "energy_total,energy_per_cu,eop,dep_lower,dep_achievable\n";

    for (const auto& pt : points) {
        for (double v : pt.probs.p) csv += fmt(v) + ",";
        csv += fmt(pt.epsilon) + ",";
        for (double v : pt.radii) csv += fmt(v) + ",";
        for (double v : pt.amplitudes) csv += fmt(v) + ",";
        for (int v : pt.layer_sizes) csv += std::to_string(v) + ",";
        csv += fmt(pt.rate_bits) + "," + fmt(pt.rate_nats) + "," + fmt(pt.rate_stirling_nats) +
               "," + fmt(pt.rate_achievable_bits) + "," + fmt(pt.energy_total) + "," +
               fmt(pt.energy_per_cu) + "," + fmt(pt.eop) + "," + fmt(pt.dep_lower) + "," +
               fmt(pt.dep_achievable) + "\n";
    }
    return csv;
}

}  // namespace siet
