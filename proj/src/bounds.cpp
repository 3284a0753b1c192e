#include "siet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "siet/errors.hpp"

namespace siet {

namespace {

constexpr double kLn2 = 0.6931471805599453;

RateBound from_nats(double nats) { return {nats, nats / kLn2}; }

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / M_SQRT2); }

namespace {

double log_q_function(double x) {
    // Q(35) ~ 1e-268 still sits comfortably above DBL_MIN; beyond that use
    // the leading asymptotic term Q(x) ~ phi(x)/x.
    if (x <= 35.0) return std::log(q_function(x));
    return -0.5 * x * x - std::log(x) - 0.5 * std::log(2.0 * M_PI);
}

// sqrt( sum_l n P(x_l) |x_l - far(x_l)|^2 / (2 sigma^2) ), the Q argument of
// the DEP necessary condition.
double dep_bound_q_argument(const SymbolType& type, const Constellation& cst, double sigma2) {
    if (!(sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");
    if (static_cast<int>(type.counts().size()) != cst.size())
        throw DomainError("type length differs from constellation size");
    if (cst.size() < 2) throw SingleSymbolConstellation();

    double weighted = 0.0;
    for (int l = 0; l < cst.size(); ++l) {
        const int c = type.counts()[l];
        if (c == 0) continue;
        const double d = farthest_neighbor(cst, l).distance;
        weighted += c * d * d;
    }
    return std::sqrt(weighted / (2.0 * sigma2));
}

}  // namespace

double dep_lower_bound(int M, const SymbolType& type, const Constellation& cst, double sigma2) {
    if (M < 2) throw DomainError("DEP lower bound requires M >= 2");
    const double value = (M - 1) * q_function(dep_bound_q_argument(type, cst, sigma2));
    return std::clamp(value, 0.0, 1.0);
}

double dep_lower_bound_log_count(double log_m_nats, const SymbolType& type,
                                 const Constellation& cst, double sigma2) {
    if (log_m_nats <= 0.0) return 0.0;  // M = 1: no confusable pair
    const double log_value = log_m_nats + log_q_function(dep_bound_q_argument(type, cst, sigma2));
    return log_value >= 0.0 ? 1.0 : std::exp(log_value);
}

RateBound rate_upper_exact(const SymbolType& type) {
    return from_nats(count_codewords(type).log_nats / type.n());
}

RateBound rate_upper_stirling(const SymbolType& type) {
    const double n = type.n();
    double entropy = 0.0;
    double inv_sum = 0.0;
    double log_sum = 0.0;
    int support = 0;
    for (int c : type.counts()) {
        if (c == 0) continue;  // zero-mass symbols are excluded from L
        const double p = c / n;
        entropy -= p * std::log(p);
        inv_sum += 1.0 / (12.0 * p + 1.0);
        log_sum += std::log(std::sqrt(2.0 * M_PI * p));
        ++support;
    }
    const double nats = entropy + (1.0 / (n * n)) * (1.0 / 12.0 - inv_sum) +
                        (1.0 / n) * (std::log(std::sqrt(2.0 * M_PI)) - log_sum) -
                        (std::log(n) / n) * (support - 1) / 2.0;
    return from_nats(nats);
}

double eop_lower(const EnergyProfile& profile, double B, bool constant_composition) {
    if (constant_composition) {
        if (profile.levels().size() != 1)
            throw DomainError("constant-composition profile must have a single energy level");
        return profile.levels().front() < B ? 1.0 : 0.0;
    }
    return outage_probability(profile, B);
}

double achievable_dep_cc(const std::vector<int>& layer_use_counts,
                         const std::vector<Layer>& layers, double sigma2) {
    if (layer_use_counts.size() != layers.size())
        throw DomainError("layer usage vector length differs from layer count");
    double prod = 1.0;
    for (std::size_t c = 0; c < layers.size(); ++c) {
        const double r = layers[c].radius;
        const double inside = 1.0 - std::exp(-r * r / sigma2);
        prod *= std::pow(inside, layer_use_counts[c]);
    }
    return 1.0 - prod;
}

double achievable_dep(const Codebook& cb, double sigma2) {
    if (!(sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");
    if (!regions_disjoint(cb.constellation))
        throw OverlappingRegions("decoding disks are not pairwise disjoint");

    const auto& layers = cb.constellation.layers();
    double success_sum = 0.0;
    std::vector<int> usage(layers.size());
    for (const auto& word : cb.codewords) {
        std::fill(usage.begin(), usage.end(), 0);
        for (int idx : word) usage[cb.constellation.layer_of(idx)]++;
        success_sum += 1.0 - achievable_dep_cc(usage, layers, sigma2);
    }
    return 1.0 - success_sum / cb.codewords.size();
}

double achievable_rate_geometric(const Constellation& cst) {
    long long total = 0;
    for (const auto& ly : cst.layers())
        total += max_symbols_per_layer(ly.amplitude, ly.radius, PackingMode::paper);
    return std::log2(static_cast<double>(total));
}

RateBound achievable_rate_cc(int n, const LayerProbabilities& probs,
                             const std::vector<Layer>& layers) {
    return rate_upper_exact(counts_from_layer_probs(n, probs, layers));
}

double achievable_eop(const Codebook& cb, double B, const EnergyModel& model) {
    return outage_probability(energy_profile(cb, model), B);
}

BoundReport evaluate_bounds(int n, std::uint64_t M, const Constellation& cst,
                            const LayerProbabilities& probs, double sigma2, double B,
                            const EnergyModel& model) {
    const SymbolType type = counts_from_layer_probs(n, probs, cst.layers());

    BoundReport report;
    if (M < 2)
        report.dep_lower = 0.0;  // the bound concerns confusable message pairs
    else if (M <= static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        report.dep_lower = dep_lower_bound(static_cast<int>(M), type, cst, sigma2);
    else
        report.dep_lower =
            dep_lower_bound_log_count(std::log(static_cast<double>(M)), type, cst, sigma2);
    report.rate_upper_exact = rate_upper_exact(type);
    report.rate_upper_stirling = rate_upper_stirling(type);

    const double e_cc = constant_composition_energy(type, cst, model);
    report.eop_lower = e_cc < B ? 1.0 : 0.0;
    report.energy_upper = e_cc;
    report.eop_achievable = report.eop_lower;

    std::vector<int> usage(cst.layer_count());
    for (int l = 0; l < cst.size(); ++l) usage[cst.layer_of(l)] += type.counts()[l];
    report.dep_achievable = achievable_dep_cc(usage, cst.layers(), sigma2);
    report.rate_achievable_geometric_bits = achievable_rate_geometric(cst);
    report.rate_achievable_cc = report.rate_upper_exact;
    return report;
}

namespace {

struct GridPoint {
    std::vector<int> layer_counts;  // m_c = n p_c
    std::vector<FeasibilityMargin> margins;
    int satisfied = 0;
};

}  // namespace

FeasibilityResult check_tuple_feasibility(int n, std::uint64_t M, const Constellation& cst,
                                          double epsilon, double B, double delta, double sigma2,
                                          const EnergyModel& model, int grid_stride) {
    if (n < 1) throw DomainError("blocklength must be >= 1");
    if (M < 1) throw DomainError("M must be >= 1");
    if (grid_stride < 1) throw DomainError("grid stride must be >= 1");
    if (!(sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");

    const auto& layers = cst.layers();
    const double rate_target_bits = std::log2(static_cast<double>(M)) / n;
    const double rate_geometric = achievable_rate_geometric(cst);

    FeasibilityResult result;
    GridPoint best_fail;
    best_fail.satisfied = -1;

    for_each_integral_layer_counts(layers, n, grid_stride, [&](const std::vector<int>& m) -> bool {
        GridPoint pt;
        pt.layer_counts = m;

        const double dep = achievable_dep_cc(m, layers, sigma2);
        const double energy = [&] {
            double e = 0.0;
            for (std::size_t c = 0; c < layers.size(); ++c) {
                const double a2 = layers[c].amplitude * layers[c].amplitude;
                e += m[c] * (model.k1 * a2 + model.k2 * a2 * a2);
            }
            return e;
        }();
        const double eop = energy < B ? 1.0 : 0.0;

        std::vector<int> counts;
        for (std::size_t c = 0; c < layers.size(); ++c) {
            const int per_symbol = m[c] / layers[c].count;
            counts.insert(counts.end(), layers[c].count, per_symbol);
        }
        const SymbolType type{counts};
        const CodewordCount count = count_codewords(type);
        const double rate_cc_bits = count.log_nats / kLn2 / n;

        pt.margins = {
            {"dep", epsilon, dep, dep <= epsilon},
            {"rate_geometric_bits", rate_target_bits, rate_geometric,
             rate_target_bits <= rate_geometric},
            {"rate_cc_bits", rate_target_bits, rate_cc_bits, BigInt(M) <= count.exact},
            {"eop", delta, eop, eop <= delta},
            {"energy_ceiling", B, energy, B <= energy},
        };
        pt.satisfied = static_cast<int>(
            std::count_if(pt.margins.begin(), pt.margins.end(),
                          [](const FeasibilityMargin& f) { return f.satisfied; }));

        if (pt.satisfied == static_cast<int>(pt.margins.size())) {
            LayerProbabilities probs;
            for (std::size_t c = 0; c < layers.size(); ++c)
                probs.p.push_back(static_cast<double>(m[c]) / n);
            result.feasible = true;
            result.witness = probs;
            result.witness_type = type;
            result.witness_dep = dep;
            result.witness_eop = eop;
            result.witness_energy = energy;
            result.witness_rate = from_nats(count.log_nats / n);
            result.margins = pt.margins;
            return false;  // first hit in lex order is the witness
        }
        if (pt.satisfied > best_fail.satisfied ||
            (pt.satisfied == best_fail.satisfied &&
             pt.layer_counts < best_fail.layer_counts)) {
            best_fail = pt;
        }
        return true;
    });

    if (!result.feasible) result.margins = best_fail.margins;
    return result;
}

}  // namespace siet
