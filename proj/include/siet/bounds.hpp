#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "siet/codebook.hpp"
#include "siet/constellation.hpp"
#include "siet/energy.hpp"

namespace siet {

/// Standard normal tail probability, via the complementary error function
/// (absolute accuracy better than 1e-12).
double q_function(double x);

struct RateBound {
    double nats = 0.0;
    double bits = 0.0;
};

/// Necessary-condition lower bound on the DEP of a constant-composition
/// code: (M-1) Q( sqrt( sum_l n P(x_l) d_l^2 / (2 sigma^2) ) ) with d_l the
/// farthest-neighbor distance of symbol l. Clamped to [0, 1]; the union-style
/// expression can exceed 1, where it is vacuous as a probability bound.
double dep_lower_bound(int M, const SymbolType& type, const Constellation& cst, double sigma2);

/// Same bound with M supplied as a natural log (for counts too large to
/// materialize); evaluated in the log domain so huge M and tiny Q do not
/// overflow each other. Treats M-1 as M.
double dep_lower_bound_log_count(double log_m_nats, const SymbolType& type,
                                 const Constellation& cst, double sigma2);

/// Exact rate ceiling (1/n) log of the multinomial codeword count.
RateBound rate_upper_exact(const SymbolType& type);

/// Stirling relaxation of rate_upper_exact:
///   H(P) + (1/n^2)(1/12 - sum 1/(12P+1))
///        + (1/n)(log sqrt(2 pi) - sum log sqrt(2 pi P)) - (log n / n)(L-1)/2
/// in nats over the type's support. Always >= rate_upper_exact.
RateBound rate_upper_stirling(const SymbolType& type);

/// Necessary-condition lower bound on the EOP: the outage indicator for
/// constant-composition profiles, the averaged indicator otherwise. Both
/// equal outage_probability of the profile.
double eop_lower(const EnergyProfile& profile, double B, bool constant_composition);

/// Exact DEP of the product-of-disks decoder:
///   1 - (1/M) sum_i prod_c (1 - exp(-r_c^2/sigma^2))^{n_c(i)}
/// where n_c(i) counts layer-c symbols in codeword i. Requires pairwise
/// disjoint decoding disks (throws OverlappingRegions otherwise).
double achievable_dep(const Codebook& cb, double sigma2);

/// Same closed form for a constant-composition code described by layer
/// usage counts m_c = n p_c (no codebook materialization). Radii are not
/// validated here; callers pass constellations that already pack.
double achievable_dep_cc(const std::vector<int>& layer_use_counts,
                         const std::vector<Layer>& layers, double sigma2);

/// log2 of the summed per-layer packing limits floor(pi/(2 asin(r_c/2A_c))).
double achievable_rate_geometric(const Constellation& cst);

/// Constant-composition achievable rate
///   (1/n) log( n! / prod_c ((n p_c / L_c)!)^{L_c} );
/// equals rate_upper_exact of the induced type.
RateBound achievable_rate_cc(int n, const LayerProbabilities& probs,
                             const std::vector<Layer>& layers);

/// Achievable EOP of a codebook under the layered energy model; equals the
/// outage probability of its energy profile.
double achievable_eop(const Codebook& cb, double B, const EnergyModel& model);

/// Every necessary-condition and achievability bound for one
/// constant-composition configuration.
struct BoundReport {
    double dep_lower = 0.0;
    RateBound rate_upper_exact;
    RateBound rate_upper_stirling;
    double eop_lower = 0.0;
    double energy_upper = 0.0;
    double dep_achievable = 0.0;
    double rate_achievable_geometric_bits = 0.0;
    RateBound rate_achievable_cc;
    double eop_achievable = 0.0;
};

/// Evaluates the full report for a constant-composition configuration.
BoundReport evaluate_bounds(int n, std::uint64_t M, const Constellation& cst,
                            const LayerProbabilities& probs, double sigma2, double B,
                            const EnergyModel& model = {});

/// One inequality of the achievability check: required target vs the exact
/// value the construction attains. Satisfied iff the target admits the value.
struct FeasibilityMargin {
    const char* name = "";
    double target = 0.0;
    double achieved = 0.0;
    bool satisfied = false;
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<LayerProbabilities> witness;
    std::optional<SymbolType> witness_type;
    double witness_dep = 0.0;
    double witness_eop = 0.0;
    double witness_energy = 0.0;
    RateBound witness_rate;               // CC rate of the witness type
    std::vector<FeasibilityMargin> margins;  // witness margins, or the best
                                             // failing point's margins
};

/// Searches integral layer-probability vectors (per-symbol counts n p_c/L_c
/// integral, layer counts stepping by `grid_stride` multiples of L_c) for one
/// making (n, M, cst) an (epsilon, B, delta) code per the achievability
/// inequalities. The witness is the lexicographically smallest feasible p.
FeasibilityResult check_tuple_feasibility(int n, std::uint64_t M, const Constellation& cst,
                                          double epsilon, double B, double delta, double sigma2,
                                          const EnergyModel& model = {}, int grid_stride = 1);

}  // namespace siet
