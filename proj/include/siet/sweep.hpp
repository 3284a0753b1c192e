#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siet/bounds.hpp"
#include "siet/codebook.hpp"
#include "siet/energy.hpp"

namespace siet {

enum class DepBoundKind { necessary, achievable };

/// One evaluated (epsilon, p) configuration of the region sweep.
struct SweepPoint {
    LayerProbabilities probs;
    double epsilon = 0.0;
    std::vector<double> radii;
    std::vector<double> amplitudes;
    std::vector<int> layer_sizes;
    double rate_bits = 0.0;
    double rate_nats = 0.0;
    double rate_stirling_nats = 0.0;
    double rate_achievable_bits = 0.0;
    double energy_total = 0.0;
    double energy_per_cu = 0.0;
    double eop = 0.0;
    double dep_lower = 0.0;
    double dep_achievable = 0.0;
    DepBoundKind dep_bound_kind = DepBoundKind::achievable;
};

struct SweepResult {
    std::vector<SweepPoint> points;     // sorted by (energy, p lexicographic)
    std::vector<std::string> skipped;   // grid entries dropped, with reasons
};

/// Evaluates the information-energy region over the (epsilon, p) grid.
///
/// For each epsilon: all disk radii are set to min_radius_for_dep, inner
/// amplitudes are placed at the minimal legal spacing A_{c+1} = A_c - 2r,
/// and layer sizes come from the packing mode (or from `fixed_layer_counts`
/// when given, for configurations whose ring sizes are externally
/// specified rather than packed). Each integral p then yields rates (exact, Stirling, achievable),
/// energy, EOP at B = e_C, and both DEP bounds. Non-integral types and
/// configurations whose inner rings collapse are skipped and logged.
SweepResult sweep_region(int n, int layer_count, double amplitude1, PackingMode mode,
                         const std::vector<double>& epsilon_grid,
                         const std::vector<LayerProbabilities>& p_grid, double sigma2,
                         const EnergyModel& model = {},
                         const std::optional<std::vector<int>>& fixed_layer_counts = std::nullopt);

/// As above, but enumerating every integral p for each epsilon instead of
/// taking an explicit p grid (stride coarsens the per-layer count steps).
SweepResult sweep_region_auto_p(int n, int layer_count, double amplitude1, PackingMode mode,
                                const std::vector<double>& epsilon_grid, double sigma2,
                                const EnergyModel& model = {}, int grid_stride = 1,
                                const std::optional<std::vector<int>>& fixed_layer_counts =
                                    std::nullopt);

/// Pareto-nondominated subset under (maximize rate, maximize energy), sorted
/// by energy ascending; rate is nonincreasing along the result.
std::vector<SweepPoint> frontier(const std::vector<SweepPoint>& points);

/// Fixed-header CSV serialization of a sweep (layer count C fixes the
/// variable column groups).
std::string sweep_to_csv(const std::vector<SweepPoint>& points, int layer_count);

}  // namespace siet
