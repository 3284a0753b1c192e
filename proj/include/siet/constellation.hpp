#pragma once

#include <complex>
#include <vector>

namespace siet {

/// One ring of a layered circular constellation: `count` symbols of equal
/// magnitude `amplitude`, equally spaced in phase starting at `phase`, each
/// carrying a decoding disk of radius `radius`.
struct Layer {
    double amplitude = 0.0;
    int count = 0;
    double phase = 0.0;
    double radius = 0.0;
};

/// Layered circular constellation. Symbols are stored layer-major with angle
/// ascending inside each layer, so flat indices are deterministic.
class Constellation {
public:
    const std::vector<Layer>& layers() const { return layers_; }
    const std::vector<std::complex<double>>& symbols() const { return symbols_; }

    int size() const { return static_cast<int>(symbols_.size()); }
    int layer_count() const { return static_cast<int>(layers_.size()); }

    /// Layer index owning flat symbol index `symbol_index`.
    int layer_of(int symbol_index) const;

    /// Decoding-disk radius of the layer owning `symbol_index`.
    double radius_of(int symbol_index) const { return layers_[layer_of(symbol_index)].radius; }

    std::complex<double> symbol(int symbol_index) const;

private:
    friend Constellation build_constellation(std::vector<Layer> layers);

    std::vector<Layer> layers_;
    std::vector<std::complex<double>> symbols_;
    std::vector<int> layer_start_;  // flat index of each layer's first symbol
};

/// Validates the layer list (non-empty, strictly decreasing amplitudes,
/// positive counts/radii) and materializes the symbols
/// A_c * exp(i (2*pi*l / L_c + alpha_c)), l = 0..L_c-1.
/// Phases are normalized into [0, 2*pi).
Constellation build_constellation(std::vector<Layer> layers);

struct FarthestNeighbor {
    int index = -1;
    std::complex<double> symbol;
    double distance = 0.0;
};

/// Farthest constellation point from symbol `symbol_index` (ties broken by
/// lowest index). Requires at least two symbols.
FarthestNeighbor farthest_neighbor(const Constellation& cst, int symbol_index);

enum class PackingMode {
    paper,  // floor(pi / (2 asin(r / 2A))), may allow overlapping disks
    strict  // largest L with adjacent chord 2 A sin(pi/L) >= 2r
};

/// Maximum number of symbols a ring of the given amplitude can carry with
/// per-symbol disks of the given radius.
int max_symbols_per_layer(double amplitude, double radius, PackingMode mode);

/// Smallest equal disk radius r such that a length-n code decoded on disks
/// has DEP at most epsilon: r = sqrt(sigma2 * log(1 / (1 - (1-eps)^(1/n)))).
double min_radius_for_dep(double epsilon, int n, double sigma2);

struct SpacingViolation {
    int outer_layer = 0;  // index c of the outer ring in the failing pair
    int inner_layer = 0;  // index c+1
    double gap = 0.0;
    double required = 0.0;
};

/// Checks |A_c - A_{c+1}| >= r_c + r_{c+1} for every adjacent layer pair.
/// Returns the list of failing pairs; empty means all disks of distinct
/// layers are disjoint. Reports, never throws.
std::vector<SpacingViolation> validate_layer_spacing(const Constellation& cst);

/// True when every layer also satisfies the in-ring strict packing condition
/// 2 A_c sin(pi/L_c) >= 2 r_c, i.e. all decoding disks are pairwise disjoint.
bool regions_disjoint(const Constellation& cst);

}  // namespace siet
