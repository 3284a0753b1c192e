#include "siet/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "siet/errors.hpp"

namespace siet {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double normalize_phase(double phase) {
    double p = std::fmod(phase, kTwoPi);
    if (p < 0.0) p += kTwoPi;
    if (p >= kTwoPi) p = 0.0;  // fmod can land exactly on 2*pi after the add
    return p;
}

// asin with the documented 1e-12 slack at the domain edge.
double checked_asin(double x) {
    if (x > 1.0) {
        if (x > 1.0 + 1e-12) throw RadiusTooLarge("arcsin argument " + std::to_string(x) + " exceeds 1");
        x = 1.0;
    }
    if (x < -1.0) {
        if (x < -1.0 - 1e-12) throw RadiusTooLarge("arcsin argument " + std::to_string(x) + " below -1");
        x = -1.0;
    }
    return std::asin(x);
}

}  // namespace

int Constellation::layer_of(int symbol_index) const {
    if (symbol_index < 0 || symbol_index >= size())
        throw IndexOutOfRange("symbol index " + std::to_string(symbol_index) + " out of range");
    auto it = std::upper_bound(layer_start_.begin(), layer_start_.end(), symbol_index);
    return static_cast<int>(it - layer_start_.begin()) - 1;
}

std::complex<double> Constellation::symbol(int symbol_index) const {
    if (symbol_index < 0 || symbol_index >= size())
        throw IndexOutOfRange("symbol index " + std::to_string(symbol_index) + " out of range");
    return symbols_[symbol_index];
}

Constellation build_constellation(std::vector<Layer> layers) {
    if (layers.empty()) throw EmptyLayers();
    for (std::size_t c = 0; c < layers.size(); ++c) {
        auto& ly = layers[c];
        if (!(ly.amplitude > 0.0))
            throw NonPositiveInput("layer " + std::to_string(c) + ": amplitude must be > 0");
        if (ly.count < 1)
            throw NonPositiveInput("layer " + std::to_string(c) + ": count must be >= 1");
        if (!(ly.radius > 0.0))
            throw NonPositiveInput("layer " + std::to_string(c) + ": radius must be > 0");
        ly.phase = normalize_phase(ly.phase);
        if (c > 0 && !(layers[c - 1].amplitude > ly.amplitude))
            throw NonDecreasingAmplitudes("layer amplitudes must be strictly decreasing (layers " +
                                          std::to_string(c - 1) + ", " + std::to_string(c) + ")");
    }

    Constellation cst;
    cst.layers_ = std::move(layers);
    int flat = 0;
    for (const auto& ly : cst.layers_) {
        cst.layer_start_.push_back(flat);
        for (int l = 0; l < ly.count; ++l) {
            const double ang = kTwoPi * l / ly.count + ly.phase;
            cst.symbols_.push_back(std::polar(ly.amplitude, ang));
            ++flat;
        }
    }
    return cst;
}

FarthestNeighbor farthest_neighbor(const Constellation& cst, int symbol_index) {
    if (cst.size() < 2) throw SingleSymbolConstellation();
    const auto ref = cst.symbol(symbol_index);

    FarthestNeighbor best;
    for (int j = 0; j < cst.size(); ++j) {
        if (j == symbol_index) continue;
        const double d = std::abs(ref - cst.symbols()[j]);
        if (d > best.distance) {
            best.index = j;
            best.symbol = cst.symbols()[j];
            best.distance = d;
        }
    }
    return best;
}

int max_symbols_per_layer(double amplitude, double radius, PackingMode mode) {
    if (!(amplitude > 0.0) || !(radius > 0.0))
        throw NonPositiveInput("amplitude and radius must be > 0");

    // Floor boundaries get a 1e-12 relative slack, matching the slack at the
    // arcsin domain edge; exact-equality inputs (asin(1/2) = pi/6) otherwise
    // flip on the last ulp.
    if (mode == PackingMode::paper) {
        // L <= pi / (2 asin(r / 2A)); requires r <= 2A.
        const double half = checked_asin(radius / (2.0 * amplitude));
        const double value = M_PI / (2.0 * half);
        return static_cast<int>(std::floor(value * (1.0 + 1e-12)));
    }

    // strict: largest L with adjacent chord 2 A sin(pi/L) >= 2r.
    const double x = radius / amplitude;
    if (x > 1.0 + 1e-12) throw RadiusTooLarge("strict packing requires radius <= amplitude");
    if (x >= 1.0) return 2;  // chord 2A at L=2, exactly 2r
    int guess = static_cast<int>(std::floor(M_PI / checked_asin(x) * (1.0 + 1e-12)));
    if (guess < 2) guess = 2;
    const double x_slack = x * (1.0 - 1e-12);
    while (std::sin(M_PI / (guess + 1)) >= x_slack) ++guess;
    while (guess > 2 && std::sin(M_PI / guess) < x_slack) --guess;
    return guess;
}

double min_radius_for_dep(double epsilon, int n, double sigma2) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw DomainError("epsilon must lie in (0, 1)");
    if (n < 1) throw DomainError("blocklength must be >= 1");
    if (!(sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");

    const double miss = 1.0 - std::pow(1.0 - epsilon, 1.0 / n);  // e^{-r^2/sigma^2}
    return std::sqrt(sigma2 * std::log(1.0 / miss));
}

std::vector<SpacingViolation> validate_layer_spacing(const Constellation& cst) {
    std::vector<SpacingViolation> out;
    const auto& layers = cst.layers();
    for (std::size_t c = 0; c + 1 < layers.size(); ++c) {
        const double gap = std::abs(layers[c].amplitude - layers[c + 1].amplitude);
        const double required = layers[c].radius + layers[c + 1].radius;
        if (gap < required)
            out.push_back({static_cast<int>(c), static_cast<int>(c + 1), gap, required});
    }
    return out;
}

bool regions_disjoint(const Constellation& cst) {
    if (!validate_layer_spacing(cst).empty()) return false;
    for (const auto& ly : cst.layers()) {
        if (ly.count < 2) continue;
        const double chord = 2.0 * ly.amplitude * std::sin(M_PI / ly.count);
        if (chord < 2.0 * ly.radius * (1.0 - 1e-12)) return false;
    }
    return true;
}

}  // namespace siet
