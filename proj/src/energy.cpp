#include "siet/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "siet/errors.hpp"

namespace siet {

EnergyProfile::EnergyProfile(std::vector<double> energies) : per_codeword_(std::move(energies)) {
    if (per_codeword_.empty()) throw EmptyInput("energy profile needs at least one codeword");
    std::vector<double> sorted = per_codeword_;
    std::sort(sorted.begin(), sorted.end());
    for (double e : sorted) {
        if (!levels_.empty() &&
            std::abs(e - levels_.back()) <= 1e-9 * std::max(std::abs(e), std::abs(levels_.back()))) {
            multiplicities_.back()++;
        } else {
            levels_.push_back(e);
            multiplicities_.push_back(1);
        }
    }
}

namespace {

double symbol_energy(double magnitude_sq, const EnergyModel& model) {
    return model.k1 * magnitude_sq + model.k2 * magnitude_sq * magnitude_sq;
}

}  // namespace

double codeword_energy(const Codeword& word, const Constellation& cst, const EnergyModel& model) {
    double sum2 = 0.0, sum4 = 0.0;
    for (int idx : word) {
        const double m2 = std::norm(cst.symbol(idx));
        sum2 += m2;
        sum4 += m2 * m2;
    }
    return model.k1 * sum2 + model.k2 * sum4;
}

double constant_composition_energy(const SymbolType& type, const Constellation& cst,
                                   const EnergyModel& model) {
    if (static_cast<int>(type.counts().size()) != cst.size())
        throw DomainError("type length differs from constellation size");
    double total = 0.0;
    for (std::size_t idx = 0; idx < type.counts().size(); ++idx) {
        const int c = type.counts()[idx];
        if (c == 0) continue;
        total += c * symbol_energy(std::norm(cst.symbols()[idx]), model);
    }
    return total;
}

double constant_composition_energy(int n, const LayerProbabilities& probs,
                                   const std::vector<Layer>& layers, const EnergyModel& model) {
    if (probs.p.size() != layers.size())
        throw DomainError("probability vector length differs from layer count");
    validate_layer_probabilities(probs);
    double per_cu = 0.0;
    for (std::size_t c = 0; c < layers.size(); ++c) {
        const double a2 = layers[c].amplitude * layers[c].amplitude;
        per_cu += probs.p[c] * symbol_energy(a2, model);
    }
    return n * per_cu;
}

EnergyProfile energy_profile(const Codebook& cb, const EnergyModel& model) {
    std::vector<double> energies;
    energies.reserve(cb.codewords.size());
    for (const auto& w : cb.codewords) energies.push_back(codeword_energy(w, cb.constellation, model));
    return EnergyProfile(std::move(energies));
}

double outage_probability(const EnergyProfile& profile, double B) {
    if (B < 0.0) throw DomainError("energy requirement B must be >= 0");
    long long below = 0;
    for (double e : profile.per_codeword())
        if (e < B) ++below;
    return static_cast<double>(below) / profile.codeword_count();
}

EnergyCeiling max_energy_for_eop(const EnergyProfile& profile, double delta) {
    if (delta < 0.0 || delta > 1.0) throw DomainError("delta must lie in [0, 1]");
    const int M = profile.codeword_count();
    const int levels = static_cast<int>(profile.levels().size());

    EnergyCeiling out;
    int cumulative = 0;
    for (int j = 0; j < levels; ++j) {
        cumulative += profile.multiplicities()[j];
        const double fraction = static_cast<double>(cumulative) / M;
        if (delta <= fraction) {
            out.threshold_level = profile.levels()[j];
            // The next level up is still feasible exactly when delta sits on
            // the cumulative fraction: outage just below e_{j+1} equals it.
            if (delta == fraction && j + 1 < levels) {
                out.max_feasible = profile.levels()[j + 1];
                out.boundary_case = true;
            } else {
                out.max_feasible = out.threshold_level;
            }
            return out;
        }
    }
    // Unreachable: the cumulative fraction reaches 1 >= delta at the last level.
    throw Error("no feasible energy level found");
}

}  // namespace siet
