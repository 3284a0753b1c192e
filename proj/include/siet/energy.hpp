#pragma once

#include <vector>

#include "siet/codebook.hpp"
#include "siet/constellation.hpp"

namespace siet {

/// Nonlinear harvester model: per-symbol energy k1*|x|^2 + k2*|x|^4.
struct EnergyModel {
    double k1 = 0.0034;
    double k2 = 0.3829;
};

/// Per-codeword harvested energies plus the sorted unique levels
/// 0 < e_1 < ... < e_M' with multiplicities. Levels are grouped with a
/// relative tolerance of 1e-9 to absorb round-off (exact ties are the norm
/// because types are discrete).
class EnergyProfile {
public:
    explicit EnergyProfile(std::vector<double> energies);

    const std::vector<double>& per_codeword() const { return per_codeword_; }
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<int>& multiplicities() const { return multiplicities_; }
    int codeword_count() const { return static_cast<int>(per_codeword_.size()); }

private:
    std::vector<double> per_codeword_;
    std::vector<double> levels_;
    std::vector<int> multiplicities_;
};

/// Energy harvested from one codeword: k1 * sum |u_m|^2 + k2 * sum |u_m|^4.
double codeword_energy(const Codeword& word, const Constellation& cst, const EnergyModel& model);

/// Energy shared by every codeword of a constant-composition code with the
/// given type; equals codeword_energy of any codeword of that type.
double constant_composition_energy(const SymbolType& type, const Constellation& cst,
                                   const EnergyModel& model);

/// Layered closed form n * sum_c p_c (k1 A_c^2 + k2 A_c^4).
double constant_composition_energy(int n, const LayerProbabilities& probs,
                                   const std::vector<Layer>& layers, const EnergyModel& model);

/// Energy profile of a whole codebook.
EnergyProfile energy_profile(const Codebook& cb, const EnergyModel& model);

/// Fraction of codewords with energy strictly below B.
double outage_probability(const EnergyProfile& profile, double B);

/// Converse ceiling on the deliverable energy B for outage budget delta.
/// `threshold_level` is the smallest unique level whose cumulative codeword
/// fraction reaches delta (the j+ rule). `max_feasible` is the largest level
/// whose outage still meets delta; the two differ exactly when delta equals
/// a cumulative fraction (flagged, never silently resolved).
struct EnergyCeiling {
    double threshold_level = 0.0;
    double max_feasible = 0.0;
    bool boundary_case = false;
};

EnergyCeiling max_energy_for_eop(const EnergyProfile& profile, double delta);

}  // namespace siet
