#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "siet/constellation.hpp"

namespace siet {

using BigInt = boost::multiprecision::cpp_int;

/// A codeword as a vector of flat symbol indices, one per channel use.
using Codeword = std::vector<int>;

/// Empirical distribution (type) of symbols across one codeword: integer
/// occurrence counts per flat symbol index, summing to the blocklength n.
class SymbolType {
public:
    SymbolType() = default;
    explicit SymbolType(std::vector<int> counts);

    int n() const { return n_; }
    const std::vector<int>& counts() const { return counts_; }
    int count(int symbol_index) const { return counts_.at(symbol_index); }
    double prob(int symbol_index) const { return static_cast<double>(counts_.at(symbol_index)) / n_; }

    /// Number of symbols with nonzero count.
    int support_size() const;

    bool operator==(const SymbolType& other) const = default;

private:
    std::vector<int> counts_;
    int n_ = 0;
};

/// Per-layer probability mass vector p = (p_1, ..., p_C).
struct LayerProbabilities {
    std::vector<double> p;
};

/// Throws DomainError unless p is a probability vector (within 1e-9).
void validate_layer_probabilities(const LayerProbabilities& probs);

/// A code: constellation, blocklength, and M codewords over symbol indices.
/// Decoding-region radii live on the constellation layers.
struct Codebook {
    Constellation constellation;
    int n = 0;
    std::vector<Codeword> codewords;

    int message_count() const { return static_cast<int>(codewords.size()); }
};

/// Throws on invalid indices, empty codebooks, duplicate codewords, or
/// codeword lengths differing from n.
void validate_codebook(const Codebook& cb);

/// Builds the type generated by using every symbol of layer c with count
/// n * p_c / L_c. Throws NonIntegralType unless all per-symbol counts are
/// integral (no silent rounding).
SymbolType counts_from_layer_probs(int n, const LayerProbabilities& probs,
                                   const std::vector<Layer>& layers);

struct CodewordCount {
    BigInt exact;      // multinomial n! / prod(counts!)
    double log_nats;   // log of the same, via lgamma
};

/// Number of distinct codewords exhibiting the given type.
CodewordCount count_codewords(const SymbolType& type);

/// All codewords of the type in lexicographic order, capped at `cap`.
std::vector<Codeword> enumerate_codewords(const SymbolType& type, std::uint64_t cap);

/// m distinct codewords of the type, sampled by seeded shuffles with
/// duplicate rejection (at most 100*m attempts). Deterministic in
/// (type, m, seed) across platforms and thread counts.
std::vector<Codeword> sample_codewords(const SymbolType& type, std::uint64_t m, std::uint64_t seed);

struct CodeTypeInfo {
    std::vector<double> average;          // P_C(x), averaged over codewords
    std::vector<SymbolType> per_codeword;
    bool constant_composition = false;
};

/// Per-codeword types, their average, and the constant-composition flag.
CodeTypeInfo code_type(const Codebook& cb);

/// Calls `visit` with every vector (m_1, ..., m_C) of per-layer channel-use
/// counts summing to n with L_c | m_c, in lexicographic order. `stride`
/// coarsens the step on all but the last coordinate. Stops when `visit`
/// returns false.
void for_each_integral_layer_counts(const std::vector<Layer>& layers, int n, int stride,
                                    const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace siet
