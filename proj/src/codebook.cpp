#include "siet/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "siet/errors.hpp"
#include "siet/rng.hpp"

namespace siet {

SymbolType::SymbolType(std::vector<int> counts) : counts_(std::move(counts)) {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0)
            throw DomainError("type count for symbol " + std::to_string(i) + " is negative");
        n_ += counts_[i];
    }
    if (n_ == 0) throw DomainError("type has zero total count");
}

int SymbolType::support_size() const {
    return static_cast<int>(std::count_if(counts_.begin(), counts_.end(),
                                          [](int c) { return c > 0; }));
}

void validate_layer_probabilities(const LayerProbabilities& probs) {
    double sum = 0.0;
    for (double v : probs.p) {
        if (v < 0.0) throw DomainError("layer probability is negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DomainError("layer probabilities sum to " + std::to_string(sum) + ", expected 1");
}

void validate_codebook(const Codebook& cb) {
    if (cb.codewords.empty()) throw EmptyInput("codebook has no codewords");
    if (cb.n < 1) throw DomainError("codebook blocklength must be >= 1");
    const int L = cb.constellation.size();
    for (const auto& w : cb.codewords) {
        if (static_cast<int>(w.size()) != cb.n)
            throw DomainError("codeword length differs from blocklength");
        for (int idx : w)
            if (idx < 0 || idx >= L)
                throw IndexOutOfRange("codeword symbol index " + std::to_string(idx) + " out of range");
    }
    std::set<Codeword> distinct(cb.codewords.begin(), cb.codewords.end());
    if (distinct.size() != cb.codewords.size())
        throw DomainError("codebook contains duplicate codewords");
}

SymbolType counts_from_layer_probs(int n, const LayerProbabilities& probs,
                                   const std::vector<Layer>& layers) {
    if (n < 1) throw DomainError("blocklength must be >= 1");
    if (probs.p.size() != layers.size())
        throw DomainError("probability vector length differs from layer count");
    validate_layer_probabilities(probs);

    std::vector<int> counts;
    long long total = 0;
    for (std::size_t c = 0; c < layers.size(); ++c) {
        const double per_symbol = n * probs.p[c] / layers[c].count;
        const double rounded = std::round(per_symbol);
        if (std::abs(per_symbol - rounded) > 1e-9)
            throw NonIntegralType("n*p_c/L_c = " + std::to_string(per_symbol) +
                                  " is not integral for layer " + std::to_string(c));
        const int k = static_cast<int>(rounded);
        for (int l = 0; l < layers[c].count; ++l) counts.push_back(k);
        total += static_cast<long long>(k) * layers[c].count;
    }
    if (total != n)
        throw NonIntegralType("per-layer counts sum to " + std::to_string(total) +
                              ", expected n = " + std::to_string(n));
    return SymbolType(std::move(counts));
}

CodewordCount count_codewords(const SymbolType& type) {
    CodewordCount out;
    out.exact = 1;
    // exact = n! / prod(c_i!) built incrementally as a product of binomials
    int used = 0;
    for (int c : type.counts()) {
        for (int j = 1; j <= c; ++j) {
            ++used;
            out.exact *= used;
            out.exact /= j;
        }
    }
    out.log_nats = std::lgamma(type.n() + 1.0);
    for (int c : type.counts()) out.log_nats -= std::lgamma(c + 1.0);
    return out;
}

namespace {

Codeword sorted_word_of_type(const SymbolType& type) {
    Codeword word;
    word.reserve(type.n());
    for (std::size_t idx = 0; idx < type.counts().size(); ++idx)
        for (int j = 0; j < type.counts()[idx]; ++j) word.push_back(static_cast<int>(idx));
    return word;
}

}  // namespace

std::vector<Codeword> enumerate_codewords(const SymbolType& type, std::uint64_t cap) {
    if (cap < 1) throw DomainError("enumeration cap must be >= 1");
    Codeword word = sorted_word_of_type(type);
    std::vector<Codeword> out;
    do {
        out.push_back(word);
        if (out.size() >= cap) break;
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Codeword> sample_codewords(const SymbolType& type, std::uint64_t m, std::uint64_t seed) {
    const CodewordCount total = count_codewords(type);
    if (BigInt(m) > total.exact)
        throw RequestExceedsCount("requested " + std::to_string(m) + " codewords, type admits only " +
                                  total.exact.str());

    SplitMix64 rng(stream_key(seed, 0x5a6d70u));
    Codeword word = sorted_word_of_type(type);
    std::set<Codeword> seen;
    std::vector<Codeword> out;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = 100 * m;
    while (out.size() < m) {
        if (attempts++ >= max_attempts)
            throw SamplingExhausted("duplicate rejection exceeded " + std::to_string(max_attempts) +
                                    " attempts; use enumerate_codewords for dense requests");
        // Fisher-Yates; portable (no std::shuffle, whose output is unspecified)
        for (std::size_t i = word.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
            std::swap(word[i], word[j]);
        }
        if (seen.insert(word).second) out.push_back(word);
    }
    return out;
}

void for_each_integral_layer_counts(const std::vector<Layer>& layers, int n, int stride,
                                    const std::function<bool(const std::vector<int>&)>& visit) {
    if (stride < 1) throw DomainError("grid stride must be >= 1");
    const int C = static_cast<int>(layers.size());
    std::vector<int> m(C, 0);
    std::function<bool(int, int)> rec = [&](int c, int remaining) -> bool {
        if (c == C - 1) {
            if (remaining % layers[c].count != 0) return true;
            m[c] = remaining;
            return visit(m);
        }
        const int step = layers[c].count * stride;
        for (int v = 0; v <= remaining; v += step) {
            m[c] = v;
            if (!rec(c + 1, remaining - v)) return false;
        }
        return true;
    };
    rec(0, n);
}

CodeTypeInfo code_type(const Codebook& cb) {
    if (cb.codewords.empty()) throw EmptyInput("codebook has no codewords");
    CodeTypeInfo info;
    const int L = cb.constellation.size();
    std::vector<double> totals(L, 0.0);
    for (const auto& w : cb.codewords) {
        std::vector<int> counts(L, 0);
        for (int idx : w) counts.at(idx)++;
        for (int i = 0; i < L; ++i) totals[i] += counts[i];
        info.per_codeword.emplace_back(std::move(counts));
    }
    const double denom = static_cast<double>(cb.codewords.size()) * cb.n;
    info.average.resize(L);
    for (int i = 0; i < L; ++i) info.average[i] = totals[i] / denom;
    info.constant_composition =
        std::all_of(info.per_codeword.begin(), info.per_codeword.end(),
                    [&](const SymbolType& t) { return t == info.per_codeword.front(); });
    return info;
}

}  // namespace siet
