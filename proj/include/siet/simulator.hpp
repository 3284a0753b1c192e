#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "siet/codebook.hpp"

namespace siet {

/// AWGN channel setup. sigma2 is the total complex noise variance; real and
/// imaginary parts each carry sigma2/2.
struct ChannelConfig {
    double sigma2 = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000000;
};

struct SimResult {
    double dep_estimate = 0.0;
    double std_error = 0.0;                  // sqrt(p(1-p)/trials)
    std::vector<std::uint64_t> per_message_errors;
    std::uint64_t trials_used = 0;
};

enum class Decoder { min_distance, regions };

/// Adds complex circularly symmetric Gaussian noise to the symbols. The
/// noise stream is derived from (cfg.seed, trial_index), so the output is
/// independent of execution order and thread count.
std::vector<std::complex<double>> add_noise(const std::vector<std::complex<double>>& symbols,
                                            const ChannelConfig& cfg, std::uint64_t trial_index);

/// argmin_i |y - u(i)|^2, ties broken by smallest message index.
int decode_min_distance(const std::vector<std::complex<double>>& y, const Codebook& cb);

/// The unique message whose per-symbol disks contain every coordinate of y,
/// or nullopt (erasure) if some coordinate falls outside all disks or the
/// containing symbols do not spell a codeword. Requires disjoint disks.
std::optional<int> decode_by_regions(const std::vector<std::complex<double>>& y, const Codebook& cb);

/// Monte-Carlo DEP estimate: draws messages uniformly, transmits over the
/// AWGN channel, decodes, and reports the error fraction with its binomial
/// standard error. Erasures count as errors. Reproducible given cfg,
/// regardless of SIET_THREADS.
SimResult estimate_dep(const Codebook& cb, Decoder decoder, const ChannelConfig& cfg);

/// Worker count used for trial-parallel loops: SIET_THREADS when set, else
/// hardware concurrency. Never affects results, only wall time.
unsigned worker_count();

}  // namespace siet
