#include "siet/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "siet/errors.hpp"
#include "siet/rng.hpp"

namespace siet {

namespace {

// Domain tag separating the message stream from the noise stream of a trial.
constexpr std::uint64_t kMessageTag = 0x6d65737361676573ULL;

void add_noise_inplace(std::vector<std::complex<double>>& y, double noise_std, SplitMix64& stream) {
    for (auto& v : y) {
        double g0, g1;
        stream.next_normal_pair(g0, g1);
        v += std::complex<double>(noise_std * g0, noise_std * g1);
    }
}

std::vector<std::vector<std::complex<double>>> materialize(const Codebook& cb) {
    std::vector<std::vector<std::complex<double>>> words(cb.codewords.size());
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
        words[i].reserve(cb.n);
        for (int idx : cb.codewords[i]) words[i].push_back(cb.constellation.symbol(idx));
    }
    return words;
}

}  // namespace

std::vector<std::complex<double>> add_noise(const std::vector<std::complex<double>>& symbols,
                                            const ChannelConfig& cfg, std::uint64_t trial_index) {
    if (!(cfg.sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");
    std::vector<std::complex<double>> y = symbols;
    SplitMix64 stream(stream_key(cfg.seed, trial_index));
    add_noise_inplace(y, std::sqrt(cfg.sigma2 / 2.0), stream);
    return y;
}

int decode_min_distance(const std::vector<std::complex<double>>& y, const Codebook& cb) {
    if (cb.codewords.empty()) throw EmptyInput("codebook has no codewords");
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
        double d = 0.0;
        for (int m = 0; m < cb.n; ++m)
            d += std::norm(y[m] - cb.constellation.symbols()[cb.codewords[i][m]]);
        if (d < best_dist) {
            best_dist = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::optional<int> decode_by_regions(const std::vector<std::complex<double>>& y, const Codebook& cb) {
    if (!regions_disjoint(cb.constellation))
        throw OverlappingRegions("decoding disks are not pairwise disjoint");

    Codeword hit(cb.n);
    for (int m = 0; m < cb.n; ++m) {
        int found = -1;
        for (int l = 0; l < cb.constellation.size(); ++l) {
            const double r = cb.constellation.radius_of(l);
            if (std::norm(y[m] - cb.constellation.symbols()[l]) <= r * r) {
                found = l;
                break;  // disks are disjoint, at most one contains y_m
            }
        }
        if (found < 0) return std::nullopt;
        hit[m] = found;
    }
    for (std::size_t i = 0; i < cb.codewords.size(); ++i)
        if (cb.codewords[i] == hit) return static_cast<int>(i);
    return std::nullopt;
}

unsigned worker_count() {
    if (const char* env = std::getenv("SIET_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

SimResult estimate_dep(const Codebook& cb, Decoder decoder, const ChannelConfig& cfg) {
    if (cfg.trials < 100) throw DomainError("trials must be >= 100");
    if (!(cfg.sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");
    validate_codebook(cb);
    if (decoder == Decoder::regions && !regions_disjoint(cb.constellation))
        throw OverlappingRegions("decoding disks are not pairwise disjoint");

    const auto words = materialize(cb);
    const std::size_t M = words.size();
    const double noise_std = std::sqrt(cfg.sigma2 / 2.0);

    // Per-coordinate disk radii of each codeword, for the regions decoder.
    std::vector<std::vector<double>> radius_sq(M);
    if (decoder == Decoder::regions) {
        for (std::size_t i = 0; i < M; ++i)
            for (int idx : cb.codewords[i]) {
                const double r = cb.constellation.radius_of(idx);
                radius_sq[i].push_back(r * r);
            }
    }

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), cfg.trials));
    std::vector<std::vector<std::uint64_t>> errors_per_worker(
        workers, std::vector<std::uint64_t>(M, 0));

    auto run_range = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        auto& errors = errors_per_worker[w];
        std::vector<std::complex<double>> y(cb.n);
        for (std::uint64_t t = begin; t < end; ++t) {
            SplitMix64 msg_stream(stream_key(cfg.seed ^ kMessageTag, t));
            const std::size_t i = static_cast<std::size_t>(msg_stream.next_below(M));

            y.assign(words[i].begin(), words[i].end());
            SplitMix64 noise_stream(stream_key(cfg.seed, t));
            add_noise_inplace(y, noise_std, noise_stream);

            bool error = false;
            if (decoder == Decoder::regions) {
                // Disks are disjoint, so y lands in D_i iff every coordinate
                // stays inside the transmitted symbol's disk; anything else
                // (other message or erasure) is an error.
                for (int m = 0; m < cb.n; ++m) {
                    if (std::norm(y[m] - words[i][m]) > radius_sq[i][m]) {
                        error = true;
                        break;
                    }
                }
            } else {
                double own = 0.0;
                for (int m = 0; m < cb.n; ++m) own += std::norm(y[m] - words[i][m]);
                for (std::size_t j = 0; j < M && !error; ++j) {
                    if (j == i) continue;
                    double d = 0.0;
                    for (int m = 0; m < cb.n; ++m) {
                        d += std::norm(y[m] - words[j][m]);
                        if (d > own) break;  // strictly worse, competitor out
                    }
                    // ties go to the smaller index, matching decode_min_distance
                    if (d < own || (d == own && j < i)) error = true;
                }
            }
            if (error) ++errors[i];
        }
    };

    const std::uint64_t chunk = cfg.trials / workers;
    const std::uint64_t rem = cfg.trials % workers;
    std::vector<std::thread> pool;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
        pool.emplace_back(run_range, w, begin, end);
        begin = end;
    }
    for (auto& th : pool) th.join();

    SimResult result;
    result.per_message_errors.assign(M, 0);
    std::uint64_t total_errors = 0;
    for (const auto& local : errors_per_worker)
        for (std::size_t i = 0; i < M; ++i) {
            result.per_message_errors[i] += local[i];
            total_errors += local[i];
        }
    result.trials_used = cfg.trials;
    result.dep_estimate = static_cast<double>(total_errors) / cfg.trials;
    result.std_error =
        std::sqrt(result.dep_estimate * (1.0 - result.dep_estimate) / cfg.trials);
    return result;
}

}  // namespace siet
