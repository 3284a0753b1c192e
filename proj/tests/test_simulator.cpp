#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <set>

#include "siet/bounds.hpp"
#include "siet/errors.hpp"
#include "siet/rng.hpp"
#include "siet/simulator.hpp"

using namespace siet;

namespace {

Codebook antipodal_repetition(double A, int n, double r) {
    Codebook cb;
    cb.constellation = build_constellation({{A, 2, 0.0, r}});
    cb.n = n;
    cb.codewords = {Codeword(n, 0), Codeword(n, 1)};
    return cb;
}

// MAP decoding oracle: maximize the channel density product, i.e. compare
// density ratios exactly as written, rather than distances.
int map_oracle(const std::vector<std::complex<double>>& y, const Codebook& cb, double sigma2) {
    int best = 0;
    double best_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
        double log_density = 0.0;
        for (int m = 0; m < cb.n; ++m) {
            const auto diff = y[m] - cb.constellation.symbols()[cb.codewords[i][m]];
            log_density += -std::norm(diff) / sigma2 - std::log(M_PI * sigma2);
        }
        if (log_density > best_log) {
            best_log = log_density;
            best = static_cast<int>(i);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("add_noise is deterministic in (seed, trial) and unbiased") {
    const std::vector<std::complex<double>> x = {{1.0, -2.0}, {0.0, 3.0}};
    ChannelConfig cfg{4.0, 99, 1000};
    const auto y1 = add_noise(x, cfg, 7);
    const auto y2 = add_noise(x, cfg, 7);
    CHECK(y1 == y2);
    CHECK(add_noise(x, cfg, 8) != y1);

    // sigma2 -> 0 limit: output equals input
    ChannelConfig tiny{1e-30, 1, 100};
    const auto y0 = add_noise(x, tiny, 3);
    CHECK(std::abs(y0[0] - x[0]) < 1e-12);
    CHECK(std::abs(y0[1] - x[1]) < 1e-12);

    CHECK_THROWS_AS(add_noise(x, ChannelConfig{0.0, 1, 100}, 0), DomainError);
}

TEST_CASE("noise moments: each component carries sigma2/2") {
    const std::vector<std::complex<double>> x = {{0.0, 0.0}};
    ChannelConfig cfg{2.0, 4242, 1};
    double sum_re2 = 0.0, sum_im2 = 0.0, sum_norm = 0.0;
    const int samples = 1000000;
    for (int t = 0; t < samples; ++t) {
        const auto y = add_noise(x, cfg, t);
        sum_re2 += y[0].real() * y[0].real();
        sum_im2 += y[0].imag() * y[0].imag();
        sum_norm += std::norm(y[0]);
    }
    CHECK(sum_re2 / samples == doctest::Approx(1.0).epsilon(0.01));
    CHECK(sum_im2 / samples == doctest::Approx(1.0).epsilon(0.01));
    CHECK(sum_norm / samples == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("decode_min_distance basics and MAP agreement") {
    const auto cb = antipodal_repetition(2.0, 3, 0.5);
    std::vector<std::complex<double>> y = {{2.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}};
    CHECK(decode_min_distance(y, cb) == 0);
    y = {{-1.9, 0.1}, {-2.1, 0.0}, {-1.8, -0.2}};
    CHECK(decode_min_distance(y, cb) == 1);

    // random codebooks and outputs: min distance = MAP for this channel
    SplitMix64 rng(31337);
    for (int it = 0; it < 10000; ++it) {
        Codebook random_cb;
        random_cb.constellation = build_constellation({{3.0, 5, 0.1, 0.4}, {1.5, 3, 0.9, 0.4}});
        random_cb.n = 4;
        std::set<Codeword> words;
        while (words.size() < 6) {
            Codeword w;
            for (int m = 0; m < 4; ++m) w.push_back(static_cast<int>(rng.next_below(8)));
            words.insert(w);
        }
        random_cb.codewords.assign(words.begin(), words.end());

        const double sigma2 = 0.5 + 0.25 * static_cast<double>(rng.next_below(8));
        std::vector<std::complex<double>> sample(4);
        for (auto& v : sample) {
            double g0, g1;
            SplitMix64 s(rng.next_u64());
            s.next_normal_pair(g0, g1);
            v = std::complex<double>(3.0 * g0, 3.0 * g1);
        }
        CHECK(decode_min_distance(sample, random_cb) == map_oracle(sample, random_cb, sigma2));
    }
}

TEST_CASE("decode_by_regions returns the owner or an erasure") {
    const auto cb = antipodal_repetition(2.0, 2, 0.5);
    CHECK(decode_by_regions({{2.0, 0.0}, {2.1, 0.1}}, cb) == 0);
    CHECK(decode_by_regions({{-2.0, 0.0}, {-2.0, 0.3}}, cb) == 1);
    // one coordinate outside every disk
    CHECK(decode_by_regions({{2.0, 0.0}, {0.0, 0.0}}, cb) == std::nullopt);
    // in-disk symbols that do not spell a codeword
    CHECK(decode_by_regions({{2.0, 0.0}, {-2.0, 0.0}}, cb) == std::nullopt);

    Codebook overlap;
    overlap.constellation = build_constellation({{1.0, 4, 0.0, 0.9}});
    overlap.n = 1;
    overlap.codewords = {{0}};
    CHECK_THROWS_AS(decode_by_regions({{1.0, 0.0}}, overlap), OverlappingRegions);
}

TEST_CASE("per-symbol in-disk rate matches 1 - exp(-r^2/sigma2)") {
    Codebook cb;
    cb.constellation = build_constellation({{5.0, 1, 0.0, 1.2}});
    cb.n = 1;
    cb.codewords = {{0}};
    const double sigma2 = 1.7;
    const ChannelConfig cfg{sigma2, 2025, 1000000};
    const auto result = estimate_dep(cb, Decoder::regions, cfg);
    const double inside = 1.0 - std::exp(-1.2 * 1.2 / sigma2);
    CHECK(std::abs((1.0 - result.dep_estimate) - inside) <= 3.0 * result.std_error + 1e-9);
}

TEST_CASE("estimate_dep validates inputs") {
    const auto cb = antipodal_repetition(2.0, 2, 0.5);
    CHECK_THROWS_AS(estimate_dep(cb, Decoder::regions, ChannelConfig{1.0, 1, 99}), DomainError);
    CHECK_NOTHROW(estimate_dep(cb, Decoder::regions, ChannelConfig{1.0, 1, 100}));
}

TEST_CASE("noiseless limit decodes perfectly") {
    const auto cb = antipodal_repetition(1.0, 4, 0.3);
    const ChannelConfig cfg{1e-12, 5, 1000};
    CHECK(estimate_dep(cb, Decoder::min_distance, cfg).dep_estimate == 0.0);
    CHECK(estimate_dep(cb, Decoder::regions, cfg).dep_estimate == 0.0);
}

TEST_CASE("antipodal repetition DEP matches Q(sqrt(2 n A^2 / sigma2))") {
    const double A = 1.0, sigma2 = 1.0;
    for (int n : {1, 4}) {
        const auto cb = antipodal_repetition(A, n, 0.4);
        const ChannelConfig cfg{sigma2, static_cast<std::uint64_t>(31 + n), 400000};
        const auto result = estimate_dep(cb, Decoder::min_distance, cfg);
        const double exact = q_function(std::sqrt(2.0 * n * A * A / sigma2));
        CHECK(std::abs(result.dep_estimate - exact) <= 3.0 * result.std_error);
    }
}

TEST_CASE("disk decoder matches the closed form on a constant-composition code") {
    Codebook cb;
    cb.constellation = build_constellation({{6.0, 4, 0.0, 1.0}, {3.0, 2, 0.5, 1.0}});
    cb.n = 6;
    cb.codewords = enumerate_codewords(
        counts_from_layer_probs(6, {{2.0 / 3.0, 1.0 / 3.0}}, cb.constellation.layers()), 32);
    const double sigma2 = 1.3;
    const auto result = estimate_dep(cb, Decoder::regions, ChannelConfig{sigma2, 7, 300000});
    const double closed = achievable_dep(cb, sigma2);
    CHECK(std::abs(result.dep_estimate - closed) <= 3.0 * result.std_error);

    // min-distance decoding can only do better (it never erases and is MAP)
    const auto md = estimate_dep(cb, Decoder::min_distance, ChannelConfig{sigma2, 7, 300000});
    CHECK(md.dep_estimate <= result.dep_estimate + 3.0 * result.std_error);

    // and it cannot beat the necessary-condition lower bound
    const auto info = code_type(cb);
    REQUIRE(info.constant_composition);
    const double lower =
        dep_lower_bound(cb.message_count(), info.per_codeword.front(), cb.constellation, sigma2);
    CHECK(md.dep_estimate >= lower - 3.0 * md.std_error);
}

TEST_CASE("disk decoder matches the closed form on a mixed-type codebook") {
    Codebook cb;
    cb.constellation = build_constellation({{8.0, 4, 0.0, 1.1}, {4.5, 3, 0.2, 1.1}});
    cb.n = 5;
    cb.codewords = {{0, 1, 2, 3, 4}, {0, 0, 0, 0, 0}, {4, 5, 6, 4, 5}, {1, 1, 5, 5, 6}, {3, 2, 1, 0, 6}};
    const double sigma2 = 1.1;
    const auto result = estimate_dep(cb, Decoder::regions, ChannelConfig{sigma2, 99, 400000});
    const double closed = achievable_dep(cb, sigma2);
    CHECK(std::abs(result.dep_estimate - closed) <= 3.0 * result.std_error);
}

TEST_CASE("estimate_dep is invariant to the worker count") {
    const auto cb = antipodal_repetition(1.0, 2, 0.3);
    const ChannelConfig cfg{2.0, 99, 20000};
    setenv("SIET_THREADS", "1", 1);
    const auto serial = estimate_dep(cb, Decoder::min_distance, cfg);
    setenv("SIET_THREADS", "7", 1);
    const auto parallel = estimate_dep(cb, Decoder::min_distance, cfg);
    unsetenv("SIET_THREADS");
    CHECK(serial.dep_estimate == parallel.dep_estimate);
    CHECK(serial.per_message_errors == parallel.per_message_errors);

    // the estimate and standard error are self-consistent
    CHECK(serial.std_error ==
          doctest::Approx(std::sqrt(serial.dep_estimate * (1 - serial.dep_estimate) / 20000)));
}
