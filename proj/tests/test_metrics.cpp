#include "hpit/error.hpp"
#include "hpit/metrics.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace hpit {
namespace {

using test::sine;
using test::white_noise;

// Straight-line SI-SNR in long double, written independently of the library.
double reference_si_snr(const std::vector<double>& s, const std::vector<double>& e) {
    const std::size_t n = s.size();
    long double ms = 0, me = 0;
    for (std::size_t k = 0; k < n; ++k) {
        ms += s[k];
        me += e[k];
    }
    ms /= n;
    me /= n;
    long double se = 0, ss = 0;
    for (std::size_t k = 0; k < n; ++k) {
        se += (e[k] - me) * (s[k] - ms);
        ss += (s[k] - ms) * (s[k] - ms);
    }
    const long double alpha = se / ss;
    long double pt = 0, pe = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const long double t = alpha * (s[k] - ms);
        const long double r = (e[k] - me) - t;
        pt += t * t;
        pe += r * r;
    }
    const long double db = 10.0L * std::log10(pt / (pe + 1e-8L * pt));
    return static_cast<double>(std::clamp(db, -60.0L, 60.0L));
}

AudioSignal plus(const AudioSignal& a, const AudioSignal& b, double gb = 1.0) {
    AudioSignal out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out.samples[k] += gb * b.samples[k];
    return out;
}

AudioSignal scaled(const AudioSignal& a, double g) {
    AudioSignal out = a;
    for (double& v : out.samples) v *= g;
    return out;
}

SeparationInstance sine_instance(std::size_t c, std::size_t n, Rng& rng, double noise = 0.0) {
    SeparationInstance inst;
    inst.mixture.samples.assign(n, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        auto s = sine(150.0 + 97.0 * static_cast<double>(i), n, 8000, 0.3 + 0.1 * rng.uniform(), rng.uniform(0, 6));
        inst.mixture = plus(inst.mixture, s);
        inst.targets.push_back(s);
        inst.estimates.push_back(noise > 0 ? plus(s, white_noise(n, rng, noise)) : s);
    }
    return inst;
}

SeparationInstance noise_instance(std::size_t c, std::size_t n, Rng& rng) {
    SeparationInstance inst;
    inst.mixture.samples.assign(n, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        auto s = white_noise(n, rng);
        inst.mixture = plus(inst.mixture, s);
        inst.targets.push_back(s);
        // Estimates leak a random amount of every other source.
        AudioSignal e = s;
        for (std::size_t k = 0; k < i; ++k) e = plus(e, inst.targets[k], rng.uniform(0.0, 1.5));
        inst.estimates.push_back(plus(e, white_noise(n, rng, rng.uniform(0.1, 1.0))));
    }
    return inst;
}

TEST(SiSnr, SelfMatchHitsCeiling) {
    const auto s = sine(440, 800);
    EXPECT_EQ(si_snr(s, s), 60.0);
    for (double a : {0.001, 0.5, 3.0, 1e4}) EXPECT_EQ(si_snr(s, scaled(s, a)), 60.0);
}

TEST(SiSnr, TenDbNoiseGivesAboutTenDb) {
    const auto s = sine(440, 8000);
    double signal_energy = 0.0;
    for (double v : s.samples) signal_energy += v * v;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        auto n = white_noise(8000, rng);
        double noise_energy = 0.0;
        for (double v : n.samples) noise_energy += v * v;
        const double g = std::sqrt(signal_energy / (10.0 * noise_energy));
        const double v = si_snr(s, plus(s, n, g));
        EXPECT_GE(v, 9.0) << seed;
        EXPECT_LE(v, 11.0) << seed;
    }
}

TEST(SiSnr, MatchesIndependentReference) {
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(3000);
        auto s = white_noise(n, rng);
        if (n == 1) continue;
        auto e = plus(scaled(s, rng.uniform(-2, 2)), white_noise(n, rng, rng.uniform(0, 3)));
        EXPECT_NEAR(si_snr(s, e), reference_si_snr(s.samples, e.samples), 1e-9);
    }
}

TEST(SiSnr, ScaleInvariance) {
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto s = white_noise(500, rng);
        const auto e = plus(s, white_noise(500, rng, rng.uniform(0.01, 10.0)));
        const double base = si_snr(s, e);
        ASSERT_LT(std::abs(base), 60.0);
        for (double a : {-1.0, 1e-6, 1e-3, 0.37, 42.0, 1e6, -3e-4}) {
            EXPECT_LT(std::abs(si_snr(s, scaled(e, a)) - base), 1e-9) << "alpha=" << a;
        }
    }
}

TEST(SiSnr, Errors) {
    const auto s = sine(440, 100);
    try {
        (void)si_snr(s, sine(440, 99));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
        EXPECT_NE(std::string(e.what()).find("length mismatch"), std::string::npos);
    }
    AudioSignal flat{std::vector<double>(100, 0.25), 8000};
    EXPECT_THROW((void)si_snr(flat, s), Error);
}

TEST(SiSnr, FuzzedPairsStayFiniteAndClamped) {
    Rng rng(2024);
    for (int t = 0; t < 10000; ++t) {
        const std::size_t n = 2 + rng.below(64);
        auto s = white_noise(n, rng, std::pow(10.0, rng.uniform(-12, 12)));
        AudioSignal e;
        switch (rng.below(5)) {
        case 0:
            e = AudioSignal{std::vector<double>(n, rng.uniform(-1, 1)), 8000};  // constant
            break;
        case 1:
            e = scaled(s, rng.uniform(-5, 5));
            break;
        case 2:
            e = AudioSignal{std::vector<double>(n, 0.0), 8000};
            break;
        default:
            e = white_noise(n, rng, std::pow(10.0, rng.uniform(-12, 12)));
        }
        const double v = si_snr(s, e);
        ASSERT_FALSE(std::isnan(v));
        ASSERT_GE(v, -60.0);
        ASSERT_LE(v, 60.0);
    }
}

TEST(SiSdrImprovement, MixtureAsEstimateIsZero) {
    Rng rng(1);
    auto inst = sine_instance(3, 800, rng);
    for (auto& e : inst.estimates) e = inst.mixture;
    for (double v : si_sdr_improvement(inst, Permutation::identity(3))) EXPECT_EQ(v, 0.0);
}

TEST(SiSdrImprovement, PerfectSeparationIsPositive) {
    Rng rng(2);
    SeparationInstance inst;
    inst.targets = {sine(300, 4000), sine(510, 4000, 8000, 1.0, 0.4)};
    inst.estimates = inst.targets;
    inst.mixture = plus(inst.targets[0], inst.targets[1]);
    for (double v : si_sdr_improvement(inst, Permutation::identity(2))) EXPECT_GT(v, 0.0);
}

TEST(SiSdrImprovement, MatchesIndependentRecomputation) {
    Rng rng(3);
    const auto inst = sine_instance(3, 4000, rng, 0.05);
    const auto got = si_sdr_improvement(inst, Permutation::identity(3));
    for (std::size_t i = 0; i < 3; ++i) {
        const double expect = reference_si_snr(inst.targets[i].samples, inst.estimates[i].samples) -
                              reference_si_snr(inst.targets[i].samples, inst.mixture.samples);
        EXPECT_NEAR(got[i], expect, 1e-9);
    }
}

TEST(PairwiseCost, SelfMatchDiagonal) {
    Rng rng(4);
    const auto inst = sine_instance(5, 2000, rng);
    const auto m = pairwise_cost_matrix(inst);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(m(i, i), -60.0);
        for (std::size_t j = 0; j < 5; ++j) {
            if (i != j) EXPECT_GT(m(i, j), -60.0);
        }
    }
}

TEST(PairwiseCost, CyclicShiftMovesRowMinima) {
    Rng rng(5);
    auto inst = sine_instance(6, 2000, rng);
    const std::size_t c = inst.num_sources();
    for (std::size_t i = 0; i < c; ++i) inst.estimates[(i + 1) % c] = inst.targets[i];
    const auto m = pairwise_cost_matrix(inst);
    for (std::size_t i = 0; i < c; ++i) {
        const auto row = m.row(i);
        EXPECT_EQ(static_cast<std::size_t>(std::min_element(row.begin(), row.end()) - row.begin()), (i + 1) % c);
    }
}

TEST(PairwiseCost, ParallelMatchesSerialBitwise) {
    Rng rng(6);
    const auto inst = noise_instance(9, 1500, rng);
    EXPECT_EQ(pairwise_cost_matrix(inst), pairwise_cost_matrix_serial(inst));
}

TEST(PairwiseCost, EntriesAreNegatedSiSnr) {
    Rng rng(7);
    const auto inst = noise_instance(4, 1000, rng);
    const auto m = pairwise_cost_matrix(inst);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m(i, j), -si_snr(inst.targets[i], inst.estimates[j]));
    }
}

TEST(PairwiseCost, RandomFourSourceSolversAgree) {
    Rng rng(8);
    const auto m = pairwise_cost_matrix(noise_instance(4, 1200, rng));
    EXPECT_EQ(solve_hungarian(m).total_cost, solve_bruteforce(m).total_cost);
}

TEST(PairwiseCost, RejectsBadInstances) {
    Rng rng(9);
    auto inst = sine_instance(3, 100, rng);
    inst.estimates.pop_back();
    EXPECT_THROW((void)pairwise_cost_matrix(inst), Error);
    inst = sine_instance(3, 100, rng);
    inst.estimates[1].samples.pop_back();
    EXPECT_THROW((void)pairwise_cost_matrix(inst), Error);
    inst = sine_instance(3, 100, rng);
    inst.targets[2].sample_rate = 16000;
    EXPECT_THROW((void)pairwise_cost_matrix(inst), Error);
    inst = sine_instance(1, 100, rng);
    EXPECT_THROW((void)pairwise_cost_matrix(inst), Error);
}

TEST(HungarianLoss, RecoversKnownShuffle) {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        auto inst = sine_instance(7, 1000, rng);
        const auto sigma = test::random_mapping(7, rng);
        for (std::size_t i = 0; i < 7; ++i) inst.estimates[sigma[i]] = scaled(inst.targets[i], rng.uniform(0.1, 3));
        const auto loss = hungarian_loss(inst);
        EXPECT_EQ(loss.permutation, Permutation(sigma));
        EXPECT_EQ(loss.mean_loss, -60.0);
    }
}

TEST(HungarianLoss, SwappedPair) {
    Rng rng(11);
    auto inst = sine_instance(2, 2000, rng);
    inst.estimates = {plus(inst.targets[1], white_noise(2000, rng, 1e-3)),
                      plus(inst.targets[0], white_noise(2000, rng, 1e-3))};
    EXPECT_EQ(hungarian_loss(inst).permutation, Permutation({1, 0}));
}

TEST(HungarianLoss, EqualsPitUpToEight) {
    Rng rng(12);
    for (std::size_t c = 2; c <= 8; ++c) {
        for (int t = 0; t < 5; ++t) {
            const auto inst = noise_instance(c, 600, rng);
            const auto h = hungarian_loss(inst);
            const auto p = pit_loss(inst);
            EXPECT_EQ(h.mean_loss, p.mean_loss) << "C=" << c;
        }
    }
}

TEST(HungarianLoss, MatrixLossConsistency) {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        const auto inst = noise_instance(2 + rng.below(10), 500, rng);
        const auto loss = hungarian_loss(inst);
        const auto direct = solve_hungarian(pairwise_cost_matrix(inst));
        EXPECT_NEAR(loss.mean_loss, direct.total_cost / static_cast<double>(inst.num_sources()), 1e-9);
        double mean = 0.0;
        for (double v : loss.per_pair) mean += v;
        EXPECT_NEAR(loss.mean_loss, mean / static_cast<double>(loss.per_pair.size()), 1e-9);
    }
}

TEST(HungarianLoss, InvariantUnderJointShuffle) {
    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
        const std::size_t c = 3 + rng.below(8);
        const auto inst = noise_instance(c, 500, rng);
        const auto sigma = test::random_mapping(c, rng);
        SeparationInstance shuffled = inst;
        for (std::size_t i = 0; i < c; ++i) {
            shuffled.targets[sigma[i]] = inst.targets[i];
            shuffled.estimates[sigma[i]] = inst.estimates[i];
        }
        EXPECT_NEAR(hungarian_loss(shuffled).mean_loss, hungarian_loss(inst).mean_loss, 1e-9);
    }
}

TEST(PitLoss, IdentityPairAndGuard) {
    Rng rng(15);
    const auto inst = sine_instance(2, 500, rng);
    const auto p = pit_loss(inst);
    EXPECT_EQ(p.permutation, Permutation({0, 1}));
    EXPECT_EQ(p.mean_loss, -60.0);

    const auto five = noise_instance(5, 500, rng);
    EXPECT_EQ(pit_loss(five).mean_loss, hungarian_loss(five).mean_loss);

    try {
        (void)pit_loss(sine_instance(12, 100, rng));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

}  // namespace
}  // namespace hpit
