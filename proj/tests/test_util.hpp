#pragma once

#include "hpit/audio.hpp"
#include "hpit/cost_matrix.hpp"
#include "hpit/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hpit::test {

// Independent exhaustive oracle: depth-first over rows, summing in row order
// so that its totals are bit-comparable with the library's.
inline double enumerate_optimum(const CostMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> pick(n);
    std::vector<char> used(n, 0);
    double best = std::numeric_limits<double>::infinity();
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == n) {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) total += m(i, pick[i]);
            best = std::min(best, total);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            pick[row] = j;
            self(self, row + 1);
            used[j] = 0;
        }
    };
    rec(rec, 0);
    return best;
}

inline CostMatrix uniform_matrix(std::size_t c, Rng& rng, double low = -30.0, double high = 30.0) {
    CostMatrix m(c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(low, high);
    }
    return m;
}

inline std::vector<std::size_t> random_mapping(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[rng.below(k)]);
    return p;
}

inline AudioSignal sine(double freq, std::size_t n, std::uint32_t rate = 8000, double amplitude = 1.0,
                        double phase = 0.0) {
    AudioSignal s;
    s.sample_rate = rate;
    s.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.samples[k] = amplitude * std::sin(2.0 * std::numbers::pi * freq * static_cast<double>(k) / rate + phase);
    }
    return s;
}

inline AudioSignal white_noise(std::size_t n, Rng& rng, double scale = 1.0, std::uint32_t rate = 8000) {
    AudioSignal s;
    s.sample_rate = rate;
    s.samples.resize(n);
    for (double& v : s.samples) v = scale * rng.normal();
    return s;
}

}  // namespace hpit::test
