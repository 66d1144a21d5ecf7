#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>

namespace digraphon {

// Seeded random source used by every sampling routine in the library.
//
// The engine is std::mt19937_64; all draws on top of it (uniforms, gammas,
// categorical picks) are implemented here so that a given seed produces the
// same stream on every platform. Sub-streams are derived from the original
// seed and a text label, so adding a new consumer never perturbs existing
// streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : seed_(seed), eng_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Independent stream keyed by (original seed, label).
    Rng derive(std::string_view label) const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return Rng(mix(seed_ ^ h));
    }

    Rng derive(std::string_view label, std::uint64_t index) const {
        Rng r = derive(label);
        return Rng(mix(r.seed_ + 0x9E3779B97F4A7C15ull * (index + 1)));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Lemire's multiply-shift with rejection.
        std::uint64_t x = eng_();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                x = eng_();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by the boost
    // gamma(a) = gamma(a+1) * U^(1/a).
    double gamma(double shape) {
        if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
        if (shape < 1.0) {
            double u = uniform01();
            while (u <= 0.0) u = uniform01();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Index draw proportional to the (not necessarily normalized) weights.
    int categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        return pick_by_cumulative(weights, uniform01() * total);
    }

    // Deterministic core: map a point in [0, total) to the index whose
    // cumulative weight interval contains it.
    static int pick_by_cumulative(std::span<const double> weights, double point) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (point < acc) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace digraphon
