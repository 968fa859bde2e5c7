#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace nilm {

constexpr uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<uint8_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Seeded random stream. mt19937_64 output is fully specified by the standard;
// the distributions are hand-rolled so the draw sequence does not depend on
// the standard library implementation.
class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : eng_(seed) {}

    // Independent per-purpose stream derived from a master seed, so adding an
    // appliance never shifts another appliance's draws.
    static RandomStream derive(uint64_t master, std::string_view name) {
        return RandomStream(master ^ fnv1a64(name));
    }

    double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

    // Marsaglia polar method with cached spare.
    double gaussian(double mean, double sigma) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + sigma * spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return mean + sigma * u * m;
    }

    uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace nilm
