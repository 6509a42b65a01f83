#pragma once

#include <cstdint>

namespace lamps {

/// splitmix64. Hand-rolled so that seeded output is identical across
/// platforms and standard libraries (std:: distributions are not).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Rejection-free modulo is fine here: n is tiny
    /// relative to 2^64, bias is immaterial for test-corpus generation.
    uint64_t below(uint64_t n) { return next() % n; }

    /// Uniform in [0, 1).
    double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

private:
    uint64_t state_;
};

}  // namespace lamps
