#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cns {

/// splitmix64. Hand-rolled so that identical (target, seed) pairs produce
/// bit-identical graphs on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [0, n); the modulo bias is irrelevant here.
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

    bool coin() { return next() & 1; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    uint64_t state_;
};

}  // namespace cns
