#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cns {

/// Bit set over a fixed universe of vertex indices [0, n).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Remove every bit present in `o`.
    Bitset& subtract(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const Bitset&) const = default;

    template <class F>
    void for_each(F f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>(wi * 64) + b);
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace cns
