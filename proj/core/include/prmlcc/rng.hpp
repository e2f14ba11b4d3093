#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prmlcc/field.hpp"

namespace prmlcc {

/// Deterministic random source. Every random decision in the library flows
/// through this type, so a 64-bit seed reproduces plans, corruptions and
/// simulations bit exactly on any platform (mt19937_64 output is fixed by
/// the standard; bounded draws below use mask rejection, never the
/// implementation-defined std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, bound), unbiased: draws are masked down to the
    /// smallest covering power of two and rejected while >= bound.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("rng: empty range");
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t r = next() & mask;
            if (r < bound) return r;
        }
    }

    /// Uniform field element.
    Elem element(const Field& f) { return static_cast<Elem>(below(f.q())); }

    /// Uniform nonzero field element.
    Elem nonzero_element(const Field& f) { return static_cast<Elem>(1 + below(f.q() - 1)); }

    /// Fisher-Yates, swapping from the back; consumes exactly size-1
    /// bounded draws.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Independent stream for one trial of a batch: seed XOR trial index.
    Rng derive(std::uint64_t trial) const { return Rng(seed_ ^ trial); }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace prmlcc
