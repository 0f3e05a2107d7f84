#pragma once

#include <cstdint>
#include <string_view>

namespace rqct {

// SplitMix64 stream (Steele, Lea & Flood; Vigna's fixed-increment variant).
//
// This is the project's one source of randomness. Streams are seedable and
// splittable: split("label") derives an independent child stream from the
// parent's current state and the label hash, so per-party and per-trial
// streams never need coordination. Conversions to doubles use the top 53
// bits directly instead of std::uniform_real_distribution, whose output is
// implementation-defined; reproducibility of experiment outputs depends on
// every draw being specified here.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += UINT64_C(0x9E3779B97F4A7C15));
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return next_double() < p; }

    int next_bit() noexcept { return static_cast<int>(next_u64() >> 63); }

    // Child stream keyed by a textual label. Does not advance this stream;
    // equal (state, label) pairs always yield the same child.
    RandomStream split(std::string_view label) const noexcept {
        return RandomStream(mix(state_ ^ fnv1a(label)));
    }

    // Child stream keyed by an integer (e.g. a trial index).
    RandomStream split(std::uint64_t key) const noexcept {
        return RandomStream(mix(state_ ^ mix(key + UINT64_C(0x9E3779B97F4A7C15))));
    }

    static std::uint64_t fnv1a(std::string_view s) noexcept {
        std::uint64_t h = UINT64_C(0xcbf29ce484222325);
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= UINT64_C(0x100000001b3);
        }
        return h;
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace rqct
