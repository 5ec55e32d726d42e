#pragma once

#include <cstdint>

namespace gridrisk {

namespace detail {
// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based stream: output i of stream (seed, stream_id) is a pure hash
// of (seed, stream_id, i). Streams are independent and can be consumed from
// any thread without coordination; a scenario's draws depend only on its own
// stream, never on scheduling order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id)
        : key_(detail::mix64(detail::mix64(seed) + 0x9E3779B97F4A7C15ULL * (stream_id + 1))),
          counter_(0) {}

    std::uint64_t next_u64() {
        return detail::mix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
    }

    // Uniform on the open interval (0, 1); safe as a quantile-function input.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace gridrisk
