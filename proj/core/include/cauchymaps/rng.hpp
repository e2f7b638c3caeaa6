#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace cauchymaps {

// Counter-based generator (Philox-4x32-10). A stream is addressed by
// (seed, stream, sample); consecutive draws advance the counter. Because a
// stream is a pure function of its address, experiment results do not depend
// on how samples are distributed over workers.
class CounterRng {
public:
    CounterRng() = default;
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample = 0)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr2_(static_cast<std::uint32_t>(stream)),
          ctr3_(static_cast<std::uint32_t>(stream >> 32)) {
        ctr1_ = static_cast<std::uint32_t>(sample >> 32);
        ctr0_hi_ = static_cast<std::uint32_t>(sample);
        refill();
    }

    // Derives a stream id from a label, so experiments get disjoint streams
    // without a central registry.
    static std::uint64_t stream_of(std::string_view label);

    std::uint32_t next_u32() {
        if (have_ == 0) {
            ++block_;
            refill();
        }
        return out_[--have_];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on [0,1), 53-bit mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0,1]; safe as a log() argument.
    double next_double_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double next_exponential() { return -std::log(next_double_pos()); }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n);

private:
    void refill();

    std::uint32_t key0_ = 0, key1_ = 0;
    std::uint32_t ctr0_hi_ = 0, ctr1_ = 0, ctr2_ = 0, ctr3_ = 0;
    std::uint64_t block_ = 0;
    std::uint32_t out_[4] = {0, 0, 0, 0};
    int have_ = 0;
};

}  // namespace cauchymaps
