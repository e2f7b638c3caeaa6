#include "cauchymaps/rng.hpp"

namespace cauchymaps {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                         std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    const std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
}

}  // namespace

void CounterRng::refill() {
    // Counter word 0 mixes the per-stream sample low word with the running
    // block index; sample ids used in practice stay far below 2^32 blocks.
    std::uint32_t c0 = ctr0_hi_ + static_cast<std::uint32_t>(block_);
    std::uint32_t c1 = ctr1_ + static_cast<std::uint32_t>(block_ >> 32);
    std::uint32_t c2 = ctr2_;
    std::uint32_t c3 = ctr3_;
    std::uint32_t k0 = key0_;
    std::uint32_t k1 = key1_;
    for (int r = 0; r < 10; ++r) {
        philox_round(c0, c1, c2, c3, k0, k1);
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    out_[0] = c0;
    out_[1] = c1;
    out_[2] = c2;
    out_[3] = c3;
    have_ = 4;
}

std::uint64_t CounterRng::stream_of(std::string_view label) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t CounterRng::next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

}  // namespace cauchymaps
