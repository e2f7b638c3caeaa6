#pragma once

#include <cstdint>
#include <vector>

namespace cauchymaps {

// Harmonic functions of the half-perimeter walk.
//
//   h_down(l)   = 2^{-2l} binom(2l, l)            (l >= 0, zero below)
//   h_up(l)     = 2 l h_down(l)
//   h_down_p(l) = h_down(l) h_down(p) l / (l + p) (l >= 1)
//
// with the absorption conventions h_down(0) = 1, h_down_p(-p) = 1, and value
// zero at every other non-positive argument. Everything is evaluated through
// log-gamma so that arguments up to ~1e9 stay accurate to ~1e-14 relative.

enum class HarmonicKind { down, up, down_p };

// log h_down(l) for l >= 1. Exact (log of an exact value), not asymptotic.
double log_h_down(std::int64_t l);

// h_down / h_up with their zero conventions.
double h_down(std::int64_t l);
double h_up(std::int64_t l);

// h_down_p with the h_down_p(-p) = 1 convention.
double h_down_p(std::int64_t p, std::int64_t l);

// Uniform entry point; `target` is p for down_p and ignored otherwise.
double h_eval(HarmonicKind kind, std::int64_t l, std::int64_t target = 0);

// Ratio h(l + k) / h(l) computed in log space; exact 0 when the numerator
// argument is outside the support. Both l and l + k must not hit the
// absorption point (use the kernels for that).
double h_ratio(HarmonicKind kind, std::int64_t l, std::int64_t k, std::int64_t target = 0);

// Dense cache of log h_down for arguments 1..n, grown on demand. Shared
// read-only by samplers after construction.
class HarmonicTable {
public:
    explicit HarmonicTable(std::size_t initial = 1 << 16);

    double log_h_down_at(std::int64_t l) const;
    double h_down_at(std::int64_t l) const;
    double h_up_at(std::int64_t l) const;
    void ensure(std::size_t n);
    std::size_t size() const { return log_hd_.size(); }

private:
    std::vector<double> log_hd_;  // log_hd_[l] = log h_down(l), index 0 unused
};

}  // namespace cauchymaps
