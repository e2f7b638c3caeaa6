#include "cauchymaps/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace cauchymaps {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795029;
constexpr std::int64_t kExactCutoff = 1 << 16;

// log h_down(l) for 1 <= l <= kExactCutoff, built once from the exact
// product h_down(l) = prod_{j<=l} (2j-1)/(2j) accumulated in long double.
const std::vector<double>& exact_log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kExactCutoff + 1);
        t[0] = 0.0;
        long double acc = 0.0L;
        for (std::int64_t j = 1; j <= kExactCutoff; ++j) {
            acc += std::log((2.0L * j - 1.0L) / (2.0L * j));
            t[static_cast<std::size_t>(j)] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

// Stirling expansion of binom(2l,l) 4^{-l} = (pi l)^{-1/2} (1 - 1/(8l) + ...),
// good to ~1e-16 relative for l above a few hundred.
double log_h_down_stirling(double l) {
    const double x = 1.0 / l;
    const double s = x * (-1.0 / 8.0 +
                     x * (1.0 / 128.0 +
                     x * (5.0 / 1024.0 +
                     x * (-21.0 / 32768.0 +
                     x * (-399.0 / 262144.0 + x * (869.0 / 4194304.0))))));
    return -0.5 * std::log(kPi * l) + std::log1p(s);
}

}  // namespace

double log_h_down(std::int64_t l) {
    if (l < 0) throw std::invalid_argument("log_h_down: l must be >= 0");
    if (l == 0) return 0.0;
    if (l <= kExactCutoff) return exact_log_table()[static_cast<std::size_t>(l)];
    return log_h_down_stirling(static_cast<double>(l));
}

double h_down(std::int64_t l) {
    if (l < 0) return 0.0;
    if (l == 0) return 1.0;
    return std::exp(log_h_down(l));
}

double h_up(std::int64_t l) {
    if (l <= 0) return 0.0;
    return 2.0 * static_cast<double>(l) * h_down(l);
}

double h_down_p(std::int64_t p, std::int64_t l) {
    if (p < 1) throw std::invalid_argument("h_down_p: p must be >= 1");
    if (l == -p) return 1.0;
    if (l <= 0) return 0.0;
    const double ld = static_cast<double>(l);
    const double pd = static_cast<double>(p);
    return std::exp(log_h_down(l) + log_h_down(p)) * ld / (ld + pd);
}

double h_eval(HarmonicKind kind, std::int64_t l, std::int64_t target) {
    switch (kind) {
        case HarmonicKind::down: return h_down(l);
        case HarmonicKind::up: return h_up(l);
        case HarmonicKind::down_p: return h_down_p(target, l);
    }
    return 0.0;
}

double h_ratio(HarmonicKind kind, std::int64_t l, std::int64_t k, std::int64_t target) {
    if (l < 1) throw std::invalid_argument("h_ratio: l must be >= 1");
    const std::int64_t m = l + k;
    switch (kind) {
        case HarmonicKind::down:
            if (m < 0) return 0.0;
            if (m == 0) return std::exp(-log_h_down(l));
            return std::exp(log_h_down(m) - log_h_down(l));
        case HarmonicKind::up:
            if (m <= 0) return 0.0;
            return (static_cast<double>(m) / static_cast<double>(l)) *
                   std::exp(log_h_down(m) - log_h_down(l));
        case HarmonicKind::down_p: {
            if (m == -target) {
                return std::exp(-log_h_down(l) - log_h_down(target)) *
                       (static_cast<double>(l + target) / static_cast<double>(l));
            }
            if (m <= 0) return 0.0;
            const double md = static_cast<double>(m);
            const double ld = static_cast<double>(l);
            const double pd = static_cast<double>(target);
            return std::exp(log_h_down(m) - log_h_down(l)) * (md / (md + pd)) * ((ld + pd) / ld);
        }
    }
    return 0.0;
}

HarmonicTable::HarmonicTable(std::size_t initial) { ensure(initial); }

void HarmonicTable::ensure(std::size_t n) {
    if (log_hd_.size() > n) return;
    const std::size_t old = log_hd_.empty() ? 1 : log_hd_.size();
    log_hd_.resize(n + 1);
    if (old == 1) log_hd_[0] = 0.0;
    for (std::size_t l = old; l <= n; ++l) {
        log_hd_[l] = log_h_down(static_cast<std::int64_t>(l));
    }
}

double HarmonicTable::log_h_down_at(std::int64_t l) const {
    if (l <= 0 || static_cast<std::size_t>(l) >= log_hd_.size()) {
        return log_h_down(l);
    }
    return log_hd_[static_cast<std::size_t>(l)];
}

double HarmonicTable::h_down_at(std::int64_t l) const {
    if (l < 0) return 0.0;
    if (l == 0) return 1.0;
    return std::exp(log_h_down_at(l));
}

double HarmonicTable::h_up_at(std::int64_t l) const {
    if (l <= 0) return 0.0;
    return 2.0 * static_cast<double>(l) * h_down_at(l);
}

}  // namespace cauchymaps
