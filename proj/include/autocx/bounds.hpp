#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "autocx/word.hpp"

namespace autocx {

struct BoundReport {
    std::size_t n = 0;
    int hyde_upper = 1;                  // floor(n/2) + 1
    std::optional<int> stages;           // k
    std::optional<std::size_t> period;   // P, when known
    bool mainy_applicable = false;
    // Twice the lower bound (n+1) - k(k-1); kept integral so half-integers are exact.
    std::optional<long long> twice_mainy_lower;

    std::optional<double> mainy_lower() const {
        if (!twice_mainy_lower) return std::nullopt;
        return static_cast<double>(*twice_mainy_lower) / 2.0;
    }
    // Smallest integer state count allowed by the bound.
    std::optional<int> mainy_lower_ceil() const {
        if (!twice_mainy_lower) return std::nullopt;
        long long t = *twice_mainy_lower;
        return static_cast<int>(t >= 0 ? (t + 1) / 2 : -((-t) / 2));
    }
};

inline int hyde_upper_bound(std::size_t n) { return static_cast<int>(n / 2) + 1; }

// Lower bound for words of length n produced by a k-stage register whose
// period upon processing is P. Requires P > k and n + 1 >= 2k(k-1). When P is
// given, the word must also be shorter than 2P: a longer word can contain a
// square whose half is a multiple of P, and the power bound the estimate
// rests on no longer holds. Without P the caller vouches for both conditions.
inline BoundReport mainy_lower_bound(std::size_t n, int k, std::optional<std::size_t> period = std::nullopt) {
    BoundReport r;
    r.n = n;
    r.hyde_upper = hyde_upper_bound(n);
    r.stages = k;
    r.period = period;
    const long long kk = static_cast<long long>(k) * (k - 1);
    bool ok = k >= 1 && static_cast<long long>(n) + 1 >= 2 * kk;
    if (period) ok = ok && *period > static_cast<std::size_t>(k) && n < 2 * *period;
    r.mainy_applicable = ok;
    if (ok) r.twice_mainy_lower = static_cast<long long>(n) + 1 - kk;
    return r;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// (b_1, b_2, ...): the value ceil(k/i) + 1 repeated i times, for i = 1, 2, ...
inline std::vector<int> occurrence_bounds(int k, std::size_t count) {
    std::vector<int> b;
    b.reserve(count);
    for (int i = 1; b.size() < count; ++i) {
        for (int rep = 0; rep < i && b.size() < count; ++rep) b.push_back(ceil_div(k, i) + 1);
    }
    return b;
}

// True when every power alpha^u inside x has u <= ceil(k/|alpha|), the
// hypothesis the k-stage estimates need.
inline bool powers_respect_stage_bound(const Word& x, int k) {
    for (std::size_t s = 1; s <= x.size(); ++s) {
        if (max_exponent_for_period(x, s) > static_cast<std::size_t>(ceil_div(k, static_cast<int>(s)))) {
            return false;
        }
    }
    return true;
}

// Lower bound on the number of states of any witness for x. A state of
// period l along the unique path recurs at most e(l) + 1 times, where e(l) is
// the largest exponent of a power of period l in x, and at most l states have
// period l. The fewest states that can supply n + 1 visits bound A_N from below.
inline int occurrence_lower_bound(const Word& x) {
    const std::size_t n = x.size();
    if (n == 0) return 1;
    std::vector<std::size_t> cap;
    for (std::size_t l = 1; l <= n; ++l) {
        std::size_t e = std::min(max_exponent_for_period(x, l), n / l);
        for (std::size_t rep = 0; rep < l && cap.size() < n + 1; ++rep) cap.push_back(e + 1);
    }
    std::sort(cap.begin(), cap.end(), std::greater<>());
    std::size_t total = 0;
    int q = 0;
    for (std::size_t c : cap) {
        total += c;
        ++q;
        if (total >= n + 1) return q;
    }
    return q + static_cast<int>(n + 1 - total);
}

}  // namespace autocx
