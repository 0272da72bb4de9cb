#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace autocx {

// A finite sequence over the alphabet {0, ..., q-1}.
class Word {
public:
    Word() = default;

    Word(std::vector<int> symbols, int alphabet_size)
        : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
        if (alphabet_size_ < 1) {
            throw std::invalid_argument("alphabet size must be at least 1");
        }
        for (int s : symbols_) {
            if (s < 0 || s >= alphabet_size_) {
                throw std::invalid_argument("symbol " + std::to_string(s) +
                                            " out of range for alphabet size " +
                                            std::to_string(alphabet_size_));
            }
        }
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    int alphabet_size() const noexcept { return alphabet_size_; }
    int operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const int> symbols() const noexcept { return symbols_; }

    Word reversed() const {
        return Word(std::vector<int>(symbols_.rbegin(), symbols_.rend()), alphabet_size_);
    }

    Word slice(std::size_t pos, std::size_t len) const {
        if (pos > size() || len > size() - pos) {
            throw std::out_of_range("slice out of range");
        }
        return Word(std::vector<int>(symbols_.begin() + pos, symbols_.begin() + pos + len),
                    alphabet_size_);
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.alphabet_size_ <=> b.alphabet_size_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<int> symbols_;
    int alphabet_size_ = 2;
};

// Digit strings for q <= 10, comma-separated decimals above.
inline Word parse_word(std::string_view text, int alphabet_size) {
    if (alphabet_size < 1) {
        throw std::invalid_argument("alphabet size must be at least 1");
    }
    std::vector<int> symbols;
    if (alphabet_size <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument(std::string("malformed word: unexpected character '") +
                                            c + "'");
            }
            symbols.push_back(c - '0');
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos);
            if (item.empty() || item.size() > 9 ||
                !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw std::invalid_argument("malformed word: bad item '" + std::string(item) + "'");
            }
            symbols.push_back(std::stoi(std::string(item)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Word(std::move(symbols), alphabet_size);
}

inline std::string render_word(const Word& x) {
    std::string out;
    if (x.alphabet_size() <= 10) {
        out.reserve(x.size());
        for (int s : x.symbols()) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(x[i]);
        }
    }
    return out;
}

// alpha^exponent with |alpha| = period starting at `start`; maximal in both
// directions for this (start, period).
struct PowerOccurrence {
    std::size_t start = 0;
    std::size_t period = 1;
    std::size_t exponent = 1;

    friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
    friend auto operator<=>(const PowerOccurrence&, const PowerOccurrence&) = default;
};

namespace detail {

// Calls fn(a, len) for every maximal stretch [a, a+len) of x that has period s
// and length at least s + 1.
template <class Fn>
void for_each_periodic_run(const Word& x, std::size_t s, Fn&& fn) {
    const std::size_t n = x.size();
    if (s == 0 || s >= n) return;
    std::size_t i = 0;
    while (i + s < n) {
        if (x[i] != x[i + s]) {
            ++i;
            continue;
        }
        std::size_t a = i;
        while (i + s < n && x[i] == x[i + s]) ++i;
        fn(a, i - a + s);
    }
}

}  // namespace detail

// Every maximal power with exponent >= 2, ordered by start then period.
inline std::vector<PowerOccurrence> scan_powers(const Word& x) {
    std::vector<PowerOccurrence> out;
    const std::size_t n = x.size();
    for (std::size_t s = 1; s <= n / 2; ++s) {
        detail::for_each_periodic_run(x, s, [&](std::size_t a, std::size_t len) {
            // Starts beyond a + s - 1 could be extended one period to the left.
            for (std::size_t p = a; p < a + s && p < a + len; ++p) {
                std::size_t u = (a + len - p) / s;
                if (u >= 2) out.push_back({p, s, u});
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t max_exponent_for_period(const Word& x, std::size_t s) {
    if (s < 1 || s > x.size()) {
        throw std::out_of_range("period length out of range");
    }
    std::size_t best = 1;
    detail::for_each_periodic_run(x, s, [&](std::size_t, std::size_t len) {
        best = std::max(best, len / s);
    });
    return best;
}

// max_exponent_for_period for every s in 1..|x| (index 0 unused).
inline std::vector<std::size_t> max_exponent_table(const Word& x) {
    std::vector<std::size_t> table(x.size() + 1, 1);
    for (std::size_t s = 1; s <= x.size(); ++s) table[s] = max_exponent_for_period(x, s);
    return table;
}

}  // namespace autocx
