#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autocx/word.hpp"

namespace autocx {

// Feedback F : [q]^k -> [q] of a k-stage shift register. Stage 0 is the
// oldest symbol x_0; the register shifts toward stage 0 and F(fill) enters at
// stage k-1.
class FeedbackFunction {
public:
    enum class Kind { linear, table };

    // F(x) = sum taps[i] * x_i mod q.
    static FeedbackFunction linear(std::vector<int> taps, int alphabet_size = 2) {
        FeedbackFunction f;
        f.kind_ = Kind::linear;
        f.stages_ = static_cast<int>(taps.size());
        f.alphabet_size_ = alphabet_size;
        f.coefficients_ = std::move(taps);
        f.validate(f.coefficients_.size());
        return f;
    }

    // table[idx] where idx reads the fill as a base-q numeral, x_0 most significant.
    static FeedbackFunction table(int stages, std::vector<int> values, int alphabet_size = 2) {
        FeedbackFunction f;
        f.kind_ = Kind::table;
        f.stages_ = stages;
        f.alphabet_size_ = alphabet_size;
        f.coefficients_ = std::move(values);
        if (stages < 1) throw std::invalid_argument("stage count must be at least 1");
        f.validate(checked_power(alphabet_size, stages));
        return f;
    }

    Kind kind() const noexcept { return kind_; }
    int stages() const noexcept { return stages_; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    std::span<const int> taps() const {
        if (kind_ != Kind::linear) throw std::logic_error("not a linear feedback function");
        return coefficients_;
    }
    std::span<const int> truth_table() const {
        if (kind_ != Kind::table) throw std::logic_error("not a table feedback function");
        return coefficients_;
    }

    int operator()(std::span<const int> fill) const {
        if (kind_ == Kind::linear) {
            long long acc = 0;
            for (int i = 0; i < stages_; ++i) acc += static_cast<long long>(coefficients_[i]) * fill[i];
            return static_cast<int>(acc % alphabet_size_);
        }
        return coefficients_[fill_index(fill)];
    }

    std::size_t fill_index(std::span<const int> fill) const {
        std::size_t idx = 0;
        for (int i = 0; i < stages_; ++i) idx = idx * alphabet_size_ + static_cast<std::size_t>(fill[i]);
        return idx;
    }

    // Same map as a truth table (requires q^k to be small).
    FeedbackFunction to_table() const {
        if (kind_ == Kind::table) return *this;
        std::size_t size = checked_power(alphabet_size_, stages_);
        std::vector<int> values(size);
        std::vector<int> fill(stages_, 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            std::size_t rest = idx;
            for (int i = stages_ - 1; i >= 0; --i) {
                fill[i] = static_cast<int>(rest % alphabet_size_);
                rest /= alphabet_size_;
            }
            values[idx] = (*this)(fill);
        }
        return table(stages_, std::move(values), alphabet_size_);
    }

    friend bool operator==(const FeedbackFunction&, const FeedbackFunction&) = default;

    static std::size_t checked_power(int base, int exponent) {
        std::size_t r = 1;
        for (int i = 0; i < exponent; ++i) {
            if (r > (std::size_t{1} << 40) / static_cast<std::size_t>(base)) {
                throw std::invalid_argument("q^k too large");
            }
            r *= static_cast<std::size_t>(base);
        }
        return r;
    }

private:
    void validate(std::size_t expected) const {
        if (alphabet_size_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
        if (stages_ < 1) throw std::invalid_argument("stage count must be at least 1");
        if (coefficients_.size() != expected) {
            throw std::invalid_argument("feedback has " + std::to_string(coefficients_.size()) +
                                        " entries, expected " + std::to_string(expected));
        }
        for (int c : coefficients_) {
            if (c < 0 || c >= alphabet_size_) throw std::invalid_argument("feedback entry out of range");
        }
    }

    Kind kind_ = Kind::linear;
    int stages_ = 0;
    int alphabet_size_ = 2;
    std::vector<int> coefficients_;
};

// Truth tables serialize as q^k digit strings (binary: a 2^k-bit string).
inline std::string render_truth_table(const FeedbackFunction& f) {
    std::string out;
    for (int v : f.truth_table()) out.push_back(static_cast<char>('0' + v));
    return out;
}

inline FeedbackFunction parse_truth_table(std::string_view bits, int stages, int alphabet_size = 2) {
    Word w = parse_word(bits, alphabet_size);
    return FeedbackFunction::table(stages, std::vector<int>(w.symbols().begin(), w.symbols().end()),
                                   alphabet_size);
}

class Fsr {
public:
    explicit Fsr(FeedbackFunction feedback) : feedback_(std::move(feedback)) {}

    const FeedbackFunction& feedback() const noexcept { return feedback_; }
    int stages() const noexcept { return feedback_.stages(); }
    int alphabet_size() const noexcept { return feedback_.alphabet_size(); }

    std::vector<int> step(std::span<const int> fill) const {
        check_fill(fill);
        std::vector<int> next(fill.begin() + 1, fill.end());
        next.push_back(feedback_(fill));
        return next;
    }

    void check_fill(std::span<const int> fill) const {
        if (fill.size() != static_cast<std::size_t>(stages())) {
            throw std::invalid_argument("fill has length " + std::to_string(fill.size()) +
                                        ", expected " + std::to_string(stages()));
        }
        for (int s : fill) {
            if (s < 0 || s >= alphabet_size()) throw std::invalid_argument("fill symbol out of range");
        }
    }

private:
    FeedbackFunction feedback_;
};

struct FsrRun {
    std::vector<int> initial_fill;
    Word output;  // output[t] = stage 0 of the fill after t steps
    std::size_t preperiod = 0;
    std::size_t period = 1;
};

class budget_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Steps until some fill repeats. Output has exactly preperiod + period symbols.
inline FsrRun run_until_periodic(const Fsr& fsr, std::span<const int> initial_fill,
                                 std::size_t max_steps) {
    fsr.check_fill(initial_fill);
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<int> fill(initial_fill.begin(), initial_fill.end());
    std::vector<int> out;
    for (std::size_t t = 0;; ++t) {
        auto [it, inserted] = seen.emplace(fill, t);
        if (!inserted) {
            FsrRun run;
            run.initial_fill.assign(initial_fill.begin(), initial_fill.end());
            run.preperiod = it->second;
            run.period = t - it->second;
            run.output = Word(std::move(out), fsr.alphabet_size());
            return run;
        }
        if (t >= max_steps) {
            throw budget_exhausted("no repeated fill within " + std::to_string(max_steps) + " steps");
        }
        out.push_back(fill[0]);
        fill = fsr.step(fill);
    }
}

inline FsrRun run_until_periodic(const Fsr& fsr, std::span<const int> initial_fill) {
    return run_until_periodic(
        fsr, initial_fill,
        FeedbackFunction::checked_power(fsr.alphabet_size(), fsr.stages()));
}

// Sequence of length n: stage 0 of the fill after t steps, t < n.
inline Word fsr_output(const Fsr& fsr, std::span<const int> initial_fill, std::size_t n) {
    fsr.check_fill(initial_fill);
    std::vector<int> fill(initial_fill.begin(), initial_fill.end());
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.push_back(fill[0]);
        fill = fsr.step(fill);
    }
    return Word(std::move(out), fsr.alphabet_size());
}

// One full period x_0 ... x_{P-1} of a binary LFSR of maximal period 2^k - 1.
inline Word generate_m_sequence(std::span<const int> taps, std::span<const int> initial_fill) {
    const std::size_t k = taps.size();
    if (k < 1 || k > 30) throw std::invalid_argument("stage count must be in 1..30");
    Fsr fsr(FeedbackFunction::linear(std::vector<int>(taps.begin(), taps.end()), 2));
    fsr.check_fill(initial_fill);
    if (std::all_of(initial_fill.begin(), initial_fill.end(), [](int s) { return s == 0; })) {
        throw std::invalid_argument("zero fill is a fixed point of a linear register");
    }
    const std::size_t full = (std::size_t{1} << k) - 1;
    FsrRun run = run_until_periodic(fsr, initial_fill, full + 1);
    if (run.period != full || run.preperiod != 0) {
        throw std::invalid_argument("register period is " + std::to_string(run.period) +
                                    ", not 2^k - 1 = " + std::to_string(full));
    }
    return run.output;
}

struct RegisterSetup {
    std::vector<int> taps;
    std::vector<int> fill;
};

// Converts a register drawn newest-symbol-first (companion matrix whose first
// row holds the feedback, state column with the output at the bottom) into
// stage order.
inline RegisterSetup from_mirrored_register(std::span<const int> feedback_row, std::span<const int> column) {
    if (feedback_row.size() != column.size() || feedback_row.empty()) {
        throw std::invalid_argument("feedback row and state column must have the same nonzero length");
    }
    return {std::vector<int>(feedback_row.rbegin(), feedback_row.rend()),
            std::vector<int>(column.rbegin(), column.rend())};
}

namespace detail {

inline std::vector<int> bits_of(std::size_t value, std::size_t k) {
    // Most significant bit first, matching digit-string order.
    std::vector<int> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = static_cast<int>((value >> (k - 1 - i)) & 1u);
    return bits;
}

}  // namespace detail

// Every m-sequence of order k: all maximal tap vectors, every nonzero seed.
// Sorted lexicographically.
inline std::vector<Word> enumerate_m_sequences(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("k must be in 1..16");
    const std::size_t states = std::size_t{1} << k;
    std::set<Word> words;
    std::vector<int> seed(k, 0);
    seed[k - 1] = 1;
    for (std::size_t t = 0; t < states; ++t) {
        std::vector<int> taps = detail::bits_of(t, k);
        Fsr fsr(FeedbackFunction::linear(taps, 2));
        FsrRun run = run_until_periodic(fsr, seed, states);
        if (run.period != states - 1 || run.preperiod != 0) continue;
        // The orbit covers every nonzero fill, so the other seeds give rotations.
        const auto base = run.output.symbols();
        for (std::size_t r = 0; r < base.size(); ++r) {
            std::vector<int> rotated(base.begin() + r, base.end());
            rotated.insert(rotated.end(), base.begin(), base.begin() + r);
            words.insert(Word(std::move(rotated), 2));
        }
    }
    return {words.begin(), words.end()};
}

// Binary truth tables whose register map is one cycle through all 2^k fills.
// Ordered by the table read as a bit string.
inline std::vector<FeedbackFunction> enumerate_full_cycle_feedbacks(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("k must be in 1..4");
    const std::size_t states = std::size_t{1} << k;
    const std::size_t mask = states - 1;
    const std::uint64_t tables = std::uint64_t{1} << states;
    std::vector<FeedbackFunction> out;
    for (std::uint64_t t = 0; t < tables; ++t) {
        // Bit string position idx is the value at fill idx.
        auto value_at = [&](std::size_t idx) { return static_cast<int>((t >> (states - 1 - idx)) & 1u); };
        std::size_t fill = 0;
        std::size_t steps = 0;
        do {
            fill = ((fill << 1) & mask) | static_cast<std::size_t>(value_at(fill));
            ++steps;
        } while (fill != 0 && steps <= states);
        if (fill != 0 || steps != states) continue;
        std::vector<int> values(states);
        for (std::size_t idx = 0; idx < states; ++idx) values[idx] = value_at(idx);
        out.push_back(FeedbackFunction::table(k, std::move(values), 2));
    }
    return out;
}

struct LinearComplexityResult {
    std::size_t length = 0;
    // x_n = sum_{i=1}^{L} connection[i-1] * x_{n-i} (mod 2) for n >= L.
    std::vector<int> connection;
};

inline LinearComplexityResult berlekamp_massey(const Word& x) {
    if (x.alphabet_size() != 2) throw std::invalid_argument("Berlekamp-Massey needs a binary word");
    const std::size_t n = x.size();
    std::vector<int> c(n + 1, 0), b(n + 1, 0);
    c[0] = b[0] = 1;
    std::size_t L = 0;
    std::size_t m = 1;
    for (std::size_t i = 0; i < n; ++i) {
        int d = x[i];
        for (std::size_t j = 1; j <= L; ++j) d ^= c[j] & x[i - j];
        if (d == 0) {
            ++m;
        } else if (2 * L <= i) {
            std::vector<int> prev = c;
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            L = i + 1 - L;
            b = std::move(prev);
            m = 1;
        } else {
            for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
            ++m;
        }
    }
    LinearComplexityResult r;
    r.length = L;
    r.connection.assign(c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(L));
    return r;
}

}  // namespace autocx
