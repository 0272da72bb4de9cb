#pragma once

// Harnesses that regenerate the computer results and check the bounds on
// sampled inputs. Each returns a report instead of throwing so callers can
// print partial coverage.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autocx/automata.hpp"
#include "autocx/bounds.hpp"
#include "autocx/fsr.hpp"
#include "autocx/solvers.hpp"
#include "autocx/word.hpp"

namespace autocx {

struct CheckLine {
    std::string item;
    bool passed = true;
    std::string detail;
    double seconds = 0;
};

struct VerificationReport {
    std::string name;
    bool passed = true;
    bool budget_exhausted = false;
    std::size_t checked = 0;
    std::vector<CheckLine> lines;

    void add(CheckLine line) {
        ++checked;
        passed = passed && line.passed;
        lines.push_back(std::move(line));
    }
    void fail(std::string item, std::string detail) { add({std::move(item), false, std::move(detail), 0}); }
};

// The 31-symbol m-sequence used for the A^- versus A_N gap.
inline constexpr const char* reference_m_sequence = "0001010110100001100100111110111";

struct HydeSurvey {
    std::size_t n = 0;
    std::uint64_t attaining = 0;
    std::uint64_t total = 0;
    double fraction() const { return total ? static_cast<double>(attaining) / static_cast<double>(total) : 0.0; }
};

// Exact share of binary words of length n with A_N = floor(n/2) + 1.
inline HydeSurvey survey_hyde_fraction(std::size_t n, std::size_t limit = 12) {
    if (n > limit) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                                    std::to_string(limit));
    }
    if (n > 40) throw std::invalid_argument("n too large for exhaustive enumeration");
    HydeSurvey s;
    s.n = n;
    s.total = std::uint64_t{1} << n;
    const int bound = hyde_upper_bound(n);
    std::vector<int> sym(n);
    for (std::uint64_t code = 0; code < s.total; ++code) {
        for (std::size_t i = 0; i < n; ++i) sym[i] = static_cast<int>((code >> (n - 1 - i)) & 1u);
        if (compute_an(Word(sym, 2)).value == bound) ++s.attaining;
    }
    return s;
}

namespace detail {

inline std::string fmt_double(double v) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << v;
    return o.str();
}

inline Word random_word(std::mt19937_64& rng, std::size_t n, int q) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<int> s(n);
    for (auto& v : s) v = d(rng);
    return Word(std::move(s), q);
}

// Random feedback: linear taps or an arbitrary truth table.
inline FeedbackFunction random_feedback(std::mt19937_64& rng, int k, int q, bool linear) {
    std::uniform_int_distribution<int> d(0, q - 1);
    if (linear) {
        std::vector<int> taps(k);
        for (auto& t : taps) t = d(rng);
        return FeedbackFunction::linear(std::move(taps), q);
    }
    std::vector<int> table(FeedbackFunction::checked_power(q, k));
    for (auto& t : table) t = d(rng);
    return FeedbackFunction::table(k, std::move(table), q);
}

inline std::vector<int> random_fill(std::mt19937_64& rng, int k, int q) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<int> fill(k);
    for (auto& v : fill) v = d(rng);
    return fill;
}

inline bool budget_hit(VerificationReport& report, const ComplexityResult& r, const std::string& item) {
    if (r.exact()) return false;
    report.budget_exhausted = true;
    report.passed = false;
    report.lines.push_back({item, false,
                            "budget exhausted: value in [" + std::to_string(r.lower_bound) + ", " +
                                std::to_string(r.upper_bound) + "]",
                            r.stats.seconds});
    return true;
}

}  // namespace detail

// Every m-sequence of order k <= kmax attains A_N = floor(n/2) + 1.
inline VerificationReport verify_christmas(int kmax, const SearchOptions& opts = {}, int kmin = 1) {
    VerificationReport report;
    report.name = "christmas";
    for (int k = kmin; k <= kmax; ++k) {
        for (const Word& w : enumerate_m_sequences(k)) {
            const int expected = hyde_upper_bound(w.size());
            ComplexityResult r = compute_an(w, opts);
            std::string item = "k=" + std::to_string(k) + " " + render_word(w);
            if (detail::budget_hit(report, r, item)) return report;
            report.add({item, r.value == expected,
                        "A_N=" + std::to_string(r.value) + " expected " + std::to_string(expected),
                        r.stats.seconds});
        }
    }
    return report;
}

// A^-(x) - A_N(x) = 2 for the 31-symbol reference m-sequence.
inline VerificationReport verify_refute_nsf(const SearchOptions& opts = {}) {
    VerificationReport report;
    report.name = "refute-nsf";
    const Word x = parse_word(reference_m_sequence, 2);
    ComplexityResult an = compute_an(x, opts);
    if (detail::budget_hit(report, an, "A_N")) return report;
    report.add({"A_N", an.value == 16, "A_N=" + std::to_string(an.value) + " expected 16", an.stats.seconds});
    ComplexityResult am = compute_aminus(x, opts);
    if (detail::budget_hit(report, am, "A^-")) return report;
    report.add({"A^-", am.value == 18, "A^-=" + std::to_string(am.value) + " expected 18", am.stats.seconds});
    report.add({"gap", am.value - an.value == 2, "A^- - A_N = " + std::to_string(am.value - an.value), 0});
    report.add({"chain", an.value <= am.value, "A_N <= A^-", 0});

    // Periods of the states of the deterministic witness along x.
    auto seq = run_states(std::get<PartialDfa>(*am.witness), x);
    std::vector<std::size_t> per_period(x.size() + 2, 0);
    std::vector<bool> counted(am.value, false);
    for (std::size_t i = 0; seq && i < seq->size(); ++i) {
        int s = (*seq)[i];
        if (counted[s]) continue;
        counted[s] = true;
        if (auto p = state_period(*seq, i)) ++per_period[*p];
    }
    bool few = true;
    for (std::size_t t = 1; t < per_period.size(); ++t) few = few && per_period[t] <= t;
    report.add({"periods", seq && per_period[1] <= 1 && few,
                std::to_string(per_period[1]) + " state(s) of period 1; at most t states of period t: " +
                    (few ? "yes" : "no"),
                0});
    return report;
}

// Powers alpha^u with |alpha| = s < P inside one period of a k-stage
// register's output satisfy u <= ceil(k/s).
inline VerificationReport verify_shortpowers(std::size_t trials, int kmax, std::uint64_t seed = 1) {
    VerificationReport report;
    report.name = "shortpowers";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_k(1, kmax);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const int k = pick_k(rng);
        const int q = (k <= 3 && rng() % 3 == 0) ? 3 : 2;
        const bool linear = rng() % 2 == 0;
        Fsr fsr(detail::random_feedback(rng, k, q, linear));
        std::vector<int> fill = detail::random_fill(rng, k, q);
        FsrRun run = run_until_periodic(fsr, fill);
        bool ok = true;
        std::string worst;
        for (const PowerOccurrence& p : scan_powers(run.output)) {
            if (p.period >= run.period) continue;
            if (p.exponent > static_cast<std::size_t>(ceil_div(k, static_cast<int>(p.period)))) {
                ok = false;
                worst = "start " + std::to_string(p.start) + " period " + std::to_string(p.period) +
                        " exponent " + std::to_string(p.exponent);
                break;
            }
        }
        report.add({"k=" + std::to_string(k) + " q=" + std::to_string(q) + (linear ? " linear " : " table ") +
                        render_word(run.output),
                    ok, ok ? "P=" + std::to_string(run.period) : worst, 0});
    }
    return report;
}

// hyde_witness validates with floor(n/2)+1 states and the solver never
// exceeds that bound, on random binary words of length n.
inline VerificationReport verify_hyde(std::size_t n, std::size_t samples, const SearchOptions& opts = {},
                                      std::uint64_t seed = 1) {
    VerificationReport report;
    report.name = "hyde";
    std::mt19937_64 rng(seed ^ (n * 0x9e3779b97f4a7c15ULL));
    const int bound = hyde_upper_bound(n);
    for (std::size_t i = 0; i < samples; ++i) {
        Word w = detail::random_word(rng, n, 2);
        Nfa h = hyde_witness(w);
        bool witness_ok = h.state_count() <= bound && is_unique_nfa_witness(h, w);
        ComplexityResult r = compute_an(w, opts);
        std::string item = "n=" + std::to_string(n) + " " + render_word(w);
        if (detail::budget_hit(report, r, item)) return report;
        report.add({item, witness_ok && r.value <= bound,
                    "witness states " + std::to_string(h.state_count()) + ", A_N=" + std::to_string(r.value) +
                        ", bound " + std::to_string(bound),
                    r.stats.seconds});
    }
    return report;
}

struct SampledRegisterWord {
    Word word;
    int stages = 1;
    std::size_t period = 1;
    FeedbackFunction feedback = FeedbackFunction::linear({1}, 2);
};

// Random register output meeting the k-stage lower-bound hypotheses:
// P > k, n + 1 >= 2k(k-1), n < 2P, and n <= max_len.
inline SampledRegisterWord sample_mainy_word(std::mt19937_64& rng, int kmax, std::size_t max_len) {
    std::uniform_int_distribution<int> pick_k(1, kmax);
    std::uniform_int_distribution<int> pick_q(2, 4);
    while (true) {
        const int k = pick_k(rng);
        const int q = pick_q(rng);
        Fsr fsr(detail::random_feedback(rng, k, q, false));
        std::vector<int> fill = detail::random_fill(rng, k, q);
        FsrRun run = run_until_periodic(fsr, fill);
        if (run.period <= static_cast<std::size_t>(k)) continue;
        const std::size_t lo = std::max<std::size_t>(1, static_cast<std::size_t>(2 * k * (k - 1)));
        const std::size_t hi = std::min(max_len, 2 * run.period - 1);
        if (lo > hi) continue;
        std::uniform_int_distribution<std::size_t> pick_n(lo, hi);
        const std::size_t n = pick_n(rng);
        return {fsr_output(fsr, fill, n), k, run.period, fsr.feedback()};
    }
}

// Lower bound (n+1)/2 - k(k-1)/2 against exact A_N.
inline VerificationReport verify_mainy(std::size_t samples, int kmax = 2, const SearchOptions& opts = {},
                                       std::uint64_t seed = 1) {
    VerificationReport report;
    report.name = "mainy";
    {
        BoundReport b = mainy_lower_bound(7, 1);
        Word y = parse_word("0123456", 7);
        ComplexityResult r = compute_an(y, opts);
        if (detail::budget_hit(report, r, "y=0123456")) return report;
        report.add({"(7,1) bound", b.mainy_applicable && b.twice_mainy_lower == 8,
                    "bound " + (b.mainy_lower() ? detail::fmt_double(*b.mainy_lower()) : std::string("n/a")), 0});
        report.add({"A_N(0123456)", r.value == 4, "A_N=" + std::to_string(r.value), r.stats.seconds});
    }
    {
        BoundReport b = mainy_lower_bound(31, 5);
        report.add({"(31,5) hypotheses", !b.mainy_applicable, "n+1=32 < 2k(k-1)=40", 0});
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        SampledRegisterWord s = sample_mainy_word(rng, kmax, 16);
        BoundReport b = mainy_lower_bound(s.word.size(), s.stages, s.period);
        ComplexityResult r = compute_an(s.word, opts);
        std::string item = "k=" + std::to_string(s.stages) + " q=" + std::to_string(s.word.alphabet_size()) +
                           " P=" + std::to_string(s.period) + " " + render_word(s.word);
        if (detail::budget_hit(report, r, item)) return report;
        bool ok = b.mainy_applicable && 2LL * r.value >= *b.twice_mainy_lower;
        report.add({item, ok,
                    "A_N=" + std::to_string(r.value) + " bound " +
                        (b.mainy_lower() ? detail::fmt_double(*b.mainy_lower()) : std::string("n/a")),
                    r.stats.seconds});
    }
    return report;
}

}  // namespace autocx
