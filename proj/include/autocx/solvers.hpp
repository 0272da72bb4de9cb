#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "autocx/automata.hpp"
#include "autocx/bounds.hpp"
#include "autocx/fsr.hpp"
#include "autocx/search.hpp"
#include "autocx/word.hpp"

namespace autocx {

enum class Measure { an, aminus, a };

inline const char* measure_name(Measure m) {
    switch (m) {
        case Measure::an: return "an";
        case Measure::aminus: return "aminus";
        case Measure::a: return "a";
    }
    return "?";
}

struct SearchOptions {
    std::uint64_t max_nodes = 0;  // 0: unlimited
    double max_seconds = 0;       // 0: unlimited
    unsigned threads = 1;
    Pruning pruning;
    // Word is known to come from a k-stage register; enables the k-stage
    // lower bound once the word's powers are checked against it.
    std::optional<int> fsr_stages;
    int start_lower_bound = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::vector<int> states_tried;  // levels searched exhaustively or successfully
};

using Witness = std::variant<Nfa, PartialDfa>;

struct ComplexityResult {
    enum class Status { exact, budget_exhausted };

    Measure measure = Measure::an;
    Word word;
    Status status = Status::exact;
    int value = 0;        // meaningful when exact
    int lower_bound = 0;  // proven: value >= lower_bound
    int upper_bound = 0;  // proven by a validated witness
    std::optional<Witness> witness;
    SearchStats stats;

    bool exact() const { return status == Status::exact; }
};

inline int witness_states(const Witness& w) {
    return std::visit([](const auto& m) { return m.state_count(); }, w);
}

inline bool validate_witness(Measure measure, const Witness& w, const Word& x) {
    switch (measure) {
        case Measure::an:
            return std::holds_alternative<Nfa>(w) && is_unique_nfa_witness(std::get<Nfa>(w), x);
        case Measure::aminus:
            return std::holds_alternative<PartialDfa>(w) && is_unique_dfa_witness(std::get<PartialDfa>(w), x);
        case Measure::a:
            return std::holds_alternative<PartialDfa>(w) && std::get<PartialDfa>(w).is_total() &&
                   is_unique_dfa_witness(std::get<PartialDfa>(w), x);
    }
    return false;
}

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void configure_budget(SearchBudget& budget, const SearchOptions& opts) {
    budget.max_nodes = opts.max_nodes;
    if (opts.max_seconds > 0) {
        budget.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opts.max_seconds));
    }
}

inline PartialDfa dfa_from_sequence(const std::vector<int>& seq, const Word& x, int states) {
    PartialDfa m(states, x.alphabet_size(), seq.front(), {seq.back()});
    for (std::size_t i = 0; i < x.size(); ++i) m.set(seq[i], x[i], seq[i + 1]);
    return m;
}

inline Nfa nfa_from_sequence(const std::vector<int>& seq, const Word& x, int states) {
    std::vector<Transition> edges;
    for (std::size_t i = 0; i < x.size(); ++i) edges.push_back({seq[i], x[i], seq[i + 1]});
    return Nfa(states, x.alphabet_size(), std::move(edges), seq.front(), {seq.back()});
}

// Witness with a single state accepting only the empty word among length-0 inputs.
inline PartialDfa empty_word_dfa(int alphabet_size, bool total) {
    PartialDfa m(1, alphabet_size, 0, {0});
    if (total)
        for (int c = 0; c < alphabet_size; ++c) m.set(0, c, 0);
    return m;
}

// States 0..n along x; one state per position.
inline PartialDfa chain_dfa(const Word& x) {
    PartialDfa m(static_cast<int>(x.size()) + 1, x.alphabet_size(), 0, {static_cast<int>(x.size())});
    for (std::size_t i = 0; i < x.size(); ++i) m.set(static_cast<int>(i), x[i], static_cast<int>(i) + 1);
    return m;
}

inline int initial_lower_bound(const Word& x, const SearchOptions& opts) {
    int lower = std::max({1, opts.start_lower_bound, occurrence_lower_bound(x)});
    if (opts.fsr_stages) {
        const int k = *opts.fsr_stages;
        if (!powers_respect_stage_bound(x, k)) {
            throw std::invalid_argument("word contains a power exceeding the " + std::to_string(k) +
                                        "-stage bound; it is not one period of such a register");
        }
        BoundReport b = mainy_lower_bound(x.size(), k);
        if (b.mainy_applicable) lower = std::max(lower, *b.mainy_lower_ceil());
    }
    return lower;
}

// Ascending search over exact state counts [lower, upper).
inline ComplexityResult ascend(Measure measure, const Word& x, const SearchOptions& opts, int lower,
                               int upper, Witness fallback) {
    Stopwatch clock;
    SearchBudget budget;
    configure_budget(budget, opts);
    ComplexityResult r;
    r.measure = measure;
    r.word = x;
    r.lower_bound = lower;
    r.upper_bound = upper;

    SearchConfig cfg;
    cfg.word.assign(x.symbols().begin(), x.symbols().end());
    cfg.alphabet_size = x.alphabet_size();
    cfg.deterministic = measure != Measure::an;
    cfg.pruning = opts.pruning;
    cfg.visit_cap = visit_caps(cfg.word);

    for (int q = lower; q < upper; ++q) {
        cfg.target_states = q;
        LevelOutcome level = search_level(cfg, budget, opts.threads);
        if (level.status == LevelOutcome::Status::budget) {
            r.status = ComplexityResult::Status::budget_exhausted;
            r.lower_bound = q;
            r.witness = std::move(fallback);
            r.stats.nodes = budget.nodes;
            r.stats.seconds = clock.seconds();
            return r;
        }
        r.stats.states_tried.push_back(q);
        if (level.status == LevelOutcome::Status::found) {
            if (measure == Measure::an) {
                r.witness = nfa_from_sequence(level.sequence, x, q);
            } else {
                r.witness = dfa_from_sequence(level.sequence, x, q);
            }
            r.value = r.lower_bound = r.upper_bound = q;
            r.stats.nodes = budget.nodes;
            r.stats.seconds = clock.seconds();
            return r;
        }
    }
    r.value = r.lower_bound = upper;
    r.witness = std::move(fallback);
    r.stats.nodes = budget.nodes;
    r.stats.seconds = clock.seconds();
    return r;
}

inline void check_result(const ComplexityResult& r) {
    if (!r.witness || !validate_witness(r.measure, *r.witness, r.word)) {
        throw std::logic_error(std::string("solver produced an invalid witness for ") + measure_name(r.measure));
    }
    if (r.exact() && witness_states(*r.witness) != r.value) {
        throw std::logic_error("witness size does not match the reported value");
    }
}

}  // namespace detail

// Nondeterministic automatic complexity with a validated witness.
inline ComplexityResult compute_an(const Word& x, const SearchOptions& opts = {}) {
    if (x.empty()) {
        ComplexityResult r;
        r.measure = Measure::an;
        r.word = x;
        r.value = r.lower_bound = r.upper_bound = 1;
        r.witness = Nfa(1, x.alphabet_size(), {}, 0, {0});
        return r;
    }
    const int upper = hyde_upper_bound(x.size());
    const int lower = std::min(upper, detail::initial_lower_bound(x, opts));
    ComplexityResult r = detail::ascend(Measure::an, x, opts, lower, upper, hyde_witness(x));
    detail::check_result(r);
    return r;
}

// Automatic complexity without totality: deterministic, partial transitions.
inline ComplexityResult compute_aminus(const Word& x, const SearchOptions& opts = {}) {
    if (x.empty()) {
        ComplexityResult r;
        r.measure = Measure::aminus;
        r.word = x;
        r.value = r.lower_bound = r.upper_bound = 1;
        r.witness = detail::empty_word_dfa(x.alphabet_size(), false);
        return r;
    }
    const int upper = static_cast<int>(x.size()) + 1;
    SearchOptions o = opts;
    const int lower = std::min(upper, detail::initial_lower_bound(x, o));
    ComplexityResult r = detail::ascend(Measure::aminus, x, o, lower, upper, detail::chain_dfa(x));
    detail::check_result(r);
    return r;
}

namespace detail {

// Fill every undefined slot of m with one of its own states so that x stays
// the only accepted word of length |x|. Adding transitions never removes
// accepted words, so a branch dies once two words are accepted.
inline std::optional<PartialDfa> total_completion(PartialDfa m, const Word& x, SearchBudget& budget) {
    std::vector<std::pair<int, int>> slots;
    for (int s = 0; s < m.state_count(); ++s)
        for (int c = 0; c < m.alphabet_size(); ++c)
            if (m.next(s, c) == PartialDfa::undefined) slots.emplace_back(s, c);
    std::optional<PartialDfa> found;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        std::uint64_t total = budget.nodes.fetch_add(1) + 1;
        if ((budget.max_nodes && total > budget.max_nodes) || budget.exhausted) {
            budget.exhausted = true;
            return true;
        }
        if (i == slots.size()) {
            found = m;
            return true;
        }
        auto [s, c] = slots[i];
        for (int t = 0; t < m.state_count(); ++t) {
            m.set(s, c, t);
            if (count_words(m, x.size(), 2) == 1 && self(self, i + 1)) return true;
            m.clear(s, c);
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace detail

// Automatic complexity (total DFA). A^- <= A <= A^- + 1: only A^- states need
// a check, by completing every A^- -state partial witness in place.
inline ComplexityResult compute_a(const Word& x, const SearchOptions& opts = {}) {
    detail::Stopwatch clock;
    ComplexityResult base = compute_aminus(x, opts);
    ComplexityResult r;
    r.measure = Measure::a;
    r.word = x;
    r.stats = base.stats;
    if (!base.exact()) {
        r.status = ComplexityResult::Status::budget_exhausted;
        r.lower_bound = base.lower_bound;
        r.upper_bound = base.upper_bound + 1;
        PartialDfa partial = std::get<PartialDfa>(*base.witness);
        PartialDfa total(partial.state_count() + 1, x.alphabet_size(), partial.start(), partial.accepts());
        for (int s = 0; s < total.state_count(); ++s)
            for (int c = 0; c < x.alphabet_size(); ++c) {
                int t = s < partial.state_count() ? partial.next(s, c) : PartialDfa::undefined;
                total.set(s, c, t == PartialDfa::undefined ? partial.state_count() : t);
            }
        r.witness = total;
        detail::check_result(r);
        return r;
    }
    const int q = base.value;
    if (x.empty()) {
        r.value = r.lower_bound = r.upper_bound = 1;
        r.witness = detail::empty_word_dfa(x.alphabet_size(), true);
        detail::check_result(r);
        return r;
    }

    detail::SearchBudget budget;
    detail::configure_budget(budget, opts);
    detail::SearchConfig cfg;
    cfg.word.assign(x.symbols().begin(), x.symbols().end());
    cfg.alphabet_size = x.alphabet_size();
    cfg.deterministic = true;
    cfg.target_states = q;
    cfg.pruning = opts.pruning;
    cfg.visit_cap = detail::visit_caps(cfg.word);

    // A total DFA with q = A^- states keeps all q states on the path of x.
    std::optional<PartialDfa> completed;
    detail::SequenceSearch engine(cfg, budget);
    engine.run([&](const std::vector<int>& seq) {
        PartialDfa partial = detail::dfa_from_sequence(seq, x, q);
        completed = detail::total_completion(partial, x, budget);
        return !completed && !budget.exhausted;
    });

    r.stats.nodes += budget.nodes;
    r.stats.states_tried.push_back(q);
    if (completed) {
        r.value = r.lower_bound = r.upper_bound = q;
        r.witness = *completed;
    } else if (budget.exhausted) {
        r.status = ComplexityResult::Status::budget_exhausted;
        r.lower_bound = q;
        r.upper_bound = q + 1;
    } else {
        r.value = r.lower_bound = r.upper_bound = q + 1;
    }
    if (!completed) {
        // Route every missing transition to an extra dead state.
        PartialDfa partial = std::get<PartialDfa>(*base.witness);
        PartialDfa total(q + 1, x.alphabet_size(), partial.start(), partial.accepts());
        for (int s = 0; s <= q; ++s)
            for (int c = 0; c < x.alphabet_size(); ++c) {
                int t = s < q ? partial.next(s, c) : PartialDfa::undefined;
                total.set(s, c, t == PartialDfa::undefined ? q : t);
            }
        r.witness = total;
    }
    r.stats.seconds = clock.seconds();
    detail::check_result(r);
    return r;
}

inline ComplexityResult compute(Measure m, const Word& x, const SearchOptions& opts = {}) {
    switch (m) {
        case Measure::an: return compute_an(x, opts);
        case Measure::aminus: return compute_aminus(x, opts);
        case Measure::a: return compute_a(x, opts);
    }
    throw std::invalid_argument("unknown measure");
}

}  // namespace autocx
