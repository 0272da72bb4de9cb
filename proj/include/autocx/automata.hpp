#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autocx/word.hpp"

namespace autocx {

using Count = std::uint64_t;
inline constexpr Count unbounded = std::numeric_limits<Count>::max();

inline Count saturating_add(Count a, Count b, Count cap) {
    Count s = (a > unbounded - b) ? unbounded : a + b;
    return std::min(s, cap);
}

inline Count saturating_mul(Count a, Count b, Count cap) {
    if (a == 0 || b == 0) return 0;
    if (a > unbounded / b) return cap;
    return std::min(a * b, cap);
}

struct Transition {
    int from = 0;
    int label = 0;
    int to = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

class Nfa {
public:
    Nfa(int states, int alphabet_size, std::vector<Transition> transitions, int start,
        std::vector<int> accepts)
        : states_(states), alphabet_size_(alphabet_size), transitions_(std::move(transitions)),
          start_(start), accepts_(std::move(accepts)) {
        if (states_ < 1) throw std::invalid_argument("automaton needs at least one state");
        if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be at least 1");
        std::sort(transitions_.begin(), transitions_.end());
        transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
        std::sort(accepts_.begin(), accepts_.end());
        accepts_.erase(std::unique(accepts_.begin(), accepts_.end()), accepts_.end());
        check_state(start_);
        for (int a : accepts_) check_state(a);
        for (const auto& t : transitions_) {
            check_state(t.from);
            check_state(t.to);
            if (t.label < 0 || t.label >= alphabet_size_) throw std::invalid_argument("label out of range");
        }
    }

    int state_count() const noexcept { return states_; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    int start() const noexcept { return start_; }
    const std::vector<int>& accepts() const noexcept { return accepts_; }
    bool is_accepting(int s) const { return std::binary_search(accepts_.begin(), accepts_.end(), s); }

    // Reverse every edge and swap the roles of start and the (single) accept state.
    Nfa reversed() const {
        if (accepts_.size() != 1) throw std::invalid_argument("reversal needs exactly one accept state");
        std::vector<Transition> rev;
        rev.reserve(transitions_.size());
        for (const auto& t : transitions_) rev.push_back({t.to, t.label, t.from});
        return Nfa(states_, alphabet_size_, std::move(rev), accepts_.front(), {start_});
    }

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    void check_state(int s) const {
        if (s < 0 || s >= states_) throw std::invalid_argument("state index out of range");
    }

    int states_;
    int alphabet_size_;
    std::vector<Transition> transitions_;
    int start_;
    std::vector<int> accepts_;
};

class PartialDfa {
public:
    static constexpr int undefined = -1;

    PartialDfa(int states, int alphabet_size, int start, std::vector<int> accepts)
        : states_(states), alphabet_size_(alphabet_size),
          delta_(static_cast<std::size_t>(states) * static_cast<std::size_t>(alphabet_size), undefined),
          start_(start), accepts_(std::move(accepts)) {
        if (states_ < 1) throw std::invalid_argument("automaton needs at least one state");
        if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be at least 1");
        check_state(start_);
        std::sort(accepts_.begin(), accepts_.end());
        accepts_.erase(std::unique(accepts_.begin(), accepts_.end()), accepts_.end());
        for (int a : accepts_) check_state(a);
    }

    int state_count() const noexcept { return states_; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    int start() const noexcept { return start_; }
    const std::vector<int>& accepts() const noexcept { return accepts_; }
    bool is_accepting(int s) const { return std::binary_search(accepts_.begin(), accepts_.end(), s); }

    int next(int state, int label) const { return delta_[index(state, label)]; }

    void set(int state, int label, int target) {
        check_state(target);
        int& slot = delta_[index(state, label)];
        if (slot != undefined && slot != target) {
            throw std::invalid_argument("transition already defined with a different target");
        }
        slot = target;
    }

    void clear(int state, int label) { delta_[index(state, label)] = undefined; }

    bool is_total() const {
        return std::find(delta_.begin(), delta_.end(), undefined) == delta_.end();
    }

    std::vector<Transition> transitions() const {
        std::vector<Transition> out;
        for (int s = 0; s < states_; ++s)
            for (int c = 0; c < alphabet_size_; ++c)
                if (int t = next(s, c); t != undefined) out.push_back({s, c, t});
        return out;
    }

    Nfa as_nfa() const { return Nfa(states_, alphabet_size_, transitions(), start_, accepts_); }

    friend bool operator==(const PartialDfa&, const PartialDfa&) = default;

private:
    std::size_t index(int state, int label) const {
        check_state(state);
        if (label < 0 || label >= alphabet_size_) throw std::invalid_argument("label out of range");
        return static_cast<std::size_t>(state) * static_cast<std::size_t>(alphabet_size_) +
               static_cast<std::size_t>(label);
    }
    void check_state(int s) const {
        if (s < 0 || s >= states_) throw std::invalid_argument("state index out of range");
    }

    int states_;
    int alphabet_size_;
    std::vector<int> delta_;
    int start_;
    std::vector<int> accepts_;
};

// Labeled transition sequences of exactly `length` steps from the start state
// to an accepting state, saturated at `cap`.
inline Count count_paths(const Nfa& m, std::size_t length, Count cap) {
    if (cap < 2) throw std::invalid_argument("cap must be at least 2");
    std::vector<Count> cur(m.state_count(), 0), next(m.state_count(), 0);
    cur[m.start()] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (const auto& t : m.transitions()) {
            if (cur[t.from]) next[t.to] = saturating_add(next[t.to], cur[t.from], cap);
        }
        cur.swap(next);
    }
    Count total = 0;
    for (int a : m.accepts()) total = saturating_add(total, cur[a], cap);
    return total;
}

// Accepted words of exactly `length` symbols, saturated at `cap`.
inline Count count_words(const PartialDfa& m, std::size_t length, Count cap) {
    if (cap < 2) throw std::invalid_argument("cap must be at least 2");
    std::vector<Count> cur(m.state_count(), 0), next(m.state_count(), 0);
    cur[m.start()] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int s = 0; s < m.state_count(); ++s) {
            if (!cur[s]) continue;
            for (int c = 0; c < m.alphabet_size(); ++c) {
                int t = m.next(s, c);
                if (t != PartialDfa::undefined) next[t] = saturating_add(next[t], cur[s], cap);
            }
        }
        cur.swap(next);
    }
    Count total = 0;
    for (int a : m.accepts()) total = saturating_add(total, cur[a], cap);
    return total;
}

inline bool accepts_word(const Nfa& m, const Word& x) {
    if (x.alphabet_size() != m.alphabet_size()) throw std::invalid_argument("alphabet size mismatch");
    std::vector<char> cur(m.state_count(), 0), next(m.state_count(), 0);
    cur[m.start()] = 1;
    for (int c : x.symbols()) {
        std::fill(next.begin(), next.end(), 0);
        for (const auto& t : m.transitions())
            if (t.label == c && cur[t.from]) next[t.to] = 1;
        cur.swap(next);
    }
    for (int a : m.accepts())
        if (cur[a]) return true;
    return false;
}

inline bool accepts_word(const PartialDfa& m, const Word& x) {
    if (x.alphabet_size() != m.alphabet_size()) throw std::invalid_argument("alphabet size mismatch");
    int s = m.start();
    for (int c : x.symbols()) {
        s = m.next(s, c);
        if (s == PartialDfa::undefined) return false;
    }
    return m.is_accepting(s);
}

// x is accepted and there is exactly one accepting path of length |x| overall.
inline bool is_unique_nfa_witness(const Nfa& m, const Word& x) {
    if (x.alphabet_size() != m.alphabet_size()) return false;
    return accepts_word(m, x) && count_paths(m, x.size(), 2) == 1;
}

// L(M) restricted to words of length |x| is exactly {x}.
inline bool is_unique_dfa_witness(const PartialDfa& m, const Word& x) {
    if (x.alphabet_size() != m.alphabet_size()) return false;
    return accepts_word(m, x) && count_words(m, x.size(), 2) == 1;
}

// Upper-bound witness with floor(n/2) + 1 states. States 0..m form a chain
// read forward with x_1..x_m, a self-loop at state m reads x_{m+1}, and the
// remaining symbols walk back down the chain. For odd n the walk ends at the
// start state, for even n one state short of it.
inline Nfa hyde_witness(const Word& x) {
    const int n = static_cast<int>(x.size());
    const int m = n / 2;
    std::vector<Transition> edges;
    edges.reserve(x.size());
    if (n == 0) return Nfa(1, x.alphabet_size(), {}, 0, {0});
    for (int i = 0; i < m; ++i) edges.push_back({i, x[i], i + 1});
    edges.push_back({m, x[m], m});
    int state = m;
    for (int i = m + 1; i < n; ++i) {
        edges.push_back({state, x[i], state - 1});
        --state;
    }
    return Nfa(m + 1, x.alphabet_size(), std::move(edges), 0, {state});
}

// ---------------------------------------------------------------------------
// State sequences and the unlabeled graphs they induce.

struct StateSequence {
    std::vector<int> states;

    StateSequence() = default;
    explicit StateSequence(std::vector<int> s) : states(std::move(s)) {
        if (states.empty()) throw std::invalid_argument("state sequence must be nonempty");
    }
    std::size_t size() const noexcept { return states.size(); }
    int operator[](std::size_t i) const { return states[i]; }
};

struct AbstractNfa {
    std::vector<int> states;                   // sorted, distinct
    std::set<std::pair<int, int>> edges;
};

inline AbstractNfa induced_abstract_nfa(const StateSequence& s) {
    AbstractNfa g;
    std::set<int> seen(s.states.begin(), s.states.end());
    g.states.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) g.edges.emplace(s[i], s[i + 1]);
    return g;
}

// Walks of `length` edges from `from` to `to`, saturated at `cap`.
inline Count count_walks(const AbstractNfa& g, int from, int to, std::size_t length, Count cap) {
    std::map<int, std::size_t> idx;
    for (std::size_t i = 0; i < g.states.size(); ++i) idx[g.states[i]] = i;
    std::vector<Count> cur(g.states.size(), 0), next(g.states.size(), 0);
    cur[idx.at(from)] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (auto [u, v] : g.edges) {
            Count c = cur[idx.at(u)];
            if (c) next[idx.at(v)] = saturating_add(next[idx.at(v)], c, cap);
        }
        cur.swap(next);
    }
    return cur[idx.at(to)];
}

inline bool is_path_unique(const StateSequence& s) {
    AbstractNfa g = induced_abstract_nfa(s);
    return count_walks(g, s.states.front(), s.states.back(), s.size() - 1, 2) == 1;
}

// Minimum gap between two occurrences of s_i; nullopt stands for infinity.
inline std::optional<std::size_t> state_period(const StateSequence& s, std::size_t i) {
    if (i >= s.size()) throw std::out_of_range("index out of range");
    std::optional<std::size_t> best;
    std::optional<std::size_t> last;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s[t] != s[i]) continue;
        if (last && (!best || t - *last < *best)) best = t - *last;
        last = t;
    }
    return best;
}

// Sequence of states a deterministic automaton visits while reading x.
inline std::optional<StateSequence> run_states(const PartialDfa& m, const Word& x) {
    std::vector<int> states{m.start()};
    for (int c : x.symbols()) {
        int t = m.next(states.back(), c);
        if (t == PartialDfa::undefined) return std::nullopt;
        states.push_back(t);
    }
    return StateSequence(std::move(states));
}

// The automaton whose transitions are exactly those traversed by s reading x,
// with s_0 as start and s_n as the single accept state.
inline Nfa nfa_from_state_sequence(const StateSequence& s, const Word& x) {
    if (s.size() != x.size() + 1) throw std::invalid_argument("state sequence must have |x| + 1 entries");
    int states = *std::max_element(s.states.begin(), s.states.end()) + 1;
    std::vector<Transition> edges;
    for (std::size_t i = 0; i < x.size(); ++i) edges.push_back({s[i], x[i], s[i + 1]});
    return Nfa(states, x.alphabet_size(), std::move(edges), s.states.front(), {s.states.back()});
}

// ---------------------------------------------------------------------------
// Graphviz rendering.

namespace detail {

inline std::string dot_document(int states, int start, const std::vector<int>& accepts,
                                const std::vector<Transition>& transitions) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    for (int s = 0; s < states; ++s) {
        bool accepting = std::find(accepts.begin(), accepts.end(), s) != accepts.end();
        out << "  q" << s << " [shape=" << (accepting ? "doublecircle" : "circle") << ", label=\"" << s
            << "\"];\n";
    }
    out << "  __start -> q" << start << ";\n";
    for (const auto& t : transitions) {
        out << "  q" << t.from << " -> q" << t.to << " [label=\"" << t.label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace detail

inline std::string to_dot(const Nfa& m) {
    return detail::dot_document(m.state_count(), m.start(), m.accepts(), m.transitions());
}

inline std::string to_dot(const PartialDfa& m) {
    return detail::dot_document(m.state_count(), m.start(), m.accepts(), m.transitions());
}

}  // namespace autocx
