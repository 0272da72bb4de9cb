#pragma once

// Exhaustive search over state sequences s_0 ... s_n. A candidate witness for
// a word x is the automaton whose transitions are exactly (s_i, x_i, s_{i+1}),
// with start s_0 and single accept state s_n. States are numbered in order of
// first appearance, so every automaton is visited once up to relabeling.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace autocx {

// Each switch removes only branches that cannot lead to a witness.
struct Pruning {
    bool occurrence = true;   // per-state recurrence caps, at most l states of period l
    bool feasibility = true;  // enough steps left to use every state; visit capacity
    bool walk_cap = true;     // abort as soon as a prefix admits two walks
};

namespace detail {

struct SearchBudget {
    std::uint64_t max_nodes = 0;  // 0: unlimited
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    // Parallel tasks with a larger index than this stop early.
    std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
};

struct SearchConfig {
    std::vector<int> word;
    int alphabet_size = 2;
    bool deterministic = false;
    int target_states = 1;  // witnesses must use exactly this many states
    Pruning pruning;
    std::vector<int> visit_cap;  // visit_cap[l]: max visits of a state with period l
};

// visit_cap[l] = (largest exponent of a power of period l in x) + 1.
inline std::vector<int> visit_caps(std::span<const int> word) {
    const std::size_t n = word.size();
    std::vector<int> caps(n + 2, 1);
    for (std::size_t l = 1; l <= n; ++l) {
        std::size_t best = 1, run = 0;
        for (std::size_t i = 0; i + l < n; ++i) {
            run = (word[i] == word[i + l]) ? run + 1 : 0;
            best = std::max(best, (run + l) / l);
        }
        caps[l] = static_cast<int>(best) + 1;
    }
    return caps;
}

class SequenceSearch {
public:
    static constexpr int max_states = 64;

    enum class Flow { go_on, stop };

    SequenceSearch(const SearchConfig& config, SearchBudget& budget)
        : cfg_(config), budget_(budget), n_(static_cast<int>(config.word.size())),
          q_(config.alphabet_size) {
        if (cfg_.target_states < 1 || cfg_.target_states > max_states) {
            throw std::invalid_argument("state budget must be in 1..64");
        }
        if (n_ < 1) throw std::invalid_argument("sequence search needs a nonempty word");
        if (static_cast<int>(cfg_.visit_cap.size()) < n_ + 2) cfg_.visit_cap = visit_caps(cfg_.word);
        seq_.assign(n_ + 1, -1);
        label_.fill(-1);
        out_.fill(0);
        delta_.assign(static_cast<std::size_t>(max_states) * q_, -1);
        layers_.assign(n_ + 1, {});
        saved_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), {});
        per_period_.assign(n_ + 2, 0);
        occ_.fill(0);
        last_.fill(-1);
        period_.fill(0);
        build_single_visit_table();
    }

    void set_task_index(std::size_t i) { task_index_ = i; }

    // Depth-first over valid sequences; on_solution(seq) returns false to stop.
    template <class OnSolution>
    Flow run(OnSolution&& on_solution) {
        reset_root();
        Flow f = dfs(0, n_, on_solution);
        flush_nodes();
        return f;
    }

    // Continue the search below a prefix produced by collect_prefixes.
    template <class OnSolution>
    Flow run_from(std::span<const int> prefix, OnSolution&& on_solution) {
        reset_root();
        std::vector<Undo> undo(prefix.size());
        int t = 1;
        for (; t < static_cast<int>(prefix.size()); ++t) {
            if (!push(t, prefix[t], undo[t])) {
                pop(t, prefix[t], undo[t]);
                break;
            }
        }
        Flow f = Flow::go_on;
        if (t == static_cast<int>(prefix.size())) f = dfs(t - 1, n_, on_solution);
        for (int s = t - 1; s >= 1; --s) pop(s, prefix[s], undo[s]);
        flush_nodes();
        return f;
    }

    // All valid prefixes s_0 ... s_depth, in depth-first order.
    std::vector<std::vector<int>> collect_prefixes(int depth) {
        std::vector<std::vector<int>> out;
        reset_root();
        auto record = [&](const std::vector<int>& seq) {
            out.emplace_back(seq.begin(), seq.begin() + depth + 1);
            return true;
        };
        dfs(0, depth, record);
        flush_nodes();
        return out;
    }

    bool stopped() const { return stopped_; }

private:
    struct Mask2 {
        std::uint64_t one = 0;  // at least one walk
        std::uint64_t two = 0;  // at least two walks
    };

    struct Undo {
        bool fresh = false;
        bool new_edge = false;
        bool period_set = false;
        bool layers_saved = false;
        int prev_last = -1;
    };

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void reset_root() {
        stopped_ = false;
        used_ = 1;
        seq_[0] = 0;
        occ_.fill(0);
        last_.fill(-1);
        occ_[0] = 1;
        last_[0] = 0;
        layers_[0] = {bit(0), 0};
    }

    Mask2 step(const Mask2& prev) const {
        Mask2 next;
        std::uint64_t rest = prev.one;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t a = out_[u];
            next.two |= next.one & a;
            next.one |= a;
            if (prev.two & bit(u)) next.two |= a;
        }
        return next;
    }

    // best_single_[g * (n+1) + len]: most further visits for a state seen once,
    // whose next visit is at least g steps later, with len steps left after it.
    void build_single_visit_table() {
        const int w = n_ + 1;
        best_single_.assign(static_cast<std::size_t>(w + 1) * w, 0);
        for (int len = 0; len <= n_; ++len) {
            int best = 0;
            for (int g = len; g >= 1; --g) {
                int c = std::min(cfg_.visit_cap[g] - 1, len / g);
                best = std::max(best, c);
                best_single_[static_cast<std::size_t>(g) * w + len] = best;
            }
        }
    }

    int single_visit_bound(int gap, int len) const {
        if (gap > len || len <= 0) return 0;
        return best_single_[static_cast<std::size_t>(gap) * (n_ + 1) + len];
    }

    // Upper bound on the visits the remaining n - t positions can absorb.
    bool capacity_ok(int t) const {
        const int remaining = n_ - t;
        if (remaining == 0) return true;
        long long cap = 0;
        for (int v = 0; v < used_; ++v) {
            if (occ_[v] >= 2) {
                int p = period_[v];
                // The only possible revisit time has already passed.
                if (cfg_.pruning.occurrence && v != seq_[t] && last_[v] + p <= t) continue;
                cap += std::max(0, std::min(cfg_.visit_cap[p] - occ_[v], (n_ - last_[v]) / p));
            } else {
                int gap = (v == seq_[t]) ? 1 : t + 1 - last_[v];
                cap += single_visit_bound(gap, n_ - last_[v]);
            }
            if (cap >= remaining) return true;
        }
        const int fresh = cfg_.target_states - used_;
        if (fresh <= 0) return cap >= remaining;
        // A fresh state first appears at t+1 or later.
        int per_fresh = 1 + single_visit_bound(1, remaining - 1);
        return cap + static_cast<long long>(fresh) * per_fresh >= remaining;
    }

    bool push(int t, int v, Undo& u) {
        const int from = seq_[t - 1];
        const int c = cfg_.word[t - 1];
        u = {};
        if (v == used_) {
            ++used_;
            u.fresh = true;
        }
        seq_[t] = v;
        if (label_[from * max_states + v] < 0) {
            label_[from * max_states + v] = static_cast<std::int8_t>(c);
            out_[from] |= bit(v);
            if (cfg_.deterministic) delta_[static_cast<std::size_t>(from) * q_ + c] = v;
            u.new_edge = true;
        }
        u.prev_last = last_[v];
        int gap = 0;
        ++occ_[v];
        if (occ_[v] >= 2) {
            gap = t - last_[v];
            if (occ_[v] == 2) {
                period_[v] = gap;
                ++per_period_[gap];
                u.period_set = true;
            }
        }
        last_[v] = t;

        if (cfg_.pruning.feasibility && cfg_.target_states - used_ > n_ - t) return false;
        if (cfg_.pruning.occurrence && occ_[v] >= 2) {
            const int p = period_[v];
            // Consecutive returns to a state on a unique path are equally spaced.
            if (gap != p) return false;
            if (occ_[v] > cfg_.visit_cap[p]) return false;
            if (per_period_[p] > p) return false;
        }
        if (t == n_ && used_ != cfg_.target_states) return false;

        if (cfg_.pruning.walk_cap) {
            if (u.new_edge) {
                Mask2* save = &saved_[static_cast<std::size_t>(t) * (n_ + 1)];
                std::copy(layers_.begin(), layers_.begin() + t, save);
                u.layers_saved = true;
                int j0 = 1;
                while (j0 < t && !(layers_[j0 - 1].one & bit(from))) ++j0;
                for (int j = j0; j <= t; ++j) layers_[j] = step(layers_[j - 1]);
            } else {
                layers_[t] = step(layers_[t - 1]);
            }
            if (layers_[t].two & bit(v)) return false;
        } else if (t == n_) {
            Mask2 cur{bit(seq_[0]), 0};
            for (int j = 1; j <= n_; ++j) cur = step(cur);
            if (cur.two & bit(v)) return false;
        }
        if (cfg_.pruning.feasibility && !capacity_ok(t)) return false;
        return true;
    }

    void pop(int t, int v, const Undo& u) {
        const int from = seq_[t - 1];
        const int c = cfg_.word[t - 1];
        if (u.layers_saved) {
            const Mask2* save = &saved_[static_cast<std::size_t>(t) * (n_ + 1)];
            std::copy(save, save + t, layers_.begin());
        }
        if (u.period_set) {
            --per_period_[period_[v]];
            period_[v] = 0;
        }
        --occ_[v];
        last_[v] = u.prev_last;
        if (u.new_edge) {
            label_[from * max_states + v] = -1;
            out_[from] &= ~bit(v);
            if (cfg_.deterministic) delta_[static_cast<std::size_t>(from) * q_ + c] = -1;
        }
        if (u.fresh) --used_;
        seq_[t] = -1;
    }

    void flush_nodes() {
        if (local_nodes_) {
            budget_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
            local_nodes_ = 0;
        }
    }

    bool should_stop() {
        if (stopped_) return true;
        if (++local_nodes_ < 512) return false;
        std::uint64_t total = budget_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
        local_nodes_ = 0;
        if (budget_.exhausted.load(std::memory_order_relaxed) ||
            (budget_.max_nodes && total > budget_.max_nodes) ||
            std::chrono::steady_clock::now() > budget_.deadline) {
            budget_.exhausted = true;
            stopped_ = true;
        } else if (budget_.cutoff.load(std::memory_order_relaxed) < task_index_) {
            stopped_ = true;
        }
        return stopped_;
    }

    template <class OnSolution>
    Flow dfs(int t, int depth, OnSolution& on_solution) {
        if (t == depth) return on_solution(seq_) ? Flow::go_on : Flow::stop;
        if (should_stop()) return Flow::stop;
        const int u = seq_[t];
        const int c = cfg_.word[t];

        auto attempt = [&](int v) {
            Undo r;
            Flow f = Flow::go_on;
            if (push(t + 1, v, r)) f = dfs(t + 1, depth, on_solution);
            pop(t + 1, v, r);
            return f;
        };

        const int used_here = used_;
        if (cfg_.deterministic) {
            const int forced = delta_[static_cast<std::size_t>(u) * q_ + c];
            if (forced >= 0) return attempt(forced);
        } else {
            // Reuse an edge already carrying this label before opening new ones.
            for (int v = 0; v < used_here; ++v) {
                if (label_[u * max_states + v] != c) continue;
                if (attempt(v) == Flow::stop) return Flow::stop;
            }
        }
        for (int v = 0; v < used_here; ++v) {
            if (label_[u * max_states + v] >= 0) continue;
            if (attempt(v) == Flow::stop) return Flow::stop;
        }
        if (used_here < cfg_.target_states) {
            if (attempt(used_here) == Flow::stop) return Flow::stop;
        }
        return Flow::go_on;
    }

    SearchConfig cfg_;
    SearchBudget& budget_;
    int n_;
    int q_;
    std::vector<int> seq_;
    int used_ = 1;
    std::array<std::int8_t, max_states * max_states> label_{};
    std::array<std::uint64_t, max_states> out_{};
    std::vector<int> delta_;
    std::vector<Mask2> layers_;
    std::vector<Mask2> saved_;
    std::array<int, max_states> occ_{};
    std::array<int, max_states> last_{};
    std::array<int, max_states> period_{};
    std::vector<int> per_period_;
    std::vector<int> best_single_;
    std::uint64_t local_nodes_ = 0;
    bool stopped_ = false;
    std::size_t task_index_ = 0;
};

struct LevelOutcome {
    enum class Status { found, none, budget } status = Status::none;
    std::vector<int> sequence;
};

// First witness (in sequential depth-first order) using exactly
// cfg.target_states states, or proof that none exists.
inline LevelOutcome search_level(const SearchConfig& cfg, SearchBudget& budget, unsigned threads) {
    LevelOutcome result;
    budget.cutoff = std::numeric_limits<std::size_t>::max();
    const int n = static_cast<int>(cfg.word.size());

    if (threads <= 1 || n < 4) {
        SequenceSearch engine(cfg, budget);
        engine.run([&](const std::vector<int>& seq) {
            result.sequence = seq;
            result.status = LevelOutcome::Status::found;
            return false;
        });
        if (result.status != LevelOutcome::Status::found && budget.exhausted) {
            result.status = LevelOutcome::Status::budget;
        }
        return result;
    }

    std::vector<std::vector<int>> frontier;
    {
        SequenceSearch engine(cfg, budget);
        const std::size_t want = std::size_t{32} * threads;
        for (int depth = 1; depth < n; ++depth) {
            frontier = engine.collect_prefixes(depth);
            if (frontier.size() >= want || budget.exhausted) break;
        }
    }
    if (budget.exhausted) {
        result.status = LevelOutcome::Status::budget;
        return result;
    }

    std::vector<std::vector<int>> found(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        SequenceSearch engine(cfg, budget);
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size() || budget.exhausted) break;
            if (budget.cutoff.load() < i) continue;
            engine.set_task_index(i);
            engine.run_from(frontier[i], [&](const std::vector<int>& seq) {
                found[i] = seq;
                std::size_t cur = budget.cutoff.load();
                while (i < cur && !budget.cutoff.compare_exchange_weak(cur, i)) {
                }
                return false;
            });
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::size_t best = budget.cutoff.load();
    if (best < frontier.size()) {
        result.status = LevelOutcome::Status::found;
        result.sequence = found[best];
    } else if (budget.exhausted) {
        result.status = LevelOutcome::Status::budget;
    }
    return result;
}

}  // namespace detail
}  // namespace autocx
