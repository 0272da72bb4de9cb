#pragma once

// Brute-force reference implementations. Nothing here calls into the search
// code; uniqueness checks use their own path counting.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Sym = std::vector<int>;

inline std::string text(const Sym& x) {
    std::string s;
    for (int c : x) s.push_back(static_cast<char>('0' + c));
    return s;
}

inline Sym from_text(const std::string& s) {
    Sym x;
    for (char c : s) x.push_back(c - '0');
    return x;
}

// Every word of length n over {0..q-1}, in lexicographic order.
inline std::vector<Sym> all_words(std::size_t n, int q) {
    std::vector<Sym> out;
    Sym w(n, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

// (start, period, exponent) for every maximal power with exponent >= 2 and
// period <= n/2, by direct comparison.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> powers(const Sym& x) {
    const std::size_t n = x.size();
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t s = 1; 2 * s <= n; ++s) {
            std::size_t u = 1;
            while (start + (u + 1) * s <= n) {
                bool same = true;
                for (std::size_t t = 0; t < s; ++t) {
                    if (x[start + t] != x[start + u * s + t]) {
                        same = false;
                        break;
                    }
                }
                if (!same) break;
                ++u;
            }
            if (u < 2) continue;
            bool left = start >= s;
            for (std::size_t t = 0; left && t < s; ++t) left = x[start - s + t] == x[start + t];
            if (!left) out.emplace_back(start, s, u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Largest u such that some block of length s appears u times in a row.
inline std::size_t max_exponent(const Sym& x, std::size_t s) {
    std::size_t best = 1;
    for (std::size_t start = 0; start + s <= x.size(); ++start) {
        std::size_t u = 1;
        while (start + (u + 1) * s <= x.size() &&
               std::equal(x.begin() + start, x.begin() + start + s, x.begin() + start + u * s)) {
            ++u;
        }
        best = std::max(best, u);
    }
    return best;
}

// Shortest binary linear recurrence producing x, by trying every connection
// vector of every length.
inline std::size_t min_lfsr_length(const Sym& x) {
    const std::size_t n = x.size();
    for (std::size_t L = 0; L <= n; ++L) {
        for (std::uint32_t c = 0; c < (1u << L); ++c) {
            bool ok = true;
            for (std::size_t i = L; ok && i < n; ++i) {
                int v = 0;
                for (std::size_t j = 1; j <= L; ++j) {
                    if ((c >> (j - 1)) & 1u) v ^= x[i - j];
                }
                ok = v == x[i];
            }
            if (ok) return L;
        }
    }
    return n;
}

struct Edge {
    int from, label, to;
};

// Total number of accepting paths of the given length (exact, no cap).
inline std::uint64_t accepting_paths(int states, const std::vector<Edge>& edges, int start,
                                     const std::vector<int>& accepts, std::size_t length) {
    std::vector<std::uint64_t> cur(states, 0), nxt(states, 0);
    cur[start] = 1;
    for (std::size_t i = 0; i < length; ++i) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (const auto& e : edges) nxt[e.to] += cur[e.from];
        cur.swap(nxt);
    }
    std::uint64_t total = 0;
    for (int a : accepts) total += cur[a];
    return total;
}

inline bool reads(int states, const std::vector<Edge>& edges, int start, const std::vector<int>& accepts,
                  const Sym& x) {
    std::vector<bool> cur(states, false);
    cur[start] = true;
    for (int c : x) {
        std::vector<bool> nxt(states, false);
        for (const auto& e : edges) {
            if (e.label == c && cur[e.from]) nxt[e.to] = true;
        }
        cur.swap(nxt);
    }
    for (int a : accepts) {
        if (cur[a]) return true;
    }
    return false;
}

// Minimum NFA size with a unique accepting path, for every binary word of
// length 1..max_len. Enumerates every automaton on up to max_states states
// with start 0, an arbitrary accept set and at most max_len transitions
// (transitions off the unique path can always be dropped).
inline std::map<std::string, int> an_table(std::size_t max_len, int max_states) {
    std::map<std::string, int> best;
    const int q = 2;
    for (int m = 1; m <= max_states; ++m) {
        const int slots = m * q * m;
        std::vector<Edge> all;
        for (int u = 0; u < m; ++u)
            for (int c = 0; c < q; ++c)
                for (int v = 0; v < m; ++v) all.push_back({u, c, v});
        std::vector<Edge> chosen;
        std::vector<std::vector<std::uint64_t>> cnt(max_len + 1, std::vector<std::uint64_t>(m));

        auto evaluate = [&] {
            for (auto& row : cnt) std::fill(row.begin(), row.end(), 0);
            cnt[0][0] = 1;
            for (std::size_t L = 1; L <= max_len; ++L)
                for (const auto& e : chosen) cnt[L][e.to] += cnt[L - 1][e.from];
            for (int acc = 1; acc < (1 << m); ++acc) {
                for (std::size_t L = 1; L <= max_len; ++L) {
                    std::uint64_t total = 0;
                    int end = -1;
                    for (int s = 0; s < m; ++s) {
                        if ((acc >> s) & 1) {
                            total += cnt[L][s];
                            if (cnt[L][s]) end = s;
                        }
                    }
                    if (total != 1) continue;
                    Sym w(L);
                    int s = end;
                    for (std::size_t t = L; t > 0; --t) {
                        for (const auto& e : chosen) {
                            if (e.to == s && cnt[t - 1][e.from] > 0) {
                                w[t - 1] = e.label;
                                s = e.from;
                                break;
                            }
                        }
                    }
                    best.emplace(text(w), m);
                }
            }
        };

        std::function<void(int)> rec = [&](int next) {
            evaluate();
            if (chosen.size() == max_len) return;
            for (int i = next; i < slots; ++i) {
                chosen.push_back(all[i]);
                rec(i + 1);
                chosen.pop_back();
            }
        };
        rec(0);
    }
    return best;
}

// Smallest partial DFA accepting exactly x among words of length |x|. Builds
// every run of x over states numbered in order of first use, then accepts the
// last state only.
struct DfaCandidate {
    int states;
    std::vector<Edge> edges;
    int accept;
};

inline void for_each_run(const Sym& x, int max_states, const std::function<bool(const DfaCandidate&)>& f) {
    std::map<std::pair<int, int>, int> delta;
    std::vector<int> run{0};
    int used = 1;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == x.size()) {
            DfaCandidate c{used, {}, run.back()};
            for (auto [k, v] : delta) c.edges.push_back({k.first, k.second, v});
            stop = f(c);
            return;
        }
        auto key = std::make_pair(run.back(), x[i]);
        if (auto it = delta.find(key); it != delta.end()) {
            run.push_back(it->second);
            rec(i + 1);
            run.pop_back();
            return;
        }
        for (int t = 0; t <= used && t < max_states; ++t) {
            bool fresh = t == used;
            if (fresh) ++used;
            delta[key] = t;
            run.push_back(t);
            rec(i + 1);
            run.pop_back();
            delta.erase(key);
            if (fresh) --used;
        }
    };
    rec(0);
}

inline int aminus(const Sym& x) {
    for (int m = 1; m <= static_cast<int>(x.size()) + 1; ++m) {
        bool found = false;
        for_each_run(x, m, [&](const DfaCandidate& c) {
            found = accepting_paths(c.states, c.edges, 0, {c.accept}, x.size()) == 1;
            return found;
        });
        if (found) return m;
    }
    return -1;
}

// Smallest total DFA: every run on at most m states, padded to m states, with
// every undefined transition filled in every possible way.
inline int total_dfa(const Sym& x, int q) {
    for (int m = 1; m <= static_cast<int>(x.size()) + 2; ++m) {
        bool found = false;
        for_each_run(x, m, [&](const DfaCandidate& c) {
            std::vector<std::vector<int>> delta(m, std::vector<int>(q, -1));
            for (const auto& e : c.edges) delta[e.from][e.label] = e.to;
            std::vector<std::pair<int, int>> holes;
            for (int s = 0; s < m; ++s)
                for (int a = 0; a < q; ++a)
                    if (delta[s][a] < 0) holes.emplace_back(s, a);
            std::function<bool(std::size_t)> fill = [&](std::size_t h) -> bool {
                if (h == holes.size()) {
                    std::vector<Edge> edges;
                    for (int s = 0; s < m; ++s)
                        for (int a = 0; a < q; ++a) edges.push_back({s, a, delta[s][a]});
                    return accepting_paths(m, edges, 0, {c.accept}, x.size()) == 1;
                }
                for (int t = 0; t < m; ++t) {
                    delta[holes[h].first][holes[h].second] = t;
                    if (fill(h + 1)) return true;
                }
                delta[holes[h].first][holes[h].second] = -1;
                return false;
            };
            found = fill(0);
            return found;
        });
        if (found) return m;
    }
    return -1;
}

// Number of walks with `length` edges from a to b in the graph whose edges are
// the consecutive pairs of seq, by memoized depth-first enumeration; counts
// above `cap` are reported as cap.
inline std::uint64_t walks(const std::vector<int>& seq, int a, int b, std::size_t length, std::uint64_t cap = 2) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) edges.emplace_back(seq[i], seq[i + 1]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::map<std::pair<int, std::size_t>, std::uint64_t> memo;
    std::function<std::uint64_t(int, std::size_t)> go = [&](int at, std::size_t left) -> std::uint64_t {
        if (left == 0) return at == b ? 1 : 0;
        auto key = std::make_pair(at, left);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (auto [u, v] : edges) {
            if (u == at) total = std::min(cap, total + go(v, left - 1));
        }
        return memo[key] = total;
    };
    return go(a, length);
}

inline bool path_unique(const std::vector<int>& seq) { return walks(seq, seq.front(), seq.back(), seq.size() - 1) == 1; }

}  // namespace oracle
