#pragma once

#include <string>
#include <vector>

#include "autocx/automata.hpp"
#include "autocx/word.hpp"

namespace fixture {

inline const std::string m31 = "0001010110100001100100111110111";

// 18-state deterministic witness for m31: states 0..9 then A..H as 10..17,
// start 0, accepting 2.
inline autocx::PartialDfa period_dfa() {
    const int edges[][3] = {
        {0, 0, 1},   {1, 0, 2},   {2, 0, 3},   {3, 1, 4},   {4, 0, 5},   {5, 1, 6},   {6, 0, 7},
        {7, 1, 8},   {8, 1, 9},   {9, 0, 10},  {10, 1, 11}, {11, 0, 12}, {12, 0, 13}, {13, 0, 14},
        {14, 0, 15}, {15, 1, 16}, {16, 1, 17}, {17, 0, 17}, {17, 1, 15}, {15, 0, 13}, {14, 1, 12},
        {12, 1, 10}, {11, 1, 9},  {9, 1, 7},   {7, 0, 5},   {6, 1, 4},   {4, 1, 2}};
    autocx::PartialDfa m(18, 2, 0, {2});
    for (const auto& e : edges) m.set(e[0], e[1], e[2]);
    return m;
}

// States visited by the floor(n/2)+1 state chain-loop-return witness.
inline std::vector<int> hyde_states(std::size_t n) {
    const int m = static_cast<int>(n / 2);
    std::vector<int> s;
    for (int i = 0; i <= m; ++i) s.push_back(i);
    if (n == 0) return s;
    s.push_back(m);
    while (s.size() < n + 1) s.push_back(s.back() - 1);
    return s;
}

}  // namespace fixture
