// End-to-end acceptance run: one PASS/FAIL line per criterion, each with its
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "autocx/autocx.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace autocx;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Verdict()> check;
};

SearchOptions parallel() {
    SearchOptions o;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

Verdict from_report(const VerificationReport& r) {
    Verdict v{r.passed, std::to_string(r.checked) + " checks"};
    for (const auto& l : r.lines) {
        if (!l.passed) {
            v.detail += "; first failure: " + l.item + " " + l.detail;
            break;
        }
    }
    return v;
}

Verdict lfsr_trace() {
    RegisterSetup s = from_mirrored_register(std::vector<int>{1, 1, 1, 0, 1}, std::vector<int>{0, 1, 0, 0, 0});
    Fsr fsr(FeedbackFunction::linear(s.taps, 2));
    std::vector<int> fill = s.fill;
    std::string out;
    for (int t = 0; t < 31; ++t) {
        out.push_back(static_cast<char>('0' + fill[0]));
        fill = fsr.step(fill);
    }
    FsrRun run = run_until_periodic(fsr, s.fill);
    bool ok = out == fixture::m31 && fill == s.fill && run.period == 31 && run.preperiod == 0 &&
              render_word(generate_m_sequence(s.taps, s.fill)) == fixture::m31;
    return {ok, "output " + out + ", period " + std::to_string(run.period)};
}

Verdict full_cycle() {
    auto table_of = [](auto f) {
        std::string t;
        for (int idx = 0; idx < 8; ++idx) {
            int r = (idx >> 2) & 1, q = (idx >> 1) & 1, p = idx & 1;  // r oldest, p newest
            t.push_back(static_cast<char>('0' + (f(p, q, r) & 1)));
        }
        return t;
    };
    std::set<std::string> want{table_of([](int p, int q, int r) { return p + p * q + r + 1; }),
                               table_of([](int p, int q, int r) { return q + p * q + r + 1; })};
    std::set<std::string> got;
    auto found = enumerate_full_cycle_feedbacks(3);
    for (const auto& f : found) got.insert(render_truth_table(f));
    std::string detail;
    for (const auto& t : got) detail += t + " ";
    return {found.size() == 2 && got == want, "tables " + detail};
}

Verdict nonlinear_output() {
    Word x = parse_word("00011101", 2);
    ComplexityResult r = compute_an(x);
    bool witness_ok = r.exact() && r.value == 4 && r.witness && witness_states(*r.witness) == 4 &&
                      is_unique_nfa_witness(std::get<Nfa>(*r.witness), x);
    detail::SearchConfig cfg;
    cfg.word.assign(x.symbols().begin(), x.symbols().end());
    cfg.pruning = {false, false, false};
    cfg.visit_cap = detail::visit_caps(cfg.word);
    cfg.target_states = 3;
    detail::SearchBudget budget;
    bool none = detail::search_level(cfg, budget, 1).status == detail::LevelOutcome::Status::none;
    return {witness_ok && none, "A_N=" + std::to_string(r.value) + ", 3-state search exhausted after " +
                                    std::to_string(budget.nodes.load()) + " nodes with no witness"};
}

Verdict oracle_equivalence() {
    const auto table = oracle::an_table(6, 4);
    std::size_t words = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& w : oracle::all_words(n, 2)) {
            auto it = table.find(oracle::text(w));
            int got = compute_an(Word(w, 2)).value;
            if (it == table.end() || it->second != got) return {false, "A_N mismatch on " + oracle::text(w)};
            ++words;
        }
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& w : oracle::all_words(n, 2)) {
            Word x(w, 2);
            int an = compute_an(x).value, am = compute_aminus(x).value, a = compute_a(x).value;
            int want = n == 0 ? 1 : oracle::aminus(w);
            if (am != want) return {false, "A^- mismatch on " + oracle::text(w)};
            if (!(an <= am && am <= a && a <= am + 1)) return {false, "chain broken on " + oracle::text(w)};
            ++words;
        }
    return {true, std::to_string(words) + " word checks"};
}

Verdict hyde() {
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 14; ++n) {
        VerificationReport r = verify_hyde(n, 500, {}, 2024);
        if (!r.passed) return from_report(r);
        checked += r.checked;
    }
    return {true, std::to_string(checked) + " random words"};
}

Verdict mainy() {
    BoundReport seven = mainy_lower_bound(7, 1, 7);
    BoundReport big = mainy_lower_bound(31, 5, 31);
    int an = compute_an(parse_word("0123456", 7)).value;
    VerificationReport r = verify_mainy(50, 2, {}, 2024);
    Verdict v = from_report(r);
    v.ok = v.ok && seven.mainy_applicable && seven.mainy_lower_ceil() == 4 && an == 4 && !big.mainy_applicable;
    v.detail = "(7,1) bound " + detail::fmt_double(seven.mainy_lower().value_or(-1)) + ", A_N(0123456)=" +
               std::to_string(an) + ", (31,5) applicable=" + (big.mainy_applicable ? "yes" : "no") + ", " + v.detail;
    return v;
}

Verdict survey() {
    HydeSurvey s = survey_hyde_fraction(8);
    double f = s.fraction();
    return {f >= 0.3 && f <= 0.7,
            std::to_string(s.attaining) + "/" + std::to_string(s.total) + " = " + std::to_string(f)};
}

Verdict linear_complexity() {
    std::size_t seqs = 0, words = 0;
    for (int k = 1; k <= 5; ++k)
        for (const auto& w : enumerate_m_sequences(k)) {
            if (berlekamp_massey(w).length != static_cast<std::size_t>(k)) return {false, "m-sequence " + render_word(w)};
            ++seqs;
        }
    for (std::size_t n = 0; n <= 10; ++n)
        for (const auto& w : oracle::all_words(n, 2)) {
            if (berlekamp_massey(Word(w, 2)).length != oracle::min_lfsr_length(w)) return {false, oracle::text(w)};
            ++words;
        }
    return {true, std::to_string(seqs) + " m-sequences, " + std::to_string(words) + " words"};
}

Verdict lemma_suite() {
    std::mt19937_64 rng(12);
    std::size_t generated = 0;
    while (generated < 1000) {
        std::vector<int> s(3 + rng() % 14);
        const int states = 2 + static_cast<int>(rng() % 4);
        for (int& v : s) v = static_cast<int>(rng() % states);
        if (!oracle::path_unique(s)) continue;
        ++generated;
        std::map<int, std::vector<std::size_t>> at;
        for (std::size_t i = 0; i < s.size(); ++i) at[s[i]].push_back(i);
        for (const auto& [state, pos] : at)
            for (std::size_t a = 0; a + 2 < pos.size(); ++a) {
                std::size_t i = pos[a], j = pos[a + 1], k = pos[a + 2];
                if (j - i != k - j || !std::equal(s.begin() + i, s.begin() + j + 1, s.begin() + j))
                    return {false, "repetition without power in " + oracle::text(s)};
            }
        std::map<std::size_t, std::set<int>> by_period;
        StateSequence seq(s);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (auto p = state_period(seq, i)) by_period[*p].insert(s[i]);
        for (const auto& [t, st] : by_period)
            if (st.size() > t) return {false, "too many states of period " + std::to_string(t)};
    }

    Witness w = witness_from_json(json::parse(witness_to_json(fixture::period_dfa()).dump()));
    const PartialDfa& d = std::get<PartialDfa>(w);
    Word x = parse_word(fixture::m31, 2);
    auto run = run_states(d, x);
    if (!run || !is_unique_dfa_witness(d, x)) return {false, "serialized witness does not accept x uniquely"};
    std::map<int, std::optional<std::size_t>> period;
    for (std::size_t i = 0; i < run->size(); ++i) period[(*run)[i]] = state_period(*run, i);
    int ones = 0;
    for (const auto& [st, p] : period) ones += p == 1u;
    bool ok = period.at(2) == 29u && period.at(17) == 1u && ones == 1;
    return {ok, std::to_string(generated) + " sequences; state 2 period " +
                    std::to_string(period.at(2).value_or(0)) + ", state H period " +
                    std::to_string(period.at(17).value_or(0)) + ", " + std::to_string(ones) + " state(s) of period 1"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "lfsr-trace", 1, lfsr_trace},
        {2, "full-cycle-k3", 1, full_cycle},
        {3, "an-00011101", 10, nonlinear_output},
        {4, "christmas-k3-k4", 600, [] { return from_report(verify_christmas(4, parallel(), 3)); }},
        {5, "refute-nsf-31", 36 * 3600, [] { return from_report(verify_refute_nsf(parallel())); }},
        {6, "oracle-equivalence", 1800, oracle_equivalence},
        {7, "hyde-bound", 600, hyde},
        {8, "mainy-bound", 600, mainy},
        {9, "shortpowers", 60, [] { return from_report(verify_shortpowers(100, 4, 2024)); }},
        {10, "survey-n8", 600, survey},
        {11, "linear-complexity", 300, linear_complexity},
        {12, "lemma-suite", 60, lemma_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            v.ok = false;
            v.detail += " (over the " + std::to_string(static_cast<long>(c.limit_seconds)) + " s limit)";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " [" << timing << "] "
                  << v.detail << std::endl;
        failed += !v.ok;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
              << std::endl;
    return failed ? 1 : 0;
}
