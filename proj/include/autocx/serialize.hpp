#pragma once

// JSON documents for witnesses and complexity results.
//
// witness: {"kind": "nfa"|"dfa", "states": Q, "q": q, "start": s,
//           "accepts": [..], "transitions": [[from, label, to], ..]}
// result:  {"measure", "word", "q", "status", "value", "lower", "upper",
//           "witness", "stats": {"nodes", "seconds", "states_tried"},
//           "bounds": {"hyde", "mainy"?}}

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "autocx/automata.hpp"
#include "autocx/bounds.hpp"
#include "autocx/solvers.hpp"

namespace autocx {

using json = nlohmann::json;

namespace detail {

inline json transitions_json(const std::vector<Transition>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back({t.from, t.label, t.to});
    return arr;
}

}  // namespace detail

inline json witness_to_json(const Nfa& m) {
    return {{"kind", "nfa"},
            {"states", m.state_count()},
            {"q", m.alphabet_size()},
            {"start", m.start()},
            {"accepts", m.accepts()},
            {"transitions", detail::transitions_json(m.transitions())}};
}

inline json witness_to_json(const PartialDfa& m) {
    json j = witness_to_json(m.as_nfa());
    j["kind"] = "dfa";
    return j;
}

inline json witness_to_json(const Witness& w) {
    return std::visit([](const auto& m) { return witness_to_json(m); }, w);
}

// Accepts a bare witness or a result document carrying one under "witness".
inline Witness witness_from_json(const json& doc) {
    const json& j = doc.contains("witness") ? doc.at("witness") : doc;
    try {
        const int states = j.at("states").get<int>();
        const int q = j.at("q").get<int>();
        const int start = j.at("start").get<int>();
        auto accepts = j.at("accepts").get<std::vector<int>>();
        std::vector<Transition> ts;
        for (const auto& t : j.at("transitions")) {
            if (!t.is_array() || t.size() != 3) throw std::invalid_argument("transition must be [from, label, to]");
            ts.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
        }
        const std::string kind = j.value("kind", "nfa");
        if (kind == "dfa") {
            PartialDfa m(states, q, start, std::move(accepts));
            for (const auto& t : ts) m.set(t.from, t.label, t.to);
            return m;
        }
        if (kind != "nfa") throw std::invalid_argument("unknown witness kind '" + kind + "'");
        return Nfa(states, q, std::move(ts), start, std::move(accepts));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed witness document: ") + e.what());
    }
}

inline json result_to_json(const ComplexityResult& r, std::optional<int> fsr_stages = std::nullopt) {
    json j;
    j["measure"] = measure_name(r.measure);
    j["word"] = render_word(r.word);
    j["q"] = r.word.alphabet_size();
    j["status"] = r.exact() ? "exact" : "budget_exhausted";
    j["value"] = r.exact() ? json(r.value) : json(nullptr);
    j["lower"] = r.lower_bound;
    j["upper"] = r.upper_bound;
    j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
    j["stats"] = {{"nodes", r.stats.nodes}, {"seconds", r.stats.seconds}, {"states_tried", r.stats.states_tried}};
    json bounds = {{"hyde", hyde_upper_bound(r.word.size())}};
    if (fsr_stages) {
        BoundReport b = mainy_lower_bound(r.word.size(), *fsr_stages);
        if (b.mainy_applicable) bounds["mainy"] = *b.mainy_lower();
    }
    j["bounds"] = bounds;
    return j;
}

}  // namespace autocx
