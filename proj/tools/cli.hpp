#pragma once

// Command-line front end. Exit codes: 0 success or verified, 1 a checked
// assertion failed, 2 search budget exhausted, 3 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autocx/autocx.hpp"

namespace autocx::cli {

enum ExitCode : int { exit_ok = 0, exit_assertion = 1, exit_budget = 2, exit_usage = 3 };

struct RunConfig {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;
    unsigned threads = 1;
    std::string format = "text";
    std::string dot_path;
    bool no_occurrence = false;
    bool no_feasibility = false;
    bool no_walk_cap = false;

    SearchOptions options() const {
        SearchOptions o;
        o.max_nodes = max_nodes;
        o.max_seconds = max_seconds;
        o.threads = threads == 0 ? 1 : threads;
        o.pruning.occurrence = !no_occurrence;
        o.pruning.feasibility = !no_feasibility;
        o.pruning.walk_cap = !no_walk_cap;
        return o;
    }
};

namespace detail {

inline void env_defaults(RunConfig& cfg) {
    if (const char* v = std::getenv("AUTOCX_MAX_NODES")) cfg.max_nodes = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("AUTOCX_MAX_SECONDS")) cfg.max_seconds = std::strtod(v, nullptr);
}

inline void add_budget_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--max-nodes", cfg.max_nodes, "Search node budget (0 = unlimited)");
    cmd->add_option("--max-seconds", cfg.max_seconds, "Wall-clock budget in seconds (0 = unlimited)");
    cmd->add_option("--threads", cfg.threads, "Worker threads for the search")->check(CLI::Range(1u, 256u));
    cmd->add_flag("--no-prune-occurrence", cfg.no_occurrence, "Disable recurrence-count pruning");
    cmd->add_flag("--no-prune-feasibility", cfg.no_feasibility, "Disable remaining-length pruning");
    cmd->add_flag("--no-prune-walks", cfg.no_walk_cap, "Disable incremental walk counting");
}

inline void add_format_flag(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

inline std::vector<int> digits(const std::string& s) {
    Word w = parse_word(s, 2);
    return {w.symbols().begin(), w.symbols().end()};
}

inline void print_witness_text(std::ostream& out, const Witness& w) {
    std::visit(
        [&](const auto& m) {
            out << "witness states " << m.state_count() << " start " << m.start() << " accepts";
            for (int a : m.accepts()) out << ' ' << a;
            out << '\n';
            for (const auto& t : m.transitions()) out << "  " << t.from << " -" << t.label << "-> " << t.to << '\n';
        },
        w);
}

inline int report_exit(const VerificationReport& r) {
    if (r.budget_exhausted) return exit_budget;
    return r.passed ? exit_ok : exit_assertion;
}

}  // namespace detail

inline int cmd_msequence(int k, const std::string& taps, const std::string& fill, const RunConfig& cfg,
                         std::ostream& out) {
    json doc;
    doc["k"] = k;
    if (!taps.empty()) {
        std::vector<int> t = detail::digits(taps);
        if (static_cast<int>(t.size()) != k) throw std::invalid_argument("--taps must have k digits");
        std::vector<int> f(k, 0);
        if (fill.empty()) {
            f.back() = 1;
        } else {
            f = detail::digits(fill);
        }
        Word w = generate_m_sequence(t, f);
        if (cfg.format == "json") {
            doc["word"] = render_word(w);
            doc["period"] = w.size();
            out << doc.dump(2) << '\n';
        } else {
            out << render_word(w) << '\n' << "period " << w.size() << '\n';
        }
        return exit_ok;
    }
    if (!fill.empty()) throw std::invalid_argument("--fill requires --taps");
    std::vector<Word> words = enumerate_m_sequences(k);
    if (cfg.format == "json") {
        doc["words"] = json::array();
        for (const auto& w : words) doc["words"].push_back(render_word(w));
        doc["count"] = words.size();
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& w : words) out << render_word(w) << '\n';
        out << "count " << words.size() << '\n';
    }
    return exit_ok;
}

inline int cmd_complexity(Measure measure, const std::string& text, int q, std::optional<int> fsr_stages,
                          const RunConfig& cfg, std::ostream& out) {
    Word x = parse_word(text, q);
    SearchOptions opts = cfg.options();
    opts.fsr_stages = fsr_stages;
    ComplexityResult r = compute(measure, x, opts);
    if (!cfg.dot_path.empty() && r.witness) {
        std::ofstream dot(cfg.dot_path);
        if (!dot) throw std::invalid_argument("cannot write " + cfg.dot_path);
        dot << std::visit([](const auto& m) { return to_dot(m); }, *r.witness);
    }
    if (cfg.format == "json") {
        out << result_to_json(r, fsr_stages).dump(2) << '\n';
    } else {
        out << "measure " << measure_name(measure) << '\n';
        out << "word " << render_word(x) << " (n=" << x.size() << ", q=" << q << ")\n";
        if (r.exact()) {
            out << "value " << r.value << '\n';
        } else {
            out << "budget exhausted: value in [" << r.lower_bound << ", " << r.upper_bound << "]\n";
        }
        out << "hyde bound " << hyde_upper_bound(x.size()) << '\n';
        out << "levels searched";
        for (int s : r.stats.states_tried) out << ' ' << s;
        out << '\n' << "nodes " << r.stats.nodes << " seconds " << r.stats.seconds << '\n';
        if (r.witness) detail::print_witness_text(out, *r.witness);
    }
    return r.exact() ? exit_ok : exit_budget;
}

inline int cmd_verify_print(const VerificationReport& r, bool verbose, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        json doc{{"name", r.name}, {"passed", r.passed}, {"budget_exhausted", r.budget_exhausted},
                 {"checked", r.checked}};
        doc["lines"] = json::array();
        for (const auto& l : r.lines) {
            if (verbose || !l.passed)
                doc["lines"].push_back({{"item", l.item}, {"passed", l.passed}, {"detail", l.detail},
                                        {"seconds", l.seconds}});
        }
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& l : r.lines) {
            if (verbose || !l.passed) out << (l.passed ? "PASS " : "FAIL ") << l.item << "  " << l.detail << '\n';
        }
        out << "verify " << r.name << ": " << (r.passed ? "passed" : (r.budget_exhausted ? "budget exhausted" : "FAILED"))
            << " (" << r.checked << " checks)\n";
    }
    return detail::report_exit(r);
}

inline int cmd_survey(std::size_t n, std::size_t limit, const RunConfig& cfg, std::ostream& out) {
    HydeSurvey s = survey_hyde_fraction(n, limit);
    if (cfg.format == "json") {
        out << json{{"n", n}, {"attaining", s.attaining}, {"total", s.total}, {"fraction", s.fraction()}}.dump(2)
            << '\n';
    } else {
        out << "n " << n << " attaining " << s.attaining << " total " << s.total << " fraction " << s.fraction()
            << '\n';
    }
    return exit_ok;
}

inline int cmd_lc(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    Word x = parse_word(text, 2);
    LinearComplexityResult r = berlekamp_massey(x);
    std::string conn;
    for (int c : r.connection) conn.push_back(static_cast<char>('0' + c));
    if (cfg.format == "json") {
        out << json{{"word", text}, {"length", r.length}, {"connection", conn}}.dump(2) << '\n';
    } else {
        out << "linear complexity " << r.length << '\n' << "connection " << conn << '\n';
    }
    return exit_ok;
}

inline int cmd_export_dot(const std::string& input, const std::string& output, std::ostream& out) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot read " + input);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    Witness w = witness_from_json(doc);
    std::string dot = std::visit([](const auto& m) { return to_dot(m); }, w);
    if (output.empty()) {
        out << dot;
    } else {
        std::ofstream o(output);
        if (!o) throw std::invalid_argument("cannot write " + output);
        o << dot;
    }
    return exit_ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Automatic complexity of words and shift-register sequences"};
    app.require_subcommand(1);
    RunConfig cfg;
    detail::env_defaults(cfg);

    int k = 0;
    std::string taps, fill;
    auto* mseq = app.add_subcommand("msequence", "Generate one m-sequence, or list all of order k");
    mseq->add_option("--k", k, "Stage count")->required()->check(CLI::Range(1, 16));
    mseq->add_option("--taps", taps, "Feedback taps x_0..x_{k-1} as a bit string");
    mseq->add_option("--fill", fill, "Initial fill x_0..x_{k-1} as a bit string");
    detail::add_format_flag(mseq, cfg);

    std::string measure_text = "an", word_text;
    int q = 2;
    std::optional<int> fsr_stages;
    auto* cx = app.add_subcommand("complexity", "Exact A_N, A^- or A of a word with a witness");
    cx->add_option("word", word_text, "Word (digits, or comma-separated for q > 10)")->required();
    cx->add_option("--measure", measure_text, "an | aminus | a")->check(CLI::IsMember({"an", "aminus", "a"}));
    cx->add_option("--q", q, "Alphabet size")->check(CLI::Range(1, 64));
    cx->add_option("--fsr-stages", fsr_stages, "Word is register output with this many stages");
    cx->add_option("--dot", cfg.dot_path, "Also write the witness as Graphviz DOT");
    detail::add_budget_flags(cx, cfg);
    detail::add_format_flag(cx, cfg);

    std::string which;
    int kmax = 4, kmin = 1;
    std::size_t n = 10, samples = 200, trials = 100;
    std::uint64_t seed = 1;
    bool extended = false, verbose = false;
    auto* ver = app.add_subcommand("verify", "Check a theorem or bound on generated inputs");
    ver->add_option("which", which, "hyde | christmas | refute-nsf | shortpowers | mainy")
        ->required()
        ->check(CLI::IsMember({"hyde", "christmas", "refute-nsf", "shortpowers", "mainy"}));
    ver->add_option("--kmax", kmax, "Largest stage count")->check(CLI::Range(1, 8));
    ver->add_option("--kmin", kmin, "Smallest stage count (christmas)")->check(CLI::Range(1, 8));
    ver->add_option("--n", n, "Word length (hyde)");
    ver->add_option("--samples", samples, "Random samples (hyde, mainy)");
    ver->add_option("--trials", trials, "Random registers (shortpowers)");
    ver->add_option("--seed", seed, "Random seed");
    ver->add_flag("--extended", extended, "Allow the long runs (christmas k >= 5, refute-nsf)");
    ver->add_flag("--verbose", verbose, "Print passing checks too");
    detail::add_budget_flags(ver, cfg);
    detail::add_format_flag(ver, cfg);

    std::size_t survey_n = 8, limit = 12;
    auto* sv = app.add_subcommand("survey", "Share of binary words of length n attaining floor(n/2)+1");
    sv->add_option("--n", survey_n, "Word length")->required();
    sv->add_option("--limit", limit, "Largest n allowed for the exhaustive run");
    detail::add_format_flag(sv, cfg);

    std::string lc_word;
    auto* lc = app.add_subcommand("lc", "Linear complexity (Berlekamp-Massey) of a binary word");
    lc->add_option("word", lc_word, "Binary word")->required();
    detail::add_format_flag(lc, cfg);

    std::string dot_in, dot_out;
    auto* ed = app.add_subcommand("export-dot", "Render a witness JSON document as Graphviz DOT");
    ed->add_option("input", dot_in, "Witness or result JSON")->required();
    ed->add_option("output", dot_out, "Output path (stdout if omitted)");

    std::vector<const char*> argv{"autocx"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*mseq) return cmd_msequence(k, taps, fill, cfg, out);
        if (*cx) {
            Measure m = measure_text == "an" ? Measure::an : measure_text == "aminus" ? Measure::aminus : Measure::a;
            return cmd_complexity(m, word_text, q, fsr_stages, cfg, out);
        }
        if (*ver) {
            SearchOptions opts = cfg.options();
            VerificationReport r;
            if (which == "christmas") {
                if (kmax >= 5 && !extended) {
                    err << "christmas with --kmax >= 5 is a long run; pass --extended\n";
                    return exit_usage;
                }
                r = verify_christmas(kmax, opts, kmin);
            } else if (which == "refute-nsf") {
                if (!extended) {
                    err << "refute-nsf is a long run; pass --extended\n";
                    return exit_usage;
                }
                r = verify_refute_nsf(opts);
            } else if (which == "hyde") {
                r = verify_hyde(n, samples, opts, seed);
            } else if (which == "shortpowers") {
                r = verify_shortpowers(trials, kmax, seed);
            } else {
                r = verify_mainy(samples, std::min(kmax, 2), opts, seed);
            }
            return cmd_verify_print(r, verbose, cfg, out);
        }
        if (*sv) return cmd_survey(survey_n, limit, cfg, out);
        if (*lc) return cmd_lc(lc_word, cfg, out);
        if (*ed) return cmd_export_dot(dot_in, dot_out, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace autocx::cli
