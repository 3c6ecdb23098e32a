#include "fcore/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fcore/core.hpp"
#include "fcore/decide.hpp"
#include "fcore/errors.hpp"
#include "fcore/jones.hpp"
#include "fcore/rewriting.hpp"

namespace fcore::cli {

namespace {

int verdict_exit(std::ostream& out, VerdictKind kind) {
    out << "VERDICT: " << to_string(kind) << "\n";
    switch (kind) {
        case VerdictKind::Yes: return kExitYes;
        case VerdictKind::No: return kExitNo;
        case VerdictKind::Unknown: return kExitUnknown;
    }
    return kExitUsage;
}

int verdict_exit(std::ostream& out, bool yes) {
    return verdict_exit(out, yes ? VerdictKind::Yes : VerdictKind::No);
}

// Element sources: generator words ("x0 x1 X2") and branch-pair blocks
// ("u -> v" lines, one block per element, blocks separated by blank lines).
std::vector<TreeDiagram> parse_elements_text(std::istream& in) {
    std::vector<TreeDiagram> elements;
    std::vector<std::pair<Word, Word>> block;
    auto flush_block = [&] {
        if (!block.empty()) {
            elements.push_back(TreeDiagram::from_branch_pairs(block).reduced());
            block.clear();
        }
    };
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed.resize(pos);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
            ++start;
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) {
            flush_block();
            continue;
        }
        if (auto arrow = trimmed.find("->"); arrow != std::string::npos) {
            std::istringstream lhs(trimmed.substr(0, arrow));
            std::istringstream rhs(trimmed.substr(arrow + 2));
            std::string u, v;
            if (!(lhs >> u) || !(rhs >> v)) throw ParseError("bad branch pair line: " + line);
            block.emplace_back(word_from_text(u), word_from_text(v));
        } else {
            flush_block();
            elements.push_back(to_diagram(parse_generator_word(trimmed)));
        }
    }
    flush_block();
    return elements;
}

std::vector<TreeDiagram> gather_elements(const std::vector<std::string>& words,
                                         const std::string& file) {
    std::vector<TreeDiagram> elements;
    for (const std::string& w : words)
        elements.push_back(to_diagram(parse_generator_word(w)));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::ios_base::failure("cannot open " + file);
        auto more = parse_elements_text(in);
        elements.insert(elements.end(), more.begin(), more.end());
    }
    return elements;
}

Automaton load_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return load_automaton(in);
}

void print_element(std::ostream& out, const TreeDiagram& d) {
    for (const auto& [u, v] : d.branch_pairs())
        out << word_to_text(u) << " -> " << word_to_text(v) << "\n";
    const AbelianImage ab = abelianize(d);
    out << "abelianization: (" << ab.at_zero << ", " << ab.at_one << ")\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << content;
}

void maybe_dot(const Automaton& a, const std::string& dot_path) {
    if (dot_path.empty()) return;
    std::ostringstream dot;
    write_dot(a, dot);
    write_file(dot_path, dot.str());
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thompson's group F via tree-diagrams and core automata"};
    app.name("fcore");
    app.require_subcommand(1);

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "reduce a generator word to branch pairs");
    std::vector<std::string> parse_tokens;
    cmd_parse->add_option("tokens", parse_tokens, "generator tokens, e.g. x0 X1 x2");

    // core
    auto* cmd_core = app.add_subcommand("core", "build the core automaton of a subgroup");
    std::string core_file, core_out, core_dot;
    std::vector<std::string> core_gens;
    cmd_core->add_option("file", core_file, "file of generator words or branch-pair blocks");
    cmd_core->add_option("--gens", core_gens, "generator words given inline");
    cmd_core->add_option("-o,--output", core_out, "write the automaton here (default stdout)");
    cmd_core->add_option("--dot", core_dot, "also write a DOT rendering");

    // accepts
    auto* cmd_accepts = app.add_subcommand("accepts", "does an automaton accept an element");
    std::string accepts_aut, accepts_file;
    std::vector<std::string> accepts_tokens;
    cmd_accepts->add_option("automaton", accepts_aut, "automaton file")->required();
    cmd_accepts->add_option("tokens", accepts_tokens, "element as generator tokens");
    cmd_accepts->add_option("--file", accepts_file, "element file");

    // is-generating
    auto* cmd_gen = app.add_subcommand("is-generating", "do the elements generate the whole group");
    std::vector<std::string> gen_words;
    std::string gen_file;
    cmd_gen->add_option("words", gen_words, "one generator word per argument");
    cmd_gen->add_option("--file", gen_file, "file of generators");

    // contains-derived
    auto* cmd_der =
        app.add_subcommand("contains-derived", "does the closure contain the derived subgroup");
    std::vector<std::string> der_words;
    std::string der_file;
    cmd_der->add_option("words", der_words, "one generator word per argument");
    cmd_der->add_option("--file", der_file, "file of generators");

    // is-core-automaton
    auto* cmd_core_aut =
        app.add_subcommand("is-core-automaton", "is the automaton the core of some subgroup");
    std::string core_aut_file;
    std::uint64_t budget = kDefaultWordBudget;
    cmd_core_aut->add_option("automaton", core_aut_file, "automaton file")->required();
    cmd_core_aut->add_option("--budget", budget, "word-problem budget per pair");

    // is-maximal
    auto* cmd_max =
        app.add_subcommand("is-maximal", "is the closure a maximal subgroup of infinite index");
    std::vector<std::string> max_words;
    std::string max_file;
    std::uint64_t max_budget = kDefaultWordBudget;
    std::size_t max_cap = 10000;
    cmd_max->add_option("words", max_words, "one generator word per argument");
    cmd_max->add_option("--file", max_file, "file of generators");
    cmd_max->add_option("--budget", max_budget, "word-problem budget per pair");
    cmd_max->add_option("--cap", max_cap, "quotient enumeration cap");

    // quotients
    auto* cmd_quot = app.add_subcommand("quotients", "enumerate surjective images");
    std::string quot_aut;
    std::size_t quot_cap = 10000;
    cmd_quot->add_option("automaton", quot_aut, "automaton file")->required();
    cmd_quot->add_option("--cap", quot_cap, "quotient enumeration cap");

    // jones
    auto* cmd_jones = app.add_subcommand("jones", "verify the Jones subgroup core structure");
    unsigned jones_p = 2;
    std::string emit_sum, emit_suf, emit_core;
    cmd_jones->add_option("--p", jones_p, "prime parameter");
    cmd_jones->add_option("--emit-sum", emit_sum, "write the digit-sum automaton here");
    cmd_jones->add_option("--emit-suf", emit_suf, "write the ones-suffix automaton here");
    cmd_jones->add_option("--emit-core", emit_core, "write the Jones core here");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitYes;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_parse->parsed()) {
            std::string joined;
            for (const std::string& t : parse_tokens) joined += t + " ";
            const TreeDiagram d = to_diagram(parse_generator_word(joined));
            if (d.is_identity()) out << "identity element\n";
            print_element(out, d);
            return kExitYes;
        }
        if (cmd_core->parsed()) {
            auto gens = gather_elements(core_gens, core_file);
            const Automaton core = build_core(gens);
            const std::string text = save_automaton_text(core);
            if (core_out.empty())
                out << text;
            else
                write_file(core_out, text);
            maybe_dot(core, core_dot);
            return kExitYes;
        }
        if (cmd_accepts->parsed()) {
            const Automaton a = load_automaton_file(accepts_aut);
            TreeDiagram d = TreeDiagram::identity();
            if (!accepts_tokens.empty()) {
                std::string joined;
                for (const std::string& t : accepts_tokens) joined += t + " ";
                d = to_diagram(parse_generator_word(joined));
            } else if (!accepts_file.empty()) {
                std::ifstream in(accepts_file);
                if (!in) throw std::ios_base::failure("cannot open " + accepts_file);
                auto elems = parse_elements_text(in);
                if (elems.size() != 1) throw ParseError("expected exactly one element");
                d = elems.front();
            }
            const bool yes = accepts(a, d);
            out << (yes ? "accepted" : "rejected") << "\n";
            return verdict_exit(out, yes);
        }
        if (cmd_gen->parsed()) {
            const bool yes = is_generating(gather_elements(gen_words, gen_file));
            out << (yes ? "the elements generate the whole group"
                        : "the elements do not generate the whole group")
                << "\n";
            return verdict_exit(out, yes);
        }
        if (cmd_der->parsed()) {
            auto gens = gather_elements(der_words, der_file);
            const bool yes = closure_contains_derived(build_core(gens));
            out << (yes ? "the closure contains the derived subgroup"
                        : "the closure does not contain the derived subgroup")
                << "\n";
            return verdict_exit(out, yes);
        }
        if (cmd_core_aut->parsed()) {
            const Automaton a = load_automaton_file(core_aut_file);
            const Verdict v = is_core_automaton(a, budget);
            if (v.kind == VerdictKind::No) {
                out << "not a core automaton: " << v.reason;
                if (v.witness_pair)
                    out << " witness (" << word_to_text(v.witness_pair->first) << ", "
                        << word_to_text(v.witness_pair->second) << ")";
                out << "\n";
            } else if (v.kind == VerdictKind::Yes) {
                out << "core automaton\n";
            } else {
                out << "undecided within budget\n";
            }
            return verdict_exit(out, v.kind);
        }
        if (cmd_max->parsed()) {
            const MaximalityReport report =
                maximality_verdict(gather_elements(max_words, max_file), max_budget, max_cap);
            out << report.to_text();
            switch (report.result) {
                case MaximalityReport::Result::MaximalInfiniteIndex:
                    return verdict_exit(out, VerdictKind::Yes);
                case MaximalityReport::Result::NotMaximal:
                    return verdict_exit(out, VerdictKind::No);
                case MaximalityReport::Result::Unknown:
                    return verdict_exit(out, VerdictKind::Unknown);
            }
        }
        if (cmd_quot->parsed()) {
            const Automaton a = load_automaton_file(quot_aut);
            auto quotients = enumerate_quotients(a, quot_cap);
            out << quotients.size() << " surjective images up to isomorphism\n";
            for (const Automaton& q : quotients)
                out << "  " << q.vertex_count() << " vertices: " << canonical_form(q) << "\n";
            return verdict_exit(out, VerdictKind::Yes);
        }
        if (cmd_jones->parsed()) {
            const JonesPrime p(jones_p);
            if (!emit_sum.empty()) write_file(emit_sum, save_automaton_text(a_sum(p)));
            if (!emit_suf.empty()) write_file(emit_suf, save_automaton_text(a_suf(p)));
            if (!emit_core.empty())
                write_file(emit_core, save_automaton_text(build_core(jones_generators(p))));
            const JonesCoreReport report = verify_jones_core(p);
            out << report.to_text();
            return verdict_exit(out, report.ok());
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace fcore::cli
