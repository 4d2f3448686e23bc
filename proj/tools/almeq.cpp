// almeq -- decide equivalences of regular languages, compute exact word
// densities, and generate reduction instances with oracle sidecars.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "almeq/brute.hpp"
#include "almeq/json_io.hpp"

using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw almeq::Error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw almeq::Error("cannot write '" + path + "'");
    out << text;
}

/// One language operand of a decide/density/convert invocation.
struct InputSlot {
    std::string regex_text;
    std::string regex_file;  // {"alphabet": [...], "regex": "..."}
    std::string nfa_file;
    std::string dfa_file;

    void add_options(CLI::App& cmd, const std::string& suffix) {
        cmd.add_option("--re" + suffix, regex_text, "regular expression (inline text)");
        cmd.add_option("--re" + suffix + "-file", regex_file,
                       "regex instance file {\"alphabet\", \"regex\"}");
        cmd.add_option("--nfa" + suffix, nfa_file, "NFA in the automaton JSON schema");
        cmd.add_option("--dfa" + suffix, dfa_file, "complete DFA in the automaton JSON schema");
    }

    bool present() const {
        return !(regex_text.empty() && regex_file.empty() && nfa_file.empty() &&
                 dfa_file.empty());
    }

    almeq::LanguageInput resolve(const std::optional<almeq::Alphabet>& declared) const {
        int given = !regex_text.empty() + !regex_file.empty() + !nfa_file.empty() +
                    !dfa_file.empty();
        if (given != 1) {
            throw almeq::Error("give exactly one of --re/--re-file/--nfa/--dfa per input");
        }
        if (!regex_text.empty()) {
            if (!declared) throw almeq::Error("--alphabet is required for inline regexes");
            return almeq::LanguageInput::from_regex(almeq::parse_regex(regex_text, *declared),
                                                    *declared);
        }
        if (!regex_file.empty()) {
            json j = load_json_file(regex_file);
            std::vector<std::string> tokens;
            for (const auto& t : j.at("alphabet")) tokens.push_back(t.get<std::string>());
            almeq::Alphabet alphabet(std::move(tokens));
            almeq::Regex regex = almeq::parse_regex(j.at("regex").get<std::string>(), alphabet);
            return almeq::LanguageInput::from_regex(std::move(regex), std::move(alphabet));
        }
        if (!nfa_file.empty()) {
            return almeq::LanguageInput::from_nfa(almeq::nfa_from_json(load_json_file(nfa_file)));
        }
        return almeq::LanguageInput::from_dfa(almeq::dfa_from_json(load_json_file(dfa_file)));
    }
};

json rational_to_json(const almeq::Rational& value) {
    std::ostringstream num, den;
    num << boost::multiprecision::numerator(value);
    den << boost::multiprecision::denominator(value);
    return {{"num", num.str()}, {"den", den.str()}, {"float", value.convert_to<double>()}};
}

std::vector<almeq::SymbolId> parse_tape_input(const almeq::TmSpec& m, const std::string& text) {
    std::vector<almeq::SymbolId> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        for (std::uint32_t a = 0; a < m.tape_symbols.size(); ++a) {
            if (m.tape_symbols[a] == token) {
                out.push_back(a);
                token.clear();
                break;
            }
        }
        if (!token.empty()) throw almeq::Error("input symbol '" + token + "' is not on the tape");
    }
    return out;
}

int emit_report(const almeq::DecisionReport& report, const almeq::Alphabet& alphabet,
                const std::string& format) {
    if (format == "json") {
        std::cout << almeq::report_to_json(report, alphabet).dump(2) << "\n";
    } else {
        std::cout << almeq::relation_name(report.relation) << ": "
                  << (report.verdict ? "true" : "false") << "\n";
    }
    std::cerr << almeq::relation_name(report.relation) << ": "
              << (report.verdict ? "true" : "false") << "\n";
    return report.verdict ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"regular-language equivalence, density, and reduction toolkit"};
    app.require_subcommand(1);

    // ---- parse ----
    auto* parse_cmd = app.add_subcommand("parse", "parse a regex and print its canonical form");
    std::string parse_alphabet, parse_text;
    parse_cmd->add_option("--alphabet", parse_alphabet, "comma-separated symbols")->required();
    parse_cmd->add_option("--re", parse_text, "regular expression")->required();

    // ---- convert ----
    auto* convert_cmd = app.add_subcommand("convert", "compile/convert a language input");
    std::string convert_alphabet, convert_to = "dfa", convert_out;
    InputSlot convert_in;
    std::uint32_t convert_cap = almeq::kDefaultDeterminizeCap;
    convert_cmd->add_option("--alphabet", convert_alphabet, "comma-separated symbols");
    convert_in.add_options(*convert_cmd, "");
    convert_cmd->add_option("--to", convert_to, "nfa or dfa")
        ->check(CLI::IsMember({"nfa", "dfa"}));
    convert_cmd->add_option("--out", convert_out, "output file (stdout when omitted)");
    convert_cmd->add_option("--cap-states", convert_cap, "determinization subset cap");

    // ---- decide ----
    auto* decide_cmd = app.add_subcommand("decide", "decide a relation between two languages");
    std::string relation, decide_alphabet, algorithm = "general";
    InputSlot in1, in2, in_e;
    std::uint32_t decide_cap = almeq::kDefaultDeterminizeCap;
    decide_cmd
        ->add_option("relation", relation, "equal | p-equiv | f-equiv | e-equiv | zero-one")
        ->required()
        ->check(CLI::IsMember({"equal", "p-equiv", "f-equiv", "e-equiv", "zero-one"}));
    decide_cmd->add_option("--alphabet", decide_alphabet, "comma-separated symbols");
    in1.add_options(*decide_cmd, "1");
    in2.add_options(*decide_cmd, "2");
    decide_cmd->add_option("--e", in_e.regex_text, "environment regex for e-equiv");
    decide_cmd->add_option("--e-nfa", in_e.nfa_file, "environment NFA file for e-equiv");
    decide_cmd->add_option("--e-dfa", in_e.dfa_file, "environment DFA file for e-equiv");
    decide_cmd->add_option("--cap-states", decide_cap, "determinization subset cap");
    decide_cmd->add_option("--algorithm", algorithm, "general | unary-window")
        ->check(CLI::IsMember({"general", "unary-window"}));
    std::string decide_format = "json";
    decide_cmd->add_option("--format", decide_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- density ----
    auto* density_cmd = app.add_subcommand("density", "exact density profile as CSV");
    std::string density_alphabet, density_out;
    InputSlot density_in;
    std::uint32_t horizon = 40, horizon_cap = almeq::kDefaultHorizonCap;
    std::uint32_t density_cap = almeq::kDefaultDeterminizeCap;
    density_cmd->add_option("--alphabet", density_alphabet, "comma-separated symbols");
    density_in.add_options(*density_cmd, "");
    density_cmd->add_option("--horizon", horizon, "largest length n to tabulate");
    density_cmd->add_option("--cap-horizon", horizon_cap, "horizon cap");
    density_cmd->add_option("--cap-states", density_cap, "determinization subset cap");
    density_cmd->add_option("--out", density_out, "output file (stdout when omitted)");
    std::string density_format = "csv";
    density_cmd->add_option("--format", density_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // ---- reduce ----
    auto* reduce_cmd = app.add_subcommand("reduce", "generate a reduction instance + sidecar");
    std::string reduce_kind, graph_file, tm_file, tm_input, cnf_file, out_prefix;
    reduce_cmd->add_option("kind", reduce_kind, "gap | gap-zero-one | tm | sat3")
        ->required()
        ->check(CLI::IsMember({"gap", "gap-zero-one", "tm", "sat3"}));
    reduce_cmd->add_option("--graph", graph_file, "digraph JSON {\"n\", \"edges\"}");
    reduce_cmd->add_option("--tm", tm_file, "turing machine JSON");
    reduce_cmd->add_option("--input", tm_input, "space-separated tape symbols");
    reduce_cmd->add_option("--cnf", cnf_file, "DIMACS file with 3-literal clauses");
    reduce_cmd->add_option("--out", out_prefix, "output path prefix")->required();

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "run an independent reduction oracle");
    std::string oracle_kind, oracle_graph, oracle_tm, oracle_input, oracle_cnf;
    oracle_cmd->add_option("kind", oracle_kind, "gap | tm | sat")
        ->required()
        ->check(CLI::IsMember({"gap", "tm", "sat"}));
    oracle_cmd->add_option("--graph", oracle_graph, "digraph JSON");
    oracle_cmd->add_option("--tm", oracle_tm, "turing machine JSON");
    oracle_cmd->add_option("--input", oracle_input, "space-separated tape symbols");
    oracle_cmd->add_option("--cnf", oracle_cnf, "DIMACS file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto optional_alphabet = [](const std::string& csv) -> std::optional<almeq::Alphabet> {
        if (csv.empty()) return std::nullopt;
        return almeq::Alphabet::from_csv(csv);
    };

    if (*parse_cmd) {
        almeq::Alphabet alphabet = almeq::Alphabet::from_csv(parse_alphabet);
        almeq::Regex regex = almeq::parse_regex(parse_text, alphabet);
        std::cout << almeq::print_regex(regex, alphabet) << "\n";
        return 0;
    }

    if (*convert_cmd) {
        almeq::LanguageInput input = convert_in.resolve(optional_alphabet(convert_alphabet));
        json out = convert_to == "dfa" ? almeq::dfa_to_json(input.to_dfa(convert_cap))
                                       : almeq::nfa_to_json(input.to_nfa());
        if (convert_out.empty()) {
            std::cout << out.dump(2) << "\n";
        } else {
            write_text_file(convert_out, out.dump(2) + "\n");
        }
        return 0;
    }

    if (*decide_cmd) {
        std::optional<almeq::Alphabet> declared = optional_alphabet(decide_alphabet);
        almeq::DecisionOptions options{decide_cap};
        almeq::LanguageInput x1 = in1.resolve(declared);

        if (relation == "zero-one") {
            return emit_report(almeq::zero_one(x1, options), x1.alphabet(), decide_format);
        }

        almeq::LanguageInput x2 = in2.resolve(declared);
        almeq::DecisionReport report;
        if (algorithm == "unary-window") {
            if (relation != "p-equiv") {
                throw almeq::Error("--algorithm unary-window applies to p-equiv only");
            }
            const almeq::Nfa* n1 = x1.as_nfa();
            const almeq::Nfa* n2 = x2.as_nfa();
            if (n1 == nullptr || n2 == nullptr) {
                throw almeq::Error("--algorithm unary-window requires NFA inputs");
            }
            report = almeq::unary_p_equiv(*n1, *n2);
        } else if (relation == "equal") {
            report = almeq::equal(x1, x2, options);
        } else if (relation == "p-equiv") {
            report = almeq::p_equiv(x1, x2, options);
        } else if (relation == "f-equiv") {
            report = almeq::f_equiv(x1, x2, options);
        } else {
            if (!in_e.present()) throw almeq::Error("e-equiv needs --e/--e-nfa/--e-dfa");
            report = almeq::e_equiv(x1, x2, in_e.resolve(declared), options);
        }
        return emit_report(report, x1.alphabet(), decide_format);
    }

    if (*density_cmd) {
        almeq::LanguageInput input = density_in.resolve(optional_alphabet(density_alphabet));
        almeq::DensityProfile profile =
            almeq::profile(input.to_dfa(density_cap), horizon, horizon_cap);
        std::ostringstream rendered;
        if (density_format == "csv") {
            almeq::write_profile_csv(rendered, profile);
        } else {
            json rows = json::array();
            for (std::uint32_t n = 0; n <= profile.horizon; ++n) {
                std::ostringstream count;
                count << profile.counts[n];
                rows.push_back({{"n", n},
                                {"count", count.str()},
                                {"mu", rational_to_json(profile.mu[n])},
                                {"mu_star", rational_to_json(profile.mu_star[n])},
                                {"delta", rational_to_json(profile.delta[n])}});
            }
            rendered << rows.dump(2) << "\n";
        }
        if (density_out.empty()) {
            std::cout << rendered.str();
        } else {
            write_text_file(density_out, rendered.str());
        }
        return 0;
    }

    if (*reduce_cmd) {
        json sidecar;
        if (reduce_kind == "gap" || reduce_kind == "gap-zero-one") {
            if (graph_file.empty()) throw almeq::Error("reduce " + reduce_kind + " needs --graph");
            almeq::Digraph g = almeq::digraph_from_json(load_json_file(graph_file));
            almeq::Dfa dfa =
                reduce_kind == "gap" ? almeq::gap_to_dfa(g) : almeq::gap_to_dfa_zero_one(g);
            write_text_file(out_prefix + ".dfa.json", almeq::dfa_to_json(dfa).dump(2) + "\n");
            sidecar = {{"oracle", "bfs"}, {"reachable", almeq::bfs_reachable(g)}};
        } else if (reduce_kind == "tm") {
            if (tm_file.empty() || tm_input.empty()) {
                throw almeq::Error("reduce tm needs --tm and --input");
            }
            almeq::TmSpec m = almeq::tm_from_json(load_json_file(tm_file));
            std::vector<almeq::SymbolId> input = parse_tape_input(m, tm_input);
            almeq::GeneratedRegex generated = almeq::tm_to_regex(m, input);
            json instance = {{"alphabet", generated.alphabet.tokens()},
                             {"regex", almeq::print_regex(generated.regex, generated.alphabet)}};
            write_text_file(out_prefix + ".regex.json", instance.dump() + "\n");
            sidecar = {{"oracle", "tm_simulation"}, {"accepts", almeq::simulate_tm(m, input)}};
        } else {
            if (cnf_file.empty()) throw almeq::Error("reduce sat3 needs --cnf");
            std::ifstream in(cnf_file);
            if (!in) throw almeq::Error("cannot open '" + cnf_file + "'");
            almeq::Cnf3 f = almeq::cnf_from_dimacs(in);
            if (f.clauses.empty()) throw almeq::Error("reduce sat3: empty clause list");
            almeq::GeneratedRegex generated = almeq::sat3_to_unary_regex(f);
            json instance = {{"alphabet", generated.alphabet.tokens()},
                             {"regex", almeq::print_regex(generated.regex, generated.alphabet)}};
            write_text_file(out_prefix + ".regex.json", instance.dump() + "\n");
            sidecar = {{"oracle", "brute_sat"}, {"satisfiable", almeq::brute_sat(f)}};
        }
        write_text_file(out_prefix + ".sidecar.json", sidecar.dump(2) + "\n");
        std::cout << sidecar.dump(2) << "\n";
        return 0;
    }

    if (*oracle_cmd) {
        bool verdict = false;
        json out;
        if (oracle_kind == "gap") {
            if (oracle_graph.empty()) throw almeq::Error("oracle gap needs --graph");
            verdict = almeq::bfs_reachable(almeq::digraph_from_json(load_json_file(oracle_graph)));
            out = {{"oracle", "bfs"}, {"reachable", verdict}};
        } else if (oracle_kind == "tm") {
            if (oracle_tm.empty() || oracle_input.empty()) {
                throw almeq::Error("oracle tm needs --tm and --input");
            }
            almeq::TmSpec m = almeq::tm_from_json(load_json_file(oracle_tm));
            verdict = almeq::simulate_tm(m, parse_tape_input(m, oracle_input));
            out = {{"oracle", "tm_simulation"}, {"accepts", verdict}};
        } else {
            if (oracle_cnf.empty()) throw almeq::Error("oracle sat needs --cnf");
            std::ifstream in(oracle_cnf);
            if (!in) throw almeq::Error("cannot open '" + oracle_cnf + "'");
            verdict = almeq::brute_sat(almeq::cnf_from_dimacs(in));
            out = {{"oracle", "brute_sat"}, {"satisfiable", verdict}};
        }
        std::cout << out.dump(2) << "\n";
        return verdict ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
