#include "almeq/json_io.hpp"

#include <istream>
#include <sstream>

namespace almeq {

using nlohmann::json;

namespace {

json transitions_to_json(const Alphabet& alphabet,
                         const std::function<std::vector<State>(State, SymbolId)>& targets,
                         State state_count) {
    json out = json::array();
    for (State q = 0; q < state_count; ++q) {
        for (SymbolId a = 0; a < alphabet.size(); ++a) {
            std::vector<State> to = targets(q, a);
            if (to.empty()) continue;
            out.push_back({{"from", q}, {"symbol", alphabet.token(a)}, {"to", to}});
        }
    }
    return out;
}

json alphabet_to_json(const Alphabet& alphabet) {
    json out = json::array();
    for (const std::string& t : alphabet.tokens()) out.push_back(t);
    return out;
}

}  // namespace

json nfa_to_json(const Nfa& nfa) {
    return {{"alphabet", alphabet_to_json(nfa.alphabet)},
            {"states", nfa.state_count},
            {"initial", nfa.initial},
            {"accepting", nfa.accepting_states()},
            {"transitions", transitions_to_json(
                                nfa.alphabet,
                                [&](State q, SymbolId a) { return nfa.successors(q, a); },
                                nfa.state_count)}};
}

json dfa_to_json(const Dfa& dfa) {
    return {{"alphabet", alphabet_to_json(dfa.alphabet)},
            {"states", dfa.state_count},
            {"initial", dfa.initial},
            {"accepting", dfa.accepting_states()},
            {"transitions", transitions_to_json(
                                dfa.alphabet,
                                [&](State q, SymbolId a) {
                                    return std::vector<State>{dfa.next(q, a)};
                                },
                                dfa.state_count)}};
}

std::variant<Dfa, Nfa> automaton_from_json(const json& j) {
    if (!j.is_object()) throw Error("automaton json: expected an object");
    for (const char* key : {"alphabet", "states", "initial", "accepting", "transitions"}) {
        if (!j.contains(key)) throw Error(std::string("automaton json: missing '") + key + "'");
    }

    std::vector<std::string> tokens;
    for (const auto& t : j.at("alphabet")) tokens.push_back(t.get<std::string>());
    Alphabet alphabet(std::move(tokens));

    State states = j.at("states").get<State>();
    State initial = j.at("initial").get<State>();
    Nfa nfa(alphabet, states, initial);
    if (initial >= states) throw Error("automaton json: initial state out of range");

    for (const auto& q : j.at("accepting")) {
        State s = q.get<State>();
        if (s >= states) throw Error("automaton json: accepting state out of range");
        nfa.accepting[s] = true;
    }
    for (const auto& t : j.at("transitions")) {
        State from = t.at("from").get<State>();
        SymbolId symbol = alphabet.require(t.at("symbol").get<std::string>());
        if (from >= states) throw Error("automaton json: transition source out of range");
        for (const auto& target : t.at("to")) {
            State to = target.get<State>();
            if (to >= states) throw Error("automaton json: transition target out of range");
            nfa.add_transition(from, symbol, to);
        }
    }
    nfa.validate();

    bool deterministic = true;
    for (State q = 0; q < states && deterministic; ++q) {
        for (SymbolId a = 0; a < alphabet.size() && deterministic; ++a) {
            deterministic = nfa.successors(q, a).size() == 1;
        }
    }
    if (!deterministic) return nfa;

    Dfa dfa(alphabet, states, initial);
    dfa.accepting = nfa.accepting;
    for (State q = 0; q < states; ++q) {
        for (SymbolId a = 0; a < alphabet.size(); ++a) {
            dfa.set_transition(q, a, nfa.successors(q, a)[0]);
        }
    }
    return dfa;
}

Nfa nfa_from_json(const json& j) {
    auto loaded = automaton_from_json(j);
    if (auto* nfa = std::get_if<Nfa>(&loaded)) return std::move(*nfa);
    // A DFA is a special case of an NFA.
    const Dfa& dfa = std::get<Dfa>(loaded);
    Nfa nfa(dfa.alphabet, dfa.state_count, dfa.initial);
    nfa.accepting = dfa.accepting;
    for (State q = 0; q < dfa.state_count; ++q) {
        for (SymbolId a = 0; a < dfa.alphabet.size(); ++a) {
            nfa.add_transition(q, a, dfa.next(q, a));
        }
    }
    return nfa;
}

Dfa dfa_from_json(const json& j) {
    auto loaded = automaton_from_json(j);
    if (auto* dfa = std::get_if<Dfa>(&loaded)) return std::move(*dfa);
    throw Error("automaton json: expected a complete DFA (total, singleton targets)");
}

namespace {

json word_to_json(const std::vector<SymbolId>& word, const Alphabet& alphabet) {
    json out = json::array();
    for (SymbolId s : word) out.push_back(alphabet.token(s));
    return out;
}

}  // namespace

json report_to_json(const DecisionReport& report, const Alphabet& alphabet) {
    json witness;
    if (report.distinguishing_string) {
        witness = {{"type", "string"},
                   {"symbols", word_to_json(*report.distinguishing_string, alphabet)}};
    } else if (report.mu_witness) {
        witness = {{"type", "mu_witness"},
                   {"state", report.mu_witness->state},
                   {"access", word_to_json(report.mu_witness->access, alphabet)}};
    } else if (report.pump_witness) {
        witness = {{"type", "pumpable"},
                   {"prefix", word_to_json(report.pump_witness->prefix, alphabet)},
                   {"cycle", word_to_json(report.pump_witness->cycle, alphabet)},
                   {"suffix", word_to_json(report.pump_witness->suffix, alphabet)}};
    } else if (report.unary_witness) {
        witness = {{"type", "length"},
                   {"bits", report.unary_witness->bits},
                   {"value", report.unary_witness->value}};
    }

    json stats = {{"left_states", report.stats.left_states},
                  {"right_states", report.stats.right_states},
                  {"product_states", report.stats.product_states}};
    if (report.relation == Relation::EEquiv) {
        stats["env_states"] = report.stats.env_states;
        stats["difference_states"] = report.stats.difference_states;
    }
    if (report.stats.explored_matrix_pairs > 0) {
        stats["explored_matrix_pairs"] = report.stats.explored_matrix_pairs;
    }

    json out = {{"relation", relation_name(report.relation)},
                {"verdict", report.verdict},
                {"witness", witness},
                {"stats", stats}};
    if (report.almost_empty) out["almost_empty"] = *report.almost_empty;
    if (report.almost_full) out["almost_full"] = *report.almost_full;
    return out;
}

Digraph digraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw Error("digraph json: expected {\"n\": ..., \"edges\": [[u,v], ...]}");
    }
    Digraph g;
    g.n = j.at("n").get<std::uint32_t>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("digraph json: bad edge");
        g.edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    g.validate();
    return g;
}

json digraph_to_json(const Digraph& g) {
    json edges = json::array();
    for (auto [from, to] : g.edges) edges.push_back({from, to});
    return {{"n", g.n}, {"edges", edges}};
}

TmSpec tm_from_json(const json& j) {
    for (const char* key :
         {"states", "initial", "accepting", "tape_alphabet", "blank", "transitions"}) {
        if (!j.contains(key)) throw Error(std::string("tm json: missing '") + key + "'");
    }
    TmSpec m;
    for (const auto& s : j.at("states")) m.state_names.push_back(s.get<std::string>());
    for (const auto& s : j.at("tape_alphabet")) m.tape_symbols.push_back(s.get<std::string>());

    auto state_index = [&](const std::string& name) -> std::uint32_t {
        for (std::uint32_t i = 0; i < m.state_names.size(); ++i) {
            if (m.state_names[i] == name) return i;
        }
        throw Error("tm json: unknown state '" + name + "'");
    };
    auto tape_index = [&](const std::string& name) -> std::uint32_t {
        for (std::uint32_t i = 0; i < m.tape_symbols.size(); ++i) {
            if (m.tape_symbols[i] == name) return i;
        }
        throw Error("tm json: unknown tape symbol '" + name + "'");
    };

    m.initial = state_index(j.at("initial").get<std::string>());
    m.accepting = state_index(j.at("accepting").get<std::string>());
    m.blank = tape_index(j.at("blank").get<std::string>());
    m.delta.assign(m.state_names.size(),
                   std::vector<std::vector<TmSpec::Move>>(m.tape_symbols.size()));
    for (const auto& t : j.at("transitions")) {
        std::string move = t.at("move").get<std::string>();
        if (move != "L" && move != "R") throw Error("tm json: move must be \"L\" or \"R\"");
        TmSpec::Move out{state_index(t.at("next").get<std::string>()),
                         tape_index(t.at("write").get<std::string>()), move == "R"};
        m.delta[state_index(t.at("state").get<std::string>())]
               [tape_index(t.at("read").get<std::string>())]
                   .push_back(out);
    }
    m.validate();
    return m;
}

json tm_to_json(const TmSpec& m) {
    json transitions = json::array();
    for (std::uint32_t q = 0; q < m.state_names.size(); ++q) {
        for (std::uint32_t a = 0; a < m.tape_symbols.size(); ++a) {
            for (const TmSpec::Move& move : m.delta[q][a]) {
                transitions.push_back({{"state", m.state_names[q]},
                                       {"read", m.tape_symbols[a]},
                                       {"next", m.state_names[move.state]},
                                       {"write", m.tape_symbols[move.write]},
                                       {"move", move.move_right ? "R" : "L"}});
            }
        }
    }
    return {{"states", m.state_names},
            {"initial", m.state_names[m.initial]},
            {"accepting", m.state_names[m.accepting]},
            {"tape_alphabet", m.tape_symbols},
            {"blank", m.tape_symbols[m.blank]},
            {"transitions", transitions}};
}

Cnf3 cnf_from_dimacs(std::istream& in) {
    Cnf3 f;
    bool header_seen = false;
    std::size_t expected_clauses = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            ls >> kind >> f.variables >> expected_clauses;
            if (kind != "cnf") throw Error("dimacs: expected 'p cnf'");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw Error("dimacs: clause before header");
        std::vector<std::int64_t> literals;
        std::int64_t value = std::stoll(first);
        while (value != 0) {
            literals.push_back(value);
            if (!(ls >> value)) throw Error("dimacs: clause not terminated by 0");
        }
        if (literals.size() != 3) throw Error("dimacs: every clause must have exactly 3 literals");
        Cnf3::Clause clause;
        for (std::size_t i = 0; i < 3; ++i) {
            clause[i] = {static_cast<std::uint32_t>(std::abs(literals[i])), literals[i] > 0};
        }
        f.clauses.push_back(clause);
    }
    if (!header_seen) throw Error("dimacs: missing 'p cnf' header");
    f.validate();
    return f;
}

}  // namespace almeq
