/* json_io.hpp -- the JSON interchange schema for automata, decision reports,
 * and reduction inputs.
 *
 * Automaton schema (shared with the CLI):
 *   {"alphabet": ["a", ...], "states": N, "initial": i,
 *    "accepting": [q, ...],
 *    "transitions": [{"from": q, "symbol": "a", "to": [q', ...]}, ...]}
 * A DFA is an automaton in which every `to` has exactly one element and the
 * transition function is total; the loader detects which kind it parsed.
 */

#ifndef ALMEQ_JSON_IO_HPP_
#define ALMEQ_JSON_IO_HPP_

#include <variant>

#include <json.hpp>

#include "almeq/equivalence.hpp"
#include "almeq/reductions.hpp"

namespace almeq {

nlohmann::json nfa_to_json(const Nfa& nfa);
nlohmann::json dfa_to_json(const Dfa& dfa);

/// Returns a Dfa when the transition table is total with singleton targets,
/// otherwise an Nfa. Validates the schema, indices and symbols.
std::variant<Dfa, Nfa> automaton_from_json(const nlohmann::json& j);

Nfa nfa_from_json(const nlohmann::json& j);
Dfa dfa_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DecisionReport& report, const Alphabet& alphabet);

/// {"n": nodes, "edges": [[from, to], ...]} over nodes 1..n.
Digraph digraph_from_json(const nlohmann::json& j);
nlohmann::json digraph_to_json(const Digraph& g);

/// Mirrors the machine 5-tuple:
///   {"states": [...], "initial": "q0", "accepting": "qa",
///    "tape_alphabet": [...], "blank": "_",
///    "transitions": [{"state": "q0", "read": "a",
///                     "next": "qa", "write": "a", "move": "R"}, ...]}
TmSpec tm_from_json(const nlohmann::json& j);
nlohmann::json tm_to_json(const TmSpec& m);

/// DIMACS CNF subset: every clause must have exactly three literals.
Cnf3 cnf_from_dimacs(std::istream& in);

}  // namespace almeq

#endif  // ALMEQ_JSON_IO_HPP_
