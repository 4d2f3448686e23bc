/* dfa.hpp -- deterministic automata and the constructions composed on them:
 * subset construction, boolean products (including xor), complement. */

#ifndef ALMEQ_DFA_HPP_
#define ALMEQ_DFA_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "almeq/nfa.hpp"

namespace almeq {

inline constexpr std::uint32_t kDefaultDeterminizeCap = 1u << 20;

/// A complete DFA: the transition function is total by invariant.
struct Dfa {
    Alphabet alphabet;
    State state_count = 1;
    State initial = 0;
    /// Row-major table: transitions[q * |A| + a].
    std::vector<State> transitions;
    std::vector<bool> accepting;

    Dfa() = default;
    Dfa(Alphabet alphabet, State state_count, State initial);

    State next(State q, SymbolId a) const {
        return transitions[static_cast<std::size_t>(q) * alphabet.size() + a];
    }
    void set_transition(State from, SymbolId symbol, State to) {
        transitions[static_cast<std::size_t>(from) * alphabet.size() + symbol] = to;
    }

    State run(std::span<const SymbolId> word) const;
    bool accepts(std::span<const SymbolId> word) const {
        return accepting[run(word)];
    }

    std::vector<State> accepting_states() const;

    /// Throws unless the table is total and every index is in range.
    void validate() const;
};

/// Powerset construction. States are numbered in breadth-first discovery
/// order starting from {initial}; the empty subset becomes an ordinary sink
/// state when reachable. Throws CapacityError past `max_states` subsets.
Dfa determinize(const Nfa& nfa, std::uint32_t max_states = kDefaultDeterminizeCap);

/// Reachable product of two complete DFAs over the same alphabet; acceptance
/// of a pair is `combine(in F1, in F2)`. Pairs are numbered in BFS order.
Dfa product(const Dfa& d1, const Dfa& d2, const std::function<bool(bool, bool)>& combine);

/// Product accepting the symmetric difference L(d1) xor L(d2).
Dfa xor_product(const Dfa& d1, const Dfa& d2);

/// Same state graph with the accepting set inverted.
Dfa complement(const Dfa& d);

/// One-state DFA of the empty language over `alphabet`.
Dfa empty_language_dfa(const Alphabet& alphabet);

/// One-state DFA of the full language A* over `alphabet`.
Dfa full_language_dfa(const Alphabet& alphabet);

}  // namespace almeq

#endif  // ALMEQ_DFA_HPP_
