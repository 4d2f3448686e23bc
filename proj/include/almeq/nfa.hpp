/* nfa.hpp -- nondeterministic finite automata without epsilon transitions. */

#ifndef ALMEQ_NFA_HPP_
#define ALMEQ_NFA_HPP_

#include <span>
#include <vector>

#include "almeq/alphabet.hpp"

namespace almeq {

/// An NFA over an explicit alphabet: a single initial state and a
/// transition map (state, symbol) -> set of states. No epsilon moves.
struct Nfa {
    Alphabet alphabet;
    State state_count = 1;
    State initial = 0;
    /// transitions[q][a] = sorted vector of successor states.
    std::vector<std::vector<std::vector<State>>> transitions;
    std::vector<bool> accepting;

    Nfa() = default;
    Nfa(Alphabet alphabet, State state_count, State initial);

    const std::vector<State>& successors(State q, SymbolId a) const {
        return transitions[q][a];
    }
    void add_transition(State from, SymbolId symbol, State to);

    /// Direct subset simulation of the word.
    bool accepts(std::span<const SymbolId> word) const;

    std::vector<State> accepting_states() const;

    /// Throws if any index is out of range or a transition list is unsorted.
    void validate() const;
};

}  // namespace almeq

#endif  // ALMEQ_NFA_HPP_
