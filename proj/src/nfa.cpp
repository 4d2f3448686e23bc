#include "almeq/nfa.hpp"

#include <algorithm>

namespace almeq {

Nfa::Nfa(Alphabet alphabet_, State state_count_, State initial_)
    : alphabet(std::move(alphabet_)),
      state_count(state_count_),
      initial(initial_),
      transitions(state_count_, std::vector<std::vector<State>>(alphabet.size())),
      accepting(state_count_, false) {}

void Nfa::add_transition(State from, SymbolId symbol, State to) {
    auto& targets = transitions[from][symbol];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to) targets.insert(it, to);
}

bool Nfa::accepts(std::span<const SymbolId> word) const {
    std::vector<bool> current(state_count, false);
    current[initial] = true;
    std::vector<bool> next(state_count, false);
    for (SymbolId a : word) {
        std::fill(next.begin(), next.end(), false);
        for (State q = 0; q < state_count; ++q) {
            if (!current[q]) continue;
            for (State t : transitions[q][a]) next[t] = true;
        }
        current.swap(next);
    }
    for (State q = 0; q < state_count; ++q) {
        if (current[q] && accepting[q]) return true;
    }
    return false;
}

std::vector<State> Nfa::accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < state_count; ++q) {
        if (accepting[q]) out.push_back(q);
    }
    return out;
}

void Nfa::validate() const {
    if (state_count == 0) throw Error("nfa: state_count must be >= 1");
    if (initial >= state_count) throw Error("nfa: initial state out of range");
    if (transitions.size() != state_count || accepting.size() != state_count) {
        throw Error("nfa: table sizes disagree with state_count");
    }
    for (State q = 0; q < state_count; ++q) {
        if (transitions[q].size() != alphabet.size()) {
            throw Error("nfa: transition row has wrong arity");
        }
        for (SymbolId a = 0; a < alphabet.size(); ++a) {
            const auto& targets = transitions[q][a];
            if (!std::is_sorted(targets.begin(), targets.end())) {
                throw Error("nfa: transition targets not sorted");
            }
            for (State t : targets) {
                if (t >= state_count) throw Error("nfa: transition target out of range");
            }
        }
    }
}

}  // namespace almeq
