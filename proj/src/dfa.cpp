#include "almeq/dfa.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace almeq {

Dfa::Dfa(Alphabet alphabet_, State state_count_, State initial_)
    : alphabet(std::move(alphabet_)),
      state_count(state_count_),
      initial(initial_),
      transitions(static_cast<std::size_t>(state_count_) * alphabet.size(), 0),
      accepting(state_count_, false) {}

State Dfa::run(std::span<const SymbolId> word) const {
    State q = initial;
    for (SymbolId a : word) q = next(q, a);
    return q;
}

std::vector<State> Dfa::accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < state_count; ++q) {
        if (accepting[q]) out.push_back(q);
    }
    return out;
}

void Dfa::validate() const {
    if (state_count == 0) throw Error("dfa: state_count must be >= 1");
    if (initial >= state_count) throw Error("dfa: initial state out of range");
    if (transitions.size() != static_cast<std::size_t>(state_count) * alphabet.size()) {
        throw Error("dfa: transition table is not total");
    }
    if (accepting.size() != state_count) throw Error("dfa: accepting size mismatch");
    for (State t : transitions) {
        if (t >= state_count) throw Error("dfa: transition target out of range");
    }
}

namespace {

struct SubsetHash {
    std::size_t operator()(const std::vector<State>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (State s : v) {
            h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

Dfa determinize(const Nfa& nfa, std::uint32_t max_states) {
    const std::size_t arity = nfa.alphabet.size();

    std::unordered_map<std::vector<State>, State, SubsetHash> index;
    std::vector<std::vector<State>> subsets;
    std::vector<State> table;
    std::vector<bool> accepting;

    auto intern = [&](std::vector<State> subset) -> State {
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        if (subsets.size() >= max_states) {
            throw CapacityError("determinize: subset cap exceeded");
        }
        State id = static_cast<State>(subsets.size());
        bool acc = false;
        for (State q : subset) acc = acc || nfa.accepting[q];
        index.emplace(subset, id);
        subsets.push_back(std::move(subset));
        accepting.push_back(acc);
        return id;
    };

    intern({nfa.initial});

    std::vector<bool> mark(nfa.state_count, false);
    for (State id = 0; id < subsets.size(); ++id) {
        for (SymbolId a = 0; a < arity; ++a) {
            std::vector<State> next;
            for (State q : subsets[id]) {
                for (State t : nfa.successors(q, a)) {
                    if (!mark[t]) {
                        mark[t] = true;
                        next.push_back(t);
                    }
                }
            }
            for (State t : next) mark[t] = false;
            std::sort(next.begin(), next.end());
            table.push_back(intern(std::move(next)));
        }
    }

    Dfa dfa(nfa.alphabet, static_cast<State>(subsets.size()), 0);
    dfa.transitions = std::move(table);
    dfa.accepting = std::move(accepting);
    return dfa;
}

Dfa product(const Dfa& d1, const Dfa& d2, const std::function<bool(bool, bool)>& combine) {
    if (d1.alphabet != d2.alphabet) {
        throw AlphabetMismatchError("product: operands declare different alphabets");
    }
    const std::size_t arity = d1.alphabet.size();

    auto key = [&](State a, State b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    std::unordered_map<std::uint64_t, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> table;

    auto intern = [&](State a, State b) -> State {
        auto [it, fresh] = index.emplace(key(a, b), static_cast<State>(pairs.size()));
        if (fresh) pairs.emplace_back(a, b);
        return it->second;
    };

    intern(d1.initial, d2.initial);
    for (State id = 0; id < pairs.size(); ++id) {
        auto [a, b] = pairs[id];
        for (SymbolId s = 0; s < arity; ++s) {
            table.push_back(intern(d1.next(a, s), d2.next(b, s)));
        }
    }

    Dfa out(d1.alphabet, static_cast<State>(pairs.size()), 0);
    out.transitions = std::move(table);
    for (State id = 0; id < out.state_count; ++id) {
        out.accepting[id] = combine(d1.accepting[pairs[id].first], d2.accepting[pairs[id].second]);
    }
    return out;
}

Dfa xor_product(const Dfa& d1, const Dfa& d2) {
    return product(d1, d2, [](bool x, bool y) { return x != y; });
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    out.accepting.flip();
    return out;
}

Dfa empty_language_dfa(const Alphabet& alphabet) {
    Dfa d(alphabet, 1, 0);
    return d;
}

Dfa full_language_dfa(const Alphabet& alphabet) {
    Dfa d(alphabet, 1, 0);
    d.accepting[0] = true;
    return d;
}

}  // namespace almeq
