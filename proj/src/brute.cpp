#include "almeq/brute.hpp"

namespace almeq {

void enumerate_words(const Alphabet& alphabet, std::uint32_t length,
                     const std::function<void(const std::vector<SymbolId>&)>& visit,
                     std::uint64_t cap) {
    const std::uint64_t arity = alphabet.size();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < length; ++i) {
        if (total > cap / arity) throw CapacityError("enumerate_words: |A|^n exceeds cap");
        total *= arity;
    }

    std::vector<SymbolId> word(length, 0);
    for (;;) {
        visit(word);
        std::uint32_t i = length;
        while (i > 0 && ++word[i - 1] == arity) {
            word[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

namespace {

template <typename Automaton>
Rational brute_density_impl(const Automaton& automaton, std::uint32_t length,
                            std::uint64_t cap) {
    Integer accepted = 0;
    Integer total = 0;
    enumerate_words(automaton.alphabet, length,
                    [&](const std::vector<SymbolId>& word) {
                        ++total;
                        if (automaton.accepts(word)) ++accepted;
                    },
                    cap);
    return Rational(accepted, total);
}

}  // namespace

Rational brute_density(const Dfa& d, std::uint32_t length, std::uint64_t cap) {
    return brute_density_impl(d, length, cap);
}

Rational brute_density(const Nfa& nfa, std::uint32_t length, std::uint64_t cap) {
    return brute_density_impl(nfa, length, cap);
}

}  // namespace almeq
