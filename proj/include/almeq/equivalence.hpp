/* equivalence.hpp -- decision procedures over regular-language inputs:
 * exact equality, p-equivalence, f-equivalence, E-equivalence, the zero-one
 * problem, and the dyadic-window algorithm for unary NFAs. */

#ifndef ALMEQ_EQUIVALENCE_HPP_
#define ALMEQ_EQUIVALENCE_HPP_

#include <optional>
#include <string>
#include <variant>

#include "almeq/analysis.hpp"
#include "almeq/regex.hpp"

namespace almeq {

/// A language given as a regex, an NFA, or a DFA. Decision procedures
/// normalize regex -> NFA (Thompson) -> DFA (subset construction).
class LanguageInput {
public:
    static LanguageInput from_regex(Regex regex, Alphabet alphabet);
    static LanguageInput from_nfa(Nfa nfa);
    static LanguageInput from_dfa(Dfa dfa);

    const Alphabet& alphabet() const;
    Dfa to_dfa(std::uint32_t determinize_cap = kDefaultDeterminizeCap) const;
    /// Regexes compile via Thompson; DFAs convert structurally.
    Nfa to_nfa() const;
    /// Non-null when the input is an NFA.
    const Nfa* as_nfa() const { return std::get_if<Nfa>(&value_); }

private:
    std::variant<std::pair<Regex, Alphabet>, Nfa, Dfa> value_;
};

enum class Relation { Equal, PEquiv, FEquiv, EEquiv, ZeroOne };

std::string relation_name(Relation relation);

struct DecisionOptions {
    std::uint32_t determinize_cap = kDefaultDeterminizeCap;
};

struct DecisionStats {
    State left_states = 0;
    State right_states = 0;
    State product_states = 0;
    State env_states = 0;       // E-equivalence only: the DFA of E
    State difference_states = 0;  // E-equivalence only: (L1 xor L2) && !E
    std::uint64_t explored_matrix_pairs = 0;  // unary window algorithm only
};

/// Witness of a falsified n in the unary dyadic window, as the binary
/// representation of n (most significant bit first).
struct UnaryWindowWitness {
    std::string bits;
    std::uint64_t value = 0;
};

struct DecisionReport {
    Relation relation = Relation::Equal;
    bool verdict = false;

    // At most one of these is populated, always on a false verdict (and for
    // p-equivalence as the positive-density witness of the xor automaton).
    std::optional<std::vector<SymbolId>> distinguishing_string;
    std::optional<MuWitness> mu_witness;
    std::optional<PumpWitness> pump_witness;
    std::optional<UnaryWindowWitness> unary_witness;

    // Zero-one only: which disjunct held.
    std::optional<bool> almost_empty;
    std::optional<bool> almost_full;

    DecisionStats stats;
};

DecisionReport equal(const LanguageInput& x1, const LanguageInput& x2,
                     const DecisionOptions& options = {});

/// True iff the symmetric difference has asymptotic probability 0, decided
/// by the sink-SCC condition on the xor automaton.
DecisionReport p_equiv(const LanguageInput& x1, const LanguageInput& x2,
                       const DecisionOptions& options = {});

/// True iff the symmetric difference is a finite set.
DecisionReport f_equiv(const LanguageInput& x1, const LanguageInput& x2,
                       const DecisionOptions& options = {});

/// True iff the symmetric difference is contained in L(e).
DecisionReport e_equiv(const LanguageInput& x1, const LanguageInput& x2,
                       const LanguageInput& e, const DecisionOptions& options = {});

/// True iff the language is almost empty or almost full; both disjuncts are
/// evaluated and reported.
DecisionReport zero_one(const LanguageInput& x, const DecisionOptions& options = {});

/// p-equivalence of two unary NFAs via exhaustive square / square-and-
/// multiply exploration of boolean adjacency matrices, memoized on matrix
/// pairs. Falsifiers are lengths n with 2^(q1+q2) <= n < 2^(1+q1+q2).
/// Requires |Q1| + |Q2| <= 20.
DecisionReport unary_p_equiv(const Nfa& n1, const Nfa& n2);

}  // namespace almeq

#endif  // ALMEQ_EQUIVALENCE_HPP_
