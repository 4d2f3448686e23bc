/* reductions.hpp -- generators for the three hardness-reduction instances
 * (graph accessibility -> DFA, linear-bounded TM + input -> regex,
 * 3CNF -> unary regex) plus the independent oracles that ground-truth them. */

#ifndef ALMEQ_REDUCTIONS_HPP_
#define ALMEQ_REDUCTIONS_HPP_

#include <array>
#include <vector>

#include "almeq/dfa.hpp"
#include "almeq/regex.hpp"

namespace almeq {

/// Directed graph over nodes 1..n.
struct Digraph {
    std::uint32_t n = 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    void validate() const;
};

/// Nondeterministic linear-space-bounded Turing machine. The head stays
/// within the |input| tape cells; moves that would leave the tape have no
/// effect (the branch dies). The accepting state is absorbing.
struct TmSpec {
    struct Move {
        std::uint32_t state;
        std::uint32_t write;
        bool move_right;
    };

    std::vector<std::string> state_names;
    std::uint32_t initial = 0;
    std::uint32_t accepting = 0;
    std::vector<std::string> tape_symbols;  // must contain the blank
    std::uint32_t blank = 0;
    /// delta[state][symbol] -> possible moves.
    std::vector<std::vector<std::vector<Move>>> delta;

    void validate() const;
};

/// 3CNF with exactly three literals per clause over variables 1..variables.
struct Cnf3 {
    struct Literal {
        std::uint32_t variable;  // 1-based
        bool positive;
    };
    using Clause = std::array<Literal, 3>;

    std::uint32_t variables = 0;
    std::vector<Clause> clauses;

    void validate() const;
};

/// DFA over alphabet {1..n} accepting some language that is p-inequivalent
/// to the empty language iff node n is reachable from node 1. State 0 is a
/// dead sink; state i>0 is node i; node n absorbs.
Dfa gap_to_dfa(const Digraph& g);

/// Zero-one-law variant: an extra symbol `e` escapes to the dead sink from
/// every node except n, which keeps the density of the accepted language
/// away from 1. The language obeys the zero-one law iff it is almost empty.
Dfa gap_to_dfa_zero_one(const Digraph& g);

struct GeneratedRegex {
    Regex regex;
    Alphabet alphabet;
};

/// Regex over the composite alphabet {#} + A_M + states x A_M whose
/// complement is exactly the set of strings that encode an accepting run of
/// the machine on `input` (truncated at the first accepting head symbol and
/// then arbitrary). Consequently the machine rejects `input` iff the regex
/// denotes the full language. Requires |input| >= 2.
GeneratedRegex tm_to_regex(const TmSpec& m, const std::vector<std::uint32_t>& input);

/// Unary regex over {0} that denotes 0* iff the formula is unsatisfiable.
/// Length i encodes the assignment "variable k is true iff i == 1 mod p_k"
/// (p_k = k-th prime); each clause contributes the arithmetic progressions
/// of lengths falsifying all three of its literals. The product of the
/// three clause primes is capped at 10^4.
GeneratedRegex sat3_to_unary_regex(const Cnf3& f);

// Independent oracles.
bool bfs_reachable(const Digraph& g);
bool simulate_tm(const TmSpec& m, const std::vector<std::uint32_t>& input);
bool brute_sat(const Cnf3& f);

/// First `count` primes starting from 2.
std::vector<std::uint32_t> first_primes(std::uint32_t count);

}  // namespace almeq

#endif  // ALMEQ_REDUCTIONS_HPP_
