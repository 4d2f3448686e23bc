/* analysis.hpp -- graph-theoretic predicates over complete DFAs: reachability,
 * SCC decomposition, the sink-component density condition, emptiness,
 * universality, finiteness, and witness extraction. */

#ifndef ALMEQ_ANALYSIS_HPP_
#define ALMEQ_ANALYSIS_HPP_

#include <optional>
#include <vector>

#include "almeq/dfa.hpp"

namespace almeq {

/// SCC partition of the subgraph reachable from the initial state.
/// Components are numbered in completion order, which places a component
/// after everything it can reach (reverse topological order). Unreachable
/// states carry component id -1.
struct SccDecomposition {
    std::vector<std::int32_t> component;  // per state; -1 = unreachable
    std::uint32_t component_count = 0;
    /// No transition leaves the component (self/internal edges permitted).
    std::vector<bool> is_sink;
    std::vector<std::uint32_t> component_size;
};

SccDecomposition sccs(const Dfa& d);

/// An accepting state inside a reachable sink SCC, together with the
/// BFS-shortest access string from the initial state.
struct MuWitness {
    State state = 0;
    std::vector<SymbolId> access;
};

struct MuResult {
    bool nonzero = false;
    std::optional<MuWitness> witness;
};

/// Decides whether the length-n acceptance probabilities of L(d) stay away
/// from zero: true iff some reachable accepting state lies in a sink SCC.
/// True covers both "the limit exists and is positive" and "no limit".
MuResult mu_is_nonzero(const Dfa& d);

bool is_empty(const Dfa& d);
bool is_universal(const Dfa& d);

/// True iff L(d) is a finite set: no reachable state that lies on a cycle
/// can still reach an accepting state.
bool is_finite_language(const Dfa& d);

/// BFS-shortest accepted string, if the language is nonempty.
std::optional<std::vector<SymbolId>> shortest_accepted(const Dfa& d);

/// Decomposed witness of infiniteness: prefix . cycle^k . suffix is accepted
/// for every k >= 0, and the cycle is nonempty.
struct PumpWitness {
    std::vector<SymbolId> prefix, cycle, suffix;
};

std::optional<PumpWitness> infinite_witness(const Dfa& d);

}  // namespace almeq

#endif  // ALMEQ_ANALYSIS_HPP_
