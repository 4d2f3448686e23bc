#include "almeq/equivalence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

namespace almeq {

LanguageInput LanguageInput::from_regex(Regex regex, Alphabet alphabet) {
    LanguageInput in;
    in.value_ = std::make_pair(std::move(regex), std::move(alphabet));
    return in;
}

LanguageInput LanguageInput::from_nfa(Nfa nfa) {
    nfa.validate();
    LanguageInput in;
    in.value_ = std::move(nfa);
    return in;
}

LanguageInput LanguageInput::from_dfa(Dfa dfa) {
    dfa.validate();
    LanguageInput in;
    in.value_ = std::move(dfa);
    return in;
}

const Alphabet& LanguageInput::alphabet() const {
    if (auto* re = std::get_if<std::pair<Regex, Alphabet>>(&value_)) return re->second;
    if (auto* nfa = std::get_if<Nfa>(&value_)) return nfa->alphabet;
    return std::get<Dfa>(value_).alphabet;
}

Dfa LanguageInput::to_dfa(std::uint32_t determinize_cap) const {
    if (auto* re = std::get_if<std::pair<Regex, Alphabet>>(&value_)) {
        return determinize(compile_to_nfa(re->first, re->second), determinize_cap);
    }
    if (auto* nfa = std::get_if<Nfa>(&value_)) return determinize(*nfa, determinize_cap);
    return std::get<Dfa>(value_);
}

Nfa LanguageInput::to_nfa() const {
    if (auto* re = std::get_if<std::pair<Regex, Alphabet>>(&value_)) {
        return compile_to_nfa(re->first, re->second);
    }
    if (auto* nfa = std::get_if<Nfa>(&value_)) return *nfa;
    const Dfa& dfa = std::get<Dfa>(value_);
    Nfa out(dfa.alphabet, dfa.state_count, dfa.initial);
    out.accepting = dfa.accepting;
    for (State q = 0; q < dfa.state_count; ++q) {
        for (SymbolId a = 0; a < dfa.alphabet.size(); ++a) {
            out.add_transition(q, a, dfa.next(q, a));
        }
    }
    return out;
}

std::string relation_name(Relation relation) {
    switch (relation) {
        case Relation::Equal: return "equal";
        case Relation::PEquiv: return "p_equiv";
        case Relation::FEquiv: return "f_equiv";
        case Relation::EEquiv: return "e_equiv";
        case Relation::ZeroOne: return "zero_one";
    }
    return "unknown";
}

namespace {

std::pair<Dfa, Dfa> normalize_pair(const LanguageInput& x1, const LanguageInput& x2,
                                   const DecisionOptions& options) {
    if (x1.alphabet() != x2.alphabet()) {
        throw AlphabetMismatchError("decision inputs declare different alphabets");
    }
    return {x1.to_dfa(options.determinize_cap), x2.to_dfa(options.determinize_cap)};
}

}  // namespace

DecisionReport equal(const LanguageInput& x1, const LanguageInput& x2,
                     const DecisionOptions& options) {
    auto [d1, d2] = normalize_pair(x1, x2, options);
    Dfa diff = xor_product(d1, d2);

    DecisionReport report;
    report.relation = Relation::Equal;
    report.stats.left_states = d1.state_count;
    report.stats.right_states = d2.state_count;
    report.stats.product_states = diff.state_count;
    report.verdict = is_empty(diff);
    if (!report.verdict) report.distinguishing_string = shortest_accepted(diff);
    return report;
}

DecisionReport p_equiv(const LanguageInput& x1, const LanguageInput& x2,
                       const DecisionOptions& options) {
    auto [d1, d2] = normalize_pair(x1, x2, options);
    Dfa diff = xor_product(d1, d2);

    DecisionReport report;
    report.relation = Relation::PEquiv;
    report.stats.left_states = d1.state_count;
    report.stats.right_states = d2.state_count;
    report.stats.product_states = diff.state_count;

    MuResult mu = mu_is_nonzero(diff);
    report.verdict = !mu.nonzero;
    if (mu.nonzero) report.mu_witness = std::move(mu.witness);
    return report;
}

DecisionReport f_equiv(const LanguageInput& x1, const LanguageInput& x2,
                       const DecisionOptions& options) {
    auto [d1, d2] = normalize_pair(x1, x2, options);
    Dfa diff = xor_product(d1, d2);

    DecisionReport report;
    report.relation = Relation::FEquiv;
    report.stats.left_states = d1.state_count;
    report.stats.right_states = d2.state_count;
    report.stats.product_states = diff.state_count;

    auto pump = infinite_witness(diff);
    report.verdict = !pump.has_value();
    if (pump) report.pump_witness = std::move(pump);
    return report;
}

DecisionReport e_equiv(const LanguageInput& x1, const LanguageInput& x2,
                       const LanguageInput& e, const DecisionOptions& options) {
    auto [d1, d2] = normalize_pair(x1, x2, options);
    if (e.alphabet() != x1.alphabet()) {
        throw AlphabetMismatchError("environment language declares a different alphabet");
    }
    Dfa de = e.to_dfa(options.determinize_cap);
    Dfa diff = xor_product(d1, d2);
    Dfa outside = product(diff, de, [](bool x, bool y) { return x && !y; });

    DecisionReport report;
    report.relation = Relation::EEquiv;
    report.stats.left_states = d1.state_count;
    report.stats.right_states = d2.state_count;
    report.stats.product_states = diff.state_count;
    report.stats.env_states = de.state_count;
    report.stats.difference_states = outside.state_count;

    report.verdict = is_empty(outside);
    if (!report.verdict) report.distinguishing_string = shortest_accepted(outside);
    return report;
}

DecisionReport zero_one(const LanguageInput& x, const DecisionOptions& options) {
    const Alphabet& alphabet = x.alphabet();
    DecisionReport versus_empty =
        p_equiv(x, LanguageInput::from_dfa(empty_language_dfa(alphabet)), options);
    DecisionReport versus_full =
        p_equiv(x, LanguageInput::from_dfa(full_language_dfa(alphabet)), options);

    DecisionReport report;
    report.relation = Relation::ZeroOne;
    report.almost_empty = versus_empty.verdict;
    report.almost_full = versus_full.verdict;
    report.verdict = versus_empty.verdict || versus_full.verdict;
    report.stats = versus_empty.stats;
    if (!report.verdict) report.mu_witness = versus_empty.mu_witness;
    return report;
}

// --------------------------------------------------------------------------
// Unary NFAs: dyadic-window algorithm

namespace {

/// Boolean adjacency matrix of a unary NFA with at most 20 states:
/// rows[i] bit j set iff state j is reachable from i in one step.
struct BoolMatrix {
    std::uint8_t n = 0;
    std::array<std::uint32_t, 20> rows{};

    bool operator==(const BoolMatrix& other) const {
        return n == other.n &&
               std::equal(rows.begin(), rows.begin() + n, other.rows.begin());
    }
};

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix c;
    c.n = a.n;
    for (std::uint8_t i = 0; i < a.n; ++i) {
        std::uint32_t row = 0;
        std::uint32_t bits = a.rows[i];
        while (bits != 0) {
            std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(bits));
            bits &= bits - 1;
            row |= b.rows[j];
        }
        c.rows[i] = row;
    }
    return c;
}

struct MatrixPair {
    BoolMatrix first, second;
    bool operator==(const MatrixPair& other) const {
        return first == other.first && second == other.second;
    }
};

struct MatrixPairHash {
    std::size_t operator()(const MatrixPair& p) const {
        std::size_t h = p.first.n * 131u + p.second.n;
        for (std::uint8_t i = 0; i < p.first.n; ++i) {
            h = h * 0x100000001b3ull ^ p.first.rows[i];
        }
        for (std::uint8_t i = 0; i < p.second.n; ++i) {
            h = h * 0x100000001b3ull ^ p.second.rows[i];
        }
        return h;
    }
};

BoolMatrix adjacency(const Nfa& nfa) {
    BoolMatrix m;
    m.n = static_cast<std::uint8_t>(nfa.state_count);
    for (State q = 0; q < nfa.state_count; ++q) {
        for (State t : nfa.successors(q, 0)) m.rows[q] |= 1u << t;
    }
    return m;
}

bool accepts_power(const BoolMatrix& m, const Nfa& nfa) {
    std::uint32_t reach = m.rows[nfa.initial];
    while (reach != 0) {
        std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(reach));
        reach &= reach - 1;
        if (nfa.accepting[j]) return true;
    }
    return false;
}

}  // namespace

DecisionReport unary_p_equiv(const Nfa& n1, const Nfa& n2) {
    if (n1.alphabet != n2.alphabet) {
        throw AlphabetMismatchError("unary_p_equiv: operands declare different alphabets");
    }
    if (n1.alphabet.size() != 1) {
        throw Error("unary_p_equiv: alphabet must have exactly one symbol");
    }
    const std::uint32_t total_states = n1.state_count + n2.state_count;
    if (total_states > 20) {
        throw CapacityError("unary_p_equiv: |Q1| + |Q2| exceeds 20");
    }

    DecisionReport report;
    report.relation = Relation::PEquiv;
    report.stats.left_states = n1.state_count;
    report.stats.right_states = n2.state_count;

    const BoolMatrix a1 = adjacency(n1);
    const BoolMatrix a2 = adjacency(n2);

    // Level d holds the matrix pairs (A1^n, A2^n) for every exponent n whose
    // binary representation has d bits; exploring both branch choices per
    // step enumerates the full window [2^(q1+q2), 2^(1+q1+q2)).
    std::vector<std::pair<MatrixPair, std::string>> level{{{a1, a2}, "1"}};
    std::unordered_map<MatrixPair, bool, MatrixPairHash> seen;

    for (std::uint32_t depth = 1; depth < 1 + total_states; ++depth) {
        std::vector<std::pair<MatrixPair, std::string>> next;
        seen.clear();
        for (const auto& [pair, bits] : level) {
            BoolMatrix sq1 = multiply(pair.first, pair.first);
            BoolMatrix sq2 = multiply(pair.second, pair.second);
            MatrixPair squared{sq1, sq2};
            if (seen.emplace(squared, true).second) {
                next.emplace_back(squared, bits + "0");
            }
            MatrixPair squared_times{multiply(sq1, a1), multiply(sq2, a2)};
            if (seen.emplace(squared_times, true).second) {
                next.emplace_back(squared_times, bits + "1");
            }
        }
        report.stats.explored_matrix_pairs += next.size();
        level = std::move(next);
    }

    for (const auto& [pair, bits] : level) {
        bool in1 = accepts_power(pair.first, n1);
        bool in2 = accepts_power(pair.second, n2);
        if (in1 != in2) {
            report.verdict = false;
            UnaryWindowWitness witness;
            witness.bits = bits;
            for (char c : bits) witness.value = witness.value * 2 + (c == '1');
            report.unary_witness = std::move(witness);
            return report;
        }
    }
    report.verdict = true;
    return report;
}

}  // namespace almeq
