#include "almeq/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace almeq {

void Digraph::validate() const {
    if (n < 2) throw Error("digraph: need at least 2 nodes");
    for (auto [from, to] : edges) {
        if (from < 1 || from > n || to < 1 || to > n) {
            throw Error("digraph: edge endpoint out of range");
        }
    }
}

void TmSpec::validate() const {
    if (state_names.empty()) throw Error("tm: no states");
    if (initial >= state_names.size() || accepting >= state_names.size()) {
        throw Error("tm: initial or accepting state out of range");
    }
    if (tape_symbols.empty()) throw Error("tm: no tape symbols");
    if (blank >= tape_symbols.size()) throw Error("tm: blank symbol out of range");
    if (delta.size() != state_names.size()) throw Error("tm: delta has wrong state arity");
    for (const auto& row : delta) {
        if (row.size() != tape_symbols.size()) throw Error("tm: delta has wrong symbol arity");
        for (const auto& moves : row) {
            for (const Move& move : moves) {
                if (move.state >= state_names.size() || move.write >= tape_symbols.size()) {
                    throw Error("tm: transition target out of range");
                }
            }
        }
    }
    for (const auto& moves : delta[accepting]) {
        for (const Move& move : moves) {
            if (move.state != accepting) {
                throw Error("tm: accepting state is not absorbing");
            }
        }
    }
}

void Cnf3::validate() const {
    if (variables < 1) throw Error("cnf: need at least one variable");
    for (const Clause& clause : clauses) {
        for (const Literal& lit : clause) {
            if (lit.variable < 1 || lit.variable > variables) {
                throw Error("cnf: literal variable out of range");
            }
        }
    }
}

// --------------------------------------------------------------------------
// Graph accessibility

Dfa gap_to_dfa(const Digraph& g) {
    g.validate();
    std::vector<std::string> tokens;
    for (std::uint32_t v = 1; v <= g.n; ++v) tokens.push_back(std::to_string(v));
    Alphabet alphabet(std::move(tokens));

    // State 0 is the dead sink, state i>0 is node i; everything defaults to
    // the sink, node n absorbs.
    Dfa d(alphabet, g.n + 1, 1);
    for (auto [from, to] : g.edges) {
        if (from < g.n) d.set_transition(from, to - 1, to);
    }
    for (SymbolId a = 0; a < alphabet.size(); ++a) d.set_transition(g.n, a, g.n);
    d.accepting[g.n] = true;
    return d;
}

Dfa gap_to_dfa_zero_one(const Digraph& g) {
    g.validate();
    std::vector<std::string> tokens{"e"};
    for (std::uint32_t v = 1; v <= g.n; ++v) tokens.push_back(std::to_string(v));
    Alphabet alphabet(std::move(tokens));

    // Symbol 0 is the escape character e; node symbols are shifted by one.
    Dfa d(alphabet, g.n + 1, 1);
    for (auto [from, to] : g.edges) {
        if (from < g.n) d.set_transition(from, to, to);
    }
    for (SymbolId a = 0; a < alphabet.size(); ++a) d.set_transition(g.n, a, g.n);
    d.accepting[g.n] = true;
    return d;
}

bool bfs_reachable(const Digraph& g) {
    g.validate();
    std::vector<std::vector<std::uint32_t>> adjacency(g.n + 1);
    for (auto [from, to] : g.edges) adjacency[from].push_back(to);
    std::vector<bool> seen(g.n + 1, false);
    std::vector<std::uint32_t> stack{1};
    seen[1] = true;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        if (v == g.n) return true;
        for (std::uint32_t w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

// --------------------------------------------------------------------------
// Regex assembly helpers

namespace {

Regex union_of(std::vector<Regex> parts) {
    if (parts.empty()) return Regex::empty();
    // Balanced fold keeps tree depth logarithmic.
    while (parts.size() > 1) {
        std::vector<Regex> merged;
        merged.reserve(parts.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            merged.push_back(Regex::alternation(parts[i], parts[i + 1]));
        }
        if (parts.size() % 2 == 1) merged.push_back(parts.back());
        parts = std::move(merged);
    }
    return parts.front();
}

Regex concat_of(const std::vector<Regex>& parts) {
    if (parts.empty()) return Regex::epsilon();
    Regex out = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        out = Regex::concat(parts[i], out);
    }
    return out;
}

Regex repeated(const Regex& unit, std::uint32_t count) {
    if (count == 0) return Regex::epsilon();
    Regex out = unit;
    for (std::uint32_t i = 1; i < count; ++i) out = Regex::concat(unit, out);
    return out;
}

}  // namespace

// --------------------------------------------------------------------------
// Linear-bounded TM -> regex

namespace {

constexpr std::size_t kTmConfigCap = 2'000'000;
constexpr std::size_t kTmContextCap = 4'000'000;

struct TmInstance {
    const TmSpec& m;
    std::vector<std::uint32_t> input;
    std::uint32_t n;          // tape length
    std::uint32_t num_tape;   // |A_M|
    std::uint32_t num_states;

    explicit TmInstance(const TmSpec& machine, const std::vector<std::uint32_t>& in)
        : m(machine), input(in) {
        n = static_cast<std::uint32_t>(input.size());
        num_tape = static_cast<std::uint32_t>(m.tape_symbols.size());
        num_states = static_cast<std::uint32_t>(m.state_names.size());
    }

    // Composite alphabet layout: 0 = '#', 1..num_tape = tape symbols,
    // then fused head symbols (q, a) in state-major order.
    SymbolId hash() const { return 0; }
    SymbolId tape(std::uint32_t a) const { return 1 + a; }
    SymbolId head(std::uint32_t q, std::uint32_t a) const {
        return 1 + num_tape + q * num_tape + a;
    }
    std::uint32_t alphabet_size() const { return 1 + num_tape * (1 + num_states); }

    bool is_head(SymbolId s) const { return s >= 1 + num_tape; }
    std::uint32_t head_state(SymbolId s) const { return (s - 1 - num_tape) / num_tape; }
    std::uint32_t head_tape(SymbolId s) const { return (s - 1 - num_tape) % num_tape; }
    bool is_accepting_head(SymbolId s) const {
        return is_head(s) && head_state(s) == m.accepting;
    }
};

struct Config {
    std::uint32_t state = 0;
    std::uint32_t head = 0;  // 0-based cell
    std::vector<std::uint32_t> tape;
};

std::vector<Config> successors(const TmInstance& tm, const Config& c) {
    std::vector<Config> out;
    for (const TmSpec::Move& move : tm.m.delta[c.state][c.tape[c.head]]) {
        std::int64_t next_head =
            static_cast<std::int64_t>(c.head) + (move.move_right ? 1 : -1);
        if (next_head < 0 || next_head >= tm.n) continue;  // head stays on tape
        Config next;
        next.state = move.state;
        next.head = static_cast<std::uint32_t>(next_head);
        next.tape = c.tape;
        next.tape[c.head] = move.write;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<SymbolId> encode(const TmInstance& tm, const Config& c) {
    std::vector<SymbolId> out(tm.n);
    for (std::uint32_t i = 0; i < tm.n; ++i) {
        out[i] = (i == c.head) ? tm.head(c.state, c.tape[i]) : tm.tape(c.tape[i]);
    }
    return out;
}

std::vector<Config> all_configs(const TmInstance& tm) {
    std::size_t tape_combos = 1;
    for (std::uint32_t i = 0; i < tm.n; ++i) {
        tape_combos *= tm.num_tape;
        if (tape_combos > kTmConfigCap) {
            throw CapacityError("tm_to_regex: configuration space too large");
        }
    }
    std::size_t total = tape_combos * tm.n * tm.num_states;
    if (total > kTmConfigCap) {
        throw CapacityError("tm_to_regex: configuration space too large");
    }

    std::vector<Config> out;
    out.reserve(total);
    Config c;
    c.tape.assign(tm.n, 0);
    for (c.state = 0; c.state < tm.num_states; ++c.state) {
        for (c.head = 0; c.head < tm.n; ++c.head) {
            std::fill(c.tape.begin(), c.tape.end(), 0);
            for (;;) {
                out.push_back(c);
                std::uint32_t i = 0;
                while (i < tm.n && ++c.tape[i] == tm.num_tape) {
                    c.tape[i] = 0;
                    ++i;
                }
                if (i == tm.n) break;
            }
        }
    }
    return out;
}

/// Continuation pattern for one window: exact symbols, or kFreeCoord for
/// positions past the first accepting head symbol.
constexpr std::int16_t kFreeCoord = -1;
using DPattern = std::array<std::int16_t, 3>;
using WindowTable = std::unordered_map<std::uint32_t, std::set<DPattern>>;

std::uint32_t window_key(SymbolId a, SymbolId b, SymbolId c) {
    return (a << 12) | (b << 6) | c;
}

/// Slides every window over a context string of consecutive valid
/// configurations and records which continuations (at distance n + 1) are
/// legitimate. Positions past the first accepting head symbol are free.
void record_windows(const TmInstance& tm, const std::vector<SymbolId>& s, WindowTable& table) {
    const std::size_t length = s.size();
    std::size_t first_accept = length;  // "infinity" when absent
    for (std::size_t i = 0; i < length; ++i) {
        if (tm.is_accepting_head(s[i])) {
            first_accept = i;
            break;
        }
    }

    for (std::size_t p = 0; p + 3 <= length; ++p) {
        if (p > first_accept) break;  // later windows are never active
        if (tm.is_accepting_head(s[p]) || tm.is_accepting_head(s[p + 1]) ||
            tm.is_accepting_head(s[p + 2])) {
            continue;
        }
        // A window whose gap covers the acceptance position never fires.
        bool gap_accepts = false;
        for (std::size_t x = p + 3; x <= p + tm.n && x < length; ++x) {
            if (tm.is_accepting_head(s[x])) {
                gap_accepts = true;
                break;
            }
        }
        if (gap_accepts) continue;

        DPattern pattern{};
        bool known = true;
        for (std::size_t i = 0; i < 3; ++i) {
            std::size_t x = p + tm.n + 1 + i;
            if (x > first_accept) {
                pattern[i] = kFreeCoord;
            } else if (x < length) {
                pattern[i] = static_cast<std::int16_t>(s[x]);
            } else {
                known = false;  // a longer context covers this window
                break;
            }
        }
        if (!known) continue;
        table[window_key(s[p], s[p + 1], s[p + 2])].insert(pattern);
    }
}

WindowTable build_window_table(const TmInstance& tm) {
    WindowTable table;
    std::vector<Config> configs = all_configs(tm);
    std::size_t contexts = 0;

    auto bump = [&contexts]() {
        if (++contexts > kTmContextCap) {
            throw CapacityError("tm_to_regex: context enumeration too large");
        }
    };

    std::vector<SymbolId> s;
    for (const Config& c : configs) {
        if (c.state == tm.m.accepting) continue;  // pre-acceptance region only
        std::vector<SymbolId> enc_c = encode(tm, c);
        for (const Config& c1 : successors(tm, c)) {
            bump();
            std::vector<SymbolId> enc_c1 = encode(tm, c1);

            s.clear();
            s.push_back(tm.hash());
            s.insert(s.end(), enc_c.begin(), enc_c.end());
            s.push_back(tm.hash());
            s.insert(s.end(), enc_c1.begin(), enc_c1.end());
            s.push_back(tm.hash());
            record_windows(tm, s, table);

            if (c1.state == tm.m.accepting) continue;
            const std::size_t pair_length = s.size();
            for (const Config& c2 : successors(tm, c1)) {
                bump();
                s.resize(pair_length - 1);
                s.push_back(tm.hash());
                std::vector<SymbolId> enc_c2 = encode(tm, c2);
                s.insert(s.end(), enc_c2.begin(), enc_c2.end());
                s.push_back(tm.hash());
                record_windows(tm, s, table);
            }
        }
    }
    return table;
}

}  // namespace

GeneratedRegex tm_to_regex(const TmSpec& m, const std::vector<std::uint32_t>& input) {
    m.validate();
    if (input.size() < 2) throw Error("tm_to_regex: input must have length >= 2");
    for (std::uint32_t a : input) {
        if (a >= m.tape_symbols.size()) throw Error("tm_to_regex: input symbol out of range");
    }

    TmInstance tm(m, input);
    if (tm.alphabet_size() > 64) {
        throw CapacityError("tm_to_regex: composite alphabet exceeds 64 symbols");
    }

    // Composite alphabet: '#', the tape symbols, then fused head symbols.
    std::vector<std::string> tokens{"#"};
    for (const std::string& t : m.tape_symbols) tokens.push_back(t);
    for (const std::string& q : m.state_names) {
        for (const std::string& t : m.tape_symbols) {
            tokens.push_back("[" + q + "," + t + "]");
        }
    }
    Alphabet alphabet(std::move(tokens));

    const std::uint32_t sigma = tm.alphabet_size();
    auto symbol_class = [&](auto&& keep) {
        std::vector<Regex> parts;
        for (SymbolId s = 0; s < sigma; ++s) {
            if (keep(s)) parts.push_back(Regex::literal(s));
        }
        return parts;
    };

    Regex any = union_of(symbol_class([](SymbolId) { return true; }));
    Regex any_star = Regex::star(any);
    Regex non_accepting =
        union_of(symbol_class([&](SymbolId s) { return !tm.is_accepting_head(s); }));
    std::vector<Regex> accepting_heads =
        symbol_class([&](SymbolId s) { return tm.is_accepting_head(s); });

    const SymbolId initial_head = tm.head(m.initial, input[0]);

    // Input error: any deviation from the encoded initial configuration
    // (including its closing '#').
    Regex alpha1;
    {
        auto not_symbol = [&](SymbolId expected) {
            return union_of(symbol_class([&](SymbolId s) { return s != expected; }));
        };
        Regex inner;
        if (m.initial == m.accepting) {
            // Acceptance happens at position 1; later cells are free.
            inner = not_symbol(initial_head);
        } else {
            inner = not_symbol(tm.hash());
            for (std::uint32_t i = tm.n - 1; i >= 1; --i) {
                SymbolId expected = tm.tape(input[i]);
                inner = Regex::alternation(not_symbol(expected),
                                           Regex::concat(Regex::literal(expected), inner));
            }
            inner = Regex::alternation(not_symbol(initial_head),
                                       Regex::concat(Regex::literal(initial_head), inner));
        }
        alpha1 = Regex::concat(
            Regex::alternation(not_symbol(tm.hash()),
                               Regex::concat(Regex::literal(tm.hash()), inner)),
            any_star);
    }

    // Acceptance error: no accepting head symbol ever occurs.
    Regex alpha2 = Regex::star(non_accepting);

    // Transition error: some window followed, n + 1 positions later, by a
    // continuation outside the window table. The gap is acceptance-free so
    // checks stop at the first accepting head symbol.
    WindowTable table = build_window_table(tm);
    std::vector<Regex> branches;
    {
        Regex gap = repeated(non_accepting, tm.n - 2);
        const std::set<DPattern> no_patterns;
        for (SymbolId w1 = 0; w1 < sigma; ++w1) {
            if (tm.is_accepting_head(w1)) continue;
            for (SymbolId w2 = 0; w2 < sigma; ++w2) {
                if (tm.is_accepting_head(w2)) continue;
                for (SymbolId w3 = 0; w3 < sigma; ++w3) {
                    if (tm.is_accepting_head(w3)) continue;

                    auto it = table.find(window_key(w1, w2, w3));
                    const std::set<DPattern>& patterns =
                        it == table.end() ? no_patterns : it->second;

                    // Decision tree over the continuation coordinates: at
                    // each level the observed symbol must extend some
                    // pattern; a free coordinate ends the checking. A bad
                    // symbol is an error on its own, so no trailing padding.
                    std::vector<Regex> bad;
                    std::map<std::int16_t, std::vector<DPattern>> by_first;
                    for (const DPattern& d : patterns) by_first[d[0]].push_back(d);

                    auto outside = [&](const auto& group) {
                        return symbol_class([&](SymbolId s) {
                            return group.find(static_cast<std::int16_t>(s)) == group.end();
                        });
                    };

                    std::set<std::int16_t> first_set;
                    for (const auto& [e1, _] : by_first) first_set.insert(e1);
                    {
                        std::vector<Regex> off = outside(first_set);
                        if (!off.empty()) bad.push_back(union_of(std::move(off)));
                    }
                    for (const auto& [e1, group1] : by_first) {
                        bool free2 = false;
                        std::set<std::int16_t> second_set;
                        for (const DPattern& d : group1) {
                            if (d[1] == kFreeCoord) free2 = true;
                            second_set.insert(d[1]);
                        }
                        if (free2) continue;
                        Regex lit1 = Regex::literal(static_cast<SymbolId>(e1));
                        {
                            std::vector<Regex> off = outside(second_set);
                            if (!off.empty()) {
                                bad.push_back(Regex::concat(lit1, union_of(std::move(off))));
                            }
                        }
                        std::map<std::int16_t, std::set<std::int16_t>> by_second;
                        std::set<std::int16_t> free3;
                        for (const DPattern& d : group1) {
                            if (d[2] == kFreeCoord) {
                                free3.insert(d[1]);
                            } else {
                                by_second[d[1]].insert(d[2]);
                            }
                        }
                        for (const auto& [e2, third_set] : by_second) {
                            if (free3.count(e2)) continue;
                            std::vector<Regex> off = outside(third_set);
                            if (off.empty()) continue;
                            bad.push_back(Regex::concat(
                                lit1,
                                Regex::concat(Regex::literal(static_cast<SymbolId>(e2)),
                                              union_of(std::move(off)))));
                        }
                    }
                    if (bad.empty()) continue;

                    std::vector<Regex> sequence{Regex::literal(w1), Regex::literal(w2),
                                                Regex::literal(w3)};
                    if (tm.n > 2) sequence.push_back(gap);
                    sequence.push_back(union_of(std::move(bad)));
                    branches.push_back(concat_of(sequence));
                }
            }
        }
    }
    Regex alpha3 = Regex::concat(
        Regex::star(non_accepting),
        Regex::concat(union_of(std::move(branches)), any_star));

    std::vector<Regex> alternatives{alpha1, alpha2, alpha3};

    // An accepting head symbol in the first cell of the second configuration
    // is never derivable (the head starts on cell one and must move), and no
    // window is long enough to check it; rule it out directly.
    if (m.initial != m.accepting) {
        std::vector<Regex> sequence{Regex::literal(tm.hash()), Regex::literal(initial_head)};
        for (std::uint32_t i = 1; i < tm.n; ++i) {
            sequence.push_back(Regex::literal(tm.tape(input[i])));
        }
        sequence.push_back(Regex::literal(tm.hash()));
        sequence.push_back(union_of(accepting_heads));
        sequence.push_back(any_star);
        alternatives.push_back(concat_of(sequence));
    }

    return {union_of(std::move(alternatives)), std::move(alphabet)};
}

bool simulate_tm(const TmSpec& m, const std::vector<std::uint32_t>& input) {
    m.validate();
    if (input.empty()) throw Error("simulate_tm: input must be nonempty");
    for (std::uint32_t a : input) {
        if (a >= m.tape_symbols.size()) throw Error("simulate_tm: input symbol out of range");
    }
    TmInstance tm(m, input);

    auto pack = [&](const Config& c) {
        std::string key;
        key.reserve(tm.n + 2);
        key.push_back(static_cast<char>(c.state));
        key.push_back(static_cast<char>(c.head));
        for (std::uint32_t cell : c.tape) key.push_back(static_cast<char>(cell));
        return key;
    };

    Config start;
    start.state = m.initial;
    start.head = 0;
    start.tape = input;

    std::unordered_set<std::string> seen{pack(start)};
    std::vector<Config> queue{start};
    while (!queue.empty()) {
        Config c = std::move(queue.back());
        queue.pop_back();
        if (c.state == m.accepting) return true;
        if (seen.size() > kTmConfigCap) {
            throw CapacityError("simulate_tm: configuration space too large");
        }
        for (Config& next : successors(tm, c)) {
            if (seen.insert(pack(next)).second) queue.push_back(std::move(next));
        }
    }
    return false;
}

// --------------------------------------------------------------------------
// 3SAT -> unary regex

std::vector<std::uint32_t> first_primes(std::uint32_t count) {
    std::vector<std::uint32_t> primes;
    for (std::uint32_t candidate = 2; primes.size() < count; ++candidate) {
        bool prime = true;
        for (std::uint32_t p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(candidate);
    }
    return primes;
}

GeneratedRegex sat3_to_unary_regex(const Cnf3& f) {
    f.validate();
    Alphabet alphabet({"0"});
    const Regex zero = Regex::literal(0);
    std::vector<std::uint32_t> primes = first_primes(f.variables);

    // A literal over variable k is falsified by length i iff
    //   positive: i != 1 (mod p_k),   negative: i != 0 (mod p_k).
    auto falsified = [&](const Cnf3::Literal& lit, std::uint64_t i) {
        std::uint32_t p = primes[lit.variable - 1];
        return lit.positive ? (i % p != 1) : (i % p != 0);
    };

    std::vector<Regex> pieces;
    for (const Cnf3::Clause& clause : f.clauses) {
        std::uint64_t period = 1;
        for (const Cnf3::Literal& lit : clause) period *= primes[lit.variable - 1];
        if (period > 10'000) {
            throw CapacityError("sat3_to_unary_regex: clause prime product exceeds 10^4");
        }
        Regex tail = Regex::star(repeated(zero, static_cast<std::uint32_t>(period)));
        for (std::uint64_t residue = 0; residue < period; ++residue) {
            bool all_falsified = true;
            for (const Cnf3::Literal& lit : clause) {
                all_falsified = all_falsified && falsified(lit, residue);
            }
            if (!all_falsified) continue;
            pieces.push_back(
                Regex::concat(repeated(zero, static_cast<std::uint32_t>(residue)), tail));
        }
    }
    return {union_of(std::move(pieces)), std::move(alphabet)};
}

bool brute_sat(const Cnf3& f) {
    f.validate();
    if (f.variables > 26) throw CapacityError("brute_sat: too many variables");
    for (std::uint64_t assignment = 0; assignment < (1ull << f.variables); ++assignment) {
        bool satisfied = true;
        for (const Cnf3::Clause& clause : f.clauses) {
            bool clause_true = false;
            for (const Cnf3::Literal& lit : clause) {
                bool value = (assignment >> (lit.variable - 1)) & 1;
                clause_true = clause_true || (value == lit.positive);
            }
            if (!clause_true) {
                satisfied = false;
                break;
            }
        }
        if (satisfied) return true;
    }
    return false;
}

}  // namespace almeq
