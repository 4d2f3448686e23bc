#include <doctest.h>

#include "almeq/brute.hpp"
#include "almeq/equivalence.hpp"
#include "test_support.hpp"
#include "tm_fixtures.hpp"

using namespace almeq;
using namespace almeq::testing;

namespace {

Digraph random_digraph(std::mt19937& rng, std::uint32_t max_nodes) {
    std::uniform_int_distribution<std::uint32_t> nodes(2, max_nodes);
    Digraph g;
    g.n = nodes(rng);
    std::bernoulli_distribution edge(1.5 / g.n);
    for (std::uint32_t u = 1; u <= g.n; ++u) {
        for (std::uint32_t v = 1; v <= g.n; ++v) {
            if (edge(rng)) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

bool gap_not_almost_empty(const Dfa& d) {
    LanguageInput x = LanguageInput::from_dfa(d);
    LanguageInput none = LanguageInput::from_dfa(empty_language_dfa(d.alphabet));
    return !p_equiv(x, none).verdict;
}

Cnf3 random_cnf3(std::mt19937& rng, std::uint32_t variables, std::uint32_t max_clauses) {
    std::uniform_int_distribution<std::uint32_t> clause_count(1, max_clauses);
    std::uniform_int_distribution<std::uint32_t> variable(1, variables);
    std::bernoulli_distribution sign(0.5);
    Cnf3 f;
    f.variables = variables;
    std::uint32_t clauses = clause_count(rng);
    for (std::uint32_t i = 0; i < clauses; ++i) {
        Cnf3::Clause clause;
        for (auto& lit : clause) lit = {variable(rng), sign(rng)};
        f.clauses.push_back(clause);
    }
    return f;
}

}  // namespace

TEST_CASE("graph accessibility reduction") {
    SUBCASE("edgeless graph: node n unreachable, language almost empty") {
        Digraph g{3, {}};
        CHECK_FALSE(gap_not_almost_empty(gap_to_dfa(g)));
        CHECK_FALSE(bfs_reachable(g));
    }
    SUBCASE("a chain reaches node n") {
        Digraph g{3, {{1, 2}, {2, 3}}};
        CHECK(gap_not_almost_empty(gap_to_dfa(g)));
        CHECK(bfs_reachable(g));
    }
    SUBCASE("random graphs: the verdict tracks BFS reachability") {
        std::mt19937 rng(11);
        for (int round = 0; round < 30; ++round) {
            Digraph g = random_digraph(rng, 6);
            CHECK(gap_not_almost_empty(gap_to_dfa(g)) == bfs_reachable(g));
        }
    }
}

TEST_CASE("zero-one variant of the graph reduction") {
    auto obeys_zero_one = [](const Dfa& d) {
        return zero_one(LanguageInput::from_dfa(d)).verdict;
    };
    SUBCASE("edgeless graph: empty language obeys the law") {
        Digraph g{3, {}};
        DecisionReport r = zero_one(LanguageInput::from_dfa(gap_to_dfa_zero_one(g)));
        CHECK(r.verdict);
        CHECK(*r.almost_empty);
    }
    SUBCASE("a chain breaks the law: positive density but never almost full") {
        Digraph g{3, {{1, 2}, {2, 3}}};
        CHECK_FALSE(obeys_zero_one(gap_to_dfa_zero_one(g)));
    }
    SUBCASE("the escape symbol keeps e-prefixed words out of the language") {
        std::mt19937 rng(12);
        for (int round = 0; round < 10; ++round) {
            Digraph g = random_digraph(rng, 5);
            Dfa d = gap_to_dfa_zero_one(g);
            CHECK(obeys_zero_one(d) ==
                  p_equiv(LanguageInput::from_dfa(d),
                          LanguageInput::from_dfa(empty_language_dfa(d.alphabet)))
                      .verdict);
            for_each_word_upto(d.alphabet, 4, [&](const std::vector<SymbolId>& word) {
                if (!word.empty() && word.front() == 0) CHECK_FALSE(d.accepts(word));
            });
        }
    }
}

// --------------------------------------------------------------------------
// TM -> regex

namespace {

struct TmCase {
    TmSpec machine;
    std::vector<std::uint32_t> input;
};

Dfa compile_instance(const GeneratedRegex& generated) {
    return determinize(compile_to_nfa(generated.regex, generated.alphabet));
}

void check_decoder_agreement(const TmSpec& m, const std::vector<std::uint32_t>& input,
                             std::uint32_t exhaustive_length) {
    GeneratedRegex generated = tm_to_regex(m, input);
    Dfa dfa = compile_instance(generated);
    RunDecoder decoder(m, input);

    // Exhaustively: a string is outside the language iff it decodes as a run.
    for_each_word_upto(generated.alphabet, exhaustive_length,
                       [&](const std::vector<SymbolId>& word) {
                           bool escape = decoder.is_escape(word);
                           bool rejected = !dfa.accepts(word);
                           if (escape != rejected) {
                               CAPTURE(generated.alphabet.render(word));
                               REQUIRE(escape == rejected);
                           }
                       });

    // Directed probes around the acceptance boundary: branch strings, their
    // extensions, and single-symbol corruptions.
    std::mt19937 rng(4242);
    std::uniform_int_distribution<SymbolId> symbol(
        0, static_cast<SymbolId>(generated.alphabet.size() - 1));
    for (std::uint32_t choice = 0; choice < 4; ++choice) {
        for (std::uint32_t steps = 0; steps <= 6; ++steps) {
            std::vector<SymbolId> base = decoder.branch_string(choice, steps);
            for (int variant = 0; variant < 20; ++variant) {
                std::vector<SymbolId> word = base;
                std::uint32_t extra = rng() % 4;
                for (std::uint32_t i = 0; i < extra; ++i) word.push_back(symbol(rng));
                if (variant >= 10 && !word.empty()) {
                    word[rng() % word.size()] = symbol(rng);
                }
                bool escape = decoder.is_escape(word);
                bool rejected = !dfa.accepts(word);
                if (escape != rejected) {
                    CAPTURE(generated.alphabet.render(word));
                    REQUIRE(escape == rejected);
                }
            }
        }
    }
}

}  // namespace

TEST_CASE("tm_to_regex: structure of the generated instance") {
    TmSpec m = tm_first_symbol();
    GeneratedRegex generated = tm_to_regex(m, {0, 1});
    // 1 separator + |A_M| tape symbols + |Q| * |A_M| fused head symbols.
    CHECK(generated.alphabet.size() == 1 + 3 + 2 * 3);
    CHECK(generated.alphabet.token(0) == "#");

    CHECK_THROWS_AS(tm_to_regex(m, {0}), Error);  // input too short
    TmSpec broken = m;
    broken.delta[1][0].push_back({0, 0, true});
    CHECK_THROWS_AS(tm_to_regex(broken, {0, 1}), Error);  // not absorbing
}

TEST_CASE("tm_to_regex verdicts match exact simulation") {
    std::vector<TmCase> cases{
        {tm_accept_all(), {0, 0}},
        {tm_accept_all(), {0, 1, 0}},
        {tm_reject_all(), {0, 0}},
        {tm_reject_all(), {0, 1, 0}},
        {tm_first_symbol(), {0, 1}},   // starts with a: accepted
        {tm_first_symbol(), {1, 0}},   // starts with b: rejected
        {tm_zigzag(), {0, 0}},
        {tm_zigzag(), {0, 1, 0}},
        {tm_guess(), {0, 1}},  // accepted by the q1 branch only
        {tm_guess(), {0, 0}},  // accepted by the q2 branch only
        {tm_guess(), {1, 0}},  // no branch applies
        {tm_guess(), {0, 2}},  // both branches die at the second cell
    };
    for (const TmCase& c : cases) {
        GeneratedRegex generated = tm_to_regex(c.machine, c.input);
        bool machine_accepts = simulate_tm(c.machine, c.input);
        LanguageInput alpha =
            LanguageInput::from_regex(generated.regex, generated.alphabet);
        LanguageInput full =
            LanguageInput::from_dfa(full_language_dfa(generated.alphabet));

        bool is_full = equal(alpha, full).verdict;
        bool almost_full = p_equiv(alpha, full).verdict;
        CHECK(is_full == !machine_accepts);
        CHECK(almost_full == is_full);  // the two collapse on these instances

        // The instance language always contains ## A*, so it is never
        // almost empty.
        Dfa dfa = compile_instance(generated);
        std::mt19937 rng(7);
        std::uniform_int_distribution<SymbolId> symbol(
            0, static_cast<SymbolId>(generated.alphabet.size() - 1));
        for (int round = 0; round < 30; ++round) {
            std::vector<SymbolId> word{0, 0};
            for (std::uint32_t i = rng() % 5; i > 0; --i) word.push_back(symbol(rng));
            CHECK(dfa.accepts(word));
        }
        LanguageInput none =
            LanguageInput::from_dfa(empty_language_dfa(generated.alphabet));
        CHECK_FALSE(p_equiv(alpha, none).verdict);
    }
}

TEST_CASE("tm_to_regex complement is exactly the decoded run language") {
    check_decoder_agreement(tm_accept_all(), {0, 0}, 7);
    check_decoder_agreement(tm_reject_all(), {0, 0}, 7);
    check_decoder_agreement(tm_zigzag(), {0, 0}, 5);
    check_decoder_agreement(tm_first_symbol(), {0, 1}, 5);
    check_decoder_agreement(tm_guess(), {0, 1}, 4);  // nondeterministic branches
}

TEST_CASE("escapes are closed under extension") {
    TmSpec m = tm_accept_all();
    std::vector<std::uint32_t> input{0, 0};
    GeneratedRegex generated = tm_to_regex(m, input);
    Dfa dfa = compile_instance(generated);
    RunDecoder decoder(m, input);

    std::vector<SymbolId> escape = decoder.branch_string(0, 4);
    REQUIRE(decoder.is_escape(escape));
    REQUIRE_FALSE(dfa.accepts(escape));

    std::mt19937 rng(31);
    std::uniform_int_distribution<SymbolId> symbol(
        0, static_cast<SymbolId>(generated.alphabet.size() - 1));
    for (int round = 0; round < 50; ++round) {
        std::vector<SymbolId> word = escape;
        for (std::uint32_t i = 1 + rng() % 6; i > 0; --i) word.push_back(symbol(rng));
        CHECK_FALSE(dfa.accepts(word));
    }
}

// --------------------------------------------------------------------------
// 3SAT -> unary regex

namespace {

bool sat3_reduction_unsat_verdict(const Cnf3& f) {
    GeneratedRegex generated = sat3_to_unary_regex(f);
    LanguageInput e = LanguageInput::from_regex(generated.regex, generated.alphabet);
    LanguageInput all = LanguageInput::from_dfa(full_language_dfa(generated.alphabet));
    bool p_says = p_equiv(e, all).verdict;
    bool eq_says = equal(e, all).verdict;
    CHECK(p_says == eq_says);  // the instance languages are congruence-periodic
    return p_says;
}

}  // namespace

TEST_CASE("3SAT reduction on crafted formulas") {
    SUBCASE("x1 and not-x1 is unsatisfiable: the regex covers 0*") {
        Cnf3 f;
        f.variables = 1;
        f.clauses.push_back({{{1, true}, {1, true}, {1, true}}});
        f.clauses.push_back({{{1, false}, {1, false}, {1, false}}});
        CHECK_FALSE(brute_sat(f));
        CHECK(sat3_reduction_unsat_verdict(f));
    }
    SUBCASE("a single positive clause is satisfiable via length 1") {
        Cnf3 f;
        f.variables = 1;
        f.clauses.push_back({{{1, true}, {1, true}, {1, true}}});
        CHECK(brute_sat(f));
        GeneratedRegex generated = sat3_to_unary_regex(f);
        Dfa dfa = compile_instance(generated);
        CHECK_FALSE(dfa.accepts(unary_word(1)));  // 0^1 encodes x1 = true
        CHECK_FALSE(is_universal(dfa));
    }
    SUBCASE("prime products above the cap are rejected") {
        Cnf3 f;
        f.variables = 9;  // p_9 = 23; 23^3 > 10^4
        f.clauses.push_back({{{9, true}, {9, true}, {9, true}}});
        CHECK_THROWS_AS(sat3_to_unary_regex(f), CapacityError);
    }
}

TEST_CASE("3SAT reduction agrees with brute force on random formulas") {
    std::mt19937 rng(271828);
    int satisfiable = 0;
    for (int round = 0; round < 25; ++round) {
        Cnf3 f = random_cnf3(rng, 3, 14);
        bool sat = brute_sat(f);
        satisfiable += sat;
        CHECK(sat3_reduction_unsat_verdict(f) == !sat);
    }
    CHECK(satisfiable > 0);
    CHECK(satisfiable < 25);
}

TEST_CASE("reduction oracles on their trivial cases") {
    CHECK_FALSE(bfs_reachable(Digraph{3, {}}));
    CHECK(simulate_tm(tm_accept_all(), {0, 0}));
    Cnf3 f;
    f.variables = 1;
    f.clauses.push_back({{{1, true}, {1, true}, {1, true}}});
    f.clauses.push_back({{{1, false}, {1, false}, {1, false}}});
    CHECK_FALSE(brute_sat(f));
}
