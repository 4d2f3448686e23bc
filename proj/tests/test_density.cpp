#include <doctest.h>

#include <sstream>

#include "almeq/analysis.hpp"
#include "almeq/density.hpp"
#include "test_support.hpp"

using namespace almeq;
using namespace almeq::testing;

TEST_CASE("count_words on the worked examples") {
    Alphabet two = Alphabet::from_csv("a1,a2");
    SUBCASE("a1* over two letters: one word per length") {
        Dfa d = dfa_of("a1*", two);
        CHECK(count_words(d, 5) == 1);
        CHECK(Rational(count_words(d, 5), Integer(32)) == Rational(1, 32));
    }
    SUBCASE("the empty language counts zero everywhere") {
        Dfa d = empty_language_dfa(two);
        for (std::uint32_t n = 0; n <= 10; ++n) CHECK(count_words(d, n) == 0);
    }
    SUBCASE("(a|b)* a has 4 words of length 3") {
        // Brute enumeration over the 8 words of length 3 fixes the constant.
        Dfa d = dfa_of("(a|b)*a", Alphabet::from_csv("a,b"));
        CHECK(count_words(d, 3) == 4);
        CHECK(brute_density(d, 3) == Rational(4, 8));
    }
}

TEST_CASE("count_words equals brute-force enumeration on a random corpus") {
    std::mt19937 rng(584);
    for (int round = 0; round < 25; ++round) {
        std::uint32_t arity = 1 + rng() % 3;
        Dfa d = random_dfa(rng, 5, arity);
        std::uint32_t max_len = arity >= 3 ? 8 : 10;
        for (std::uint32_t n = 0; n <= max_len; ++n) {
            Integer total = 1;
            for (std::uint32_t i = 0; i < n; ++i) total *= arity;
            REQUIRE(Rational(count_words(d, n), total) == brute_density(d, n));
        }
    }
}

TEST_CASE("profile on closed-form languages") {
    SUBCASE("the full language is constantly one") {
        DensityProfile p = profile(full_language_dfa(Alphabet::from_csv("a,b")), 50);
        for (std::uint32_t n = 1; n <= 50; ++n) {
            CHECK(p.mu[n] == 1);
            CHECK(p.mu_star[n] == 1);
            CHECK(p.delta[n] == 1);
        }
    }
    SUBCASE("a1* over two letters: mu* has the geometric-sum denominator") {
        DensityProfile p = profile(dfa_of("a1*", Alphabet::from_csv("a1,a2")), 40);
        for (std::uint32_t n = 1; n <= 40; ++n) {
            CHECK(p.mu[n] == Rational(1, Integer(1) << n));
            CHECK(p.mu_star[n] == Rational(n, (Integer(1) << n) - 1));
        }
    }
    SUBCASE("(AA)*: mu alternates and delta converges to one half") {
        DensityProfile p = profile(dfa_of("((a|b)(a|b))*", Alphabet::from_csv("a,b")), 400);
        for (std::uint32_t n = 0; n <= 400; ++n) {
            CHECK(p.mu[n] == (n % 2 == 0 ? 1 : 0));
        }
        CHECK(p.delta[400] == Rational(1, 2));
        CHECK(p.delta[399] == Rational(200, 399));
    }
}

TEST_CASE("profile conventions and exactness invariants") {
    std::mt19937 rng(14);
    for (int round = 0; round < 15; ++round) {
        std::uint32_t arity = 1 + rng() % 3;
        Dfa d = random_dfa(rng, 5, arity);
        DensityProfile p = profile(d, 30);
        CHECK(p.mu_star[0] == 0);
        CHECK(p.delta[0] == 0);
        Integer power = 1;
        Rational running_sum = 0;
        Integer cumulative = 0, cumulative_den = 0;
        for (std::uint32_t n = 0; n <= 30; ++n) {
            CHECK(p.mu[n] >= 0);
            CHECK(p.mu[n] <= 1);
            // mu_n * |A|^n is the exact count.
            CHECK(p.mu[n] * power == p.counts[n]);
            if (n > 0) {
                CHECK(p.delta[n] == running_sum / n);
                CHECK(p.mu_star[n] == Rational(cumulative, cumulative_den));
            }
            running_sum += p.mu[n];
            cumulative += p.counts[n];
            cumulative_den += power;
            power *= arity;
        }
    }
}

TEST_CASE("profile guards its horizon") {
    Dfa d = full_language_dfa(Alphabet::from_csv("a"));
    CHECK_THROWS_AS(profile(d, 0), Error);
    CHECK_THROWS_AS(profile(d, 100, 50), CapacityError);
}

TEST_CASE("residue probe on the worked examples") {
    SUBCASE("(AA)* has period two with clean tails") {
        ResidueProbe probe = residue_probe(dfa_of("((a|b)(a|b))*", Alphabet::from_csv("a,b")), 40);
        REQUIRE(probe.period == 2);
        CHECK_FALSE(probe.empirical_fallback);
        CHECK(probe.tail_estimate[0] == 1);
        CHECK(probe.tail_estimate[1] == 0);
        CHECK(probe.oscillation[0] == 0);
        CHECK(probe.oscillation[1] == 0);
    }
    SUBCASE("the full language has period one") {
        ResidueProbe probe = residue_probe(full_language_dfa(Alphabet::from_csv("a,b")), 20);
        REQUIRE(probe.period == 1);
        CHECK(probe.tail_estimate[0] == 1);
    }
    SUBCASE("the horizon must cover four samples per residue") {
        Dfa d = dfa_of("((a|b)(a|b))*", Alphabet::from_csv("a,b"));  // period 2
        CHECK_THROWS_AS(residue_probe(d, 5), Error);
        CHECK_THROWS_AS(residue_probe(d, 3), Error);
    }
    SUBCASE("a1* over two letters decays through the probe horizon") {
        const std::uint32_t horizon = 24;
        ResidueProbe probe = residue_probe(dfa_of("a1*", Alphabet::from_csv("a1,a2")), horizon);
        REQUIRE(probe.period == 1);
        CHECK(probe.tail_estimate[0] <= Rational(1, Integer(1) << horizon));
    }
}

TEST_CASE("residue probe falls back empirically past the period cap") {
    // Two reachable cycles of lengths 5 and 13: the structural candidate is
    // lcm(5, 13) = 65, one past the cap.
    Dfa d(Alphabet::from_csv("a,b"), 19, 0);
    for (SymbolId s = 0; s < 2; ++s) {
        d.set_transition(0, s, s == 0 ? 1 : 6);
        for (State q = 1; q < 6; ++q) d.set_transition(q, s, q == 5 ? 1 : q + 1);
        for (State q = 6; q < 19; ++q) d.set_transition(q, s, q == 18 ? 6 : q + 1);
    }
    d.accepting[1] = true;
    d.validate();
    ResidueProbe probe = residue_probe(d, 400);
    CHECK(probe.empirical_fallback);
    CHECK(probe.period >= 1);
    CHECK(probe.period <= 64);
    CHECK(probe.tail_estimate.size() == probe.period);
}

TEST_CASE("csv export carries exact numerators and denominators") {
    DensityProfile p = profile(dfa_of("a1*", Alphabet::from_csv("a1,a2")), 3);
    std::ostringstream out;
    write_profile_csv(out, p);
    CHECK(out.str() ==
          "n,count,mu_num,mu_den,mu_star_num,mu_star_den,delta_num,delta_den,mu_float\n"
          "0,1,1,1,0,1,0,1,1\n"
          "1,1,1,2,1,1,1,1,0.5\n"
          "2,1,1,4,2,3,3,4,0.25\n"
          "3,1,1,8,3,7,7,12,0.125\n");
}

TEST_CASE("vanishing-density languages decay to the empirical thresholds") {
    // Small-scale version of the corpus check run by the acceptance suite.
    std::mt19937 rng(90210);
    int checked = 0;
    while (checked < 8) {
        Dfa d = random_dfa(rng, 5, 1 + rng() % 3);
        if (mu_is_nonzero(d).nonzero) continue;
        ++checked;
        DensityProfile p = profile(d, 400);
        CHECK(p.mu[400] <= Rational(1, 1000));
        CHECK(p.mu_star[400] <= Rational(1, 100));
        CHECK(p.delta[400] <= Rational(1, 10));
        for (std::uint32_t n = 301; n <= 400; ++n) {
            REQUIRE(p.delta[n] <= p.delta[n - 1]);
        }
    }
}
