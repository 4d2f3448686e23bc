#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "almeq/brute.hpp"
#include "almeq/json_io.hpp"
#include "test_support.hpp"

using namespace almeq;
using namespace almeq::testing;
using nlohmann::json;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string command = std::string(ALMEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string temp_path(const std::string& name) {
    return std::string("almeq_test_") + name;
}

}  // namespace

TEST_CASE("automaton json round trip decides identically") {
    std::mt19937 rng(808);
    for (int round = 0; round < 20; ++round) {
        Nfa nfa = random_nfa(rng, 5, 2);
        auto loaded = automaton_from_json(nfa_to_json(nfa));
        LanguageInput original = LanguageInput::from_nfa(nfa);
        LanguageInput reloaded =
            std::holds_alternative<Nfa>(loaded)
                ? LanguageInput::from_nfa(std::get<Nfa>(loaded))
                : LanguageInput::from_dfa(std::get<Dfa>(loaded));
        CHECK(equal(original, reloaded).verdict);

        Dfa dfa = determinize(nfa);
        Dfa dfa_back = dfa_from_json(dfa_to_json(dfa));
        CHECK(dfa_back.transitions == dfa.transitions);
        CHECK(dfa_back.accepting == dfa.accepting);
    }
}

TEST_CASE("dfa loader rejects partial tables") {
    json j = {{"alphabet", {"a", "b"}},
              {"states", 2},
              {"initial", 0},
              {"accepting", {1}},
              {"transitions", json::array({{{"from", 0}, {"symbol", "a"}, {"to", {1}}}})}};
    auto loaded = automaton_from_json(j);
    CHECK(std::holds_alternative<Nfa>(loaded));  // not total: it is an NFA
    CHECK_THROWS_AS(dfa_from_json(j), Error);
}

TEST_CASE("decision reports serialize with relation, verdict, witness, stats") {
    Alphabet two = Alphabet::from_csv("a1,a2");
    DecisionReport r = p_equiv(input_of("(a1|a2)*", two), input_of("a1(a1|a2)*", two));
    json j = report_to_json(r, two);
    CHECK(j.at("relation") == "p_equiv");
    CHECK(j.at("verdict") == false);
    CHECK(j.at("witness").at("type") == "mu_witness");
    CHECK(j.at("stats").at("product_states").get<int>() > 0);
}

TEST_CASE("cli: worked p-equivalence examples drive the exit code") {
    CHECK(run_cli("decide p-equiv --alphabet a1,a2,a3 --re1 \"(a1|a2)*\" --re2 0").exit_code == 0);
    CHECK(run_cli("decide p-equiv --alphabet a1,a2 --re1 \"(a1|a2)*\" --re2 0").exit_code == 1);
    CHECK(run_cli("decide equal --alphabet a --re1 \"a*\" --re2 \"a*\"").exit_code == 0);
    CHECK(run_cli("decide zero-one --alphabet a1,a2 --re1 \"a1*\"").exit_code == 0);
}

TEST_CASE("cli: bad inputs exit 2") {
    CHECK(run_cli("decide p-equiv --alphabet a --re1 \"a*\" --re2 \"(b\"").exit_code == 2);
    CHECK(run_cli("decide p-equiv --re1 \"a*\" --re2 \"a\"").exit_code == 2);  // no alphabet
    CHECK(run_cli("decide e-equiv --alphabet a --re1 \"a*\" --re2 \"a\"").exit_code == 2);
    CHECK(run_cli("density --alphabet a --re \"a*\" --horizon 100 --cap-horizon 10").exit_code == 2);
}

TEST_CASE("cli: density emits the documented csv") {
    CommandResult r = run_cli("density --alphabet a1,a2 --re \"a1*\" --horizon 5");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,count,mu_num,mu_den,mu_star_num,mu_star_den,delta_num,delta_den,mu_float");
    while (std::getline(lines, line) && line.rfind("5,", 0) != 0) {
    }
    CHECK(line.rfind("5,1,1,32,", 0) == 0);
}

TEST_CASE("cli: reduce writes the instance and an oracle sidecar") {
    std::string graph = temp_path("graph.json");
    {
        std::ofstream out(graph);
        out << R"({"n":3,"edges":[[1,2],[2,3]]})";
    }
    std::string prefix = temp_path("gap");
    CommandResult r = run_cli("reduce gap --graph " + graph + " --out " + prefix);
    CHECK(r.exit_code == 0);

    std::ifstream sidecar(prefix + ".sidecar.json");
    REQUIRE(sidecar.good());
    json side;
    sidecar >> side;
    CHECK(side.at("oracle") == "bfs");
    CHECK(side.at("reachable") == true);

    std::ifstream instance(prefix + ".dfa.json");
    REQUIRE(instance.good());
    json inst;
    instance >> inst;
    Dfa dfa = dfa_from_json(inst);
    CHECK_FALSE(is_empty(dfa));

    std::remove(graph.c_str());
    std::remove((prefix + ".sidecar.json").c_str());
    std::remove((prefix + ".dfa.json").c_str());
}

TEST_CASE("cli: reduce sat3 rejects an empty clause list") {
    std::string cnf = temp_path("empty.cnf");
    {
        std::ofstream out(cnf);
        out << "p cnf 2 0\n";
    }
    CHECK(run_cli("reduce sat3 --cnf " + cnf + " --out " + temp_path("sat")).exit_code == 2);
    std::remove(cnf.c_str());
}

TEST_CASE("cli: generated tm instance re-parses through the regex file") {
    std::string tm = temp_path("tm.json");
    {
        std::ofstream out(tm);
        json machine = tm_to_json([] {
            TmSpec m;
            m.state_names = {"q0", "qa"};
            m.initial = 0;
            m.accepting = 1;
            m.tape_symbols = {"a", "_"};
            m.blank = 1;
            m.delta.assign(2, std::vector<std::vector<TmSpec::Move>>(2));
            m.delta[0][0].push_back({1, 0, true});
            m.delta[0][1].push_back({1, 1, true});
            return m;
        }());
        out << machine;
    }
    std::string prefix = temp_path("tm_inst");
    CommandResult r = run_cli("reduce tm --tm " + tm + " --input \"a a\" --out " + prefix);
    CHECK(r.exit_code == 0);

    // The emitted file must drive a decision directly.
    CommandResult decide = run_cli("decide p-equiv --re1-file " + prefix +
                                   ".regex.json --re2-file " + prefix + ".regex.json");
    CHECK(decide.exit_code == 0);

    std::ifstream sidecar(prefix + ".sidecar.json");
    json side;
    sidecar >> side;
    CHECK(side.at("oracle") == "tm_simulation");
    CHECK(side.at("accepts") == true);

    std::remove(tm.c_str());
    std::remove((prefix + ".sidecar.json").c_str());
    std::remove((prefix + ".regex.json").c_str());
}

TEST_CASE("cli: unary window algorithm is reachable from the command line") {
    // (00)* as a two-state NFA vs 0*: inequivalent, falsifying length odd.
    Nfa even(Alphabet({"0"}), 2, 0);
    even.add_transition(0, 0, 1);
    even.add_transition(1, 0, 0);
    even.accepting[0] = true;
    Nfa all(Alphabet({"0"}), 1, 0);
    all.add_transition(0, 0, 0);
    all.accepting[0] = true;

    std::string f1 = temp_path("even.json"), f2 = temp_path("all.json");
    {
        std::ofstream o1(f1), o2(f2);
        o1 << nfa_to_json(even);
        o2 << nfa_to_json(all);
    }
    CommandResult r = run_cli("decide p-equiv --nfa1 " + f1 + " --nfa2 " + f2 +
                              " --algorithm unary-window");
    CHECK(r.exit_code == 1);
    json report = json::parse(r.output);
    CHECK(report.at("witness").at("type") == "length");
    CHECK(report.at("witness").at("value").get<std::uint64_t>() % 2 == 1);

    // The flag is rejected outside p-equiv and for non-NFA inputs.
    CHECK(run_cli("decide equal --nfa1 " + f1 + " --nfa2 " + f2 +
                  " --algorithm unary-window")
              .exit_code == 2);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("cli: parse prints the canonical form") {
    CommandResult r = run_cli("parse --alphabet a1,a2,a3 --re \"(a1|a2)*\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "((a1|a2))*\n");
    CHECK(run_cli("parse --alphabet a --re \"xyz\"").exit_code == 2);
}

TEST_CASE("cli: convert emits an automaton that reloads and agrees") {
    std::string out = temp_path("converted.json");
    CommandResult r =
        run_cli("convert --alphabet a,b --re \"(ab)*\" --to dfa --out " + out);
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    json j;
    in >> j;
    Dfa dfa = dfa_from_json(j);
    Alphabet two = Alphabet::from_csv("a,b");
    CHECK(equal(LanguageInput::from_dfa(dfa), input_of("(ab)*", two)).verdict);
    std::remove(out.c_str());
}

TEST_CASE("brute_density enforces its enumeration cap") {
    Dfa d = full_language_dfa(Alphabet::from_csv("a,b,c"));
    CHECK_THROWS_AS(brute_density(d, 20), CapacityError);
}
