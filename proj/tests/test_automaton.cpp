#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "cobham/automaton.hpp"
#include "helpers.hpp"

using namespace cobham;
using namespace cobham::testing;

int main(int argc, char** argv) {
    parse_seed(argc, argv);
    return doctest::Context(argc, argv).run();
}

TEST_CASE("parse and serialize round trip") {
    for (const char* id : {"fig1a", "fig1b", "fig4a", "fig4b", "fib"}) {
        Automaton a = corpus(id);
        Automaton b = parse_automaton(serialize_automaton(a));
        CHECK(a == b);
    }
}

TEST_CASE("corpus validates") {
    for (const char* id : {"fig1a", "fig1b", "fig4a", "fig4b", "fib"}) {
        auto r = validate(corpus(id));
        CHECK(r.ok);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_automaton("m 1\nstart a\nstate a 0\ntrans a 0 a\n"), parse_error);
    try {
        parse_automaton("m 2\nstart a\nstate a 0\nstate a 1\n");
        FAIL("duplicate state accepted");
    } catch (const parse_error& e) {
        CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(parse_automaton("m 2\nstart a\nstate a 0\ntrans a 0 b\n"), parse_error);
    CHECK_THROWS_AS(parse_automaton("m 2\nstate a 0\ntrans a 0 a\ntrans a 1 a\n"), parse_error);
    CHECK_THROWS_AS(
        parse_automaton("m 2\nstart a\nstate a 0\ntrans a 0 a\ntrans a 0 a\ntrans a 1 a\n"),
        parse_error);
    CHECK_THROWS_AS(parse_automaton("m 2\nstart a\nstate a 0\ntrans a 5 a\ntrans a 1 a\n"),
                    parse_error);
}

TEST_CASE("validate flags rule violations") {
    Automaton a = corpus("fig1a");

    SUBCASE("missing transition") {
        a.set_edge(1, 0, -1);
        CHECK_FALSE(validate(a).ok);
    }
    SUBCASE("leading-zero invariance") {
        a.set_edge(0, 0, 1);  // P --0--> Q but outputs differ
        auto r = validate(a);
        REQUIRE_FALSE(r.ok);
        bool found = false;
        for (const auto& v : r.violations) found |= v.rule == "leading-zero-invariance";
        CHECK(found);
    }
    SUBCASE("accessibility") {
        a.states.push_back({"X", "0"});
        a.transitions.push_back(3);
        a.transitions.push_back(3);
        auto r = validate(a);
        REQUIRE_FALSE(r.ok);
        bool found = false;
        for (const auto& v : r.violations) found |= v.rule == "accessibility";
        CHECK(found);
    }
    SUBCASE("duplicate names") {
        a.states[2].name = "P";
        CHECK_FALSE(validate(a).ok);
    }
}

TEST_CASE("random valid automata validate and round trip") {
    std::mt19937_64 rng(g_seed);
    for (int i = 0; i < 100; ++i) {
        Automaton a = random_valid_automaton(rng);
        auto r = validate(a);
        REQUIRE(r.ok);
        CHECK(parse_automaton(serialize_automaton(a)) == a);
    }
}

TEST_CASE("same_automaton ignores declaration order") {
    Automaton a = corpus("fig1b");
    std::string text =
        "m 2\nstart A\nstate D 0\nstate E 0\nstate C 1\nstate B 1\nstate A2 0\nstate A 0\n"
        "trans A 0 A2\ntrans A 1 B\ntrans A2 0 A\ntrans A2 1 D\ntrans B 0 C\ntrans B 1 D\n"
        "trans C 0 B\ntrans C 1 E\ntrans D 0 D\ntrans D 1 D\ntrans E 0 D\ntrans E 1 C\n";
    Automaton b = parse_automaton(text);
    CHECK(same_automaton(a, b));
    b.set_edge(b.index_of("E"), 1, b.index_of("D"));
    CHECK_FALSE(same_automaton(a, b));
}
