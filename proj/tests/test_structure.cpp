#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <algorithm>

#include "cobham/structure.hpp"
#include "helpers.hpp"

using namespace cobham;
using namespace cobham::testing;

int main(int argc, char** argv) {
    parse_seed(argc, argv);
    return doctest::Context(argc, argv).run();
}

namespace {

std::set<std::string> names(const Automaton& a, const std::set<int>& s) {
    std::set<std::string> out;
    for (int v : s) out.insert(a.states[v].name);
    return out;
}

}  // namespace

TEST_CASE("fig1b component structure") {
    Automaton a = corpus("fig1b");
    auto scc = scc_decomposition(a);
    REQUIRE(scc.count() == 3);
    std::vector<std::set<std::string>> comps;
    for (const auto& mem : scc.members) {
        std::set<std::string> c;
        for (int v : mem) c.insert(a.states[v].name);
        comps.push_back(c);
    }
    CHECK(std::count(comps.begin(), comps.end(), std::set<std::string>{"A", "A2"}) == 1);
    CHECK(std::count(comps.begin(), comps.end(), std::set<std::string>{"B", "C", "E"}) == 1);
    CHECK(std::count(comps.begin(), comps.end(), std::set<std::string>{"D"}) == 1);
    for (int c = 0; c < scc.count(); ++c) CHECK(scc.nontrivial[c]);
    // condensation acyclic: every edge goes between distinct components
    for (auto [u, v] : scc.dag_edges) CHECK(u != v);
}

TEST_CASE("tied sets of the corpus") {
    CHECK(tied_vertices(corpus("fig1a")).empty());
    CHECK(names(corpus("fig1b"), tied_vertices(corpus("fig1b"))) ==
          std::set<std::string>{"B", "C", "E"});
    CHECK(names(corpus("fig4a"), tied_vertices(corpus("fig4a"))) ==
          std::set<std::string>{"T", "U"});
    CHECK(names(corpus("fib"), tied_vertices(corpus("fib"))) == std::set<std::string>{"u", "w"});
    CHECK(tied_vertices(corpus("fig4b")).size() == 2);
}

TEST_CASE("verdicts") {
    CHECK(classify_sparse(corpus("fig1a")).verdict == Verdict::Sparse);
    CHECK(classify_sparse(corpus("fig1b")).verdict == Verdict::NonSparse);
    CHECK(classify_sparse(corpus("fig4a")).verdict == Verdict::NonSparse);
    CHECK(classify_sparse(corpus("fig4b")).verdict == Verdict::NonSparse);
    CHECK(classify_sparse(corpus("fib")).verdict == Verdict::NonSparse);
}

TEST_CASE("case classification of fig1a") {
    Automaton a = corpus("fig1a");
    auto cases = classify_cases(a);
    // P and Q sit on single self-loop cycles reaching nonzero: type-iii-like;
    // R loops with only zero output downstream
    CHECK(cases.size() == 3);
    CHECK(to_string(cases[a.index_of("R")]) == "case-i");
    CHECK_THROWS_AS(classify_cases(corpus("fig1b")), domain_error);
}

TEST_CASE("structural tied criterion agrees with the walk-counting oracle") {
    std::mt19937_64 rng(g_seed);
    for (int i = 0; i < 200; ++i) {
        Automaton a = random_valid_automaton(rng);
        auto tied = tied_vertices(a);
        int n_max = 2 * a.m * a.size();
        for (int v = 0; v < a.size(); ++v)
            CHECK(tied.count(v) == static_cast<size_t>(tied_oracle(a, v, n_max)));
    }
}

TEST_CASE("tied-free generator really is tied-free") {
    std::mt19937_64 rng(g_seed + 7);
    for (int i = 0; i < 100; ++i) {
        Automaton a = random_tied_free_automaton(rng);
        REQUIRE(validate(a).ok);
        CHECK(tied_vertices(a).empty());
        CHECK_NOTHROW(classify_cases(a));
    }
}
