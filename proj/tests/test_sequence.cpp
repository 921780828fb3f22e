#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "cobham/sequence.hpp"
#include "helpers.hpp"

using namespace cobham;
using namespace cobham::testing;

int main(int argc, char** argv) {
    parse_seed(argc, argv);
    return doctest::Context(argc, argv).run();
}

TEST_CASE("digit expansion round trip") {
    std::mt19937_64 rng(g_seed);
    for (int m : {2, 3, 5, 10}) {
        for (int i = 0; i < 200; ++i) {
            mpz_class k = rng() % 1000000;
            auto d = digits_lsb(k, m);
            CHECK(value_of_digits(d, m) == k);
            if (!d.empty()) CHECK(d.back() != 0);  // canonical
        }
        CHECK(digits_lsb(0, m).empty());
    }
    CHECK(digits_lsb(13, 2) == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("nine-term prefixes") {
    Automaton fa = corpus("fig1a"), fb = corpus("fig1b");
    int ea[9] = {0, 1, 1, 0, 1, 0, 0, 0, 1};
    int eb[9] = {0, 1, 0, 0, 1, 0, 0, 0, 0};
    for (int k = 0; k < 9; ++k) {
        CHECK(eval_term(fa, k) == (ea[k] ? "1" : "0"));
        CHECK(eval_term(fb, k) == (eb[k] ? "1" : "0"));
    }
    CHECK(eval_term(fa, 13) == "0");
    CHECK(eval_term(fb, 13) == "1");
}

TEST_CASE("walk_of inverts walk size") {
    std::mt19937_64 rng(g_seed + 1);
    for (const char* id : {"fig1a", "fib", "fig4a"}) {
        Automaton a = corpus(id);
        for (int i = 0; i < 100; ++i) {
            mpz_class k = rng() % 100000;
            Walk w = walk_of(a, k);
            CHECK(w.start == a.start);
            CHECK(w.size(a.m) == k);
            CHECK(w.end() == run_digits(a, a.start, digits_lsb(k, a.m)));
        }
    }
}

TEST_CASE("composition size law") {
    // |W1 . W2| = |W1| + m^len(W1) * |W2|
    std::mt19937_64 rng(g_seed + 2);
    Automaton a = corpus("fib");
    for (int i = 0; i < 200; ++i) {
        mpz_class k1 = rng() % 5000;
        Walk w1 = walk_of(a, k1);
        // random continuation from w1's endpoint
        Walk w2;
        w2.start = w1.end();
        int cur = w2.start;
        int len = static_cast<int>(rng() % 6);
        for (int j = 0; j < len; ++j) {
            int d = static_cast<int>(rng() % a.m);
            cur = a.edge(cur, d);
            w2.edges.emplace_back(d, cur);
        }
        Walk w = compose_walks(w1, w2);
        mpz_class mpow;
        mpz_ui_pow_ui(mpow.get_mpz_t(), a.m, w1.length());
        CHECK(w.size(a.m) == w1.size(a.m) + mpow * w2.size(a.m));
        CHECK(w.end() == w2.end());
    }
    // mismatched endpoints refuse to compose
    Walk bad;
    bad.start = a.index_of("z");
    CHECK_THROWS_AS(compose_walks(walk_of(a, 1), bad), domain_error);
}

TEST_CASE("brute-force support of fig1a is the powers of two") {
    Automaton a = corpus("fig1a");
    auto s = support_bruteforce(a, 1000);
    std::vector<mpz_class> expect = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
    CHECK(s.members == expect);
}

TEST_CASE("brute-force budget enforced") {
    Automaton a = corpus("fig1a");
    CHECK_THROWS_AS(support_bruteforce(a, mpz_class(1) << 30), domain_error);
    CHECK_THROWS_AS(support_bruteforce(a, 1000, 100), domain_error);
}
