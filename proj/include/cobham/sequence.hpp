#ifndef COBHAM_SEQUENCE_HPP
#define COBHAM_SEQUENCE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cobham/automaton.hpp"

namespace cobham {

// Base-m digits, least-significant first. Canonical form has no trailing
// zero digit; the value 0 is the empty digit list.
std::vector<int> digits_lsb(const mpz_class& k, int m);
mpz_class value_of_digits(const std::vector<int>& digits, int m);

// A walk through an automaton. Its size is the integer whose base-m digits
// are the edge labels, first edge least significant.
struct Walk {
    int start = 0;
    std::vector<std::pair<int, int>> edges;  // (digit, target)

    int length() const { return static_cast<int>(edges.size()); }
    int end() const { return edges.empty() ? start : edges.back().second; }
    std::vector<int> digits() const;
    mpz_class size(int m) const;

    bool operator==(const Walk&) const = default;
};

// Label reached from start by consuming the digits of k, LSB first.
// k = 0 consumes nothing.
std::string eval_term(const Automaton& a, const mpz_class& k);

// State reached from `from` by consuming the given digit list.
int run_digits(const Automaton& a, int from, const std::vector<int>& digits);

// The unique canonical walk from start with |walk| = k.
Walk walk_of(const Automaton& a, const mpz_class& k);

// Concatenation; size law |w1∘w2| = |w1| + m^l(w1)·|w2|.
Walk compose_walks(const Walk& w1, const Walk& w2);

struct SupportSample {
    mpz_class N;
    std::vector<mpz_class> members;  // sorted, in [1, N]
};

// Exact support in [1, N] by evaluating every term.
SupportSample support_bruteforce(const Automaton& a, const mpz_class& N,
                                 uint64_t budget = uint64_t(1) << 22);

}  // namespace cobham

#endif
