#ifndef COBHAM_COUNTING_HPP
#define COBHAM_COUNTING_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cobham/automaton.hpp"

namespace cobham {

enum class CountMethod { Dp, Brute, Matrix };

std::string to_string(CountMethod m);

struct CountResult {
    mpz_class N;
    mpz_class count;
    CountMethod method = CountMethod::Dp;
};

// Exact #{k in [1, N] : a_k != 0}. The DP handles arbitrary N; the matrix
// method applies only at N = m^k - 1; brute force walks every term.
CountResult count_support_exact(const Automaton& a, const mpz_class& N,
                                CountMethod method = CountMethod::Dp);

struct GrowthRow {
    int k;
    mpz_class count;   // #E at N = m^k - 1
    double log_ratio;  // log_m(count) / k, -inf when count = 0
};

using GrowthTable = std::vector<GrowthRow>;

// Counts at N = m^k - 1 for k = 1..k_max by cumulative walk counting.
GrowthTable count_power_table(const Automaton& a, int k_max, int budget = 256);

struct GrowthReport {
    GrowthTable table;
    bool sparse;
    // non-sparse: least-squares slope of log_m(count) vs k over the top half
    // sparse: least-squares slope of log(count) vs log(k), estimating rank
    double fitted_exponent;
};

GrowthReport growth_report(const Automaton& a, int k_max);

}  // namespace cobham

#endif
