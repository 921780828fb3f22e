#include "cobham/counting.hpp"

#include <cmath>
#include <limits>

#include "cobham/sequence.hpp"
#include "cobham/spectral.hpp"
#include "cobham/structure.hpp"

namespace cobham {

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Dp: return "dp";
        case CountMethod::Brute: return "brute";
        case CountMethod::Matrix: return "matrix";
    }
    return "?";
}

namespace {

// numbers with exactly j digits (leading digit nonzero) landing on a nonzero
// output, accumulated incrementally: vec holds counts of arbitrary
// length-(j-1) digit strings per end state
struct ShortLengthCounter {
    const Automaton& a;
    std::vector<mpz_class> vec;  // strings of length `len` per end state
    int len = 0;

    explicit ShortLengthCounter(const Automaton& a_) : a(a_), vec(a_.size(), 0) {
        vec[a.start] = 1;
    }

    // contribution of numbers with exactly len+1 digits, then advance
    mpz_class next_length() {
        std::vector<mpz_class> canonical(a.size(), 0), all(a.size(), 0);
        for (int s = 0; s < a.size(); ++s) {
            if (vec[s] == 0) continue;
            for (int d = 0; d < a.m; ++d) {
                all[a.edge(s, d)] += vec[s];
                if (d > 0) canonical[a.edge(s, d)] += vec[s];
            }
        }
        mpz_class total = 0;
        for (int s = 0; s < a.size(); ++s)
            if (a.nonzero(s)) total += canonical[s];
        vec = std::move(all);
        ++len;
        return total;
    }
};

mpz_class count_dp(const Automaton& a, const mpz_class& N) {
    auto d = digits_lsb(N, a.m);
    const int L = static_cast<int>(d.size());
    mpz_class total = 0;

    ShortLengthCounter shorter(a);
    for (int j = 1; j < L; ++j) total += shorter.next_length();

    // exactly L digits, value <= N: compare LSB-first; equal-length order is
    // settled by the most significant differing digit, which the three-way
    // status recurrence carries up from the low side
    enum { EQ = 0, LESS = 1, GREATER = 2 };
    std::vector<mpz_class> dp(static_cast<size_t>(a.size()) * 3, 0);
    dp[a.start * 3 + EQ] = 1;
    for (int t = 0; t < L; ++t) {
        std::vector<mpz_class> next(static_cast<size_t>(a.size()) * 3, 0);
        for (int s = 0; s < a.size(); ++s)
            for (int c = 0; c < 3; ++c) {
                const mpz_class& cur = dp[s * 3 + c];
                if (cur == 0) continue;
                for (int b = 0; b < a.m; ++b) {
                    if (t == L - 1 && b == 0) continue;  // canonical leading digit
                    int nc = b < d[t] ? LESS : (b > d[t] ? GREATER : c);
                    next[a.edge(s, b) * 3 + nc] += cur;
                }
            }
        dp = std::move(next);
    }
    for (int s = 0; s < a.size(); ++s)
        if (a.nonzero(s)) total += dp[s * 3 + EQ] + dp[s * 3 + LESS];
    return total;
}

}  // namespace

CountResult count_support_exact(const Automaton& a, const mpz_class& N, CountMethod method) {
    CountResult r;
    r.N = N;
    r.method = method;
    if (N <= 0) {
        r.count = 0;
        return r;
    }
    switch (method) {
        case CountMethod::Dp:
            r.count = count_dp(a, N);
            break;
        case CountMethod::Brute: {
            r.count = static_cast<long>(support_bruteforce(a, N).members.size());
            break;
        }
        case CountMethod::Matrix: {
            // only valid at N = m^k - 1
            auto digits = digits_lsb(N, a.m);
            for (int dg : digits)
                if (dg != a.m - 1)
                    throw domain_error("matrix method requires N = m^k - 1");
            ShortLengthCounter counter(a);
            mpz_class total = 0;
            for (size_t j = 0; j < digits.size(); ++j) total += counter.next_length();
            r.count = total;
            break;
        }
    }
    return r;
}

GrowthTable count_power_table(const Automaton& a, int k_max, int budget) {
    if (k_max > budget) throw domain_error("count_power_table: budget exceeded");
    GrowthTable table;
    ShortLengthCounter counter(a);
    mpz_class total = 0;
    for (int k = 1; k <= k_max; ++k) {
        total += counter.next_length();
        GrowthRow row;
        row.k = k;
        row.count = total;
        row.log_ratio = total > 0 ? log_base_m(total, a.m) / k
                                  : -std::numeric_limits<double>::infinity();
        table.push_back(row);
    }
    return table;
}

GrowthReport growth_report(const Automaton& a, int k_max) {
    if (k_max < 10) throw domain_error("growth_report: k_max must be at least 10");
    GrowthReport rep;
    rep.table = count_power_table(a, k_max);
    rep.sparse = tied_vertices(a).empty();

    // least squares over the top half of rows with nonzero counts
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rep.table) {
        if (row.k <= k_max / 2 || row.count == 0) continue;
        double x, y;
        if (rep.sparse) {
            x = std::log(static_cast<double>(row.k));
            y = std::log(mpz_get_d(row.count.get_mpz_t()));
        } else {
            x = row.k;
            y = log_base_m(row.count, a.m);
        }
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    rep.fitted_exponent =
        n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    return rep;
}

}  // namespace cobham
