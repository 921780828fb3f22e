#include "cobham/sequence.hpp"

namespace cobham {

std::vector<int> digits_lsb(const mpz_class& k, int m) {
    std::vector<int> out;
    mpz_class v = k;
    while (v > 0) {
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), m);
        out.push_back(static_cast<int>(r.get_ui()));
        v = q;
    }
    return out;
}

mpz_class value_of_digits(const std::vector<int>& digits, int m) {
    mpz_class v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v *= m;
        v += *it;
    }
    return v;
}

std::vector<int> Walk::digits() const {
    std::vector<int> out;
    out.reserve(edges.size());
    for (const auto& [d, t] : edges) out.push_back(d);
    return out;
}

mpz_class Walk::size(int m) const { return value_of_digits(digits(), m); }

int run_digits(const Automaton& a, int from, const std::vector<int>& digits) {
    int s = from;
    for (int d : digits) s = a.edge(s, d);
    return s;
}

std::string eval_term(const Automaton& a, const mpz_class& k) {
    return a.states[run_digits(a, a.start, digits_lsb(k, a.m))].output;
}

Walk walk_of(const Automaton& a, const mpz_class& k) {
    Walk w;
    w.start = a.start;
    int s = a.start;
    for (int d : digits_lsb(k, a.m)) {
        s = a.edge(s, d);
        w.edges.push_back({d, s});
    }
    return w;
}

Walk compose_walks(const Walk& w1, const Walk& w2) {
    if (w1.end() != w2.start)
        throw domain_error("compose_walks: endpoint mismatch");
    Walk w = w1;
    w.edges.insert(w.edges.end(), w2.edges.begin(), w2.edges.end());
    return w;
}

SupportSample support_bruteforce(const Automaton& a, const mpz_class& N, uint64_t budget) {
    if (N > budget) throw domain_error("support_bruteforce: budget exceeded");
    SupportSample s;
    s.N = N;
    uint64_t n = N.get_ui();
    // incremental digit counter, LSB first; avoids re-deriving digits per k
    std::vector<int> digits;
    for (uint64_t k = 1; k <= n; ++k) {
        size_t i = 0;
        while (i < digits.size() && digits[i] == a.m - 1) digits[i++] = 0;
        if (i == digits.size())
            digits.push_back(1);
        else
            ++digits[i];
        if (a.nonzero(run_digits(a, a.start, digits))) s.members.push_back(mpz_class(k));
    }
    return s;
}

}  // namespace cobham
