#ifndef COBHAM_SPECTRAL_HPP
#define COBHAM_SPECTRAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cobham/automaton.hpp"
#include "cobham/poly.hpp"
#include "cobham/sequence.hpp"

namespace cobham {

// Square matrix of exact edge counts over a state subset.
struct CountMatrix {
    std::vector<int> index;  // position -> state index
    std::vector<mpz_class> a;  // row-major, n x n

    int n() const { return static_cast<int>(index.size()); }
    const mpz_class& at(int i, int j) const { return a[i * n() + j]; }
    mpz_class& at(int i, int j) { return a[i * n() + j]; }
    int position_of(int state) const;

    CountMatrix multiply(const CountMatrix& other) const;
    CountMatrix power(unsigned long e) const;
    mpz_class max_row_sum() const;
};

// D_v: the induced subdigraph on states mutually reachable with v.
struct StronglyConnectedSubdigraph {
    int anchor;
    CountMatrix matrix;  // matrix.index holds the member states
};

// Exact Omega_n(u, v), or Omega_{<=n}(u, v) when cumulative.
mpz_class count_walks(const Automaton& a, int u, int v, int n, bool cumulative = false,
                      int budget = 4096);

// Full table Omega_n(v, v) for n = 0..n_max, exact.
std::vector<mpz_class> closed_walk_table(const Automaton& a, int v, int n_max);

StronglyConnectedSubdigraph strongly_connected_subdigraph(const Automaton& a, int v);

// Exact monic characteristic polynomial (Faddeev-LeVerrier).
ZPoly char_poly(const CountMatrix& m);

struct RhoResult {
    ZPoly poly;
    RootInterval interval;     // certified enclosure of the dominant root
    double power_iteration;    // floating cross-check on (A + I)
};

// Certified spectral radius of a strongly connected subdigraph with at least
// one edge. A trivial subdigraph (no cycle) yields exact zero.
RhoResult spectral_radius(const StronglyConnectedSubdigraph& sub);

struct PerronCertificate {
    bool ok = false;
    unsigned long p = 0;       // smallest power making rho^p Perron-certifiable
    ZPoly poly;                // squarefree integer polynomial with rho^p as dominant root
    double dominant = 0;       // float value of rho^p
    std::vector<double> root_gaps;  // |rho^p| - |other root|, per non-dominant root
    std::vector<double> eigvec;     // positive dominant eigenvector of the SCC matrix
    double residual = 0;            // ||A x - rho x||_inf / ||x||_inf
    std::string note;
};

PerronCertificate perron_certificate(const StronglyConnectedSubdigraph& sub,
                                     unsigned long period_cap = 64);

struct SccSpectral {
    std::vector<int> members;
    ZPoly poly;
    RootInterval rho;
    double rho_float;
    PerronCertificate perron;
};

struct SpectralReport {
    double B = 0;
    double beta = 0;
    mpq_class beta_hi;  // certified upper end of max rho
    std::vector<SccSpectral> sccs;
};

// Requires a non-sparse automaton.
SpectralReport growth_exponent(const Automaton& a);

struct OmegaBoundReport {
    bool upper_ok = false;   // Omega_n(v) <= rho_hi^n for all n <= n_max
    bool lower_ok = false;   // fitted windowed lower bound holds
    int window = 0;          // D = max shortest-return distance
    double fitted_c = 0;
    int n_max = 0;
};

OmegaBoundReport omega_bound_check(const Automaton& a, int v, int n_max);

struct SupRatioReport {
    double sup_ratio;     // max over n <= n_max of log_m(Omega_n(v)) / n
    double log_rho;       // float log_m rho
    double log_rho_hi;    // log_m of the certified upper end
    bool within_tolerance;  // sup in [log_rho - 0.05, log_rho_hi] (slack applies at n_max >= 200)
};

SupRatioReport sup_ratio_check(const Automaton& a, int v, int n_max);

struct WitnessFamily {
    int vertex;
    Walk w_start, w_one, w_two, w_end;
    int z, x, y;  // lengths of w_start, w_one/w_two, w_end
    int k;
    std::vector<mpz_class> members;  // 2^k distinct support elements
};

WitnessFamily witness_family(const Automaton& a, int v, int k, uint64_t budget = 1 << 20);

struct WkResult {
    mpz_class value;
    bool bound_ok;  // value <= K * k^(s-1) * rho_hi^k with K = (rho/(rho-1))^s * 2^s
};

// W_k = sum over k_1+...+k_s = k of prod Omega_{<=k_i}(v_i), exact.
WkResult wk_diagnostic(const Automaton& a, const std::vector<int>& tied, int k, int budget = 4096);

// log_m of an exact positive integer, via base-2 mantissa/exponent.
double log_base_m(const mpz_class& value, int m);
double log_base_m(const mpq_class& value, int m);

}  // namespace cobham

#endif
