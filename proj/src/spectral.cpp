#include "cobham/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "cobham/structure.hpp"

namespace cobham {

int CountMatrix::position_of(int state) const {
    for (int i = 0; i < n(); ++i)
        if (index[i] == state) return i;
    return -1;
}

CountMatrix CountMatrix::multiply(const CountMatrix& other) const {
    CountMatrix r;
    r.index = index;
    r.a.assign(static_cast<size_t>(n()) * n(), 0);
    for (int i = 0; i < n(); ++i)
        for (int k = 0; k < n(); ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n(); ++j) r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

CountMatrix CountMatrix::power(unsigned long e) const {
    CountMatrix result;
    result.index = index;
    result.a.assign(static_cast<size_t>(n()) * n(), 0);
    for (int i = 0; i < n(); ++i) result.at(i, i) = 1;
    CountMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result.multiply(base);
        e >>= 1;
        if (e) base = base.multiply(base);
    }
    return result;
}

mpz_class CountMatrix::max_row_sum() const {
    mpz_class best = 0;
    for (int i = 0; i < n(); ++i) {
        mpz_class s = 0;
        for (int j = 0; j < n(); ++j) s += at(i, j);
        best = std::max(best, s);
    }
    return best;
}

mpz_class count_walks(const Automaton& a, int u, int v, int n, bool cumulative, int budget) {
    if (n > budget) throw domain_error("count_walks: budget exceeded");
    const int size = a.size();
    std::vector<mpz_class> row(size, 0);
    row[u] = 1;
    mpz_class total = row[v];
    for (int step = 1; step <= n; ++step) {
        std::vector<mpz_class> next(size, 0);
        for (int s = 0; s < size; ++s) {
            if (row[s] == 0) continue;
            for (int d = 0; d < a.m; ++d) next[a.edge(s, d)] += row[s];
        }
        row = std::move(next);
        total += row[v];
    }
    return cumulative ? total : row[v];
}

std::vector<mpz_class> closed_walk_table(const Automaton& a, int v, int n_max) {
    const int size = a.size();
    std::vector<mpz_class> row(size, 0), out;
    row[v] = 1;
    out.push_back(1);
    for (int step = 1; step <= n_max; ++step) {
        std::vector<mpz_class> next(size, 0);
        for (int s = 0; s < size; ++s) {
            if (row[s] == 0) continue;
            for (int d = 0; d < a.m; ++d) next[a.edge(s, d)] += row[s];
        }
        row = std::move(next);
        out.push_back(row[v]);
    }
    return out;
}

StronglyConnectedSubdigraph strongly_connected_subdigraph(const Automaton& a, int v) {
    const int n = a.size();
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<int> work{v};
    fwd[v] = true;
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (int d = 0; d < a.m; ++d) {
            int t = a.edge(s, d);
            if (!fwd[t]) {
                fwd[t] = true;
                work.push_back(t);
            }
        }
    }
    std::vector<std::vector<int>> rev(n);
    for (int s = 0; s < n; ++s)
        for (int d = 0; d < a.m; ++d) rev[a.edge(s, d)].push_back(s);
    work = {v};
    bwd[v] = true;
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (int t : rev[s])
            if (!bwd[t]) {
                bwd[t] = true;
                work.push_back(t);
            }
    }
    StronglyConnectedSubdigraph sub;
    sub.anchor = v;
    for (int s = 0; s < n; ++s)
        if (fwd[s] && bwd[s]) sub.matrix.index.push_back(s);
    const int k = sub.matrix.n();
    sub.matrix.a.assign(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int d = 0; d < a.m; ++d) {
            int j = sub.matrix.position_of(a.edge(sub.matrix.index[i], d));
            if (j != -1) sub.matrix.at(i, j) += 1;
        }
    return sub;
}

ZPoly char_poly(const CountMatrix& m) {
    const int n = m.n();
    ZPoly coeffs(n + 1, 0);
    coeffs[n] = 1;
    if (n == 0) return coeffs;
    // Faddeev-LeVerrier; every division is exact over the integers
    CountMatrix M = m;
    mpz_class c;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M <- A * (M + c I)
            CountMatrix shifted = M;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c;
            M = m.multiply(shifted);
        }
        mpz_class trace = 0;
        for (int i = 0; i < n; ++i) trace += M.at(i, i);
        mpz_class num = -trace;
        mpz_divexact_ui(c.get_mpz_t(), num.get_mpz_t(), k);
        coeffs[n - k] = c;
    }
    return coeffs;
}

namespace {

// Dominant eigenvalue estimate of A via power iteration on (A + I); the
// shift handles periodic matrices. Returns (rho, eigvec, residual).
struct PowerIterResult {
    double rho = 0;
    std::vector<double> vec;
    double residual = 0;
};

PowerIterResult power_iteration(const CountMatrix& m, double tol = 1e-9, int max_iter = 200000) {
    const int n = m.n();
    std::vector<double> x(n, 1.0), ax(n), sx(n);
    std::vector<std::vector<double>> A(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = m.at(i, j).get_d();
    double rho = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        double norm = 0;
        for (int i = 0; i < n; ++i) {
            double s = x[i];
            for (int j = 0; j < n; ++j) s += A[i][j] * x[j];
            sx[i] = s;
            norm = std::max(norm, std::abs(s));
        }
        for (int i = 0; i < n; ++i) sx[i] /= norm;
        double prev = rho;
        // Rayleigh-style estimate from the shifted product
        double num = 0, den = 0;
        for (int i = 0; i < n; ++i) {
            num += sx[i] * x[i];
            den += x[i] * x[i];
        }
        (void)num;
        (void)den;
        rho = norm - 1.0;
        x = sx;
        if (iter > 8 && std::abs(rho - prev) <= tol * std::max(1.0, std::abs(rho))) break;
    }
    PowerIterResult r;
    r.rho = rho;
    r.vec = x;
    double xmax = 0, res = 0;
    for (int i = 0; i < n; ++i) xmax = std::max(xmax, std::abs(x[i]));
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += A[i][j] * x[j];
        res = std::max(res, std::abs(s - rho * x[i]));
    }
    r.residual = xmax > 0 ? res / xmax : 0;
    return r;
}

bool has_edge(const CountMatrix& m) {
    for (const auto& e : m.a)
        if (e != 0) return true;
    return false;
}

mpq_class qpow(const mpq_class& b, unsigned long e) {
    mpq_class r = 1, base = b;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

}  // namespace

RhoResult spectral_radius(const StronglyConnectedSubdigraph& sub) {
    RhoResult r;
    r.poly = char_poly(sub.matrix);
    if (!has_edge(sub.matrix)) {
        r.interval = {mpq_class(0), mpq_class(0)};
        r.power_iteration = 0;
        return r;
    }
    mpq_class upper = mpq_class(sub.matrix.max_row_sum()) + 1;
    r.interval = largest_real_root(r.poly, upper, 1e-12);
    r.power_iteration = power_iteration(sub.matrix).rho;
    return r;
}

SpectralReport growth_exponent(const Automaton& a) {
    auto report = classify_sparse(a);
    if (report.verdict == Verdict::Sparse)
        throw domain_error("growth_exponent: automaton is sparse; B is undefined");
    SpectralReport out;
    std::set<int> seen_components;
    out.beta_hi = 0;
    for (int v : report.tied) {
        int c = report.scc.component_of[v];
        if (!seen_components.insert(c).second) continue;
        auto sub = strongly_connected_subdigraph(a, v);
        auto rho = spectral_radius(sub);
        SccSpectral s;
        s.members = sub.matrix.index;
        s.poly = rho.poly;
        s.rho = rho.interval;
        s.rho_float = rho.interval.mid();
        s.perron = perron_certificate(sub);
        if (s.rho.hi > out.beta_hi) {
            out.beta_hi = s.rho.hi;
            out.beta = s.rho_float;
        }
        out.sccs.push_back(std::move(s));
    }
    out.B = std::log(out.beta) / std::log(static_cast<double>(a.m));
    return out;
}

PerronCertificate perron_certificate(const StronglyConnectedSubdigraph& sub,
                                     unsigned long period_cap) {
    PerronCertificate cert;
    auto rho = spectral_radius(sub);
    if (!(rho.interval.lo > 1)) {
        throw domain_error("perron_certificate: spectral radius not above 1");
    }
    for (unsigned long p = 1; p <= period_cap; ++p) {
        CountMatrix ap = sub.matrix.power(p);
        ZPoly q = to_primitive_zpoly(squarefree_part(monic(to_qpoly(char_poly(ap)))));
        mpq_class dom_lo = qpow(rho.interval.lo, p);
        // thresholds just below the certified dominant root
        for (int shift : {24, 32, 40, 48}) {
            mpq_class c = dom_lo * (mpq_class(1) - mpq_class(1, mpz_class(1) << shift));
            int above = count_roots_modulus_above(q, c);
            if (above == 1) {
                cert.ok = true;
                cert.p = p;
                cert.poly = q;
                cert.dominant = qpow(rho.interval.hi, p).get_d();
                auto roots = numeric_roots(q);
                for (const auto& z : roots) {
                    if (std::abs(z.real() - cert.dominant) < 1e-6 * std::max(1.0, cert.dominant) &&
                        std::abs(z.imag()) < 1e-6)
                        continue;
                    cert.root_gaps.push_back(cert.dominant - std::abs(z));
                }
                break;
            }
        }
        if (cert.ok) break;
    }
    auto pi = power_iteration(sub.matrix);
    cert.eigvec = pi.vec;
    cert.residual = pi.residual;
    if (!cert.ok)
        cert.note = "no power up to cap yielded a certified dominant root";
    else if (pi.residual > 1e-9)
        cert.note = "eigenvector residual above tolerance";
    return cert;
}

OmegaBoundReport omega_bound_check(const Automaton& a, int v, int n_max) {
    if (!tied_vertices(a).contains(v))
        throw domain_error("omega_bound_check: vertex is not tied");
    OmegaBoundReport rep;
    rep.n_max = n_max;
    auto sub = strongly_connected_subdigraph(a, v);
    auto rho = spectral_radius(sub);
    auto omega = closed_walk_table(a, v, n_max);

    // D = max over members of the shortest-return distance to v
    const int k = sub.matrix.n();
    int vpos = sub.matrix.position_of(v);
    std::vector<int> dist(k, -1);
    std::queue<int> q;
    dist[vpos] = 0;
    q.push(vpos);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < k; ++j)
            if (sub.matrix.at(j, i) > 0 && dist[j] == -1) {
                dist[j] = dist[i] + 1;
                q.push(j);
            }
    }
    int window = 0;
    for (int i = 0; i < k; ++i) window = std::max(window, dist[i]);
    rep.window = window;

    std::vector<mpq_class> hi_pow(n_max + 1), lo_pow(n_max + 1);
    hi_pow[0] = lo_pow[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        hi_pow[n] = hi_pow[n - 1] * rho.interval.hi;
        lo_pow[n] = lo_pow[n - 1] * rho.interval.lo;
    }

    rep.upper_ok = true;
    for (int n = 0; n <= n_max; ++n)
        if (mpq_class(omega[n]) > hi_pow[n]) {
            rep.upper_ok = false;
            break;
        }

    // fit C from the first 2*|V_v| windows
    int fit_limit = std::min(2 * k, n_max - window);
    mpq_class C;
    bool c_set = false;
    for (int n = 1; n <= fit_limit; ++n) {
        mpq_class window_best = 0;
        for (int j = n; j <= n + window; ++j) {
            mpq_class ratio = mpq_class(omega[j]) / hi_pow[j];
            window_best = std::max(window_best, ratio);
        }
        if (!c_set || window_best < C) {
            C = window_best;
            c_set = true;
        }
    }
    if (!c_set) C = 0;
    // the prefix minimum can sit above the limit of Omega_n / rho^n (the
    // Fibonacci ratios converge from above); halving leaves a real margin
    // while keeping the bound exponential in rho
    C /= 2;
    rep.fitted_c = C.get_d();

    rep.lower_ok = true;
    for (int n = 1; n + window <= n_max; ++n) {
        bool found = false;
        for (int j = n; j <= n + window && !found; ++j)
            if (mpq_class(omega[j]) >= C * lo_pow[j]) found = true;
        if (!found) {
            rep.lower_ok = false;
            break;
        }
    }
    return rep;
}

double log_base_m(const mpz_class& value, int m) {
    signed long exp;
    double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return (std::log2(mant) + exp) / std::log2(static_cast<double>(m));
}

double log_base_m(const mpq_class& value, int m) {
    return log_base_m(value.get_num(), m) - log_base_m(value.get_den(), m);
}

SupRatioReport sup_ratio_check(const Automaton& a, int v, int n_max) {
    if (!tied_vertices(a).contains(v))
        throw domain_error("sup_ratio_check: vertex is not tied");
    auto sub = strongly_connected_subdigraph(a, v);
    auto rho = spectral_radius(sub);
    auto omega = closed_walk_table(a, v, n_max);
    SupRatioReport rep;
    rep.sup_ratio = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
        if (omega[n] == 0) continue;
        rep.sup_ratio = std::max(rep.sup_ratio, log_base_m(omega[n], a.m) / n);
    }
    rep.log_rho = log_base_m(mpq_class(rho.interval.lo + rho.interval.hi) / 2, a.m);
    rep.log_rho_hi = log_base_m(rho.interval.hi, a.m);
    rep.within_tolerance = rep.sup_ratio <= rep.log_rho_hi + 1e-12 &&
                           (n_max < 200 || rep.sup_ratio >= rep.log_rho - 0.05);
    return rep;
}

namespace {

// Two lexicographically-least distinct closed walks of length n at v.
// Uses an exact reachability-count table to prune dead branches.
std::vector<Walk> distinct_closed_walks(const Automaton& a, int v, int n, int want) {
    // count[r][s] = number of walks s -> v of length r
    std::vector<std::vector<mpz_class>> count(n + 1, std::vector<mpz_class>(a.size(), 0));
    count[0][v] = 1;
    for (int r = 1; r <= n; ++r)
        for (int s = 0; s < a.size(); ++s)
            for (int d = 0; d < a.m; ++d) count[r][s] += count[r - 1][a.edge(s, d)];
    std::vector<Walk> found;
    Walk w;
    w.start = v;
    auto dfs = [&](auto&& self, int s, int depth) -> void {
        if (static_cast<int>(found.size()) >= want) return;
        if (depth == n) {
            if (s == v) found.push_back(w);
            return;
        }
        for (int d = 0; d < a.m; ++d) {
            int t = a.edge(s, d);
            if (count[n - depth - 1][t] == 0) continue;
            w.edges.push_back({d, t});
            self(self, t, depth + 1);
            w.edges.pop_back();
            if (static_cast<int>(found.size()) >= want) return;
        }
    };
    dfs(dfs, v, 0);
    return found;
}

Walk bfs_walk(const Automaton& a, int from, const std::vector<bool>& goal) {
    // shortest walk from `from` to any goal state, deterministic by digit order
    std::vector<int> parent(a.size(), -1), pdigit(a.size(), -1);
    std::queue<int> q;
    std::vector<bool> seen(a.size(), false);
    seen[from] = true;
    q.push(from);
    int hit = goal[from] ? from : -1;
    while (!q.empty() && hit == -1) {
        int s = q.front();
        q.pop();
        for (int d = 0; d < a.m && hit == -1; ++d) {
            int t = a.edge(s, d);
            if (!seen[t]) {
                seen[t] = true;
                parent[t] = s;
                pdigit[t] = d;
                if (goal[t]) hit = t;
                q.push(t);
            }
        }
    }
    if (hit == -1) throw domain_error("bfs_walk: goal unreachable");
    std::vector<std::pair<int, int>> rev;
    for (int s = hit; s != from; s = parent[s]) rev.push_back({pdigit[s], s});
    Walk w;
    w.start = from;
    w.edges.assign(rev.rbegin(), rev.rend());
    return w;
}

Walk strip_trailing_zeros(const Walk& w) {
    Walk out = w;
    while (!out.edges.empty() && out.edges.back().first == 0) out.edges.pop_back();
    return out;
}

}  // namespace

WitnessFamily witness_family(const Automaton& a, int v, int k, uint64_t budget) {
    if (!tied_vertices(a).contains(v))
        throw domain_error("witness_family: vertex is not tied");
    if (k >= 63 || (uint64_t(1) << k) > budget)
        throw domain_error("witness_family: budget exceeded");

    WitnessFamily fam;
    fam.vertex = v;
    fam.k = k;

    std::vector<bool> only_v(a.size(), false);
    only_v[v] = true;
    fam.w_start = bfs_walk(a, a.start, only_v);

    int n_pair = -1;
    for (int n = 1; n <= 2 * a.m * a.size(); ++n)
        if (count_walks(a, v, v, n) >= 2) {
            n_pair = n;
            break;
        }
    if (n_pair == -1) throw domain_error("witness_family: no equal-length walk pair found");
    auto pair = distinct_closed_walks(a, v, n_pair, 2);
    fam.w_one = pair[0];
    fam.w_two = pair[1];

    if (a.nonzero(v)) {
        Walk cand = strip_trailing_zeros(fam.w_one);
        if (cand.edges.empty()) cand = strip_trailing_zeros(fam.w_two);
        fam.w_end = cand;
    } else {
        std::vector<bool> nonzero_goal(a.size(), false);
        for (int s = 0; s < a.size(); ++s) nonzero_goal[s] = a.nonzero(s);
        fam.w_end = strip_trailing_zeros(bfs_walk(a, v, nonzero_goal));
    }
    if (fam.w_end.edges.empty() || fam.w_end.edges.back().first == 0)
        throw domain_error("witness_family: cannot build exit walk with nonzero final digit");

    fam.z = fam.w_start.length();
    fam.x = fam.w_one.length();
    fam.y = fam.w_end.length();

    mpz_class size_s = fam.w_start.size(a.m);
    mpz_class size_1 = fam.w_one.size(a.m);
    mpz_class size_2 = fam.w_two.size(a.m);
    mpz_class size_e = fam.w_end.size(a.m);
    mpz_class mz = 0, mx = 0;
    mpz_ui_pow_ui(mz.get_mpz_t(), a.m, fam.z);
    mpz_ui_pow_ui(mx.get_mpz_t(), a.m, fam.x);

    std::set<mpz_class> members;
    for (uint64_t bits = 0; bits < (uint64_t(1) << k); ++bits) {
        // |W_s o W_{i_1} o ... o W_{i_k} o W_e|, built with the size law
        mpz_class total = size_s;
        mpz_class scale = mz;
        for (int j = 0; j < k; ++j) {
            total += scale * ((bits >> j) & 1 ? size_2 : size_1);
            scale *= mx;
        }
        total += scale * size_e;
        if (eval_term(a, total) == kZeroOutput)
            throw domain_error("witness_family: member not in support");
        members.insert(total);
    }
    if (members.size() != (uint64_t(1) << k))
        throw domain_error("witness_family: members not distinct");
    fam.members.assign(members.begin(), members.end());
    return fam;
}

WkResult wk_diagnostic(const Automaton& a, const std::vector<int>& tied, int k, int budget) {
    if (k > budget) throw domain_error("wk_diagnostic: budget exceeded");
    std::set<int> distinct(tied.begin(), tied.end());
    if (distinct.size() != tied.size())
        throw domain_error("wk_diagnostic: tied states must be distinct");
    const int s = static_cast<int>(tied.size());
    if (s == 0) return {mpz_class(k == 0 ? 1 : 0), true};

    std::vector<mpz_class> acc(k + 1, 0);
    acc[0] = 1;
    mpq_class rho_bar = 0;
    for (int v : tied) {
        auto omega = closed_walk_table(a, v, k);
        std::vector<mpz_class> cum(k + 1);
        mpz_class run = 0;
        for (int j = 0; j <= k; ++j) {
            run += omega[j];
            cum[j] = run;
        }
        std::vector<mpz_class> next(k + 1, 0);
        for (int i = 0; i <= k; ++i) {
            if (acc[i] == 0) continue;
            for (int j = 0; i + j <= k; ++j) next[i + j] += acc[i] * cum[j];
        }
        acc = std::move(next);
        auto rho = spectral_radius(strongly_connected_subdigraph(a, v));
        rho_bar = std::max(rho_bar, rho.interval.hi);
    }

    WkResult r;
    r.value = acc[k];
    if (rho_bar <= 1) {
        r.bound_ok = false;  // envelope needs rho > 1; tied vertices guarantee it
        return r;
    }
    mpq_class K = qpow(rho_bar / (rho_bar - 1) * 2, s);
    mpq_class envelope = K * qpow(mpq_class(std::max(k, 1)), s - 1) * qpow(rho_bar, k);
    r.bound_ok = mpq_class(r.value) <= envelope;
    return r;
}

}  // namespace cobham
