#include "cobham/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cobham {

QPoly to_qpoly(const ZPoly& p) {
    QPoly q;
    q.reserve(p.size());
    for (const auto& c : p) q.emplace_back(c);
    return q;
}

ZPoly to_primitive_zpoly(const QPoly& p) {
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(p.size());
    for (const auto& c : p) {
        mpq_class scaled = c * lcm;
        z.push_back(scaled.get_num());
    }
    mpz_class content = 0;
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return z;
}

void normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

mpq_class eval(const QPoly& p, const mpq_class& x) {
    mpq_class v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

QPoly monic(const QPoly& p) {
    QPoly q = p;
    normalize(q);
    if (q.empty()) return q;
    mpq_class lead = q.back();
    for (auto& c : q) c /= lead;
    return q;
}

QPoly rem(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    normalize(r);
    QPoly d = b;
    normalize(d);
    if (d.empty()) throw std::invalid_argument("poly division by zero");
    while (static_cast<int>(r.size()) >= static_cast<int>(d.size()) && !r.empty()) {
        mpq_class coef = r.back() / d.back();
        size_t shift = r.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= coef * d[i];
        normalize(r);
    }
    return r;
}

QPoly divide_exact(const QPoly& a, const QPoly& b) {
    QPoly r = a, d = b, q;
    normalize(r);
    normalize(d);
    if (d.empty()) throw std::invalid_argument("poly division by zero");
    q.assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, 0);
    while (r.size() >= d.size() && !r.empty()) {
        mpq_class coef = r.back() / d.back();
        size_t shift = r.size() - d.size();
        q[shift] = coef;
        for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= coef * d[i];
        normalize(r);
    }
    if (!r.empty()) throw std::invalid_argument("divide_exact: nonzero remainder");
    normalize(q);
    return q;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    normalize(x);
    normalize(y);
    while (!y.empty()) {
        QPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

QPoly squarefree_part(const QPoly& p) {
    QPoly q = p;
    normalize(q);
    if (degree(q) < 1) return q;
    QPoly g = gcd(q, derivative(q));
    if (degree(g) < 1) return q;
    return divide_exact(q, g);
}

SturmChain::SturmChain(const QPoly& squarefree) {
    QPoly p0 = squarefree;
    normalize(p0);
    chain.push_back(p0);
    if (degree(p0) < 1) return;
    chain.push_back(derivative(p0));
    while (degree(chain.back()) > 0) {
        QPoly r = rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;  // not squarefree; chain still usable for distinct roots
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
}

int SturmChain::sign_changes(const mpq_class& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
    return sign_changes(a) - sign_changes(b);
}

RootInterval largest_real_root(const ZPoly& p, const mpq_class& upper, double rel_width) {
    QPoly q = squarefree_part(monic(to_qpoly(p)));
    SturmChain sturm(q);
    mpq_class lo = 0, hi = upper;
    if (sturm.count_roots(lo, hi) < 1)
        throw std::invalid_argument("largest_real_root: no real root in (0, upper]");
    while (true) {
        mpq_class width = hi - lo;
        if (sturm.count_roots(lo, hi) == 1 && width <= mpq_class(rel_width) * hi) break;
        mpq_class mid = (lo + hi) / 2;
        if (sturm.count_roots(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

namespace {

// Number of roots with positive real part via the Routh array.
// Returns -1 when the array degenerates (roots on the imaginary axis).
int count_rhp_roots(const QPoly& poly) {
    QPoly p = poly;
    normalize(p);
    int n = degree(p);
    if (n < 1) return 0;
    // rows hold coefficients b_n, b_{n-2}, ... / b_{n-1}, b_{n-3}, ...
    std::vector<mpq_class> prev, cur;
    for (int i = n; i >= 0; i -= 2) prev.emplace_back(p[i]);
    for (int i = n - 1; i >= 0; i -= 2) cur.emplace_back(p[i]);
    std::vector<mpq_class> first_col{prev[0]};
    for (int row = 1; row <= n; ++row) {
        if (cur.empty() || cur[0] == 0) return -1;
        first_col.push_back(cur[0]);
        std::vector<mpq_class> next;
        mpq_class factor = prev[0] / cur[0];
        size_t len = prev.size() > 1 ? prev.size() - 1 : 0;
        for (size_t i = 0; i + 1 <= len; ++i) {
            mpq_class a = i + 1 < prev.size() ? prev[i + 1] : mpq_class(0);
            mpq_class b = i + 1 < cur.size() ? cur[i + 1] : mpq_class(0);
            next.push_back(a - factor * b);
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    int changes = 0;
    for (size_t i = 1; i < first_col.size(); ++i)
        if (sgn(first_col[i - 1]) != sgn(first_col[i])) ++changes;
    return changes;
}

}  // namespace

int count_roots_modulus_above(const ZPoly& p, const mpq_class& c) {
    QPoly q = to_qpoly(p);
    normalize(q);
    int n = degree(q);
    if (n < 1) return 0;
    // |z| > c  <=>  Re(w) > 0 under z = c(1+w)/(1-w)
    // P(w) = sum_i a_i c^i (1+w)^i (1-w)^(n-i)
    std::vector<QPoly> plus(n + 1), minus(n + 1);
    plus[0] = minus[0] = {mpq_class(1)};
    for (int i = 1; i <= n; ++i) {
        plus[i].assign(i + 1, 0);
        minus[i].assign(i + 1, 0);
        for (int j = 0; j < i; ++j) {
            plus[i][j] += plus[i - 1][j];
            plus[i][j + 1] += plus[i - 1][j];
            minus[i][j] += minus[i - 1][j];
            minus[i][j + 1] -= minus[i - 1][j];
        }
    }
    QPoly P(n + 1, 0);
    mpq_class cpow = 1;
    for (int i = 0; i <= n; ++i) {
        if (q[i] != 0) {
            mpq_class scale = q[i] * cpow;
            for (int j = 0; j <= i; ++j)
                for (int k = 0; k <= n - i; ++k) P[j + k] += scale * plus[i][j] * minus[n - i][k];
        }
        cpow *= c;
    }
    normalize(P);
    if (degree(P) < n) return -1;  // root at z = -c
    return count_rhp_roots(P);
}

std::vector<std::complex<double>> numeric_roots(const ZPoly& p) {
    int n = static_cast<int>(p.size()) - 1;
    while (n > 0 && p[n] == 0) --n;
    if (n < 1) return {};
    std::vector<double> c(n + 1);
    double lead = p[n].get_d();
    for (int i = 0; i <= n; ++i) c[i] = p[i].get_d() / lead;
    auto f = [&](std::complex<double> z) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * z + c[i];
        return v;
    };
    std::vector<std::complex<double>> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int iter = 0; iter < 800; ++iter) {
        double shift = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> delta = f(roots[i]) / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    return roots;
}

std::string poly_to_string(const ZPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] == 0) continue;
        mpz_class c = p[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        mpz_class ac = abs(c);
        if (ac != 1 || i == 0) out << ac.get_str();
        if (i >= 1) {
            if (ac != 1) out << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace cobham
