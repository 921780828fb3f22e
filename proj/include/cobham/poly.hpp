#ifndef COBHAM_POLY_HPP
#define COBHAM_POLY_HPP

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace cobham {

// Dense polynomials, coefficient of x^i at index i. Leading coefficient
// nonzero except for the zero polynomial (empty vector).
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

QPoly to_qpoly(const ZPoly& p);
ZPoly to_primitive_zpoly(const QPoly& p);  // clears denominators, removes content

int degree(const QPoly& p);
void normalize(QPoly& p);
mpq_class eval(const QPoly& p, const mpq_class& x);
QPoly derivative(const QPoly& p);
QPoly monic(const QPoly& p);

// Polynomial division remainder over Q.
QPoly rem(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd
QPoly divide_exact(const QPoly& a, const QPoly& b);

// p with repeated roots removed: p / gcd(p, p').
QPoly squarefree_part(const QPoly& p);

// Sturm chain root counting on (a, b].
struct SturmChain {
    std::vector<QPoly> chain;
    explicit SturmChain(const QPoly& squarefree);
    int sign_changes(const mpq_class& x) const;
    int count_roots(const mpq_class& a, const mpq_class& b) const;
};

struct RootInterval {
    mpq_class lo, hi;
    double mid() const { return (lo.get_d() + hi.get_d()) / 2; }
};

// Certified enclosure of the largest real root of p in (0, upper], refined to
// relative width <= rel_width. Requires at least one real root in the range.
RootInterval largest_real_root(const ZPoly& p, const mpq_class& upper, double rel_width = 1e-12);

// Number of roots of p (with multiplicity) of modulus strictly greater
// than c, via the Moebius map to a half plane and an exact Routh array.
// Returns -1 if degenerate for this c (root on the circle |z| = c or at -c);
// callers retry with a perturbed c.
int count_roots_modulus_above(const ZPoly& p, const mpq_class& c);

// Floating-point roots (Durand-Kerner), for reporting only.
std::vector<std::complex<double>> numeric_roots(const ZPoly& p);

std::string poly_to_string(const ZPoly& p);

}  // namespace cobham

#endif
