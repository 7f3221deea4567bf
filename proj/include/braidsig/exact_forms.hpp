#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidsig/errors.hpp"

namespace braidsig {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<Int>>;

/// Inertia of a symmetric form: p + n + z = dim, sigma = p - n.
struct SignatureTriple {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;

    long long sigma() const {
        return static_cast<long long>(positives) - static_cast<long long>(negatives);
    }
    friend bool operator==(const SignatureTriple& a, const SignatureTriple& b) {
        return a.positives == b.positives && a.negatives == b.negatives && a.zeros == b.zeros;
    }
};

inline bool is_symmetric(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

/// Exact inertia by congruence diagonalization over the rationals.
/// Pivot selection is deterministic: first nonzero diagonal entry; when the
/// remaining diagonal is all zero, the first (lexicographic) nonzero
/// off-diagonal entry is reduced as a hyperbolic pair contributing (1,1,0).
inline SignatureTriple signature_triple(const IntMatrix& m) {
    if (!is_symmetric(m))
        throw NotSymmetric("signature_triple requires a symmetric matrix");
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m[i][j]);

    std::vector<std::size_t> alive(n);
    for (std::size_t i = 0; i < n; ++i) alive[i] = i;
    SignatureTriple t;

    while (!alive.empty()) {
        std::size_t piv = n;
        for (std::size_t i : alive)
            if (a[i][i] != 0) { piv = i; break; }
        if (piv != n) {
            const Rational d = a[piv][piv];
            if (d > 0) ++t.positives; else ++t.negatives;
            std::vector<std::size_t> rest;
            rest.reserve(alive.size() - 1);
            for (std::size_t i : alive)
                if (i != piv) rest.push_back(i);
            for (std::size_t i : rest) {
                if (a[i][piv] == 0) continue;
                const Rational f = a[i][piv] / d;
                for (std::size_t j : rest)
                    a[i][j] -= f * a[piv][j];
            }
            alive = std::move(rest);
            continue;
        }
        // all-zero diagonal: look for a hyperbolic pair
        std::size_t i0 = n, j0 = n;
        for (std::size_t ii = 0; ii < alive.size() && i0 == n; ++ii)
            for (std::size_t jj = ii + 1; jj < alive.size(); ++jj)
                if (a[alive[ii]][alive[jj]] != 0) {
                    i0 = alive[ii]; j0 = alive[jj];
                    break;
                }
        if (i0 == n) {
            t.zeros += alive.size();
            break;
        }
        ++t.positives; ++t.negatives;
        const Rational c = a[i0][j0];
        std::vector<std::size_t> rest;
        rest.reserve(alive.size() - 2);
        for (std::size_t i : alive)
            if (i != i0 && i != j0) rest.push_back(i);
        // Schur complement w.r.t. [[0,c],[c,0]]
        for (std::size_t i : rest) {
            const Rational u = a[i][i0], v = a[i][j0];
            if (u == 0 && v == 0) continue;
            for (std::size_t j : rest)
                a[i][j] -= (u * a[j0][j] + v * a[i0][j]) / c;
        }
        alive = std::move(rest);
    }
    return t;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw PreconditionViolated("determinant requires a square matrix");
    if (n == 0) return 1; // empty product
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace detail {

// Polynomials as ascending coefficient vectors over Int.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    poly_trim(d);
    return d;
}

inline Int poly_content(const Poly& p) {
    Int g = 0;
    for (const Int& c : p)
        g = boost::multiprecision::gcd(g, c);
    return g == 0 ? Int(1) : g;
}

inline void poly_make_primitive(Poly& p) {
    const Int g = poly_content(p);
    if (g > 1)
        for (Int& c : p) c /= g;
}

/// Pseudo-remainder with a positive overall scale factor, so the Sturm sign
/// structure is preserved: returns r with s * a = q * b + r for some s > 0.
inline Poly poly_prem_positive(Poly a, const Poly& b) {
    poly_trim(a);
    const Int lc = b.back();
    int scale_sign = 1;
    while (a.size() >= b.size() && !a.empty()) {
        const Int lead = a.back();
        const std::size_t shift = a.size() - b.size();
        // a := lc*a - lead * x^shift * b  (top coefficient cancels)
        for (Int& c : a) c *= lc;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= lead * b[i];
        if (lc < 0) scale_sign = -scale_sign;
        poly_trim(a);
    }
    if (scale_sign < 0)
        for (Int& c : a) c = -c;
    return a;
}

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

/// Sturm chain of p (need not be square-free); counts *distinct* real roots.
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly p0 = p;
    poly_trim(p0);
    if (p0.empty() || p0.size() == 1) { chain.push_back(p0); return chain; }
    poly_make_primitive(p0);
    Poly p1 = poly_derivative(p0);
    poly_make_primitive(p1);
    chain.push_back(p0);
    chain.push_back(p1);
    while (chain.back().size() > 1) {
        Poly r = poly_prem_positive(chain[chain.size() - 2], chain.back());
        poly_trim(r);
        if (r.empty()) break;
        for (Int& c : r) c = -c;
        poly_make_primitive(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_changes(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Number of distinct roots of p in (0, +inf) and in (-inf, 0).
/// Requires p(0) != 0.
inline std::pair<int, int> sturm_count_posneg(const Poly& p) {
    auto chain = sturm_chain(p);
    std::vector<int> at0, atpos, atneg;
    for (const Poly& q : chain) {
        if (q.empty()) { at0.push_back(0); atpos.push_back(0); atneg.push_back(0); continue; }
        at0.push_back(sgn(q.front()));
        atpos.push_back(sgn(q.back()));
        const int lead = sgn(q.back());
        atneg.push_back((q.size() - 1) % 2 == 0 ? lead : -lead);
    }
    const int v0 = sign_changes(at0);
    const int vpos = sign_changes(atpos);
    const int vneg = sign_changes(atneg);
    return {v0 - vpos, vneg - v0};
}

/// gcd(p, p') up to a positive constant, primitive.
inline Poly poly_gcd_with_derivative(const Poly& p) {
    auto chain = sturm_chain(p);
    // last element of the chain is ~ gcd(p, p') when p is not square-free;
    // if the chain ended at a constant, the gcd is 1.
    Poly g = chain.back();
    poly_trim(g);
    if (g.size() <= 1) return Poly{Int(1)};
    poly_make_primitive(g);
    if (g.back() < 0)
        for (Int& c : g) c = -c;
    return g;
}

/// Characteristic polynomial det(xI - A), integer coefficients, ascending.
/// Faddeev-LeVerrier; all divisions are exact.
inline Poly char_poly(const IntMatrix& a) {
    const std::size_t n = a.size();
    Poly c(n + 1);
    c[n] = 1;
    IntMatrix m(n, std::vector<Int>(n, 0));
    IntMatrix am;
    // M_1 = A
    m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        const Int ck = -tr / static_cast<long>(k);
        c[n - k] = ck;
        if (k == n) break;
        // M_{k+1} = A (M_k + ck I)
        IntMatrix mk = m;
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += ck;
        am.assign(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    am[i][j] += a[i][l] * mk[l][j];
            }
        m = std::move(am);
    }
    return c;
}

} // namespace detail

/// Independent inertia oracle: exact Sturm root counting on the
/// characteristic polynomial, with multiplicities recovered via the
/// gcd(q, q') chain and the zero eigenvalue from the valuation.
inline SignatureTriple sturm_inertia(const IntMatrix& m) {
    if (!is_symmetric(m))
        throw NotSymmetric("sturm_inertia requires a symmetric matrix");
    const std::size_t n = m.size();
    if (n > 12)
        throw DimensionTooLarge("sturm_inertia oracle is capped at dimension 12");
    if (n == 0) return {};
    detail::Poly p = detail::char_poly(m);
    // zero eigenvalue multiplicity = valuation at x = 0
    std::size_t v = 0;
    while (v < p.size() && p[v] == 0) ++v;
    detail::Poly q(p.begin() + static_cast<std::ptrdiff_t>(v), p.end());
    SignatureTriple t;
    t.zeros = v;
    while (q.size() > 1) {
        auto [pos, neg] = detail::sturm_count_posneg(q);
        t.positives += static_cast<std::size_t>(pos);
        t.negatives += static_cast<std::size_t>(neg);
        q = detail::poly_gcd_with_derivative(q);
    }
    return t;
}

} // namespace braidsig
