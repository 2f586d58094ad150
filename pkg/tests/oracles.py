"""Independent brute-force oracles used to pin expected values in tests.

Everything here is deliberately naive and separate from the package's own
algorithms: determinants by Laplace expansion, ranks by enumerating square
minors, power series by direct long multiplication, cyclic canonical forms
by trying every rotation.  Slow, but unarguable on small inputs.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def naive_det(rows):
    """Laplace expansion along the first row.  Works over any commutative
    ring whose elements support +, -, *."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * naive_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def naive_rank(rows):
    """Largest size of a nonvanishing square minor (entries: Fractions or
    anything with exact == 0 semantics)."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    for size in range(min(nr, nc), 0, -1):
        for rsel in combinations(range(nr), size):
            for csel in combinations(range(nc), size):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if naive_det(sub) != 0:
                    return size
    return 0


def series_mul(a, b, n):
    """Product coefficients of orders 0..n for two power series given by
    coefficient lists (missing coefficients are zero)."""
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            ai = a[i] if i < len(a) else Fraction(0)
            bj = b[k - i] if k - i < len(b) else Fraction(0)
            s += Fraction(ai) * Fraction(bj)
        out.append(s)
    return out


def series_inverse(q, n):
    """Coefficients of orders 0..n of 1/q for a list q with q[0] != 0."""
    q0 = Fraction(q[0])
    out = [1 / q0]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            qi = Fraction(q[i]) if i < len(q) else Fraction(0)
            s += qi * out[k - i]
        out.append(-s / q0)
    return out


def rational_series(num, den, n):
    """Taylor coefficients of num/den of orders 0..n by naive series
    arithmetic."""
    return series_mul([Fraction(c) for c in num], series_inverse(den, n), n)


def min_rotation(word):
    """Lexicographically smallest rotation, by trying all of them."""
    if not word:
        return tuple(word)
    rots = [tuple(word[i:]) + tuple(word[:i]) for i in range(len(word))]
    return min(rots)


def hankel_rows(seq, rows, cols):
    """The rows-by-cols Hankel slab H[i][j] = seq[i+j]."""
    return [[seq[i + j] for j in range(cols)] for i in range(rows)]


def companion_trace_powers(g_coeffs, n):
    """tr(C^m) for m = 0..n where C is the companion matrix of the monic
    polynomial with ascending coefficients g_coeffs, via Newton's identities
    run naively (independent of any matrix code)."""
    d = len(g_coeffs) - 1
    assert g_coeffs[-1] == 1
    # char poly: T^d + c_{d-1} T^{d-1} + ... + c_0
    # Newton: p_k = -k*c_{d-k} - sum_{i=1}^{k-1} c_{d-i} p_{k-i}  (k <= d)
    #         p_k = -sum_{i=1}^{d} c_{d-i} p_{k-i}                (k > d)
    c = [Fraction(x) for x in g_coeffs]
    p = [Fraction(d)]
    for k in range(1, n + 1):
        if k <= d:
            s = -k * c[d - k]
            for i in range(1, k):
                s -= c[d - i] * p[k - i]
        else:
            s = Fraction(0)
            for i in range(1, d + 1):
                s -= c[d - i] * p[k - i]
        p.append(s)
    return p
