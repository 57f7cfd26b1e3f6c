"""Exact q-expansions for the universal curve near the cusp.

Truncated Laurent series in q with Fraction coefficients.  A QSeries
stores coefficients for exponents val .. prec-1 and tracks prec through
arithmetic pessimistically, so results are exact to their stated order.

The main exports are the coefficients B, C of the standard integral
model y^2 + xy = x^3 + Bx + C, its discriminant (computed both from the
b-invariant formulas and as the eta product q prod (1-q^n)^24), the
j-invariant (1-48B)^3 / Delta, and the weight-4/6 Eisenstein series
whose cube/square combination recovers the discriminant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

DEFAULT_PRECISION = 64


class QSeries:
    """Laurent series truncated before exponent `prec`."""

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, coeffs, val=0, prec=None):
        coeffs = [Fraction(c) for c in coeffs]
        if prec is None:
            prec = val + len(coeffs)
        # normalize: drop leading zeros, clip to prec
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        coeffs = coeffs[: max(0, prec - val)]
        if not coeffs:
            val = prec
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    def __getitem__(self, n):
        if n >= self.prec:
            raise IndexError("coefficient %d beyond precision %d" % (n, self.prec))
        if n < self.val or n - self.val >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[n - self.val]

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return all(self[n] == other[n] for n in range(min(self.val, other.val), prec))

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries([other])
        prec = min(self.prec, other.prec)
        val = min(self.val, other.val)
        return QSeries(
            [self[n] + other[n] for n in range(val, prec)], val, prec
        )

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.val, self.prec)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries([c * other for c in self.coeffs], self.val, self.prec)
        # product is exact up to min over the cross terms we cannot see
        prec = min(self.prec + other.val, other.prec + self.val)
        val = self.val + other.val
        n = max(0, prec - val)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= n:
                    break
                out[k] += a * b
        return QSeries(out, val, prec)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError("leading coefficient is zero")
        n = self.prec - self.val
        a = self.coeffs
        lead = a[0]
        out = [Fraction(0)] * n
        out[0] = 1 / lead
        for k in range(1, n):
            acc = Fraction(0)
            for i in range(1, min(k, len(a) - 1) + 1):
                acc += a[i] * out[k - i]
            out[k] = -acc / lead
        return QSeries(out, -self.val, self.prec - 2 * self.val)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        base = self
        acc = None
        e = k
        while e:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if e:
                base = base * base
        if acc is None:
            return QSeries([1], 0, self.prec)
        return acc

    def __repr__(self):
        parts = ["%s*q^%d" % (c, n) for n, c in list(self.items())[:6]]
        return "QSeries(%s + O(q^%d))" % (" + ".join(parts) or "0", self.prec)


@lru_cache(maxsize=None)
def sigma(k, n):
    """Sum of k-th powers of the divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def eisenstein_e4(prec=DEFAULT_PRECISION):
    return QSeries([1] + [240 * sigma(3, n) for n in range(1, prec)], 0, prec)


def eisenstein_e6(prec=DEFAULT_PRECISION):
    return QSeries([1] + [-504 * sigma(5, n) for n in range(1, prec)], 0, prec)


def tate_b(prec=DEFAULT_PRECISION):
    """B(q) = -5 sum sigma_3(n) q^n."""
    return QSeries([0] + [-5 * sigma(3, n) for n in range(1, prec)], 0, prec)


def tate_c(prec=DEFAULT_PRECISION):
    """C(q) = sum (-5 sigma_3(n) - 7 sigma_5(n))/12 q^n; integral."""
    coeffs = [Fraction(0)]
    for n in range(1, prec):
        c = Fraction(-5 * sigma(3, n) - 7 * sigma(5, n), 12)
        if c.denominator != 1:
            raise AssertionError("C coefficient at q^%d is not integral" % n)
        coeffs.append(c)
    return QSeries(coeffs, 0, prec)


def discriminant_weierstrass(prec=DEFAULT_PRECISION, B=None, C=None):
    """Discriminant of y^2 + xy = x^3 + Bx + C via the b-invariants
    b2 = 1, b4 = 2B, b6 = 4C, b8 = C - B^2."""
    if B is None:
        B = tate_b(prec)
    if C is None:
        C = tate_c(prec)
    b2 = QSeries([1], 0, prec)
    b4 = 2 * B
    b6 = 4 * C
    b8 = C - B * B
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6


def discriminant_eta(prec=DEFAULT_PRECISION):
    """q prod_{n>=1} (1 - q^n)^24."""
    one_minus = QSeries([1], 0, prec)
    for n in range(1, prec):
        one_minus = one_minus * QSeries([1] + [0] * (n - 1) + [-1], 0, prec)
    return QSeries([0, 1], 0, prec) * one_minus**24


def c4_invariant(prec=DEFAULT_PRECISION):
    """c4 = b2^2 - 24 b4 = 1 - 48B."""
    return QSeries([1], 0, prec) - 48 * tate_b(prec)


def j_series(prec=DEFAULT_PRECISION):
    """j = c4^3 / Delta = q^-1 + 744 + 196884 q + ..."""
    return c4_invariant(prec) ** 3 / discriminant_weierstrass(prec)


def series_by_name(name, prec=DEFAULT_PRECISION):
    table = {
        "B": tate_b,
        "C": tate_c,
        "delta": discriminant_weierstrass,
        "j": j_series,
    }
    if name not in table:
        raise KeyError(name)
    return table[name](prec)
