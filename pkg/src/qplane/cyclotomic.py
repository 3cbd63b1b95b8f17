"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_M).

These are the coefficient rings underneath :mod:`qplane.coeffield`.  Values
are "raw": a :class:`~fractions.Fraction` for Q, a tuple of Fractions of
length phi(M) (coefficients of 1, z, z^2, ...) for Q(zeta_M).  Rings are
stateless apart from precomputed tables, so one instance per M is shared.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low-to-high coefficient lists)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of the n-th cyclotomic polynomial, low to high."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


def euler_phi(n):
    return len(cyclotomic_poly(n)) - 1


def lcm(a, b):
    return a * b // gcd(a, b)


class Rationals:
    """Q, optionally viewed as Q(zeta_M) for M in {1, 2}."""

    degree = 1

    def __init__(self, order=1):
        if order not in (1, 2):
            raise ValueError("Q only contains the roots of unity of order 1 and 2")
        self.order = order
        self.zero = _ZERO
        self.one = _ONE

    def __repr__(self):
        return f"Rationals(order={self.order})"

    @staticmethod
    def from_fraction(r):
        return Fraction(r)

    add = staticmethod(Fraction.__add__)
    sub = staticmethod(Fraction.__sub__)
    mul = staticmethod(Fraction.__mul__)
    neg = staticmethod(Fraction.__neg__)

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def rational_value(a):
        return a

    def zeta_power(self, k):
        """zeta_M^k for the fixed primitive M-th root zeta_M."""
        if self.order == 2 and k % 2:
            return -_ONE
        return _ONE

    def coefficients(self, a):
        return (a,)

    def from_coefficients(self, coeffs):
        return Fraction(coeffs[0]) if coeffs else _ZERO


class CyclotomicField:
    """Q(zeta_M) with zeta_M = z reduced modulo Phi_M(z)."""

    def __init__(self, order):
        phi = cyclotomic_poly(order)
        n = len(phi) - 1
        if n < 2:
            raise ValueError("use Rationals for orders 1 and 2")
        self.order = order
        self.degree = n
        self.modulus = phi
        self.zero = (_ZERO,) * n
        self.one = (_ONE,) + (_ZERO,) * (n - 1)
        # z^k reduced, for n <= k <= 2n - 2
        high = {}
        cur = [Fraction(-c) for c in phi[:n]]
        for k in range(n, 2 * n - 1):
            high[k] = tuple(cur)
            top = cur[-1]
            cur = [_ZERO] + cur[:-1]
            if top:
                cur = [c - top * p for c, p in zip(cur, phi)]
        self._high = high
        powers = []
        cur = list(self.one)
        for _ in range(order):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [_ZERO] + cur[:-1]
            if top:
                cur = [c - top * p for c, p in zip(cur, phi)]
        self._powers = tuple(powers)

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def from_fraction(self, r):
        return (Fraction(r),) + (_ZERO,) * (self.degree - 1)

    @staticmethod
    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    @staticmethod
    def neg(a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        n = self.degree
        prod = [_ZERO] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                out = [o + c * h for o, h in zip(out, self._high[k])]
        return tuple(out)

    @staticmethod
    def is_zero(a):
        return not any(a)

    @staticmethod
    def rational_value(a):
        """The element as a Fraction if it lies in Q, else None."""
        if any(a[1:]):
            return None
        return a[0]

    def zeta_power(self, k):
        return self._powers[k % self.order]

    def coefficients(self, a):
        return a

    def from_coefficients(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        out = list(self.zero)
        for k, c in enumerate(coeffs):
            if c:
                out = [o + c * p for o, p in zip(out, self._powers[k % self.order])]
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero in cyclotomic field")
        # extended Euclid on (a, Phi) in Q[z]; polys as low-to-high lists
        r0, r1 = [Fraction(c) for c in self.modulus], _strip(list(a))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            quo, rem = _divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quo, s1))
        c = r1[0]
        inv = [x / c for x in s1]
        return self.from_coefficients(inv)


def _strip(p):
    while p and not p[-1]:
        p.pop()
    return p


def _psub(a, b):
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _strip(out)


def _divmod(a, b):
    a = list(a)
    quo = [_ZERO] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        quo[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return _strip(quo), _strip(a[: len(b) - 1])


@lru_cache(maxsize=None)
def coefficient_ring(order):
    """Shared ring instance for Q(zeta_order)."""
    if order in (1, 2):
        return Rationals(order)
    return CyclotomicField(order)


def embed(src, dst, a):
    """Map a raw value of Q(zeta_m) into Q(zeta_M) for m | M."""
    if src is dst:
        return a
    if dst.order % src.order:
        raise ValueError(f"Q(zeta_{src.order}) is not a subfield of Q(zeta_{dst.order})")
    step = dst.order // src.order
    out = dst.zero
    for k, c in enumerate(src.coefficients(a)):
        if c:
            out = dst.add(out, dst.mul(dst.from_fraction(c), dst.zeta_power(k * step)))
    return out
