"""The exact coefficient field K.

Two modes:

* generic q: K = Q(q), rational functions in an indeterminate q;
* root of unity: K = Q(zeta_t) with q = zeta_t a fixed primitive t-th root.

Either field may be enlarged by adjoining roots of unity (``Field.extend``),
which is how isotropy membership is sampled at points of finite order.  An
extended field of order M has a primitive M-th root z with q = z^(M/t) in
root-of-unity mode; in generic mode the coefficients of the rational
functions live in Q(z).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclotomic import coefficient_ring, embed as _embed_raw, lcm
from .errors import ModeError


class FieldKind(enum.Enum):
    GENERIC_Q = "generic"
    ROOT_OF_UNITY = "cyclotomic"


@dataclass(frozen=True)
class FieldMode:
    kind: FieldKind
    t: int = 0

    def __post_init__(self):
        if self.kind is FieldKind.GENERIC_Q and self.t != 0:
            raise ModeError("generic q has t = 0")
        if self.kind is FieldKind.ROOT_OF_UNITY and self.t < 2:
            raise ModeError("root-of-unity mode needs t >= 2")

    def __str__(self):
        if self.kind is FieldKind.GENERIC_Q:
            return "generic"
        return f"cyclotomic:{self.t}"


# --- polynomials over a coefficient ring, as low-to-high tuples -----------


class _PolyRing:
    def __init__(self, C):
        self.C = C
        self.one = (C.one,)

    def strip(self, p):
        is_zero = self.C.is_zero
        n = len(p)
        while n and is_zero(p[n - 1]):
            n -= 1
        return tuple(p[:n])

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        add = self.C.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return self.strip(out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        neg = self.C.neg
        return tuple(neg(c) for c in a)

    def scale(self, a, c):
        mul = self.C.mul
        return self.strip([mul(x, c) for x in a])

    def mul(self, a, b):
        if not a or not b:
            return ()
        C = self.C
        if len(a) == 1:
            return self.scale(b, a[0])
        if len(b) == 1:
            return self.scale(a, b[0])
        out = [C.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if C.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = C.add(out[i + j], C.mul(x, y))
        return self.strip(out)

    def divmod(self, a, b):
        C = self.C
        a = list(a)
        if len(a) < len(b):
            return (), tuple(a)
        inv_lead = C.inv(b[-1])
        quo = [C.zero] * (len(a) - len(b) + 1)
        for k in range(len(quo) - 1, -1, -1):
            c = C.mul(a[k + len(b) - 1], inv_lead)
            quo[k] = c
            if not C.is_zero(c):
                for i, y in enumerate(b):
                    a[k + i] = C.sub(a[k + i], C.mul(c, y))
        return self.strip(quo), self.strip(a[: len(b) - 1])

    def monic(self, a):
        inv = self.C.inv(a[-1])
        return self.scale(a, inv)

    def gcd(self, a, b):
        while b:
            _, r = self.divmod(a, b)
            a, b = b, r
        return self.monic(a)


class _RootOfUnityBackend:
    """K = Q(zeta_M), q = zeta_M^(M/t)."""

    def __init__(self, t, order):
        self.C = coefficient_ring(order)
        self.q_step = order // t
        C = self.C
        self.zero = C.zero
        self.one = C.one
        self.add, self.sub, self.mul, self.neg = C.add, C.sub, C.mul, C.neg
        self.is_zero = C.is_zero

    def div(self, a, b):
        return self.C.mul(a, self.C.inv(b))

    def inv(self, a):
        return self.C.inv(a)

    def from_fraction(self, r):
        return self.C.from_fraction(r)

    def q_power(self, k):
        return self.C.zeta_power(k * self.q_step)

    def zeta_power(self, k):
        return self.C.zeta_power(k)


class _RationalFunctionBackend:
    """K = Q(zeta_M)(q); raw values are (num, den) with den monic and coprime."""

    def __init__(self, order):
        self.C = coefficient_ring(order)
        self.P = _PolyRing(self.C)
        self.zero = ((), self.P.one)
        self.one = (self.P.one, self.P.one)

    def _norm(self, num, den):
        P = self.P
        if not num:
            return self.zero
        if den == P.one:
            return (num, den)
        g = P.gcd(num, den)
        if len(g) > 1:
            num = P.divmod(num, g)[0]
            den = P.divmod(den, g)[0]
        if den[-1] != self.C.one:
            inv = self.C.inv(den[-1])
            num, den = P.scale(num, inv), P.scale(den, inv)
        return (num, den)

    def add(self, a, b):
        P = self.P
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            if ad == P.one:
                return (P.add(an, bn), ad)
            return self._norm(P.add(an, bn), ad)
        return self._norm(P.add(P.mul(an, bd), P.mul(bn, ad)), P.mul(ad, bd))

    def neg(self, a):
        return (self.P.neg(a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        P = self.P
        (an, ad), (bn, bd) = a, b
        if ad == P.one and bd == P.one:
            return (P.mul(an, bn), ad)
        return self._norm(P.mul(an, bn), P.mul(ad, bd))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("division by zero in Q(q)")
        return self._norm(a[1], a[0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a):
        return not a[0]

    def from_fraction(self, r):
        c = self.C.from_fraction(r)
        if self.C.is_zero(c):
            return self.zero
        return ((c,), self.P.one)

    def q_power(self, k):
        C = self.C
        mono = (C.zero,) * abs(k) + (C.one,)
        if k >= 0:
            return (mono, self.P.one)
        return (self.P.one, mono)

    def zeta_power(self, k):
        return ((self.C.zeta_power(k),), self.P.one)


class Field:
    """The coefficient field for one field mode, optionally with extra roots of unity.

    Use :func:`generic_field` / :func:`root_of_unity_field`; instances are
    cached so fields compare by identity.
    """

    def __init__(self, mode, order):
        self.mode = mode
        self.order = order
        if mode.kind is FieldKind.GENERIC_Q:
            self._b = _RationalFunctionBackend(order)
        else:
            self._b = _RootOfUnityBackend(mode.t, order)
        self.zero = FieldElem(self, self._b.zero)
        self.one = FieldElem(self, self._b.one)
        self._qpow = {}

    def __repr__(self):
        if self.order == self.base_order:
            return f"Field({self.mode})"
        return f"Field({self.mode}, order={self.order})"

    @property
    def t(self):
        return self.mode.t

    @property
    def is_generic(self):
        return self.mode.kind is FieldKind.GENERIC_Q

    @property
    def is_minus_one(self):
        """True when q = -1."""
        return self.mode.t == 2

    @property
    def base_order(self):
        return 1 if self.is_generic else self.mode.t

    @property
    def q(self):
        return self.q_power(1)

    def q_power(self, k):
        """q^k in canonical form (exponent reduced mod t for roots of unity)."""
        if self.mode.t:
            k %= self.mode.t
        v = self._qpow.get(k)
        if v is None:
            v = self._qpow[k] = FieldElem(self, self._b.q_power(k))
        return v

    def is_q_power(self, a):
        """The exponent j with a == q^j, or None.

        Generic q: the unique integer j (possibly negative).  Root of unity:
        the least j in range(t).
        """
        a = self(a)
        if not a:
            raise ZeroDivisionError("0 is not a power of q")
        if self.mode.t:
            for j in range(self.mode.t):
                if a == self.q_power(j):
                    return j
            return None
        P = self._b.P
        num, den = a.v
        if den == P.one and len(num) >= 1 and all(self._b.C.is_zero(c) for c in num[:-1]):
            return len(num) - 1 if num[-1] == self._b.C.one else None
        if num == P.one and all(self._b.C.is_zero(c) for c in den[:-1]):
            return -(len(den) - 1)
        return None

    def zeta(self, n):
        """The fixed primitive n-th root of unity zeta_M^(M/n); needs n | order."""
        if self.order % n:
            raise ModeError(f"{self!r} does not contain the {n}-th roots of unity; use extend({n})")
        return FieldElem(self, self._b.zeta_power(self.order // n))

    @property
    def generator(self):
        """The adjoined root of unity z = zeta_order."""
        return FieldElem(self, self._b.zeta_power(1))

    def extend(self, n):
        """The field with the n-th roots of unity adjoined."""
        return make_field(self.mode, lcm(self.order, n))

    def contains_field(self, other):
        return other.mode == self.mode and self.order % other.order == 0

    def __call__(self, value):
        """Coerce an int, Fraction or FieldElem (of a subfield) into this field."""
        if isinstance(value, FieldElem):
            if value.field is self:
                return value
            return self.embed(value)
        if isinstance(value, (int, Fraction)):
            return FieldElem(self, self._b.from_fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def embed(self, a):
        src = a.field
        if not self.contains_field(src):
            raise ModeError(f"{src!r} does not embed in {self!r}")
        if src is self:
            return a
        Cs, Cd = src._b.C, self._b.C
        if self.is_generic:
            num, den = a.v
            num = tuple(_embed_raw(Cs, Cd, c) for c in num)
            den = tuple(_embed_raw(Cs, Cd, c) for c in den)
            return FieldElem(self, (num, den))
        return FieldElem(self, _embed_raw(Cs, Cd, a.v))

    # --- printing --------------------------------------------------------

    def _number_var(self):
        """Variable name used to print elements of Q(zeta_order)."""
        if not self.is_generic and self.order == self.mode.t:
            return "q"
        return "z"

    def format(self, a):
        if self.is_generic:
            return self._format_ratfunc(a.v)
        return _format_number(self._b.C, a.v, self._number_var())

    def _format_ratfunc(self, v):
        num, den = v
        C = self._b.C
        if C.degree == 1 and len(den) > 1:
            num, den = _integer_normalized(num, den)
        s_num = _format_poly(C, num, "q", "z")
        if len(den) == 1 and den[0] == C.one:
            return s_num
        s_den = _format_poly(C, den, "q", "z")
        if _n_terms(num) > 1:
            s_num = f"({s_num})"
        if not _is_atom(s_den):
            s_den = f"({s_den})"
        return f"{s_num}/{s_den}"


def _n_terms(p):
    return sum(1 for c in p if c)


def _is_atom(s):
    return s.isdigit() or (s[:1].isalpha() and all(ch.isalnum() or ch == "^" for ch in s) and "*" not in s)


def _integer_normalized(num, den):
    coeffs = [c for c in num + den if c]
    L = 1
    for c in coeffs:
        L = lcm(L, c.denominator)
    ints = [c * L for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, int(c))
    num = tuple(c * L / g for c in num)
    den = tuple(c * L / g for c in den)
    return num, den


def _format_term(coef, k, var):
    """coef is either a Fraction or a preformatted parenthesised string."""
    mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if isinstance(coef, str):
        return coef if not mono else f"{coef}*{mono}"
    if not mono:
        return str(coef)
    if coef == 1:
        return mono
    if coef == -1:
        return f"-{mono}"
    return f"{coef}*{mono}"


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for s in terms[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


def _format_number(C, a, var):
    coeffs = C.coefficients(a)
    terms = [_format_term(c, k, var) for k, c in reversed(list(enumerate(coeffs))) if c]
    return _join(terms)


def _format_poly(C, p, var, cvar):
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if C.is_zero(c):
            continue
        r = C.rational_value(c)
        if r is None:
            s = _format_number(C, c, cvar)
            if _n_terms(C.coefficients(c)) > 1:
                s = f"({s})"
            terms.append(_format_term(s, k, var))
        else:
            terms.append(_format_term(r, k, var))
    return _join(terms)


class FieldElem:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is self.field:
                return other
            if self.field.contains_field(other.field):
                return self.field.embed(other)
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _wrap(self, v):
        return FieldElem(self.field, v)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field._b.add(self.v, other.v))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field._b.sub(self.v, other.v))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field._b.mul(self.v, other.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field._b.div(self.v, other.v))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return self._wrap(self.field._b.neg(self.v))

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self):
        return self._wrap(self.field._b.inv(self.v))

    def __bool__(self):
        return not self.field._b.is_zero(self.v)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"FieldElem({self})"

    def is_q_power(self):
        return self.field.is_q_power(self)


def make_field(mode, order=None):
    """The (cached) field for ``mode`` containing the ``order``-th roots of unity."""
    base = 1 if mode.kind is FieldKind.GENERIC_Q else mode.t
    order = base if order is None else lcm(order, base)
    return _make_field(mode, order)


@lru_cache(maxsize=None)
def _make_field(mode, order):
    return Field(mode, order)


def generic_field():
    """Q(q) with q transcendental (t = 0)."""
    return make_field(FieldMode(FieldKind.GENERIC_Q, 0))


def root_of_unity_field(t):
    """Q(zeta_t) with q = zeta_t; t = 2 gives q = -1 and K = Q."""
    return make_field(FieldMode(FieldKind.ROOT_OF_UNITY, t))


def fe_q_power(field, k):
    return field.q_power(k)


def fe_is_q_power(a):
    return a.field.is_q_power(a)


def fe_arith(lhs, rhs, op):
    """Dispatch on ``op`` in {"add", "sub", "mul", "div"}."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown op {op!r}")
