"""The quantum plane k_q[x, y] with xy = q*yx.

Elements are kept in the normal form sum c_ij y^j x^i.  Monomials are keyed
by ``(i, j)`` = (x-exponent, y-exponent) everywhere in the package, so that
exponent pairs line up with character lattice vectors later on.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .coeffield import FieldElem
from .errors import ModeError


class QElem:
    """Immutable element of k_q[x, y] over a coefficient :class:`~qplane.coeffield.Field`."""

    __slots__ = ("field", "_t", "_hash")

    def __init__(self, field, terms=None):
        self.field = field
        t = {}
        if terms:
            for key, c in terms.items():
                c = field(c)
                if c:
                    i, j = key
                    if i < 0 or j < 0:
                        raise ValueError(f"negative exponent in monomial {key}")
                    t[(int(i), int(j))] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, field, t):
        # trusted constructor: t already has nonzero coefficients of this field
        obj = cls.__new__(cls)
        obj.field = field
        obj._t = t
        obj._hash = None
        return obj

    # --- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls._raw(field, {})

    @classmethod
    def scalar(cls, field, c):
        return cls(field, {(0, 0): c})

    @classmethod
    def monomial(cls, field, i, j, c=1):
        """c * y^j x^i."""
        return cls(field, {(i, j): c})

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1, 0)

    @classmethod
    def y(cls, field):
        return cls.monomial(field, 0, 1)

    # --- access ----------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._t)

    def coefficient(self, i, j):
        return self._t.get((i, j), self.field.zero)

    def support(self):
        return sorted(self._t)

    def __iter__(self):
        return iter(self._t.items())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def degree(self):
        """Total degree; -1 for zero."""
        return max((i + j for i, j in self._t), default=-1)

    def homogeneous_part(self, k):
        return QElem._raw(self.field, {m: c for m, c in self._t.items() if m[0] + m[1] == k})

    def is_scalar(self):
        return all(m == (0, 0) for m in self._t)

    def change_field(self, field):
        """Embed into a field containing this one (e.g. after adjoining roots of unity)."""
        if field is self.field:
            return self
        return QElem._raw(field, {m: field.embed(c) for m, c in self._t.items()})

    def map_coefficients(self, f):
        return QElem(self.field, {m: f(c) for m, c in self._t.items()})

    # --- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QElem):
            if other.field is self.field:
                return other
            if self.field.contains_field(other.field):
                return other.change_field(self.field)
            raise ModeError(f"elements over {other.field!r} and {self.field!r} do not mix")
        if isinstance(other, (int, Fraction, FieldElem)):
            return QElem.scalar(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for m, c in other._t.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s:
                    t[m] = s
                else:
                    del t[m]
        return QElem._raw(self.field, t)

    __radd__ = __add__

    def __neg__(self):
        return QElem._raw(self.field, {m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field(c)
        if not c:
            return QElem.zero(self.field)
        return QElem._raw(self.field, {m: c * v for m, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return q_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QElem.scalar(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = QElem.scalar(self.field, other)
        if not isinstance(other, QElem):
            return NotImplemented
        if other.field is not self.field:
            try:
                other = self._coerce(other)
            except ModeError:
                return False
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # --- printing --------------------------------------------------------

    def __str__(self):
        return format_qelem(self)

    def __repr__(self):
        return f"QElem({self})"


def _top_level_sign(s):
    """True if s (ignoring a leading minus) has a + or - outside parentheses."""
    depth = 0
    for ch in s[1:] if s.startswith("-") else s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            return True
    return False


def _monomial_text(i, j):
    parts = []
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    return "*".join(parts)


def format_qelem(a):
    """Text form: terms c*y^j*x^i sorted by (j, i) descending."""
    if not a:
        return "0"
    pieces = []
    lone = len(a) == 1
    for (i, j) in sorted(a._t, key=lambda m: (m[1], m[0]), reverse=True):
        c = str(a._t[(i, j)])
        mono = _monomial_text(i, j)
        if not mono:
            term = f"({c})" if (_top_level_sign(c) and not lone) else c
        elif c == "1":
            term = mono
        elif c == "-1":
            term = "-" + mono
        else:
            if _top_level_sign(c):
                c = f"({c})"
            term = f"{c}*{mono}"
        pieces.append(term)
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def q_mul(a, b):
    """Product in normal form: (y^j1 x^i1)(y^j2 x^i2) = q^(i1 j2) y^(j1+j2) x^(i1+i2)."""
    if a.field is not b.field:
        b = a._coerce(b)
    field = a.field
    qp = field.q_power
    out = {}
    for (i1, j1), c1 in a._t.items():
        for (i2, j2), c2 in b._t.items():
            c = c1 * c2
            if i1 and j2:
                c = c * qp(i1 * j2)
            key = (i1 + i2, j1 + j2)
            s = out.get(key)
            out[key] = c if s is None else s + c
    return QElem._raw(field, {m: c for m, c in out.items() if c})


def center_membership(a):
    """True iff a lies in Z(k_q[x,y]) = k[x^t, y^t] (just k when t = 0)."""
    t = a.field.t
    if t == 0:
        return a.is_scalar()
    return all(i % t == 0 and j % t == 0 for i, j in a._t)


# --- automorphisms ------------------------------------------------------


class AutKind(enum.Enum):
    TORIC = "toric"
    FLIP = "flip"


@dataclass(frozen=True, eq=False)
class Automorphism:
    """Toric x -> mu1 x, y -> mu2 y, or (q = -1 only) flip x -> mu1 y, y -> mu2 x."""

    kind: AutKind
    mu1: FieldElem
    mu2: FieldElem

    def __post_init__(self):
        if self.mu1.field is not self.mu2.field:
            raise ModeError("automorphism scalars must share a field")
        if not self.mu1 or not self.mu2:
            raise ValueError("automorphism scalars must be nonzero")
        if self.kind is AutKind.FLIP and not self.field.is_minus_one:
            raise ModeError("flip automorphisms exist only for q = -1")

    @classmethod
    def toric(cls, field, mu1=1, mu2=1):
        return cls(AutKind.TORIC, field(mu1), field(mu2))

    @classmethod
    def flip(cls, field, mu1=1, mu2=1):
        return cls(AutKind.FLIP, field(mu1), field(mu2))

    @classmethod
    def identity(cls, field):
        return cls.toric(field, 1, 1)

    @property
    def field(self):
        return self.mu1.field

    @property
    def is_toric(self):
        return self.kind is AutKind.TORIC

    @property
    def is_flip(self):
        return self.kind is AutKind.FLIP

    def is_identity(self):
        return self.is_toric and self.mu1 == 1 and self.mu2 == 1

    def image_x(self):
        if self.is_toric:
            return QElem.monomial(self.field, 1, 0, self.mu1)
        return QElem.monomial(self.field, 0, 1, self.mu1)

    def image_y(self):
        if self.is_toric:
            return QElem.monomial(self.field, 0, 1, self.mu2)
        return QElem.monomial(self.field, 1, 0, self.mu2)

    def inverse(self):
        if self.is_toric:
            return Automorphism(AutKind.TORIC, self.mu1.inverse(), self.mu2.inverse())
        return Automorphism(AutKind.FLIP, self.mu2.inverse(), self.mu1.inverse())

    def change_field(self, field):
        if field is self.field:
            return self
        return Automorphism(self.kind, field.embed(self.mu1), field.embed(self.mu2))

    def __call__(self, a):
        return apply_aut(self, a)

    def __matmul__(self, other):
        return aut_compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.kind is other.kind and self.mu1 == other.mu1 and self.mu2 == other.mu2

    def __hash__(self):
        return hash((self.kind, self.mu1, self.mu2))

    def __str__(self):
        return f"{self.kind.value}:{self.mu1},{self.mu2}"


def apply_aut(rho, a):
    """rho(a).  Flip: y^j x^i -> mu1^i mu2^j (-1)^(ij) y^i x^j."""
    if a.field is not rho.field:
        if rho.field.contains_field(a.field):
            a = a.change_field(rho.field)
        else:
            rho = rho.change_field(a.field)
    p1, p2 = {}, {}

    def pw(cache, base, k):
        v = cache.get(k)
        if v is None:
            v = cache[k] = base**k
        return v

    out = {}
    for (i, j), c in a._t.items():
        c = c * pw(p1, rho.mu1, i) * pw(p2, rho.mu2, j)
        if rho.is_toric:
            out[(i, j)] = c
        else:
            out[(j, i)] = -c if (i * j) % 2 else c
    return QElem._raw(a.field, out)


def aut_compose(f, g):
    """f o g, i.e. first g then f."""
    if f.is_toric and g.is_toric:
        return Automorphism(AutKind.TORIC, f.mu1 * g.mu1, f.mu2 * g.mu2)
    if f.is_flip and g.is_toric:
        # x -> g1 x -> g1 f1 y
        return Automorphism(AutKind.FLIP, g.mu1 * f.mu1, g.mu2 * f.mu2)
    if f.is_toric and g.is_flip:
        # x -> g1 y -> g1 f2 y
        return Automorphism(AutKind.FLIP, g.mu1 * f.mu2, g.mu2 * f.mu1)
    # x -> g1 y -> g1 f2 x
    return Automorphism(AutKind.TORIC, g.mu1 * f.mu2, g.mu2 * f.mu1)


def centralizer_contains(sigma, rho):
    """True iff rho sigma = sigma rho."""
    return aut_compose(rho, sigma) == aut_compose(sigma, rho)


# --- the sigma-twisted center ------------------------------------------------


class TwistedCenterKind(enum.Enum):
    ZERO = "zero"
    FULL_POLYNOMIAL_CENTER = "center"
    CENTER_TIMES_MONOMIAL = "center_times_monomial"


@dataclass(frozen=True)
class TwistedCenterDesc:
    """{a : a sigma(b) = b a for all b}, described as {0}, k[x^t,y^t] or k[x^t,y^t] y^j x^i."""

    kind: TwistedCenterKind
    t: int
    monomial: tuple = None

    def contains(self, a):
        if not a:
            return True
        if self.kind is TwistedCenterKind.ZERO:
            return False
        i0, j0 = self.monomial or (0, 0)
        t = self.t
        if t == 0:
            return all((i, j) == (i0, j0) for i, j in a.support())
        return all(i >= i0 and j >= j0 and (i - i0) % t == 0 and (j - j0) % t == 0 for i, j in a.support())

    def contains_monomial(self, i, j):
        if self.kind is TwistedCenterKind.ZERO:
            return False
        i0, j0 = self.monomial or (0, 0)
        if self.t == 0:
            return (i, j) == (i0, j0)
        return i >= i0 and j >= j0 and (i - i0) % self.t == 0 and (j - j0) % self.t == 0

    def __str__(self):
        t = self.t
        base = "k" if t == 0 else f"k[x^{t},y^{t}]"
        if self.kind is TwistedCenterKind.ZERO:
            return "0"
        if self.kind is TwistedCenterKind.FULL_POLYNOMIAL_CENTER:
            return base
        mono = _monomial_text(*self.monomial)
        return f"{base}*{mono}"


def twisted_center_exponents(sigma):
    """Least (i, j) >= 0 with alpha = q^j and beta = q^(-i) for toric sigma, else None."""
    if not sigma.is_toric:
        return None
    field = sigma.field
    j = field.is_q_power(sigma.mu1)
    e = field.is_q_power(sigma.mu2)
    if j is None or e is None:
        return None
    if field.t:
        return ((-e) % field.t, j)
    if j < 0 or e > 0:
        return None
    return (-e, j)


def twisted_center(sigma):
    field = sigma.field
    ij = twisted_center_exponents(sigma)
    if ij is None:
        return TwistedCenterDesc(TwistedCenterKind.ZERO, field.t)
    if ij == (0, 0):
        return TwistedCenterDesc(TwistedCenterKind.FULL_POLYNOMIAL_CENTER, field.t, (0, 0))
    return TwistedCenterDesc(TwistedCenterKind.CENTER_TIMES_MONOMIAL, field.t, ij)
