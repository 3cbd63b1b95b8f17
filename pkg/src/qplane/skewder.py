"""sigma-derivations of the quantum plane.

A sigma-derivation is stored by its generator images ``dx = delta(x)`` and
``dy = delta(y)``; it extends to the whole algebra through the twisted
Leibniz rule delta(ab) = delta(a) sigma(b) + a delta(b).
"""

from fractions import Fraction

from .coeffield import FieldElem
from .errors import IncompatibleImages, ModeError
from .linalg import solve
from .qalgebra import Automorphism, QElem, apply_aut, twisted_center_exponents


def compatibility_residual(sigma, dx, dy):
    """u sigma(y) + x v - q (v sigma(x) + y u) for u = dx, v = dy."""
    field = sigma.field
    x, y = QElem.x(field), QElem.y(field)
    sx, sy = sigma.image_x(), sigma.image_y()
    return dx * sy + x * dy - (dy * sx + y * dx).scale(field.q)


class SigmaDerivation:
    """A validated sigma-derivation; construction rejects incompatible images."""

    __slots__ = ("sigma", "dx", "dy", "_cache")

    def __init__(self, sigma, dx, dy, *, check=True):
        field = sigma.field
        dx = _as_qelem(field, dx)
        dy = _as_qelem(field, dy)
        if check:
            residual = compatibility_residual(sigma, dx, dy)
            if residual:
                raise IncompatibleImages(residual)
        self.sigma = sigma
        self.dx = dx
        self.dy = dy
        self._cache = {}

    @property
    def field(self):
        return self.sigma.field

    @classmethod
    def zero(cls, sigma):
        z = QElem.zero(sigma.field)
        return cls(sigma, z, z, check=False)

    def is_zero(self):
        return not self.dx and not self.dy

    def __bool__(self):
        return not self.is_zero()

    def __call__(self, a):
        return apply(self, a)

    def _same_twist(self, other):
        if not isinstance(other, SigmaDerivation):
            return False
        if other.sigma != self.sigma:
            raise ValueError("sigma-derivations with different twists do not add")
        return True

    def __add__(self, other):
        if not self._same_twist(other):
            return NotImplemented
        return SigmaDerivation(self.sigma, self.dx + other.dx, self.dy + other.dy, check=False)

    def __sub__(self, other):
        if not self._same_twist(other):
            return NotImplemented
        return SigmaDerivation(self.sigma, self.dx - other.dx, self.dy - other.dy, check=False)

    def __neg__(self):
        return SigmaDerivation(self.sigma, -self.dx, -self.dy, check=False)

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction, FieldElem)):
            return NotImplemented
        return SigmaDerivation(self.sigma, self.dx.scale(c), self.dy.scale(c), check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SigmaDerivation):
            return NotImplemented
        return self.sigma == other.sigma and self.dx == other.dx and self.dy == other.dy

    def __hash__(self):
        return hash((self.sigma, self.dx, self.dy))

    def change_field(self, field):
        if field is self.field:
            return self
        return SigmaDerivation(
            self.sigma.change_field(field),
            self.dx.change_field(field),
            self.dy.change_field(field),
            check=False,
        )

    def homogeneous_part(self, k):
        """The slice whose images have total degree k (a derivation again when sigma is graded)."""
        return SigmaDerivation(self.sigma, self.dx.homogeneous_part(k), self.dy.homogeneous_part(k), check=False)

    def degree(self):
        return max(self.dx.degree(), self.dy.degree())

    def __repr__(self):
        return f"SigmaDerivation(sigma={self.sigma}, dx={self.dx}, dy={self.dy})"


def _as_qelem(field, a):
    if isinstance(a, QElem):
        if a.field is not field:
            if not field.contains_field(a.field):
                raise ModeError(f"{a.field!r} does not embed in {field!r}")
            a = a.change_field(field)
        return a
    return QElem.scalar(field, a)


def validate(sigma, dx, dy):
    """The sigma-derivation with delta(x) = dx, delta(y) = dy; raises IncompatibleImages."""
    return SigmaDerivation(sigma, dx, dy)


# --- evaluation ---------------------------------------------------------------


def _power_images(d, gen):
    """(delta(g^k), sigma(g^k)) lists for the generator g in {"x", "y"}, grown lazily."""
    key = "p" + gen
    entry = d._cache.get(key)
    if entry is None:
        field = d.field
        one = QElem.scalar(field, 1)
        entry = d._cache[key] = ([QElem.zero(field)], [one], [one])  # delta, sigma, g^k
    return entry


def _gen_power(d, gen, k):
    deltas, sigmas, powers = _power_images(d, gen)
    if len(deltas) <= k:
        field = d.field
        g = QElem.x(field) if gen == "x" else QElem.y(field)
        dg = d.dx if gen == "x" else d.dy
        sg = d.sigma.image_x() if gen == "x" else d.sigma.image_y()
        while len(deltas) <= k:
            # delta(g^m) = delta(g^(m-1)) sigma(g) + g^(m-1) delta(g)
            deltas.append(deltas[-1] * sg + powers[-1] * dg)
            sigmas.append(sigmas[-1] * sg)
            powers.append(powers[-1] * g)
    return deltas[k], sigmas[k], powers[k]


def apply_monomial(d, i, j):
    """delta(y^j x^i) = delta(y^j) sigma(x^i) + y^j delta(x^i)."""
    mono = d._cache.setdefault("mono", {})
    v = mono.get((i, j))
    if v is None:
        dxi, sxi, _ = _gen_power(d, "x", i)
        dyj, _, yj = _gen_power(d, "y", j)
        v = mono[(i, j)] = dyj * sxi + yj * dxi
    return v


def apply(d, a):
    """delta(a) for any a, by the twisted Leibniz rule."""
    a = _as_qelem(d.field, a)
    out = QElem.zero(d.field)
    for (i, j), c in a:
        if i == 0 and j == 0:
            continue
        out = out + apply_monomial(d, i, j).scale(c)
    return out


# --- inner sigma-derivations ----------------------------------------------------


def inner_from(w, sigma):
    """[w, _]_sigma : b -> w sigma(b) - b w."""
    field = sigma.field
    w = _as_qelem(field, w)
    x, y = QElem.x(field), QElem.y(field)
    dx = w * sigma.image_x() - x * w
    dy = w * sigma.image_y() - y * w
    return SigmaDerivation(sigma, dx, dy, check=False)


def conjugate(rho, d):
    """rho delta rho^-1, a (rho sigma rho^-1)-derivation."""
    field = rho.field
    if d.field is not field:
        if field.contains_field(d.field):
            d = d.change_field(field)
        else:
            rho = rho.change_field(d.field)
            field = d.field
    inv = rho.inverse()
    twist = rho @ d.sigma @ inv
    dx = apply_aut(rho, apply(d, inv.image_x()))
    dy = apply_aut(rho, apply(d, inv.image_y()))
    return SigmaDerivation(twist, dx, dy, check=False)


# --- innerness -------------------------------------------------------------------


def split_x_image(dx):
    """dx = sum_r a_r y^r + (sum c_ij y^j x^i) x; returns ({r: a_r}, {(i, j): c_ij})."""
    a, c = {}, {}
    for (i, j), v in dx:
        if i == 0:
            a[j] = v
        else:
            c[(i - 1, j)] = v
    return a, c


def split_y_image(dy):
    """dy = sum_s b_s x^s + (sum d_ij y^j x^i) y; returns ({s: b_s}, {(i, j): d_ij})."""
    field = dy.field
    b, d = {}, {}
    for (i, j), v in dy:
        if j == 0:
            b[i] = v
        else:
            # (y^(j-1) x^i) y = q^i y^j x^i
            d[(i, j - 1)] = v / field.q_power(i) if i else v
    return b, d


def _is_inner_toric(d):
    field = d.field
    alpha, beta = d.sigma.mu1, d.sigma.mu2
    a, c = split_x_image(d.dx)
    b, dd = split_y_image(d.dy)
    if a or b:
        return None
    w = {}
    for ij in set(c) | set(dd):
        i, j = ij
        cij = c.get(ij, field.zero)
        dij = dd.get(ij, field.zero)
        ax = alpha - field.q_power(j)
        by = beta - field.q_power(-i)
        if ax:
            wij = cij / ax
            if dij != wij * by:
                return None
        elif by:
            if cij:
                return None
            wij = dij / by
        else:
            if cij or dij:
                return None
            continue
        if wij:
            w[ij] = wij
    return QElem(field, w)


def inner_witness_by_slices(d):
    """Innerness by solving, degree by degree, the linear system for a witness.

    Works for any graded twist (toric or flip).  Free unknowns are those
    monomials inducing the zero derivation and are set to 0, so the witness
    has no twisted-center component.
    """
    field = d.field
    sigma = d.sigma
    w = QElem.zero(field)
    for k in range(0, d.degree() + 1):
        dxk, dyk = d.dx.homogeneous_part(k), d.dy.homogeneous_part(k)
        if not dxk and not dyk:
            continue
        if k == 0:
            return None
        unknowns = [(k - 1 - j, j) for j in range(k)]
        cols = [inner_from(QElem.monomial(field, i, j), sigma) for i, j in unknowns]
        rows_keys = [(k - j, j) for j in range(k + 1)]
        A, rhs = [], []
        for key in rows_keys:
            A.append([col.dx.coefficient(*key) for col in cols])
            rhs.append(dxk.coefficient(*key))
        for key in rows_keys:
            A.append([col.dy.coefficient(*key) for col in cols])
            rhs.append(dyk.coefficient(*key))
        sol = solve(A, rhs, field)
        if sol is None:
            return None
        w = w + QElem(field, dict(zip(unknowns, sol)))
    return w


def is_inner(d):
    """A witness w with inner_from(w, sigma) == d, normalized to have no twisted-center part; else None."""
    if d.sigma.is_toric:
        return _is_inner_toric(d)
    return inner_witness_by_slices(d)


def twisted_center_component(w, sigma):
    """The part of w lying in the sigma-twisted center."""
    ij = twisted_center_exponents(sigma)
    if ij is None:
        return QElem.zero(w.field)
    from .qalgebra import twisted_center

    desc = twisted_center(sigma)
    return QElem(w.field, {m: c for m, c in w if desc.contains_monomial(*m)})


__all__ = [
    "Automorphism",
    "SigmaDerivation",
    "apply",
    "apply_monomial",
    "compatibility_residual",
    "conjugate",
    "inner_from",
    "inner_witness_by_slices",
    "is_inner",
    "split_x_image",
    "split_y_image",
    "twisted_center_component",
    "validate",
]
