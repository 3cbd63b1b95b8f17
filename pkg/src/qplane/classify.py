"""Canonical decomposition of sigma-derivations into inner and outer parts.

Toric twist sigma = (alpha, beta):

    delta = P_x + P_y + lambda1 D_x + lambda2 D_y + [w, _]_sigma

with P_x(x) = a(y), P_y(y) = b(x) (nonzero only for beta = q, resp.
alpha = q^-1), D_x(x) = (y^n x^m) x, D_y(y) = (y^n x^m) y where (m, n) is
the twisted-center exponent of sigma, lambda1, lambda2 central, and w free
of twisted-center monomials.

Flip twist at q = -1: every homogeneous slice delta_k is inner unless
alpha beta = (-1)^k, in which case it is inner plus a multiple s of the
canonical slice x -> -s beta^-1 x^k, y -> s x^k.
"""

from dataclasses import dataclass, field as dc_field

from .errors import ModeError, QPlaneError, WrongSigmaKind
from .qalgebra import QElem, twisted_center_exponents
from .skewder import SigmaDerivation, inner_from, split_x_image, split_y_image


class DecompositionError(QPlaneError, RuntimeError):
    """Internal consistency failure; signals an invalid input slipped past validation."""


# --- toric -----------------------------------------------------------------------


@dataclass(frozen=True)
class ToricDecomposition:
    sigma: object
    w: QElem
    a_poly: tuple = ()
    b_poly: tuple = ()
    mn: tuple = None
    lambda1: QElem = None
    lambda2: QElem = None

    def components(self):
        """Nonzero summands keyed by family name."""
        s = self.sigma
        out = {}
        if self.w:
            out["inner"] = inner_from(self.w, s)
        if self.a_poly:
            out["P_x"] = px_derivation(s, self.a_poly)
        if self.b_poly:
            out["P_y"] = py_derivation(s, self.b_poly)
        if self.lambda1:
            out["D_x"] = dx_family(s, self.lambda1)
        if self.lambda2:
            out["D_y"] = dy_family(s, self.lambda2)
        return out

    def outer_part(self):
        d = SigmaDerivation.zero(self.sigma)
        for name, c in self.components().items():
            if name != "inner":
                d = d + c
        return d


def _poly_tuple(field, coeffs):
    """Dense coefficient tuple from {power: coeff}, trailing zeros stripped."""
    if not coeffs:
        return ()
    n = max(coeffs) + 1
    return tuple(coeffs.get(k, field.zero) for k in range(n))


def _require_mn(sigma):
    mn = twisted_center_exponents(sigma)
    if mn is None:
        raise ValueError(f"sigma = {sigma} has zero twisted center; D_x and D_y do not exist")
    return mn


def px_derivation(sigma, a):
    """x -> a(y), y -> 0; a is a coefficient sequence a_0, a_1, ... (needs beta = q)."""
    field = sigma.field
    dx = QElem(field, {(0, r): c for r, c in enumerate(a)})
    return SigmaDerivation(sigma, dx, QElem.zero(field))


def py_derivation(sigma, b):
    """x -> 0, y -> b(x) (needs alpha = q^-1)."""
    field = sigma.field
    dy = QElem(field, {(s, 0): c for s, c in enumerate(b)})
    return SigmaDerivation(sigma, QElem.zero(field), dy)


def dx_family(sigma, lam=1):
    """x -> lam (y^n x^m) x, y -> 0 for central lam."""
    field = sigma.field
    m, n = _require_mn(sigma)
    lam = lam if isinstance(lam, QElem) else QElem.scalar(field, lam)
    dx = lam * QElem.monomial(field, m + 1, n)
    return SigmaDerivation(sigma, dx, QElem.zero(field))


def dy_family(sigma, lam=1):
    """x -> 0, y -> lam (y^n x^m) y for central lam."""
    field = sigma.field
    m, n = _require_mn(sigma)
    lam = lam if isinstance(lam, QElem) else QElem.scalar(field, lam)
    dy = lam * QElem.monomial(field, m, n) * QElem.y(field)
    return SigmaDerivation(sigma, QElem.zero(field), dy)


def decompose_toric(d):
    """Split a sigma-derivation with toric sigma into its canonical components."""
    sigma = d.sigma
    if not sigma.is_toric:
        raise WrongSigmaKind("decompose_toric needs a toric twist")
    field = d.field
    q = field.q
    t = field.t
    alpha, beta = sigma.mu1, sigma.mu2
    a, c = split_x_image(d.dx)
    b, dd = split_y_image(d.dy)

    if a and beta != q:
        raise DecompositionError("pure y-part in delta(x) although beta != q")
    if b and alpha != q.inverse():
        raise DecompositionError("pure x-part in delta(y) although alpha != q^-1")

    mn = twisted_center_exponents(sigma)
    ax_cache, by_cache = {}, {}
    w, lam1, lam2 = {}, {}, {}
    for ij in set(c) | set(dd):
        i, j = ij
        cij = c.get(ij, field.zero)
        dij = dd.get(ij, field.zero)
        ax = ax_cache.get(j)
        if ax is None:
            ax = ax_cache[j] = alpha - field.q_power(j)
        by = by_cache.get(i)
        if by is None:
            by = by_cache[i] = beta - field.q_power(-i)
        if cij * by != dij * ax:
            raise DecompositionError(f"coefficients at {ij} violate the compatibility identity")
        if ax:
            w[ij] = cij / ax
        elif by:
            w[ij] = dij / by
        else:
            # twisted-center pattern: alpha = q^j, beta = q^-i
            m, n = mn
            if t:
                key = (i - m, j - n)
            else:
                key = (0, 0)
            if cij:
                lam1[key] = cij
            if dij:
                lam2[key] = dij
    return ToricDecomposition(
        sigma=sigma,
        w=QElem(field, w),
        a_poly=_poly_tuple(field, a),
        b_poly=_poly_tuple(field, b),
        mn=mn,
        lambda1=QElem(field, lam1),
        lambda2=QElem(field, lam2),
    )


# --- flip ------------------------------------------------------------------------


@dataclass(frozen=True)
class FlipDecomposition:
    """w plus the canonical residual slices as (k, s) pairs with s != 0."""

    sigma: object
    w: QElem
    slices: tuple = dc_field(default=())

    def components(self):
        out = {}
        if self.w:
            out["inner"] = inner_from(self.w, self.sigma)
        for k, s in self.slices:
            out[f"residual_{k}"] = flip_residual(self.sigma, k, s)
        return out

    def residual_map(self):
        return dict(self.slices)


def _require_flip(sigma):
    if not sigma.field.is_minus_one:
        raise ModeError("flip decomposition needs q = -1")
    if not sigma.is_flip:
        raise WrongSigmaKind("decompose_flip needs a flip twist")


def flip_residual(sigma, k, s=1):
    """The canonical non-inner slice of degree k: x -> -s beta^-1 x^k, y -> s x^k."""
    _require_flip(sigma)
    field = sigma.field
    alpha, beta = sigma.mu1, sigma.mu2
    if alpha * beta != (-1) ** k:
        raise ValueError(f"degree {k} slices are all inner for sigma = {sigma}")
    s = field(s)
    dx = QElem.monomial(field, k, 0, -s / beta)
    dy = QElem.monomial(field, k, 0, s)
    return SigmaDerivation(sigma, dx, dy)


def flip_slice(sigma, k, b):
    """General degree-k slice with delta(y) = sum b_l y^l x^(k-l), when alpha beta = (-1)^k.

    delta(x) is then forced: a_l = -beta^-1 (-1)^l b_l.
    """
    _require_flip(sigma)
    field = sigma.field
    beta = sigma.mu2
    dx, dy = {}, {}
    for l, bl in enumerate(b):
        bl = field(bl)
        dy[(k - l, l)] = bl
        dx[(k - l, l)] = -bl / beta if l % 2 == 0 else bl / beta
    return SigmaDerivation(sigma, QElem(field, dx), QElem(field, dy))


def _slice_witness(field, beta, k, b):
    """w_k = -sum_{l=1..k} (sum_{r=l..k} b_r beta^(r-l)) y^(l-1) x^(k-l)."""
    w = {}
    acc = field.zero
    # accumulate inner sums from the top: S_l = b_l + beta S_(l+1)
    for l in range(k, 0, -1):
        acc = b.get(l, field.zero) + beta * acc
        if acc:
            w[(k - l, l - 1)] = -acc
    return w


def decompose_flip(d):
    """Split a sigma-derivation with flip sigma (q = -1) into w and residual slices."""
    sigma = d.sigma
    _require_flip(sigma)
    field = d.field
    alpha, beta = sigma.mu1, sigma.mu2
    ab = alpha * beta
    w = {}
    slices = []
    for k in range(0, d.degree() + 1):
        dxk, dyk = d.dx.homogeneous_part(k), d.dy.homogeneous_part(k)
        if not dxk and not dyk:
            continue
        b = {l: dyk.coefficient(k - l, l) for l in range(k + 1)}
        wk = _slice_witness(field, beta, k, b)
        inner = inner_from(QElem(field, wk), sigma)
        rest_x, rest_y = dxk - inner.dx, dyk - inner.dy
        s = field.zero
        if ab == (-1) ** k:
            s = b[0]
            bp = beta
            for r in range(1, k + 1):
                s = s + b[r] * bp
                bp = bp * beta
        if s:
            res = flip_residual(sigma, k, s)
            rest_x, rest_y = rest_x - res.dx, rest_y - res.dy
            slices.append((k, s))
        if rest_x or rest_y:
            raise DecompositionError(f"degree {k} slice is not inner plus canonical residual")
        w.update(wk)
    return FlipDecomposition(sigma=sigma, w=QElem(field, w), slices=tuple(slices))


# --- dispatch ----------------------------------------------------------------------


def decompose(d):
    if d.sigma.is_toric:
        return decompose_toric(d)
    return decompose_flip(d)


def recombine(dec):
    """Sum of the components; inverse of :func:`decompose`."""
    total = SigmaDerivation.zero(dec.sigma)
    for part in dec.components().values():
        total = total + part
    return total


__all__ = [
    "DecompositionError",
    "FlipDecomposition",
    "ToricDecomposition",
    "decompose",
    "decompose_flip",
    "decompose_toric",
    "dx_family",
    "dy_family",
    "flip_residual",
    "flip_slice",
    "px_derivation",
    "py_derivation",
    "recombine",
]
