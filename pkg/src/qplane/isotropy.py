"""Isotropy groups Aut_delta = {rho : rho sigma = sigma rho, rho delta = delta rho}.

The toric part is the common kernel of the characters (mu1, mu2) -> mu1^u mu2^v
for (u, v) in a lattice Gamma(delta), read off the canonical decomposition
and summarized by its Smith normal form.  At q = -1 flips may centralize
sigma too; that coset is described by monomial equations in the flip
scalars.  :func:`member` is the direct conjugation check everything else is
measured against.
"""

import enum
from dataclasses import dataclass

from .classify import decompose_flip, decompose_toric, flip_residual
from .errors import ModeError, WrongSigmaKind
from .lattice import (
    CharacterLattice,
    cyclic_structure,
    left_kernel,
    snf_invariant_factors,
)
from .qalgebra import Automorphism, QElem, apply_aut, centralizer_contains, twisted_center
from .skewder import apply, conjugate


def member(rho, d):
    """Ground truth: rho commutes with sigma and rho(delta(g)) = delta(rho(g)) for g = x, y."""
    if rho.field is not d.field:
        if rho.field.contains_field(d.field):
            d = d.change_field(rho.field)
        else:
            rho = rho.change_field(d.field)
    if not centralizer_contains(d.sigma, rho):
        return False
    if apply_aut(rho, d.dx) != apply(d, rho.image_x()):
        return False
    return apply_aut(rho, d.dy) == apply(d, rho.image_y())


# --- the character lattice ----------------------------------------------------------


def gamma_lattice(dec, sigma=None):
    """Gamma(delta) from a toric decomposition."""
    sigma = sigma if sigma is not None else dec.sigma
    if not sigma.is_toric:
        raise WrongSigmaKind("the character lattice is defined for toric twists")
    zc = twisted_center(sigma)
    vecs = set()
    for (i, j), c in dec.w:
        if not zc.contains_monomial(i, j):
            vecs.add((i, j))
    for r, c in enumerate(dec.a_poly):
        if c:
            vecs.add((1, -r))
    for s, c in enumerate(dec.b_poly):
        if c:
            vecs.add((-s, 1))
    if dec.mn is not None:
        m, n = dec.mn
        for lam in (dec.lambda1, dec.lambda2):
            for (a, b), c in lam:
                # lambda keys are the exponents of x^(at) y^(bt) themselves
                vecs.add((m + a, n + b))
    return CharacterLattice.from_vectors(vecs)


# --- monomial conditions for the flip coset ---------------------------------------


@dataclass(frozen=True)
class MonomialCondition:
    """prod var_k^exponents[k] = value."""

    exponents: tuple
    value: object
    source: str = ""

    def holds(self, *point):
        field = point[0].field
        lhs = field.one
        for p, e in zip(point, self.exponents):
            lhs = lhs * p**e
        return lhs == field.embed(self.value)

    def __str__(self):
        return f"{self.exponents} = {self.value}"


class FlipPartKind(enum.Enum):
    NOT_APPLICABLE = "not_applicable"
    EMPTY = "empty"
    CONDITIONS = "conditions"


@dataclass(frozen=True)
class FlipPart:
    kind: FlipPartKind
    variables: tuple = ()
    conditions: tuple = ()
    reason: str = ""

    def holds(self, *point):
        if self.kind is not FlipPartKind.CONDITIONS:
            return False
        return all(c.holds(*point) for c in self.conditions)


_NOT_APPLICABLE = FlipPart(FlipPartKind.NOT_APPLICABLE)


def _consistent(conditions, nvars):
    """Solvability over an algebraically closed field: every integer relation among
    the exponent rows must be respected by the right-hand sides."""
    rows = [c.exponents for c in conditions]
    if not rows:
        return True
    for rel in left_kernel(rows, nvars):
        prod = None
        for n, c in zip(rel, conditions):
            if n:
                term = c.value**n
                prod = term if prod is None else prod * term
        if prod is not None and prod != 1:
            return False
    return True


class _Collector:
    """Accumulates equations lhs_coef * monomial = rhs_coef, spotting contradictions."""

    def __init__(self, variables):
        self.variables = variables
        self.conditions = []
        self.reason = ""

    def add(self, exps, coef, rhs, source):
        """coef * prod var^exps = rhs."""
        if self.reason:
            return
        if not coef and not rhs:
            return
        if not coef or not rhs:
            self.reason = f"{source}: unmatched coefficient"
            return
        self.conditions.append(MonomialCondition(tuple(exps), rhs / coef, source))

    def result(self):
        if self.reason:
            return FlipPart(FlipPartKind.EMPTY, self.variables, tuple(self.conditions), self.reason)
        conds = _dedup(self.conditions)
        if not _consistent(conds, len(self.variables)):
            return FlipPart(FlipPartKind.EMPTY, self.variables, conds, "inconsistent monomial equations")
        return FlipPart(FlipPartKind.CONDITIONS, self.variables, conds)


def _dedup(conds):
    seen, out = set(), []
    for c in conds:
        key = (c.exponents, c.value)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return tuple(out)


def _toric_flip_conditions(dec, sigma):
    """Flip coset eta_{u,v} for toric sigma = (gamma, gamma) at q = -1."""
    field = sigma.field
    gamma = sigma.mu1
    col = _Collector(("u", "v"))
    zc = twisted_center(sigma)

    # (i) eta(w) - w in the twisted center; both sides normalized so eta(w) = w off it
    w = dec.w
    keys = {m for m, _ in w} | {(j, i) for (i, j), _ in w}
    for i, j in sorted(keys):
        if zc.contains_monomial(i, j):
            continue
        cji = w.coefficient(j, i)
        sign = -1 if (i * j) % 2 else 1
        col.add((j, i), cji * sign, w.coefficient(i, j), "inner")

    # (ii) a(y) = v^-1 b(uy) and b(x) = u^-1 a(vx)
    a = dict(enumerate(dec.a_poly))
    b = dict(enumerate(dec.b_poly))
    for r in sorted(set(a) | set(b)):
        ar, br = a.get(r, field.zero), b.get(r, field.zero)
        col.add((r, -1), br, ar, "P_x")
        col.add((-1, r), ar, br, "P_y")

    # (iii) lambda1 = c eta(lambda2), lambda2 = c eta(lambda1); c = 1 or -uv
    if dec.mn is not None and (dec.lambda1 or dec.lambda2):
        e, c = (0, 1) if gamma == 1 else (1, -1)
        l1, l2 = dec.lambda1, dec.lambda2
        keys = {m for m, _ in l1} | {m for m, _ in l2}
        keys |= {(j, i) for i, j in keys}
        for i, j in sorted(keys):
            # eta(lambda)[i, j] = lambda[j, i] u^j v^i; exponents are even, so no sign
            col.add((j + e, i + e), c * l2.coefficient(j, i), l1.coefficient(i, j), "D_x")
            col.add((j + e, i + e), c * l1.coefficient(j, i), l2.coefficient(i, j), "D_y")
    return col.result()


# --- descriptors ----------------------------------------------------------------------


@dataclass(frozen=True)
class IsotropyDescriptor:
    """Aut_delta: toric part (lattice + structure) and flip coset.

    For a flip twist the toric part is {rho_mu = toric(mu, mu)}; its conditions
    mu^e = 1 are kept in ``extra_toric_conditions`` and summarized by a
    one-factor ``structure``.  ``slicewise_flip_part`` holds the per-slice
    criterion evaluated on the canonical residual representatives, kept for
    comparison with ``flip_part``.
    """

    sigma: Automorphism
    decomposition: object
    structure: object
    lattice: CharacterLattice = None
    extra_toric_conditions: tuple = ()
    flip_part: FlipPart = _NOT_APPLICABLE
    slicewise_flip_part: FlipPart = None

    def contains(self, rho):
        sigma = self.sigma
        if rho.field is not sigma.field:
            if rho.field.contains_field(sigma.field):
                sigma = sigma.change_field(rho.field)
            else:
                rho = rho.change_field(sigma.field)
        if not centralizer_contains(sigma, rho):
            return False
        if sigma.is_toric:
            if rho.is_toric:
                return self.lattice.contains_point(rho.mu1, rho.mu2)
            return self.flip_part.holds(rho.mu1, rho.mu2)
        mu = rho.mu1
        if rho.is_toric:
            return all(mu**e == 1 for e in self.extra_toric_conditions)
        return self.flip_part.holds(mu)

    def contains_slicewise(self, rho):
        """Like :meth:`contains` but using the per-slice flip criterion."""
        if self.slicewise_flip_part is None or not rho.is_flip:
            return self.contains(rho)
        sigma = self.sigma
        if rho.field is not sigma.field:
            sigma = sigma.change_field(rho.field)
        if not centralizer_contains(sigma, rho):
            return False
        return self.slicewise_flip_part.holds(rho.mu1)


def isotropy_toric_sigma(d):
    sigma = d.sigma
    if not sigma.is_toric:
        raise WrongSigmaKind("isotropy_toric_sigma needs a toric twist")
    dec = decompose_toric(d)
    lat = gamma_lattice(dec, sigma)
    flip = _NOT_APPLICABLE
    if d.field.is_minus_one and sigma.mu1 == sigma.mu2:
        flip = _toric_flip_conditions(dec, sigma)
    return IsotropyDescriptor(
        sigma=sigma,
        decomposition=dec,
        structure=snf_invariant_factors(lat),
        lattice=lat,
        flip_part=flip,
    )


def _eta(sigma, mu=1):
    """eta_mu = flip(mu, (beta/alpha) mu), the flips commuting with flip(alpha, beta)."""
    field = sigma.field
    mu = field(mu)
    return Automorphism.flip(field, mu, sigma.mu2 / sigma.mu1 * mu)


def _by_degree(w):
    out = {}
    for (i, j), c in w:
        out.setdefault(i + j, {})[(i, j)] = c
    return out


def isotropy_flip_sigma(d):
    sigma = d.sigma
    field = d.field
    if not field.is_minus_one:
        raise ModeError("flip twists need q = -1")
    if not sigma.is_flip:
        raise WrongSigmaKind("isotropy_flip_sigma needs a flip twist")
    dec = decompose_flip(d)
    w = dec.w
    s_map = dec.residual_map()

    # G0: rho_mu(w) = w and mu^(k-1) = 1
    exps = sorted({i + j for (i, j), _ in w} | {k - 1 for k in s_map})
    exps = tuple(e for e in exps if e)
    structure = cyclic_structure(exps)

    # G1, exact: eta_mu = eta_1 rho_mu, and eta_1 maps residual R_k to a
    # derivation T_k with its own decomposition (w_Tk, s_Tk)
    eta1 = _eta(sigma)
    w_deg = _by_degree(w)
    t_parts = {}
    for k, s in s_map.items():
        T = conjugate(eta1, flip_residual(sigma, k, 1))
        tdec = decompose_flip(T)
        t_parts[k] = (tdec.w.scale(s), tdec.residual_map().get(k, field.zero))
    col = _Collector(("mu",))
    degrees = set(w_deg) | {k - 1 for k in s_map}
    for deg in sorted(degrees):
        wd = QElem(field, w_deg.get(deg, {}))
        lhs = apply_aut(eta1, wd)
        if deg + 1 in t_parts:
            lhs = lhs + t_parts[deg + 1][0]
        keys = {m for m, _ in lhs} | {m for m, _ in wd}
        for m in sorted(keys):
            col.add((deg,), lhs.coefficient(*m), wd.coefficient(*m), "inner")
    for k in sorted(s_map):
        st = t_parts[k][1]
        col.add((k - 1,), s_map[k] * st, s_map[k], f"slice {k}")
    flip = col.result()

    slicewise = _slicewise_flip_conditions(dec, sigma)
    return IsotropyDescriptor(
        sigma=sigma,
        decomposition=dec,
        structure=structure,
        extra_toric_conditions=exps,
        flip_part=flip,
        slicewise_flip_part=slicewise,
    )


def _slicewise_flip_conditions(dec, sigma):
    """eta_mu(w) = w plus, per slice with b = (s, 0, ..., 0),
    b_r = -beta^-1 mu^(k-1) (-1)^(k-r+r(k-r)) (beta/alpha)^(k-r) b_(k-r)."""
    field = sigma.field
    alpha, beta = sigma.mu1, sigma.mu2
    g = beta / alpha
    col = _Collector(("mu",))
    w = dec.w
    keys = {m for m, _ in w} | {(j, i) for (i, j), _ in w}
    for i, j in sorted(keys):
        sign = -1 if (i * j) % 2 else 1
        col.add((i + j,), w.coefficient(j, i) * g**i * sign, w.coefficient(i, j), "inner")
    for k, s in dec.slices:
        b = [s] + [field.zero] * k
        for r in range(k + 1):
            sign = -1 if (k - r + r * (k - r)) % 2 else 1
            coef = -sign * g ** (k - r) * b[k - r] / beta
            col.add((k - 1,), coef, b[r], f"slice {k}")
    return col.result()


def isotropy(d):
    if d.sigma.is_toric:
        return isotropy_toric_sigma(d)
    return isotropy_flip_sigma(d)


# --- sampling ----------------------------------------------------------------------------


def centralizer_sample(sigma, N):
    """All centralizer elements of sigma whose scalars are N-th roots of unity.

    Works in the smallest field containing sigma's field and zeta_N; returns
    (automorphisms, labels) where a label records the exponents used.
    """
    field = sigma.field.extend(N)
    sigma = sigma.change_field(field)
    z = [field.zeta(N) ** k for k in range(N)]
    out = []
    if sigma.is_toric:
        for a in range(N):
            for b in range(N):
                rho = Automorphism.toric(field, z[a], z[b])
                if centralizer_contains(sigma, rho):
                    out.append((rho, ("toric", a, b)))
        if field.is_minus_one:
            for a in range(N):
                for b in range(N):
                    rho = Automorphism.flip(field, z[a], z[b])
                    if centralizer_contains(sigma, rho):
                        out.append((rho, ("flip", a, b)))
    else:
        for a in range(N):
            out.append((Automorphism.toric(field, z[a], z[a]), ("toric", a, a)))
        for a in range(N):
            out.append((_eta(sigma, z[a]), ("flip", a)))
    return out


def oracle_discrepancies(d, Ns=range(1, 7), desc=None, slicewise=False):
    """Sampled rho where the structural answer and :func:`member` disagree."""
    desc = desc if desc is not None else isotropy(d)
    bad = []
    for N in Ns:
        for rho, label in centralizer_sample(d.sigma, N):
            truth = member(rho, d)
            claim = desc.contains_slicewise(rho) if slicewise else desc.contains(rho)
            if truth != claim:
                bad.append((N, label, truth, claim))
    return bad


__all__ = [
    "FlipPart",
    "FlipPartKind",
    "IsotropyDescriptor",
    "MonomialCondition",
    "centralizer_sample",
    "gamma_lattice",
    "isotropy",
    "isotropy_flip_sigma",
    "isotropy_toric_sigma",
    "member",
    "oracle_discrepancies",
]
