"""Shared test machinery: oracles, random generators and the fixture catalogue."""

import random
from functools import lru_cache

from qplane import (
    Automorphism,
    QElem,
    SigmaDerivation,
    dx_family,
    dy_family,
    flip_residual,
    flip_slice,
    generic_field,
    inner_from,
    px_derivation,
    py_derivation,
    root_of_unity_field,
    validate,
)
from qplane.linalg import nullspace
from qplane.skewder import compatibility_residual

GENERIC = generic_field()
T3 = root_of_unity_field(3)
T2 = root_of_unity_field(2)
T4 = root_of_unity_field(4)
T6 = root_of_unity_field(6)


# --- word rewriting oracle for the product ------------------------------------------


def word_normal_form(field, word):
    """Normal form of a word in {'x','y'} by bubbling: each 'xy' -> q 'yx'."""
    w = list(word)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] == "x" and w[k + 1] == "y":
                w[k], w[k + 1] = "y", "x"
                swaps += 1
                changed = True
    i, j = w.count("x"), w.count("y")
    return QElem.monomial(field, i, j, field.q**swaps)


def monomial_word(i, j):
    return "y" * j + "x" * i


# --- random elements ------------------------------------------------------------------


def random_scalar(field, rng, simple=False):
    q = field.q
    c = rng.choice([1, -1, 2, -3, 5])
    if simple:
        return field(c)
    r = rng.random()
    if r < 0.5:
        return field(c)
    if r < 0.8:
        return c * q ** rng.randint(-2, 3)
    return field(c) + q ** rng.randint(1, 3)


def random_qelem(field, rng, max_deg=6, max_terms=3, simple=False):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(0, max_deg)
        i = rng.randint(0, d)
        terms[(i, d - i)] = random_scalar(field, rng, simple)
    return QElem(field, terms)


# --- random valid sigma-derivations ---------------------------------------------------


def _monomials_upto(deg):
    return [(i, d - i) for d in range(deg + 1) for i in range(d + 1)]


@lru_cache(maxsize=None)
def _validity_basis(sigma, deg):
    """Basis of all sigma-derivations with images of degree <= deg (nullspace of the
    linear compatibility system)."""
    field = sigma.field
    monos = _monomials_upto(deg)
    zero = QElem.zero(field)
    columns = []
    for m in monos:
        columns.append(compatibility_residual(sigma, QElem.monomial(field, *m), zero))
    for m in monos:
        columns.append(compatibility_residual(sigma, zero, QElem.monomial(field, *m)))
    rows_keys = sorted({k for col in columns for k, _ in col})
    A = [[col.coefficient(*k) for col in columns] for k in rows_keys]
    basis = nullspace(A, field, ncols=len(columns))
    n = len(monos)
    out = []
    for v in basis:
        dx = QElem(field, {monos[k]: v[k] for k in range(n)})
        dy = QElem(field, {monos[k]: v[n + k] for k in range(n)})
        out.append((dx, dy))
    return tuple(out)


def random_derivation(sigma, rng, deg=4, max_parts=4):
    """A random valid sigma-derivation: sparse integer combination of a basis."""
    basis = _validity_basis(sigma, deg)
    field = sigma.field
    dx, dy = QElem.zero(field), QElem.zero(field)
    if basis:
        for bx, by in rng.sample(basis, min(len(basis), rng.randint(1, max_parts))):
            c = rng.choice([1, -1, 2, 3])
            dx, dy = dx + bx.scale(c), dy + by.scale(c)
    return validate(sigma, dx, dy)


def toric_sigmas(field):
    """Twists covering the special cases of the classification."""
    q = field.q
    T = lambda a, b: Automorphism.toric(field, a, b)  # noqa: E731
    out = [T(1, 1), T(2, 3), T(q.inverse(), q), T(2, q), T(q.inverse(), 3), T(q, q.inverse()), T(q**2, q**-1)]
    if field.t:
        out += [T(q**2, q**2), T(q ** (field.t - 1), 5)]
    if field.is_minus_one:
        out += [T(-1, -1), T(2, 2), T(-1, 1), T(1, 2)]
    else:
        out += [T(q**-1, q**-1), T(2, 2)]
    return out


def flip_sigmas():
    F = T2
    return [Automorphism.flip(F, a, b) for a, b in [(1, 1), (1, -1), (-1, 1), (2, 3), (2, F(1) / 2), (-1, -1), (3, F(-1) / 3)]]


# --- the fixture catalogue ------------------------------------------------------------


def _xy(field):
    return QElem.x(field), QElem.y(field)


def toric_fixtures():
    fx = []
    # generic q
    F = GENERIC
    q = F.q
    x, y = _xy(F)
    T = lambda a, b: Automorphism.toric(F, a, b)  # noqa: E731
    s = T(2, 3)
    fx += [
        ("gen inner y", inner_from(y, s)),
        ("gen inner x^2+y^3", inner_from(x**2 + y**3, s)),
        ("gen inner x^3+y^2", inner_from(x**3 + y**2, s)),
        ("gen inner yx", inner_from(y * x, s)),
        ("gen inner q-power twist", inner_from(x * y**2 + x**3, T(q, 2))),
        ("gen zero", SigmaDerivation.zero(s)),
    ]
    sP = T(2, q)
    fx += [("gen P_x y^2", px_derivation(sP, [0, 0, 1])), ("gen P_x 1+y", px_derivation(sP, [1, 1]))]
    sQ = T(q.inverse(), 5)
    fx += [("gen P_y x^3", py_derivation(sQ, [0, 0, 0, 1]))]
    sB = T(q.inverse(), q)
    fx += [
        ("gen P_x+P_y", px_derivation(sB, [0, 1]) + py_derivation(sB, [0, 0, 2])),
        ("gen P_x+P_y+inner", px_derivation(sB, [0, 0, 1]) + py_derivation(sB, [1]) + inner_from(x**2, sB)),
    ]
    idt = T(1, 1)
    fx += [
        ("gen euler x", dx_family(idt, 1)),
        ("gen euler x-y", dx_family(idt, 1) + dy_family(idt, -1)),
        ("gen ordinary + inner", dx_family(idt, 2) + inner_from(x * y, idt)),
    ]
    sD = T(q**2, q**-1)  # (m, n) = (1, 2)
    fx += [
        ("gen D_x (1,2)", dx_family(sD, 1)),
        ("gen D_y (1,2) + inner", dy_family(sD, 3) + inner_from(y + x**2, sD)),
    ]
    # q = zeta_3
    F = T3
    q = F.q
    x, y = _xy(F)
    T = lambda a, b: Automorphism.toric(F, a, b)  # noqa: E731
    fx += [
        ("t3 realization x^6+y^3", inner_from(x**6 + y**3, T(2, 5))),
        ("t3 inner y^2 x", inner_from(y**2 * x, T(2, 5))),
        ("t3 inner central shift", inner_from(x**3 + y, T(q, 2))),
        ("t3 zero", SigmaDerivation.zero(T(q, q))),
    ]
    s0 = T(1, 1)
    fx += [
        ("t3 ordinary lambda", dx_family(s0, x**3 + 2) + dy_family(s0, y**3)),
        ("t3 ordinary lambda+inner", dx_family(s0, x**3 * y**3) + inner_from(x**2 * y, s0)),
    ]
    sD = T(q**2, q**2)  # (m, n) = (1, 2)
    fx += [
        ("t3 D_x shifted", dx_family(sD, x**3)),
        ("t3 D_x + D_y", dx_family(sD, 1) + dy_family(sD, y**3)),
        ("t3 D_y + inner", dy_family(sD, 2) + inner_from(x, sD)),
    ]
    sB = T(q**2, q)
    fx += [
        ("t3 P_x+P_y", px_derivation(sB, [0, 1, 1]) + py_derivation(sB, [0, 1])),
        ("t3 P_x y^4", px_derivation(sB, [0, 0, 0, 0, 1])),
    ]
    # q = i
    F = T4
    q = F.q
    x, y = _xy(F)
    T = lambda a, b: Automorphism.toric(F, a, b)  # noqa: E731
    fx += [
        ("t4 inner", inner_from(x**2 + y**4, T(3, 2))),
        ("t4 D_x", dx_family(T(q, q**3), x**4)),
        ("t4 P_y", py_derivation(T(q**3, 2), [0, 2])),
    ]
    # q = -1, toric
    F = T2
    x, y = _xy(F)
    T = lambda a, b: Automorphism.toric(F, a, b)  # noqa: E731
    idt = T(1, 1)
    m1 = T(-1, -1)
    fx += [
        ("m1 id lambda x^2y^2 both", dx_family(idt, x**2 * y**2) + dy_family(idt, x**2 * y**2)),
        ("m1 id lambda swap", dx_family(idt, x**2) + dy_family(idt, y**2)),
        ("m1 id lambda swap+inner", dx_family(idt, x**2) + dy_family(idt, y**2) + inner_from(x * y, idt)),
        ("m1 id inner sym", inner_from(x**3 + y**3, idt)),
        ("m1 id inner xy", inner_from(y * x, idt)),
        ("m1 id euler", dx_family(idt, 1)),
        ("m1 id euler both", dx_family(idt, 1) + dy_family(idt, 1)),
        ("m1 id inner + central", inner_from(x + y + x**2 * y**2, idt)),
        ("m1 (-1,-1) P_x y, P_y x", px_derivation(m1, [0, 1]) + py_derivation(m1, [0, 1])),
        ("m1 (-1,-1) P_x only", px_derivation(m1, [1, 0, 1])),
        ("m1 (-1,-1) P pair scaled", px_derivation(m1, [0, 2]) + py_derivation(m1, [0, 3])),
        ("m1 (-1,-1) lambda", dx_family(m1, x**2) + dy_family(m1, y**2)),
        ("m1 (-1,-1) lambda sym", dx_family(m1, 1) + dy_family(m1, 1)),
        ("m1 (-1,-1) inner", inner_from(x + y + x * y * y, m1)),
        ("m1 (2,2) inner", inner_from(x**2 + y**2, T(2, 2))),
        ("m1 (2,2) inner asym", inner_from(x**2 + y, T(2, 2))),
        ("m1 (-1,1) P_x", px_derivation(T(3, -1), [0, 1])),
        ("m1 (1,2) inner", inner_from(x * y + y**2, T(1, 2))),
    ]
    return fx


def flip_fixtures():
    F = T2
    x, y = _xy(F)
    Fl = lambda a, b: Automorphism.flip(F, a, b)  # noqa: E731
    f11, f1m, fm1, f23 = Fl(1, 1), Fl(1, -1), Fl(-1, 1), Fl(2, 3)
    fx = [
        ("flip(1,1) inner yx", inner_from(y * x, f11)),
        ("flip(1,1) inner x+y", inner_from(x + y, f11)),
        ("flip(1,1) residual k=2", flip_residual(f11, 2, 1)),
        ("flip(1,1) slice b=(1,0,1)", flip_slice(f11, 2, [1, 0, 1])),
        ("flip(1,1) residual k=0", flip_residual(f11, 0, 1)),
        ("flip(1,1) residual k=4 + inner", flip_residual(f11, 4, 2) + inner_from(x**3, f11)),
        ("flip(1,1) mix", flip_residual(f11, 2, 3) + flip_residual(f11, 4, 1) + inner_from(x**3 + 2 * y**3, f11)),
        ("flip(1,-1) residual k=1", flip_residual(f1m, 1, 1)),
        ("flip(1,-1) residual k=3 + inner", flip_residual(f1m, 3, 1) + inner_from(x * x + y, f1m)),
        ("flip(-1,1) slice k=1", flip_slice(fm1, 1, [1, 1])),
        ("flip(2,3) inner", inner_from(x + y * x, f23)),
        ("flip(2,3) inner deg 3", inner_from(x**3 - y**2 * x, f23)),
        ("flip(1,1) zero", SigmaDerivation.zero(f11)),
        ("flip(2,1/2) residual k=2", flip_residual(Fl(2, F(1) / 2), 2, 1)),
    ]
    return fx


def all_fixtures():
    return toric_fixtures() + flip_fixtures()
