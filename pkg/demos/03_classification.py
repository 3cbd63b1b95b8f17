"""Decomposing sigma-derivations into inner part plus the non-inner families."""

import random

from qplane import (
    Automorphism,
    QElem,
    decompose,
    dx_family,
    dy_family,
    flip_residual,
    generic_field,
    inner_from,
    px_derivation,
    py_derivation,
    recombine,
    root_of_unity_field,
)

# toric twist at a cube root of unity, (m, n) = (1, 2)
T3 = root_of_unity_field(3)
q = T3.q
x, y = QElem.x(T3), QElem.y(T3)
s = Automorphism.toric(T3, q**2, q**2)
d = inner_from(x + y**2, s) + dx_family(s, x**3) + dy_family(s, y**3)
dec = decompose(d)
print(dec.sigma, "->", {k: (str(v.dx), str(v.dy)) for k, v in dec.components().items()})
assert recombine(dec) == d

# P families live on twists of the form (alpha, q)
G = generic_field()
sP = Automorphism.toric(G, 5, G.q)
dec = decompose(px_derivation(sP, [1, 0, 2]))
print("a(y) coefficients:", dec.a_poly)

sQ = Automorphism.toric(G, G.q**-1, 7)
print("b(x) coefficients:", decompose(py_derivation(sQ, [0, 3])).b_poly)

# q = -1 with a flip twist: inner part plus one residual per slice
T2 = root_of_unity_field(2)
f = Automorphism.flip(T2, 1, 1)
X, Y = QElem.x(T2), QElem.y(T2)
d = inner_from(X * Y + X, f) + flip_residual(f, 2, 3)
dec = decompose(d)
print("flip: w =", dec.w, " slices =", [(k, str(b)) for k, b in dec.slices])
