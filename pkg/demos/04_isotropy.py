"""Isotropy groups: the character lattice, its Smith form, and a brute-force check."""

import itertools

from qplane import Automorphism, QElem, isotropy, inner_from, member, root_of_unity_field

T3 = root_of_unity_field(3)
x, y = QElem.x(T3), QElem.y(T3)
d = inner_from(x**6 + y**3, Automorphism.toric(T3, 2, 5))

desc = isotropy(d)
print("Gamma            :", desc.lattice)
print("invariant factors:", desc.structure.invariant_factors)
print("group            :", desc.structure, "of order", desc.structure.order)

# count members among toric automorphisms with sixth-root-of-unity scalars
G = T3.extend(6)
z = G.zeta(6)
hits = [
    (a, b)
    for a, b in itertools.product(range(6), repeat=2)
    if member(Automorphism.toric(G, z**a, z**b), d)
]
print(len(hits), "of 36 commute with delta")
