"""At q = -1 flips appear. Ordinary derivations and flip twists have flip isotropy too."""

from qplane import Automorphism, QElem, dx_family, dy_family, flip_slice, inner_from, isotropy, member, root_of_unity_field

T2 = root_of_unity_field(2)
x, y = QElem.x(T2), QElem.y(T2)
idt = Automorphism.identity(T2)

# [w, _] + lambda D_x + lambda D_y with lambda symmetric under x <-> y
lam = x**2 * y**2
d = inner_from(x + y, idt) + dx_family(idt, lam) + dy_family(idt, lam)
desc = isotropy(d)
print("toric part:", desc.structure)
print("flip part :", desc.flip_part.kind.value, [(c.exponents, str(c.value)) for c in desc.flip_part.conditions])
for u, v in [(1, 1), (-1, -1), (1, -1)]:
    eta = Automorphism.flip(T2, u, v)
    print(f"  flip({u},{v}) member:", member(eta, d), "predicted:", desc.contains(eta))

# flip twist; the per-slice shortcut on canonical residuals misses eta_{-1} here
f = Automorphism.flip(T2, 1, 1)
d = flip_slice(f, 2, [1, 0, 1])
desc = isotropy(d)
eta = Automorphism.flip(T2, -1, -1)
print("slice (1,0,1): member", member(eta, d), "exact", desc.contains(eta), "shortcut", desc.contains_slicewise(eta))
