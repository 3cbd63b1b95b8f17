"""Arithmetic in k_q[x, y]: normal forms, centres and automorphisms."""

from qplane import Automorphism, QElem, apply_aut, generic_field, root_of_unity_field, twisted_center

F = generic_field()
x, y = QElem.x(F), QElem.y(F)

# every word is rewritten with y to the left of x
print("x*y       =", x * y)
print("(x+y)^2   =", (x + y) ** 2)

# at a primitive cube root of unity the cubes become central
T3 = root_of_unity_field(3)
X, Y = QElem.x(T3), QElem.y(T3)
print("x^3*y - y*x^3 at q^3 = 1:", X**3 * Y - Y * X**3)

# automorphisms
s = Automorphism.toric(F, 2, F.q)
print("sigma =", s, " sigma(x*y + y^2) =", apply_aut(s, x * y + y**2))

T2 = root_of_unity_field(2)
eta = Automorphism.flip(T2, 1, -1)
print("flip  =", eta, " eta(x*y) =", apply_aut(eta, QElem.x(T2) * QElem.y(T2)))

# elements w with w*sigma(b) = b*w for all b
print("twisted centre of toric(-1,-1) at q = -1:", twisted_center(Automorphism.toric(T2, -1, -1)))
