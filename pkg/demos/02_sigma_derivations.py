"""Building sigma-derivations, checking the twisted Leibniz rule and spotting inner ones."""

from qplane import (
    Automorphism,
    IncompatibleImages,
    QElem,
    apply,
    apply_aut,
    generic_field,
    inner_from,
    is_inner,
    validate,
)

F = generic_field()
q = F.q
x, y = QElem.x(F), QElem.y(F)
sigma = Automorphism.toric(F, 2, 3)

d = inner_from(x**2 + y, sigma)
print("delta(x) =", d.dx)
print("delta(y) =", d.dy)

a, b = x * y + 1, y**2 - x
lhs = apply(d, a * b)
rhs = apply(d, a) * apply_aut(sigma, b) + a * apply(d, b)
print("Leibniz holds:", lhs == rhs)

# is_inner recovers a witness up to the twisted centre
print("witness:", is_inner(d))

# arbitrary images are usually not compatible with xy = q*yx
try:
    validate(sigma, y, x)
except IncompatibleImages as err:
    print("rejected:", err)

# the identity twist with x -> x, y -> 0 is the Euler derivation in x, not inner
euler = validate(Automorphism.identity(F), x, 0)
print("Euler x inner?", is_inner(euler))
