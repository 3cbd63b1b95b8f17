import pytest

from helpers import GENERIC, T2, T3, flip_fixtures
from qplane import (
    Automorphism,
    FlipPartKind,
    ModeError,
    QElem,
    SigmaDerivation,
    WrongSigmaKind,
    decompose_toric,
    dx_family,
    dy_family,
    flip_residual,
    flip_slice,
    gamma_lattice,
    inner_from,
    isotropy,
    isotropy_flip_sigma,
    isotropy_toric_sigma,
    member,
    oracle_discrepancies,
    px_derivation,
    py_derivation,
)


def xy(F):
    return QElem.x(F), QElem.y(F)


def test_gamma_examples():
    F = GENERIC
    x, y = xy(F)
    s = Automorphism.toric(F, 2, 3)
    assert gamma_lattice(decompose_toric(inner_from(y, s))).vectors == ((0, 1),)
    sP = Automorphism.toric(F, 2, F.q)
    for r in range(4):
        dec = decompose_toric(px_derivation(sP, [0] * r + [1]))
        assert gamma_lattice(dec).vectors == ((1, -r),)
    assert gamma_lattice(decompose_toric(SigmaDerivation.zero(s))).vectors == ()
    with pytest.raises(WrongSigmaKind):
        gamma_lattice(decompose_toric(SigmaDerivation.zero(s)), Automorphism.flip(T2, 1, 1))


def test_generic_realization_of_products_of_cyclic_groups():
    F = GENERIC
    x, y = xy(F)
    s = Automorphism.toric(F, 2, 3)
    for a, b in [(1, 1), (2, 3), (4, 6), (5, 1)]:
        desc = isotropy_toric_sigma(inner_from(x**a + y**b, s))
        assert desc.lattice.vectors == tuple(sorted({(a, 0), (0, b)}))
        d1, d2 = desc.structure.invariant_factors
        assert d1 * d2 == a * b and (d1 == 0 or d2 % d1 == 0)
        assert desc.flip_part.kind is FlipPartKind.NOT_APPLICABLE


def test_q_minus_one_identity_lambda():
    F = T2
    X, Y = xy(F)
    idt = Automorphism.identity(F)
    lam = X**2 * Y**2
    desc = isotropy(dx_family(idt, lam) + dy_family(idt, lam))
    assert desc.flip_part.kind is FlipPartKind.CONDITIONS
    assert [(c.exponents, c.value) for c in desc.flip_part.conditions] == [((2, 2), 1)]


def test_q_minus_one_p_pair_gives_u_equals_v():
    F = T2
    m1 = Automorphism.toric(F, -1, -1)
    d = px_derivation(m1, [0, 1]) + py_derivation(m1, [0, 1])
    desc = isotropy(d)
    fp = desc.flip_part
    assert fp.kind is FlipPartKind.CONDITIONS
    assert {(c.exponents, c.value) for c in fp.conditions} == {((1, -1), 1), ((-1, 1), 1)}
    assert not oracle_discrepancies(d, Ns=[4])


def test_flip_sigma_examples():
    F = T2
    X, Y = xy(F)
    f11 = Automorphism.flip(F, 1, 1)
    desc = isotropy_flip_sigma(inner_from(Y * X, f11))
    assert desc.extra_toric_conditions == (2,)
    assert desc.structure.invariant_factors == (2,)
    desc = isotropy_flip_sigma(flip_residual(f11, 2, 1))
    assert desc.extra_toric_conditions == (1,)
    assert desc.structure.order == 1
    desc = isotropy_flip_sigma(SigmaDerivation.zero(f11))
    assert desc.structure.invariant_factors == (0,)
    assert desc.flip_part.kind is FlipPartKind.CONDITIONS and desc.flip_part.conditions == ()
    for mu in [1, -1, 2, F(1) / 3]:
        assert desc.contains(Automorphism.toric(F, mu, mu))
        assert desc.contains(Automorphism.flip(F, mu, mu))
    with pytest.raises(WrongSigmaKind):
        isotropy_flip_sigma(SigmaDerivation.zero(Automorphism.identity(F)))
    with pytest.raises(WrongSigmaKind):
        isotropy_toric_sigma(SigmaDerivation.zero(f11))
    with pytest.raises(ModeError):
        isotropy_flip_sigma(SigmaDerivation.zero(Automorphism.identity(T3)))


def test_member_examples():
    F = GENERIC
    x, y = xy(F)
    s = Automorphism.toric(F, 2, 3)
    d = inner_from(y, s)
    assert member(Automorphism.identity(F), d)
    assert member(Automorphism.toric(F, 5, 1), d)
    assert not member(Automorphism.toric(F, 1, 2), d)
    G = T2
    f11 = Automorphism.flip(G, 1, 1)
    d = flip_residual(f11, 2, 1)
    assert not member(Automorphism.toric(G, -1, -1), d)
    assert member(Automorphism.identity(G), d)
    # rho not commuting with sigma is never a member
    assert not member(Automorphism.toric(G, 1, -1), SigmaDerivation.zero(f11))


def test_slicewise_flip_criterion_counterexample():
    """eta_{-1} fixes this slice, yet the per-slice criterion on the canonical
    residual rejects every flip."""
    F = T2
    f11 = Automorphism.flip(F, 1, 1)
    d = flip_slice(f11, 2, [1, 0, 1])
    eta = Automorphism.flip(F, -1, -1)
    assert member(eta, d)
    desc = isotropy_flip_sigma(d)
    assert desc.contains(eta)
    assert desc.slicewise_flip_part.kind is FlipPartKind.EMPTY
    assert not desc.contains_slicewise(eta)


@pytest.mark.parametrize("name,d", flip_fixtures(), ids=[n for n, _ in flip_fixtures()])
def test_flip_sigma_conditions_agree_with_oracle_on_mu8(name, d):
    assert oracle_discrepancies(d, Ns=[8]) == []


def test_structural_contains_in_extended_field():
    F = T3
    x, y = xy(F)
    s = Automorphism.toric(F, 2, 5)
    desc = isotropy(inner_from(x**6 + y**3, s))
    G = F.extend(6)
    z = G.zeta(6)
    assert desc.contains(Automorphism.toric(G, z, z**2))
    assert not desc.contains(Automorphism.toric(G, z, z))
