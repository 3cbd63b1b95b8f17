"""Exact computations with sigma-derivations of the quantum plane k_q[x, y].

Typical use::

    from qplane import generic_field, QElem, Automorphism, inner_from, isotropy

    F = generic_field()
    x, y = QElem.x(F), QElem.y(F)
    sigma = Automorphism.toric(F, 2, 3)
    d = inner_from(x**2 + y, sigma)
    isotropy(d).structure          # mu_2 x mu_1
"""

from .classify import (
    FlipDecomposition,
    ToricDecomposition,
    decompose,
    decompose_flip,
    decompose_toric,
    dx_family,
    dy_family,
    flip_residual,
    flip_slice,
    px_derivation,
    py_derivation,
    recombine,
)
from .coeffield import (
    Field,
    FieldElem,
    FieldKind,
    FieldMode,
    fe_is_q_power,
    fe_q_power,
    generic_field,
    make_field,
    root_of_unity_field,
)
from .errors import IncompatibleImages, ModeError, ParseError, QPlaneError, WrongSigmaKind
from .isotropy import (
    FlipPart,
    FlipPartKind,
    IsotropyDescriptor,
    centralizer_sample,
    gamma_lattice,
    isotropy,
    isotropy_flip_sigma,
    isotropy_toric_sigma,
    member,
    oracle_discrepancies,
)
from .lattice import CharacterLattice, TorusSubgroupStructure, smith_form, snf_invariant_factors
from .parsing import parse_automorphism, parse_expr, parse_field_mode, parse_scalar
from .qalgebra import (
    Automorphism,
    AutKind,
    QElem,
    apply_aut,
    aut_compose,
    center_membership,
    centralizer_contains,
    q_mul,
    twisted_center,
)
from .skewder import SigmaDerivation, apply, conjugate, inner_from, is_inner, validate

__version__ = "0.1.0"
