"""Mobi algebras and mobi spaces: ternary operations modelling geodesic paths."""

from .algebra import (
    CanonicalAlgebra,
    MobiAlgebra,
    check_algebra_axioms,
    check_closure,
    check_derived_properties,
    check_midpoint_axioms,
    circ,
    complement,
    oplus,
    p_eval,
    product,
)
from .exceptions import (
    AntipodalError,
    ConfigError,
    DomainError,
    MobiError,
    NotAffineError,
    SingularSystemError,
)
from .instances import (
    LozengeAlgebra,
    RingDerivedAlgebra,
    RingWithHalf,
    rational_algebra,
    real_line_algebra,
)
from .report import AxiomReport, Witness
from .space import (
    AffineVerdict,
    MobiSpace,
    check_space_axioms,
    check_space_properties,
    is_affine,
    midpoint,
    q_eval,
)

__version__ = "0.1.0"

__all__ = [
    "AffineVerdict", "AntipodalError", "AxiomReport", "CanonicalAlgebra", "ConfigError",
    "DomainError", "LozengeAlgebra", "MobiAlgebra", "MobiError", "MobiSpace",
    "NotAffineError", "RingDerivedAlgebra", "RingWithHalf", "SingularSystemError", "Witness",
    "check_algebra_axioms", "check_closure", "check_derived_properties", "check_midpoint_axioms",
    "check_space_axioms", "check_space_properties", "circ", "complement", "is_affine",
    "midpoint", "oplus", "p_eval", "product", "q_eval", "rational_algebra", "real_line_algebra",
]
