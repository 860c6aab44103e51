"""Exact open/closed two-dimensional TFT from symmetric special Frobenius algebras.

Modules
-------
exactmath   cyclotomic scalars, exact linear algebra, tensor contraction
fusioncat   skeletal fusion and modular categories from F/R fixtures
frobvect    Frobenius algebras in Vect, centres, handle operators
frobcat     algebra objects in fusion categories, Z~(A), left centres
worldsheet  combinatorial world sheets, cuts, directed dual triangulations
evaluator   correlators, bulk state space, factorization checks
cli         the ``frobtft`` command
"""

from .errors import (
    ConductorMismatch,
    FrobError,
    InputError,
    MissingSqrtWitness,
    NotModular,
    NotSpecial,
    VerificationFailure,
)

__version__ = "0.1.0"

__all__ = [
    "ConductorMismatch",
    "FrobError",
    "InputError",
    "MissingSqrtWitness",
    "NotModular",
    "NotSpecial",
    "VerificationFailure",
    "__version__",
]
