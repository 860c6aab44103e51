"""Exception hierarchy shared by all modules.

Input problems (bad fixtures, bad paths, violated preconditions) derive from
``InputError``; failed axiom or consistency checks derive from
``VerificationFailure``.  The CLI maps the two families to exit codes 2 and 1.
"""

from __future__ import annotations


class FrobError(Exception):
    """Base class for all library errors."""


class InputError(FrobError, ValueError):
    """Malformed or inconsistent input data."""


class ConductorMismatch(InputError, ArithmeticError):
    """Two scalars from different cyclotomic fields were combined."""


class MissingSqrtWitness(InputError, KeyError):
    """A square root was requested that no fixture declared."""

    def __str__(self) -> str:
        return self.args[0] if self.args else "missing sqrt witness"


class NotSpecial(InputError):
    """The algebra has no special normalization."""


class NotModular(InputError):
    """The S-matrix of the category is singular."""


class VerificationFailure(FrobError):
    """An identity that should hold exactly does not."""
