"""Exception types shared across the library.

Domain errors derive from LieColorError so the CLI can map them uniformly
to exit code 1; malformed input is a separate concern (exit code 2).
"""


class LieColorError(Exception):
    """Base class for domain errors raised by this library."""


class AxiomViolation(LieColorError):
    """A candidate commutation-factor table breaks one of its two axioms."""

    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = witness
        msg = f"{axiom} fails at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InhomogeneousInput(LieColorError):
    """An operation needed a degree tag that was missing or inconsistent."""


class NotHomogeneous(LieColorError):
    """A matrix claimed homogeneous has entries outside a single component."""


class HeightMismatch(LieColorError):
    """A pivot matrix is not strictly upper triangular at its height."""


class NotAbelian(LieColorError):
    """Some pair of basis elements has a nonzero bracket."""


class NotPreNil(LieColorError):
    """A joint kernel vanished: some required element is not nilpotent."""


class FieldNotSplit(LieColorError):
    """A characteristic polynomial has no root in F_p; retry with a larger p."""


class NotStrictlyTriangular(LieColorError):
    """An input matrix has a nonzero entry on or below the diagonal."""


class NotTriangular(LieColorError):
    """An input matrix has a nonzero entry below the diagonal."""


class NotCommuting(LieColorError):
    """A family required to color-commute does not."""


class NonCyclicGroup(LieColorError):
    """The operation is only defined for cyclic grading groups."""


class UnsupportedM(LieColorError):
    """The catalog only covers total dimensions 2 and 3."""


class DimZero(LieColorError):
    """The zero algebra has no minimal faithful representation here."""
