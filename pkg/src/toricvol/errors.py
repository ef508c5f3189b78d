"""Exception hierarchy shared by all modules.

Validation failures (bad input documents) and precondition failures
(legal data fed to an operation outside its domain) are kept apart so
the command line layer can map them to distinct exit codes.
"""


class ToricError(Exception):
    pass


class InvalidFanError(ToricError):
    """Raised when fan data violates the fan axioms.

    Carries the full diagnostic list in ``diagnostics``.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class PreconditionError(ToricError):
    pass


class NotCompleteError(PreconditionError):
    pass


class NotSimplicialError(PreconditionError):
    pass


class NotQCartierError(PreconditionError):
    pass


class EffectiveConeError(PreconditionError):
    """The divisor class has an empty section polytope."""


class UnboundedRegionError(PreconditionError):
    pass


class CapExceededError(PreconditionError):
    """A 2^#rays sweep was requested past the configured ray cap."""


class ChamberWallError(PreconditionError):
    """The divisor class sits on a chamber wall, not in an open chamber."""


class ChamberMembershipError(PreconditionError):
    """The divisor class is not a member of the given chamber cone."""


class UnsupportedDimensionError(PreconditionError):
    pass
