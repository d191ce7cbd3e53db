"""Exception hierarchy shared by every finalg module."""


class FinalgError(Exception):
    """Base class for all errors raised by finalg."""


class RangeError(FinalgError, IndexError):
    """An element index lies outside its carrier."""


class CarrierMismatchError(FinalgError, ValueError):
    """Two objects that must share a carrier (or shape) do not."""


class ShapeError(CarrierMismatchError):
    """A tuple, matrix or table has the wrong length or arity."""


class NotAnEquivalenceError(FinalgError, ValueError):
    """Raised by ``to_partition``; ``witness`` is the first failing pair or triple."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"relation is not {law}: counterexample {witness}")


class InvalidAlgebraError(FinalgError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        super().__init__(f"invalid algebra: {lines}")


class SignatureMismatchError(FinalgError, ValueError):
    pass


class SizeBoundError(FinalgError, ValueError):
    """A carrier exceeds the configured enumeration or encoding bound."""
