"""Exception taxonomy shared by every engine."""


class FachomError(Exception):
    """Base class for all engine errors."""


class CompositionNonzero(FachomError):
    """Two maps that should compose to zero do not."""


class DifferentialSquareNonzero(FachomError):
    def __init__(self, slot, message="d∘d is nonzero"):
        self.slot = slot
        super().__init__(f"{message} at slot (weight, degree) = {slot}")


class MixedWeightSigns(FachomError):
    """Generators (or an augmentation ideal) do not sit in strictly signed weights."""


class StraighteningOverflow(FachomError):
    pass


class UnboundedWeight(FachomError):
    """The augmentation ideal has a weight-zero component, so bar complexes do not truncate."""


class UnknownModel(FachomError):
    pass


class LevelCapTooSmall(FachomError):
    pass


class RoleMismatch(FachomError):
    pass


class InvalidCodim(FachomError):
    pass


class ValidationError(FachomError):
    """A structural identity (associativity, Leibniz, Jacobi, ...) fails on a named tuple."""

    def __init__(self, what, witness):
        self.what = what
        self.witness = witness
        super().__init__(f"{what} fails on {witness}")


class PresentationError(FachomError):
    """Malformed JSON presentation or model file."""


class GluingSyntaxError(SyntaxError, FachomError):
    """Parse error in a gluing expression; ``offset`` is 1-based like SyntaxError."""

    def __init__(self, message, text, offset):
        super().__init__(message, ("<gluing>", 1, offset, text))
        self.msg = message
        self.text = text
        self.offset = offset

    def __str__(self):
        return f"{self.msg} at offset {self.offset}"
