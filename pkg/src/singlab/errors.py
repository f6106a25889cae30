"""Exception hierarchy shared by all singlab modules.

Errors are split into three families so the CLI can map them onto
stable exit codes: input problems, refused computations, and bound
violations.
"""


class SinglabError(Exception):
    """Base class for all library errors."""

    code = "Error"


class InputError(SinglabError):
    """Malformed input (parse errors, bad schemas, bad dimensions)."""

    code = "InputError"


class RefusedError(SinglabError):
    """Structurally valid input that a computation refuses to accept."""

    code = "Refused"


class BoundExceeded(SinglabError):
    """A requested window or depth exceeds the truncation bound."""

    code = "BoundExceeded"


class ParseError(InputError):
    code = "ParseError"


class FieldMismatch(RefusedError):
    code = "FieldMismatch"


class RingMismatch(RefusedError):
    code = "RingMismatch"


class NotInIdeal(RefusedError):
    code = "NotInIdeal"


class NotInMaximalIdeal(RefusedError):
    code = "NotInMaximalIdeal"


class CharTooSmall(RefusedError):
    code = "CharTooSmall"


class QHofZeroUndefined(RefusedError):
    code = "QHofZeroUndefined"


class NotHomogeneous(RefusedError):
    code = "NotHomogeneous"


class DegreeMismatch(RefusedError):
    code = "DegreeMismatch"


class SigmaMismatch(RefusedError):
    code = "SigmaMismatch"


class VariableClash(RefusedError):
    code = "VariableClash"


class BadCoefficients(RefusedError):
    code = "BadCoefficients"


class FieldLacksI(RefusedError):
    code = "FieldLacksI"


class NotQuasiDominant(RefusedError):
    code = "NotQuasiDominant"


class NotIdempotent(RefusedError):
    code = "NotIdempotent"


class NotQuadratic(RefusedError):
    code = "NotQuadratic"


class NotAugmented(RefusedError):
    code = "NotAugmented"


class NotConilpotent(RefusedError):
    code = "NotConilpotent"


class WindowExceedsBound(BoundExceeded):
    code = "WindowExceedsBound"
