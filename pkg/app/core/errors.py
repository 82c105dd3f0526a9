"""Error hierarchy shared by the library, the CLI and the HTTP layer.

Every error carries a ``code`` naming the violated invariant; the CLI prints it
as ``CODE: message`` and the API returns it in ``detail``.
"""


class DomainError(ValueError):
    """Base class for all invalid-input and invariant failures."""
    code = "DomainError"

    def __str__(self) -> str:
        message = super().__str__()
        return f"{self.code}: {message}" if message else self.code


class InputFormatError(DomainError):
    code = "InputFormat"


class EmptyInputError(DomainError):
    code = "EmptyInput"


class DisconnectedHexagonsError(DomainError):
    code = "DisconnectedHexagons"


class HoleDetectedError(DomainError):
    code = "HoleDetected"


class InvalidChiralVectorError(DomainError):
    code = "InvalidChiralVector"


class InvalidTubuleneError(DomainError):
    code = "InvalidTubulene"


class NotCubicError(DomainError):
    code = "NotCubic"


class NotPlanarEmbeddingError(DomainError):
    code = "NotPlanarEmbedding"


class BadFaceSizeError(DomainError):
    code = "BadFaceSize"


class NotAHexagonError(DomainError):
    code = "NotAHexagon"


class NotASextetError(DomainError):
    code = "NotASextet"


class UnknownVertexError(DomainError, KeyError):
    code = "UnknownVertex"

    def __str__(self) -> str:
        return DomainError.__str__(self)


class InvalidCoverError(DomainError):
    """Cover constraints admit no perfect matching; signals an internal inconsistency."""
    code = "InvalidCover"


class CoefficientOverflowError(DomainError, OverflowError):
    code = "CoefficientOverflow"


class UnknownPresetError(DomainError):
    code = "UnknownPreset"


class BudgetExceededError(DomainError):
    code = "BudgetExceeded"
