"""Exception hierarchy. The CLI maps ValidationError to exit 2, BoundExceeded to exit 3."""


class FlagkitError(Exception):
    code = "error"

    def __init__(self, message: str, location: str | None = None):
        super().__init__(message)
        self.message = message
        self.location = location

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "location": self.location}


class ValidationError(FlagkitError, ValueError):
    code = "validation"


class DatumError(ValidationError):
    code = "invalid_datum"


class DimensionMismatch(ValidationError):
    code = "dimension_mismatch"


class NotDominant(ValidationError):
    code = "not_dominant"


class NotWeylStable(ValidationError):
    code = "not_weyl_stable"


class BoundExceeded(FlagkitError):
    code = "bound_exceeded"


class Undetermined(BoundExceeded):
    """Semi-infinite comparison did not stabilize inside the sampling window."""

    code = "undetermined"
