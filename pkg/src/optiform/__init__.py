"""CP-nets, strategic games with parametrized preferences and c-semiring
soft constraints, plus the translations between the three formalisms."""

from . import bridge, cpnet, oracle, pgame, semiring, serialize, softcsp
from .errors import (
    CarrierMismatchError,
    EnumerationLimitError,
    OptiformError,
    ValidationError,
)

__all__ = [
    "bridge",
    "cpnet",
    "oracle",
    "pgame",
    "semiring",
    "serialize",
    "softcsp",
    "CarrierMismatchError",
    "EnumerationLimitError",
    "OptiformError",
    "ValidationError",
]
