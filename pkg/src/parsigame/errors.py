"""Exceptions raised across the package."""


class ParsimoniousGameError(Exception):
    """Base class for every error this package raises deliberately."""


class EmptyRep(ParsimoniousGameError):
    """Free type representation has no components."""


class BoundViolation(ParsimoniousGameError):
    """A class count is below its lower bound."""


class TooSmall(ParsimoniousGameError):
    """Fewer than four players."""


class BadInput(ParsimoniousGameError):
    """Malformed input, outside the domain the operation is defined on."""


class NotParsimonious(ParsimoniousGameError):
    """The quota/weight pair is not the representation of any parsimonious game."""


class Overflow(ParsimoniousGameError):
    """An intermediate value left the supported 64-bit integer range."""


class TheoremViolation(ParsimoniousGameError):
    """An identity that provably holds for every parsimonious game failed; upstream bug."""


class TwinMismatch(ParsimoniousGameError):
    """The two twin-construction routes disagree; upstream bug."""


class SingularSystem(ParsimoniousGameError):
    """The balance equations have no unique solution; upstream bug."""


class TooLarge(ParsimoniousGameError):
    """Input exceeds the brute-force size cap."""


class OutOfRange(ParsimoniousGameError):
    """Requested player count is outside the configured enumeration bounds."""
