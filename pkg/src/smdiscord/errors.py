"""Exception hierarchy shared by the library and the CLI."""


class DiscordError(Exception):
    """Base class for every error raised by smdiscord."""


class ValidationError(DiscordError, ValueError):
    """Malformed input: bad dimensions, unparseable specs, unphysical states."""


class InvalidStateError(ValidationError):
    """Parameters or matrices that do not describe a density matrix."""


class NumericalDomainError(DiscordError, ArithmeticError):
    """Input lies outside the domain where a formula is defined.

    Raised for entropy parameters on the singular lines q=1 / r=1, q <= 0,
    and root brackets without a sign change.
    """
