"""Exception hierarchy shared by every module.

Each class name doubles as the machine-readable error code emitted by the CLI.
"""


class CharmultError(Exception):
    """Base class for expected, domain-level failures."""

    @property
    def code(self) -> str:
        return type(self).__name__


class InvalidPartition(CharmultError, ValueError):
    pass


class InvalidParameter(CharmultError, ValueError):
    pass


class DomainError(CharmultError, ValueError):
    pass


class CensusTooLarge(CharmultError):
    pass


class SelfConjugateSeed(CharmultError):
    pass


class DistinctnessViolation(CharmultError):
    pass


class BelowBound(CharmultError):
    pass


class NoSeedFound(CharmultError):
    pass


class UnknownGroup(CharmultError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class CutoffTooDeep(CharmultError):
    pass


class BeyondCutoff(CharmultError):
    pass


class OracleNotDivergent(CharmultError):
    pass


class CacheError(CharmultError):
    pass


class CacheMismatch(CharmultError):
    pass
