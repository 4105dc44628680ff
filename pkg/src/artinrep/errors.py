"""Exception types shared across the package."""


class ArtinrepError(Exception):
    """Base class for all package errors."""


class BadReduction(ArtinrepError):
    """Raised when a local computation is requested at a bad prime."""

    def __init__(self, prime, label=None):
        self.prime = prime
        self.label = label
        where = f" for {label}" if label else ""
        super().__init__(f"bad reduction at p={prime}{where}")


class RamifiedPrime(ArtinrepError):
    """Raised when a prime divides the relevant discriminant."""

    def __init__(self, prime, what=""):
        self.prime = prime
        super().__init__(f"p={prime} is ramified{(' in ' + what) if what else ''}")


class MalformedTable(ArtinrepError):
    """A group-table consistency check failed (corrupted data file)."""


class NonIntegralDecomposition(ArtinrepError):
    """A virtual character decomposed with non-integer multiplicities."""

    def __init__(self, multiplicities):
        self.multiplicities = multiplicities
        super().__init__(f"non-integral multiplicities: {multiplicities}")


class NotFound(ArtinrepError):
    """A bounded search exhausted its budget without a hit."""


class RegistryError(ArtinrepError):
    """Registry file failed schema or consistency validation."""


class ConfigError(ArtinrepError):
    """Invalid run configuration (missing files, bad bounds)."""
