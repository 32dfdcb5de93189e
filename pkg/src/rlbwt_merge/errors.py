"""Exception types shared across the package."""


class RlbwtError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(RlbwtError, ValueError):
    """Input text or RLBWT file does not follow its format."""


class StructureError(RlbwtError, ValueError):
    """A structural precondition was violated (bad run, bad rotation)."""


class BoundsError(RlbwtError, IndexError):
    """Position outside ``[0, total_length)``."""


class RankError(RlbwtError, ValueError):
    """select() asked for an occurrence that does not exist."""


class ConfigurationError(RlbwtError, ValueError):
    """Inconsistent inputs, e.g. mismatched alphabets or a bad generator spec."""


class StreamCorruptionError(RlbwtError, ValueError):
    """An interleave stream does not match the RLBWTs it is applied to."""


class CorrectnessError(RlbwtError, AssertionError):
    """The fast pipeline disagrees with the brute-force oracle."""
