"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so recovery code should raise
the most specific type that applies.
"""


class ChainClusterError(Exception):
    """Base class for all package errors."""


class DimensionError(ChainClusterError, ValueError):
    """Inputs have incompatible or invalid shapes."""


class DomainError(ChainClusterError, ValueError):
    """Input violates a mathematical precondition (negativity, asymmetry, ...)."""


class ParameterError(ChainClusterError, ValueError):
    """Scalar parameter outside its admissible range."""


class DegenerateGapError(ChainClusterError):
    """The requested singular-subspace split sits on a crossing; the projector
    is not well defined there."""


class HypothesisError(ChainClusterError):
    """The spectra of the inputs do not satisfy the band hypothesis of the
    projector deviation bound."""


class OutOfRegimeError(ChainClusterError):
    """The perturbation scale is too large for the bound to say anything."""


class NoGapError(ChainClusterError):
    """The sorted distance list contains no gap index to try."""


class NoCandidateError(ChainClusterError):
    """No column index passes the size cap in approximate cluster recovery."""


class ConfigError(ChainClusterError, ValueError):
    """Malformed configuration file or inconsistent CLI options."""
