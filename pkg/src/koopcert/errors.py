"""Exception types shared across the package."""


class KoopcertError(Exception):
    """Base class for package-specific errors."""


class ConfigError(KoopcertError):
    """Invalid experiment configuration (unknown key, bad value, missing input)."""


class NumericalFailureError(KoopcertError):
    """A numerical computation left its valid regime (overflow, divergence)."""


class SingularMassMatrixError(NumericalFailureError):
    """The empirical mass matrix is too ill-conditioned to invert.

    Signals too little or degenerate data for the chosen dictionary.
    """


class CertificateInfeasibleError(KoopcertError):
    """No certified error level exists for the given amount of data."""


class HypothesisViolatedError(KoopcertError):
    """A numerically checked stability hypothesis failed on the sampled grid."""
