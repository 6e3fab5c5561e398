"""Error handling module for ballq-verify."""

from .exceptions import (
    AxiomRequiredError,
    BallqError,
    ConfigurationError,
    DependentVectorsError,
    InvariantViolationError,
    IsotropicVectorError,
    LatticeError,
    LatticeMismatchError,
    ManifestError,
    NonSymmetricGramError,
    RegistryDataError,
    UnknownCheckError,
    ValidationError,
)
from .handlers import error_handler, handle_validation_errors, safe_operation

__all__ = [
    "BallqError",
    "LatticeError",
    "LatticeMismatchError",
    "DependentVectorsError",
    "IsotropicVectorError",
    "NonSymmetricGramError",
    "InvariantViolationError",
    "AxiomRequiredError",
    "RegistryDataError",
    "ManifestError",
    "UnknownCheckError",
    "ConfigurationError",
    "ValidationError",
    "error_handler",
    "handle_validation_errors",
    "safe_operation",
]
