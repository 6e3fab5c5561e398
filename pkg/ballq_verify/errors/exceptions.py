"""
Custom Exception Classes

Defines specific exception types for the error conditions of ballq-verify.
"""

from typing import Any, Dict, List, Optional


class BallqError(Exception):
    """Base exception for all ballq-verify errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} (Details: {self.details})"
        return self.message


class LatticeError(BallqError):
    """Raised when an intersection lattice operation is invalid."""


class LatticeMismatchError(LatticeError):
    """Raised when classes from two different lattices are combined."""

    def __init__(
        self,
        message: str,
        left: Optional[str] = None,
        right: Optional[str] = None,
    ):
        details = {}
        if left:
            details["left_lattice"] = left
        if right:
            details["right_lattice"] = right

        super().__init__(message, details)
        self.left = left
        self.right = right


class DependentVectorsError(LatticeError):
    """Raised when orthogonalization meets a linearly dependent vector."""

    def __init__(
        self,
        message: str,
        index: Optional[int] = None,
        relation: Optional[List[str]] = None,
    ):
        details: Dict[str, Any] = {}
        if index is not None:
            details["index"] = index
        if relation is not None:
            details["relation"] = relation

        super().__init__(message, details)
        self.index = index
        self.relation = relation


class IsotropicVectorError(LatticeError):
    """Raised when Gram-Schmidt would divide by a zero self-pairing."""

    def __init__(self, message: str, index: Optional[int] = None):
        details = {"index": index} if index is not None else {}
        super().__init__(message, details)
        self.index = index


class NonSymmetricGramError(LatticeError):
    """Raised when a Gram matrix is not square or not symmetric."""

    def __init__(
        self,
        message: str,
        row: Optional[int] = None,
        column: Optional[int] = None,
    ):
        details = {}
        if row is not None:
            details["row"] = row
        if column is not None:
            details["column"] = column

        super().__init__(message, details)
        self.row = row
        self.column = column


class InvariantViolationError(BallqError):
    """Raised when a construction-time identity fails."""

    def __init__(
        self,
        message: str,
        invariant: Optional[str] = None,
        value: Optional[Any] = None,
    ):
        details = {}
        if invariant:
            details["invariant"] = invariant
        if value is not None:
            details["value"] = str(value)

        super().__init__(message, details)
        self.invariant = invariant
        self.value = value


class AxiomRequiredError(BallqError):
    """Raised when h0 is requested without an explicit vanishing assumption."""


class RegistryDataError(BallqError):
    """Raised when the lattice registry data file is corrupted."""

    def __init__(
        self,
        message: str,
        file_path: Optional[str] = None,
        row_number: Optional[int] = None,
        column: Optional[str] = None,
    ):
        details: Dict[str, Any] = {}
        if file_path:
            details["file_path"] = file_path
        if row_number is not None:
            details["row_number"] = row_number
        if column:
            details["column"] = column

        super().__init__(message, details)
        self.file_path = file_path
        self.row_number = row_number
        self.column = column


class ManifestError(BallqError):
    """Raised when the check manifest is malformed."""

    def __init__(
        self,
        message: str,
        file_path: Optional[str] = None,
        check_id: Optional[str] = None,
    ):
        details = {}
        if file_path:
            details["file_path"] = file_path
        if check_id:
            details["check_id"] = check_id

        super().__init__(message, details)
        self.file_path = file_path
        self.check_id = check_id


class UnknownCheckError(BallqError):
    """Raised when a check id is not in the manifest."""

    def __init__(self, check_id: str, valid_ids: List[str]):
        super().__init__(
            f"Unknown check id: {check_id}", {"valid_ids": list(valid_ids)}
        )
        self.check_id = check_id
        self.valid_ids = list(valid_ids)


class ConfigurationError(BallqError):
    """Raised when configuration is invalid or missing."""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        config_value: Optional[Any] = None,
    ):
        details = {}
        if config_key:
            details["config_key"] = config_key
        if config_value is not None:
            details["config_value"] = config_value

        super().__init__(message, details)
        self.config_key = config_key
        self.config_value = config_value


class ValidationError(BallqError):
    """Raised when data validation fails."""

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None,
        constraint: Optional[str] = None,
    ):
        details = {}
        if field:
            details["field"] = field
        if value is not None:
            details["value"] = value
        if constraint:
            details["constraint"] = constraint

        super().__init__(message, details)
        self.field = field
        self.value = value
        self.constraint = constraint
