"""Calculators referenced by the check manifest.

Importing this package registers every calculator with CalculatorRegistry.
"""

from . import albanese, coverings, registry, reider, singularities, surface

__all__ = ["albanese", "coverings", "registry", "reider", "singularities", "surface"]
