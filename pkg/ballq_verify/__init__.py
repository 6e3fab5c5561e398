"""
Ball Quotient Verifier

Exact-arithmetic replay of the numerical steps behind very ampleness of 2K
on compact complex 2-ball quotients: intersection lattices, Riemann-Roch
bookkeeping, Reider/Bogomolov enumeration, cyclic quotient resolutions,
covering eliminations and the fake projective plane registry.
"""

from ._version import __version__

__description__ = "Ball Quotient Verifier"

__all__ = ["__version__"]
