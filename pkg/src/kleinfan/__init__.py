"""Exact GIT wall-and-chamber combinatorics for Hilbert schemes of points on
partial resolutions of Kleinian singularities."""

from .gitfan import (Arrangement, BudgetExceeded, GitCone, VerificationReport, build_arrangement, chamber_C_K,
                     cone_F, git_cone_of, is_chamber, picard_rank, sigma_K, sigma_prime_K, verify_main_theorem)
from .polycone import Cone, ConeError, Functional, cone_from_h, cone_from_v
from .rootsys import DynkinType, RootSystem, build_root_system

__version__ = "0.1.0"
__all__ = [
    "Arrangement", "BudgetExceeded", "Cone", "ConeError", "DynkinType", "Functional", "GitCone", "RootSystem",
    "VerificationReport", "build_arrangement", "build_root_system", "chamber_C_K", "cone_F", "cone_from_h",
    "cone_from_v", "git_cone_of", "is_chamber", "picard_rank", "sigma_K", "sigma_prime_K", "verify_main_theorem",
]
