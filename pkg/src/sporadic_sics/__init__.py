"""Sporadic SIC-POVMs in dimensions 2, 3 and 8 and their dual structures."""

from .certificate import Certificate, Check
from .families import FAMILIES, SIC_FAMILIES, build, build_sic, verify_family
from .golden import PHI, SQRT5, GoldenScalar
from .probability import reconstruct, represent, represent_pure, shannon_entropy
from .sic import SicEnsemble, hesse_sic_coxeter, hesse_sic_orbit, hoggar_sic, qubit_sic, verify_sic

__all__ = [
    "Certificate",
    "Check",
    "FAMILIES",
    "SIC_FAMILIES",
    "GoldenScalar",
    "PHI",
    "SQRT5",
    "SicEnsemble",
    "build",
    "build_sic",
    "hesse_sic_coxeter",
    "hesse_sic_orbit",
    "hoggar_sic",
    "qubit_sic",
    "reconstruct",
    "represent",
    "represent_pure",
    "shannon_entropy",
    "verify_family",
    "verify_sic",
]
