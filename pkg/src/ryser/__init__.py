"""Exact tools for circulant Hadamard matrices: algebra, rank structure, F2 checks, coding bounds and search."""

from .circulant import (
    Circulant,
    EigenvalueReport,
    PafSpectrum,
    SignRow,
    circm,
    eigen_report,
    gram,
    is_circulant_hadamard,
    multiply,
    paf,
    row_inner,
    sylvester_hadamard,
    transpose,
)
from .errors import DependentBasis, InvalidArgument, LemmaViolation, PreconditionViolation, ResourceLimit
from .rank import RankCertificate, rank

__version__ = "0.1.0"
