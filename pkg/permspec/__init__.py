"""Initialization of permspec

Exact permanents, permanent spectra, extremal values and parity for the
(0,1)-matrices with three 1's in every row and column, and for the
weighted classes with entries α, β, γ.
"""

__version__ = "0.1.0"


def _check_ase():
    import ase
    from packaging import version

    # ase.config and the CLICommand framework
    if version.parse(ase.__version__) < version.parse("3.23"):
        raise ImportError(f"permspec requires ase >= 3.23, found {ase.__version__}")


_check_ase()

from .core import (  # noqa: E402
    BinaryMatrix,
    ClassKind,
    ClassSpec,
    WeightedMatrix,
    permanent,
    permanent_expansion,
    permanent_ryser,
)
from .io import read_matrix, write_matrix  # noqa: E402
from .spectrum import Spectrum, spectrum_symmetric, spectrum_weighted  # noqa: E402

__all__ = [
    "BinaryMatrix",
    "ClassKind",
    "ClassSpec",
    "Spectrum",
    "WeightedMatrix",
    "permanent",
    "permanent_expansion",
    "permanent_ryser",
    "read_matrix",
    "spectrum_symmetric",
    "spectrum_weighted",
    "write_matrix",
]
