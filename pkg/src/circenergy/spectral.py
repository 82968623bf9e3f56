"""Eigenvalues and trace-norm energy of band circulant / Toeplitz matrices.

Circulant spectra come in closed form, lambda_r = 2 * sum_k a_k
cos(2 pi k r / n) for r = 1..n, evaluated either directly (O(n b)) or as
the FFT of the first row (O(n log n)); wide bands use the FFT.  Toeplitz
matrices have no closed form and go through a dense symmetric
eigensolver, which is also the oracle path for cross-checks.

Energy is the trace norm E(A) = sum_r |lambda_r|; the normalized value
E / (n sqrt(b)) is the quantity with a distribution-level limit.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ensembles import CirculantMatrix, ToeplitzMatrix

# Dense eigensolves beyond this size are almost certainly a mistake
# (O(n^3) work, O(n^2) memory); callers must raise the cap explicitly.
DENSE_CAP_DEFAULT = 4096

# FFT rounding leaves a spurious imaginary part; for a real symmetric
# symbol it must vanish, so anything above this scaled tolerance means
# the input was not the symbol of a symmetric circulant.
FFT_IMAG_TOL = 1e-9


class NumericalError(RuntimeError):
    """A numerical consistency check failed (residuals, violated exact bounds)."""


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues of one matrix, in the producing routine's order."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        arr = np.array(self.eigenvalues, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("spectrum must be a non-empty 1-D real array")
        arr.setflags(write=False)
        object.__setattr__(self, "eigenvalues", arr)

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def sorted(self) -> np.ndarray:
        return np.sort(self.eigenvalues)


@dataclass(frozen=True)
class EnergyValue:
    """Trace norm and its n*sqrt(b) normalization."""

    energy: float
    normalized: float


def circulant_eigenvalues_direct(matrix: CirculantMatrix) -> Spectrum:
    """Cosine-sum spectrum lambda_r = 2 sum_k a_k cos(2 pi k r / n), r = 1..n."""
    n = matrix.n
    a = matrix.coeffs.values
    k = np.arange(1, a.size + 1)
    r = np.arange(1, n + 1)
    lam = 2.0 * (a @ np.cos((2.0 * math.pi / n) * np.outer(k, r)))
    return Spectrum(lam)


def circulant_eigenvalues_fft(matrix: CirculantMatrix) -> Spectrum:
    """FFT of the symbol row; the symmetric band forces a real spectrum."""
    lam = np.fft.fft(matrix.symbol_row())
    scale = float(np.abs(matrix.coeffs.values).sum()) * matrix.n
    residual = float(np.abs(lam.imag).max())
    if residual > FFT_IMAG_TOL * scale:
        raise NumericalError(
            f"FFT spectrum has imaginary residual {residual:.3e} "
            f"exceeding {FFT_IMAG_TOL:.0e} * {scale:.3e}"
        )
    return Spectrum(lam.real.copy())


def resolve_circulant_method(matrix: CirculantMatrix, method: str = "auto") -> str:
    """Resolve "auto" to FFT once b > ln n, where the O(n log n) transform
    beats the O(n b) cosine sum."""
    if method == "auto":
        return "fft" if matrix.coeffs.b > math.log(matrix.n) else "direct"
    return method


def circulant_eigenvalues(matrix: CirculantMatrix, method: str = "auto") -> Spectrum:
    """Cosine-sum or FFT spectrum, dispatching on resolve_circulant_method."""
    method = resolve_circulant_method(matrix, method)
    if method == "direct":
        return circulant_eigenvalues_direct(matrix)
    if method == "fft":
        return circulant_eigenvalues_fft(matrix)
    raise ValueError(f"unknown circulant eigenvalue method {method!r}")


def dense_symmetric_eigenvalues(matrix: np.ndarray) -> Spectrum:
    """Eigenvalues of a dense symmetric matrix (LAPACK), ascending order."""
    arr = np.asarray(matrix, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    scale = max(1.0, float(np.abs(arr).max()))
    asym = float(np.abs(arr - arr.T).max())
    if asym > 1e-12 * scale:
        raise ValueError(f"matrix is not symmetric: max asymmetry {asym:.3e}")
    return Spectrum(np.linalg.eigvalsh(arr))


def energy(spectrum: Spectrum, b: int) -> EnergyValue:
    """Trace norm of the matrix behind spectrum, with its n*sqrt(b) normalization."""
    if b < 1:
        raise ValueError("band width must be at least 1")
    e = float(np.abs(spectrum.eigenvalues).sum())
    return EnergyValue(e, e / (spectrum.n * math.sqrt(b)))


def circulant_energy(matrix: CirculantMatrix, method: str = "auto") -> EnergyValue:
    return energy(circulant_eigenvalues(matrix, method), matrix.coeffs.b)


def toeplitz_energy(matrix: ToeplitzMatrix, cap: int = DENSE_CAP_DEFAULT) -> EnergyValue:
    """Dense-eigensolver energy of a band Toeplitz matrix; refuses n > cap."""
    if matrix.n > cap:
        raise ValueError(
            f"Toeplitz energy needs a dense eigensolve; size {matrix.n} exceeds cap {cap}"
        )
    return energy(dense_symmetric_eigenvalues(matrix.dense()), matrix.coeffs.b)


def write_spectrum(path: str | Path, spectrum: Spectrum) -> None:
    """Write eigenvalues as JSON (.json) or one-per-row CSV (otherwise)."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(
            json.dumps({"n": spectrum.n, "eigenvalues": [float(v) for v in spectrum.eigenvalues]})
            + "\n"
        )
        return
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        for v in spectrum.eigenvalues:
            writer.writerow([repr(float(v))])
