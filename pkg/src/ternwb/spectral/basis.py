"""Polynomial operators in the harmonic-oscillator number basis.

With ``x = (a + a^dag)/sqrt(2)`` and ``D = (a - a^dag)/sqrt(2)`` every
normal-ordered ``x^m D^n`` is banded with half-bandwidth ``m + n``.  The
matrix is assembled on a padded basis of size ``M + degree`` so that the
leading ``M x M`` block is exact, then truncated.
"""
from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass, field
from typing import List

import numpy as np
import scipy.sparse as sp
from scipy.linalg import LinAlgError, eig_banded

from ..weylops import D, X, OperatorPoly, build_hamiltonian_z3

__all__ = [
    "NotSelfAdjoint",
    "EigensolverError",
    "HermiteBasisOp",
    "Spectrum",
    "build_matrix",
    "lowest_eigenvalues",
    "spectrum",
    "sextic_spectrum",
    "harmonic_operator",
    "spectrum_csv",
]


class NotSelfAdjoint(ValueError):
    pass


class EigensolverError(RuntimeError):
    pass


def harmonic_operator() -> OperatorPoly:
    """``p^2 + x^2 = -D^2 + x^2``."""
    return X * X - D * D


def _ladder(K: int):
    a = sp.diags(np.sqrt(np.arange(1, K, dtype=float)), 1, shape=(K, K), format="csr")
    return a, a.T.tocsr()


@dataclass
class HermiteBasisOp:
    """``M x M`` matrix of an operator in the number basis.

    ``bands[k]`` holds the ``k``-th superdiagonal (length ``M - k``); the
    matrix is hermitian so the lower part is implied.
    """

    M: int
    bandwidth: int
    bands: List[np.ndarray]

    def dense(self) -> np.ndarray:
        dtype = np.result_type(*self.bands)
        out = np.zeros((self.M, self.M), dtype=dtype)
        for k, b in enumerate(self.bands):
            idx = np.arange(self.M - k)
            out[idx, idx + k] = b
            if k:
                out[idx + k, idx] = np.conj(b)
        return out

    def upper_banded(self) -> np.ndarray:
        """LAPACK upper band storage, shape ``(bandwidth + 1, M)``."""
        dtype = np.result_type(*self.bands)
        ab = np.zeros((self.bandwidth + 1, self.M), dtype=dtype)
        for k, b in enumerate(self.bands):
            ab[self.bandwidth - k, k:] = b
        return ab


def build_matrix(op: OperatorPoly, M: int, atol: float = 1e-12) -> HermiteBasisOp:
    """Number-basis matrix of a numeric, formally self-adjoint operator.

    Raises
    ------
    NotSelfAdjoint
        If ``op.adjoint() != op`` exactly.
    """
    if M < 1:
        raise ValueError("M must be positive")
    if not op.is_numeric():
        raise ValueError("operator still carries formal parameters; specialize it first")
    if op.adjoint() != op:
        raise NotSelfAdjoint(f"operator {op} is not formally self-adjoint")
    terms = op.numeric_terms()
    deg = max((m + n for m, n in terms), default=0)
    K = M + deg
    a, ad = _ladder(K)
    s = 1 / np.sqrt(2.0)
    xm = (a + ad) * s
    dm = (a - ad) * s
    eye = sp.identity(K, format="csr")
    xpow = [eye]
    dpow = [eye]
    for _ in range(max((m for m, _ in terms), default=0)):
        xpow.append(xpow[-1] @ xm)
    for _ in range(max((n for _, n in terms), default=0)):
        dpow.append(dpow[-1] @ dm)
    total = sp.csr_matrix((K, K), dtype=complex)
    for (m, n), c in terms.items():
        total = total + c.to_complex() * (xpow[m] @ dpow[n])
    mat = total[:M, :M].toarray()
    scale = max(np.abs(mat).max(), 1.0)
    if np.abs(mat - mat.conj().T).max() > atol * scale:
        raise NotSelfAdjoint("assembled matrix is not hermitian")
    if np.abs(mat.imag).max() <= atol * scale:
        mat = mat.real
    bw = min(deg, M - 1)
    bands = [np.diagonal(mat, k).copy() for k in range(bw + 1)]
    return HermiteBasisOp(M=M, bandwidth=bw, bands=bands)


def lowest_eigenvalues(hop: HermiteBasisOp, count: int) -> np.ndarray:
    count = min(count, hop.M)
    try:
        w = eig_banded(
            hop.upper_banded(),
            lower=False,
            eigvals_only=True,
            select="i",
            select_range=(0, count - 1),
        )
    except LinAlgError as exc:  # pragma: no cover - LAPACK failure path
        raise EigensolverError(str(exc)) from exc
    return np.sort(w)


@dataclass
class Spectrum:
    """Low eigenvalues from truncation ``M`` with ``M`` vs ``2M`` error estimates.

    ``converged_count`` counts the leading eigenvalues whose estimate is
    within ``rtol`` relative.
    """

    eigenvalues: np.ndarray
    M: int
    errors: np.ndarray
    converged_count: int
    rtol: float
    operator: str = field(default="")

    @property
    def converged(self) -> np.ndarray:
        return self.eigenvalues[: self.converged_count]


def spectrum(op: OperatorPoly, M: int, n_eig: int | None = None, rtol: float = 1e-8) -> Spectrum:
    """Lowest ``n_eig`` eigenvalues of ``op`` (default ``M // 2``)."""
    if n_eig is None:
        n_eig = max(M // 2, 1)
    n_eig = min(n_eig, M)
    lo = lowest_eigenvalues(build_matrix(op, M), n_eig)
    hi = lowest_eigenvalues(build_matrix(op, 2 * M), n_eig)
    err = np.abs(lo - hi)
    ok = err <= rtol * np.maximum(np.abs(hi), 1e-300)
    count = int(np.argmin(ok)) if not ok.all() else len(ok)
    return Spectrum(eigenvalues=lo, M=M, errors=err, converged_count=count, rtol=rtol, operator=str(op))


def sextic_spectrum(M: int, n_eig: int | None = None, rtol: float = 1e-8) -> Spectrum:
    """Spectrum of ``p^6 + x^6 = -D^6 + x^6``.

    Sizes below 64 are accepted with a warning because very few levels
    converge there.
    """
    if M < 8:
        raise ValueError("M must be at least 8")
    if M < 64:
        warnings.warn(f"M={M} is below 64; few eigenvalues will converge", RuntimeWarning)
    return spectrum(build_hamiltonian_z3(), M, n_eig=n_eig, rtol=rtol)


def spectrum_csv(spec: Spectrum, n_show: int | None = None) -> str:
    """CSV with header ``n,eigenvalue,error_estimate,M``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "eigenvalue", "error_estimate", "M"])
    rows = len(spec.eigenvalues) if n_show is None else min(n_show, len(spec.eigenvalues))
    for n in range(rows):
        w.writerow([n, repr(float(spec.eigenvalues[n])), f"{spec.errors[n]:.3e}", spec.M])
    return buf.getvalue()
