"""Finite-difference eigensolver on ``[-L, L]`` with Dirichlet ends.

This is an independent check on the number-basis results.  Only
separable operators ``sum_n c_n D^n + V(x)`` are supported.
"""
from __future__ import annotations

import math
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.linalg import eig_banded

from ..weylops import OperatorPoly

__all__ = [
    "ResolutionWarning",
    "central_weights",
    "fd_eigensystem",
    "fd_oracle",
]


class ResolutionWarning(RuntimeWarning):
    pass


@lru_cache(maxsize=None)
def central_weights(order: int, half_width: int) -> Tuple[Fraction, ...]:
    """Exact weights ``w_{-r..r}`` with ``f^(order)(0) ~ sum w_s f(s) / h**order``.

    Solves the Vandermonde system ``sum_s w_s s**k = order! * [k == order]``
    for ``k = 0..2r`` over the rationals.
    """
    r = half_width
    if 2 * r + 1 < order + 1:
        raise ValueError("stencil too narrow for this derivative order")
    pts = list(range(-r, r + 1))
    n = len(pts)
    rows = [[Fraction(s) ** k for s in pts] + [Fraction(math.factorial(order) if k == order else 0)]
            for k in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if rows[i][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return tuple(row[-1] for row in rows)


def _split(op: OperatorPoly):
    deriv, pot = {}, {}
    for (m, n), c in op.numeric_terms().items():
        if m and n:
            raise ValueError("finite-difference oracle needs a separable operator")
        if n:
            deriv[n] = c.to_complex()
        else:
            pot[m] = c.to_complex()
    return deriv, pot


def fd_eigensystem(op: OperatorPoly, L: float = 10.0, h: float = 0.05, n_eig: int = 6,
                   half_width: int = 5):
    """Lowest eigenpairs ``(x, values, vectors)`` of the discretized operator."""
    if not op.is_numeric():
        raise ValueError("operator still carries formal parameters; specialize it first")
    deriv, pot = _split(op)
    n_pts = int(round(2 * L / h)) - 1
    x = -L + h * np.arange(1, n_pts + 1)
    r = max([half_width] + [math.ceil(n / 2) for n in deriv])
    ab = np.zeros((r + 1, n_pts), dtype=complex)
    diag = np.zeros(n_pts, dtype=complex)
    for m, c in pot.items():
        diag += c * x ** m
    ab[r] += diag
    for n, c in deriv.items():
        w = central_weights(n, r)
        for k in range(0, r + 1):
            # upper band entry (i, i + k) carries weight w_{+k}
            ab[r - k, k:] += c * float(w[r + k]) / h ** n
    # the implied lower band c*w_{-k} must be the conjugate of the upper one
    for n, c in deriv.items():
        w = central_weights(n, r)
        for k in range(1, r + 1):
            lower, upper = c * float(w[r - k]), c * float(w[r + k])
            if abs(lower - np.conj(upper)) > 1e-12 * abs(upper):
                raise ValueError("discretized operator is not hermitian")
    if np.abs(diag.imag).max() > 0:
        raise ValueError("potential must be real")
    if np.abs(ab.imag).max() == 0:
        ab = ab.real
    vals, vecs = eig_banded(ab, lower=False, select="i", select_range=(0, n_eig - 1))
    return x, vals, vecs


def fd_oracle(op: OperatorPoly, L: float = 10.0, h: float = 0.05, n_eig: int = 6,
              half_width: int = 5, mass_tol: float = 1e-10) -> np.ndarray:
    """Low eigenvalues by central differences (default: 11-point stencils).

    Emits :class:`ResolutionWarning` when an eigenvector keeps more than
    ``mass_tol`` of its norm in the outer tenth of the box.
    """
    if L <= 0 or h <= 0:
        raise ValueError("L and h must be positive")
    x, vals, vecs = fd_eigensystem(op, L, h, n_eig, half_width)
    edge = np.abs(x) >= 0.9 * L
    mass = (np.abs(vecs[edge]) ** 2).sum(axis=0)
    if mass.max() > mass_tol:
        warnings.warn(
            f"boundary eigenfunction mass {mass.max():.2e} exceeds {mass_tol:.0e}; enlarge L",
            ResolutionWarning,
        )
    return np.sort(vals)
