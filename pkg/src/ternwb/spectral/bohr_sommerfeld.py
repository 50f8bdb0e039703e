"""Bohr-Sommerfeld quantization for the sextic oscillator.

The classical energy relation ``6 E^3 = p^6/m^3 + k^3 x^6`` gives
``p = sqrt(m k) (6 E^3 / k^3 - x^6)^(1/6)`` and the orbit action

    A(E) = 2 sqrt(m k) int_{-a}^{a} (a^6 - x^6)^(1/6) dx,   a = (6 E^3/k^3)^(1/6),

which evaluates in closed form to ``4 6^(1/3) Gamma(7/6)^2 / Gamma(4/3) sqrt(m k) E / k``.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from .quadrature import tanh_sinh

__all__ = [
    "QuantizationResult",
    "action_integral",
    "gamma_closed_form",
    "action_constant",
    "level_coefficient",
    "gamma_recurrence_residuals",
    "energy_levels",
    "harmonic_bs_sanity",
    "quantization_csv",
    "SemiclassicalRow",
    "semiclassical_comparison",
    "loglog_slope",
    "cube_root_r2",
]

CONVENTIONS = {"paper": "paper_nh", "standard": "standard_2pi_half"}


def _check_positive(**kw):
    for name, v in kw.items():
        if not v > 0:
            raise ValueError(f"{name} must be positive, got {v}")


def _sextic_integrand(a: float):
    a2, a3, a4, a5 = a * a, a ** 3, a ** 4, a ** 5

    def f(x, delta):
        u = abs(x)
        # a^6 - u^6 = (a - u)(a^5 + a^4 u + ... + u^5), with a - u = delta
        poly = a5 + u * (a4 + u * (a3 + u * (a2 + u * (a + u))))
        return (delta * poly) ** (1.0 / 6.0)

    return f


def action_integral(E: float, m: float = 1.0, k: float = 1.0, tol: float = 1e-13) -> float:
    """Orbit action of the sextic oscillator by tanh-sinh quadrature."""
    _check_positive(E=E, m=m, k=k)
    a = (6.0 * E ** 3 / k ** 3) ** (1.0 / 6.0)
    res = tanh_sinh(_sextic_integrand(a), -a, a, tol=tol)
    return 2.0 * math.sqrt(m * k) * res.value


def action_constant() -> float:
    """``4 6^(1/3) Gamma(7/6)^2 / Gamma(4/3)``, the action at ``E = m = k = 1``."""
    return 4.0 * 6.0 ** (1.0 / 3.0) * math.gamma(7.0 / 6.0) ** 2 / math.gamma(4.0 / 3.0)


def level_coefficient() -> float:
    """``Gamma(4/3) / (4 6^(1/3) Gamma(7/6)^2)``: energy per quantum of action."""
    return 1.0 / action_constant()


def gamma_recurrence_residuals() -> tuple:
    """Relative gaps of ``Gamma(7/6)``, ``Gamma(4/3)`` against ``Gamma(z)/z`` forms."""
    g76 = math.gamma(7.0 / 6.0)
    g43 = math.gamma(4.0 / 3.0)
    return (
        abs(g76 - math.gamma(1.0 / 6.0) / 6.0) / g76,
        abs(g43 - math.gamma(1.0 / 3.0) / 3.0) / g43,
    )


def gamma_closed_form(E: float, m: float = 1.0, k: float = 1.0) -> float:
    _check_positive(E=E, m=m, k=k)
    return action_constant() * math.sqrt(m * k) * E / k


@dataclass(frozen=True)
class QuantizationResult:
    n: int
    E_n: float
    action: float
    convention: str


def energy_levels(n_max: int, convention: str = "paper", m: float = 1.0, k: float = 1.0,
                  hbar: float = 1.0) -> List[QuantizationResult]:
    """Quantized energies with their actions recomputed by quadrature.

    ``convention="paper"`` imposes ``A = n hbar`` for ``n = 1..n_max``;
    ``"standard"`` imposes ``A = 2 pi hbar (n + 1/2)`` for ``n = 0..n_max``.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if convention not in CONVENTIONS:
        raise ValueError("convention must be 'paper' or 'standard'")
    _check_positive(m=m, k=k, hbar=hbar)
    omega = math.sqrt(k / m)
    coef = level_coefficient()
    out = []
    if convention == "paper":
        ns, quanta = range(1, n_max + 1), (lambda n: n * hbar)
    else:
        ns, quanta = range(0, n_max + 1), (lambda n: 2 * math.pi * hbar * (n + 0.5))
    for n in ns:
        E = coef * quanta(n) * omega
        out.append(QuantizationResult(n, E, action_integral(E, m, k), CONVENTIONS[convention]))
    return out


def harmonic_bs_sanity(E: float = 1.0, m: float = 1.0, k: float = 1.0, tol: float = 1e-13) -> float:
    """Harmonic orbit action ``2 m omega int sqrt(2E/k - x^2) dx``; exact value ``2 pi E/omega``."""
    _check_positive(E=E, m=m, k=k)
    omega = math.sqrt(k / m)
    a = math.sqrt(2.0 * E / k)

    def f(x, delta):
        return math.sqrt(delta * (a + abs(x)))

    return 2.0 * m * omega * tanh_sinh(f, -a, a, tol=tol).value


def quantization_csv(levels: Iterable[QuantizationResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "E_n", "action", "convention"])
    for r in levels:
        w.writerow([r.n, repr(r.E_n), repr(r.action), r.convention])
    return buf.getvalue()


@dataclass(frozen=True)
class SemiclassicalRow:
    n: int
    E_cubed: float
    eigenvalue: float

    @property
    def rel_deviation(self) -> float:
        return abs(self.E_cubed - self.eigenvalue) / self.eigenvalue


def semiclassical_comparison(eigenvalues, n_lo: int = 20, n_hi: int = 40) -> List[SemiclassicalRow]:
    """Compare ``E_n^3`` (standard convention, unit constants) with eigenvalues.

    ``eigenvalues`` must be those of ``(p^6 + x^6)/6``, the cube of the
    classical energy in the normalization used here.
    """
    eig = np.asarray(eigenvalues, dtype=float)
    if len(eig) <= n_hi:
        raise ValueError(f"need at least {n_hi + 1} eigenvalues")
    coef = level_coefficient()
    rows = []
    for n in range(n_lo, n_hi + 1):
        E = coef * 2 * math.pi * (n + 0.5)
        rows.append(SemiclassicalRow(n, E ** 3, float(eig[n])))
    return rows


def loglog_slope(eigenvalues, n_lo: int = 20, n_hi: int = 60) -> float:
    """Least-squares slope of ``log lambda_n`` against ``log n``."""
    n = np.arange(n_lo, n_hi + 1)
    lam = np.asarray(eigenvalues, dtype=float)[n]
    return float(np.polyfit(np.log(n), np.log(lam), 1)[0])


def cube_root_r2(eigenvalues, n_lo: int = 20, n_hi: int = 60) -> float:
    """Coefficient of determination of an affine fit of ``lambda_n^(1/3)`` in ``n``."""
    n = np.arange(n_lo, n_hi + 1)
    y = np.cbrt(np.asarray(eigenvalues, dtype=float)[n])
    fit = np.polyval(np.polyfit(n, y, 1), n)
    ss_res = float(((y - fit) ** 2).sum())
    ss_tot = float(((y - y.mean()) ** 2).sum())
    return 1.0 - ss_res / ss_tot
