"""Power-series solutions of the third-order eigen-equation.

The operator ``2i D^3 - x^3 - 1`` with eigenvalue ``K`` gives the ODE

    2i f''' - x^3 f - (1 + K) f = 0

and the coefficient recurrence

    2i (k+1)(k+2)(k+3) c_{k+3} = c_{k-3} + (1 + K) c_k .

Coefficients are kept exact in Q(zeta12); only evaluation uses floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..exactfield import I, ONE, ZERO, Cyclo12, as_cyclo
from ..weylops import build_khat

__all__ = [
    "SeriesSolution",
    "series_solution",
    "ode_residual",
    "hypergeom_eval",
    "MatchResult",
    "match_series_to_F",
    "khat_eigen_check",
    "PRINTED_PARAMETERS",
    "PRINTED_ARGUMENT",
]

# parameter pairs and argument coefficient as they appear in the closed-form solutions
PRINTED_PARAMETERS = {
    0: (Fraction(2, 3), Fraction(5, 6)),
    1: (Fraction(5, 6), Fraction(7, 6)),
    2: (Fraction(7, 3), Fraction(4, 3)),
}
PRINTED_ARGUMENT = I * Fraction(1, 432)


@dataclass
class SeriesSolution:
    """Truncated series ``f(x) = sum_k c_k x^k`` with exact coefficients."""

    branch: int
    K: Fraction
    coefficients: Dict[int, Cyclo12]
    max_power: int

    def coefficient(self, k: int) -> Cyclo12:
        return self.coefficients.get(k, ZERO)

    def complex_coefficients(self) -> np.ndarray:
        out = np.zeros(self.max_power + 1, dtype=complex)
        for k, c in self.coefficients.items():
            out[k] = c.to_complex()
        return out

    def evaluate(self, x, deriv: int = 0):
        """Value of the ``deriv``-th derivative at ``x`` (scalar or array)."""
        c = np.polynomial.polynomial.polyder(self.complex_coefficients(), deriv) if deriv else \
            self.complex_coefficients()
        return np.polynomial.polynomial.polyval(np.asarray(x, dtype=float), c)

    def __call__(self, x):
        return self.evaluate(x)


def series_solution(branch: int, K=-1, terms: int = 60) -> SeriesSolution:
    """Series branch seeded by ``c_branch = 1`` and the other low seeds zero.

    ``terms`` counts retained powers ``branch + 6 m``; the series is
    truncated at degree ``branch + 6 (terms - 1)``.
    """
    if branch not in (0, 1, 2):
        raise ValueError("branch must be 0, 1 or 2")
    if terms < 1:
        raise ValueError("terms must be positive")
    K = Fraction(K)
    shift = 1 + K
    top = branch + 6 * (terms - 1)
    c: Dict[int, Cyclo12] = {branch: ONE}
    inv2i = (I * 2).inv()
    for k in range(0, top - 2):
        rhs = c.get(k - 3, ZERO) + c.get(k, ZERO) * shift
        if rhs:
            c[k + 3] = rhs * inv2i * Fraction(1, (k + 1) * (k + 2) * (k + 3))
    c = {k: v for k, v in c.items() if k <= top}
    return SeriesSolution(branch=branch, K=K, coefficients=c, max_power=top)


def ode_residual(sol: SeriesSolution, xs) -> np.ndarray:
    """``2i f''' - x^3 f - (1 + K) f`` at the sample points."""
    xs = np.asarray(xs, dtype=float)
    f = sol.evaluate(xs)
    f3 = sol.evaluate(xs, 3)
    return 2j * f3 - xs ** 3 * f - (1 + float(sol.K)) * f


def khat_eigen_check(sol: SeriesSolution, n_points: int = 64) -> float:
    """Max of ``|(K_hat - K) f|`` on ``[-1, 1]``, with ``K_hat`` at ``lam = -i``.

    The operator is applied term by term from its normal-ordered form, so
    this is independent of :func:`ode_residual`.
    """
    if sol.K != -1:
        raise ValueError("eigen check is defined for K = -1")
    xs = np.linspace(-1.0, 1.0, n_points)
    op = build_khat().specialize(lam=-I)
    f = sol.evaluate(xs)
    out = -float(sol.K) * f
    for (m, n), c in op.numeric_terms().items():
        out = out + c.to_complex() * xs ** m * sol.evaluate(xs, n)
    return float(np.abs(out).max())


def hypergeom_eval(p, q, xi, terms: int = 60, convention: str = "printed") -> complex:
    """Partial sum of ``sum_k Gamma(p)Gamma(q)/(Gamma(p+k)Gamma(q+k)) xi^k``.

    ``convention="standard"`` divides term ``k`` by ``k!`` as well, giving
    the usual ``0F2(; p, q; xi)``.
    """
    if convention not in ("printed", "standard"):
        raise ValueError("convention must be 'printed' or 'standard'")
    for v in (p, q):
        if float(v) <= 0 and float(v) == math.floor(float(v)):
            raise ValueError(f"parameter {v} is a pole of the Gamma function")
    if terms < 1:
        raise ValueError("terms must be positive")
    p, q = float(p), float(q)
    term = 1.0 + 0j
    total = term
    for k in range(terms - 1):
        term *= xi / ((p + k) * (q + k))
        if convention == "standard":
            term /= k + 1
        total += term
    return complex(total)


def _interpolate(values: List[Cyclo12]) -> List[Cyclo12]:
    """Exact Newton interpolation through ``(m, values[m])``; power-basis coefficients."""
    n = len(values)
    dd = list(values)
    coeffs = [dd[0]]
    for level in range(1, n):
        dd = [(dd[i + 1] - dd[i]) * Fraction(1, level) for i in range(len(dd) - 1)]
        coeffs.append(dd[0])
    poly = [ZERO] * n
    basis = [ONE]  # prod_{i<level} (m - i)
    for level, a in enumerate(coeffs):
        for t, b in enumerate(basis):
            poly[t] = poly[t] + a * b
        nxt = [ZERO] * (len(basis) + 1)
        for t, b in enumerate(basis):
            nxt[t + 1] = nxt[t + 1] + b
            nxt[t] = nxt[t] - b * level
        basis = nxt
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    return poly


def _eval_poly(poly: List[Cyclo12], m) -> Cyclo12:
    out = ZERO
    for c in reversed(poly):
        out = out * m + c
    return out


def _rational_roots(monic: List[Fraction]) -> List[Fraction]:
    deg = len(monic) - 1
    approx = np.roots([float(c) for c in reversed(monic)])
    roots = []
    for r in approx:
        if abs(r.imag) > 1e-6:
            continue
        cand = Fraction(r.real).limit_denominator(1000)
        val = Fraction(0)
        for c in reversed(monic):
            val = val * cand + c
        if val == 0:
            roots.append(cand)
    if len(roots) != deg:
        raise ValueError("term-ratio polynomial does not factor over the rationals")
    return sorted(roots)


@dataclass
class MatchResult:
    """Outcome of matching a series branch against ``x^b F(; p, q; alpha x^6)``."""

    branch: int
    p: Optional[Fraction]
    q: Optional[Fraction]
    argument: Optional[Cyclo12]
    convention: Optional[str]
    printed_p_q: Tuple[Fraction, Fraction]
    inverse_ratio_degree: int
    max_deviation: float = field(default=float("nan"))

    @property
    def matched(self) -> bool:
        return self.convention is not None

    @property
    def matches_printed_parameters(self) -> bool:
        return self.matched and {self.p, self.q} == set(self.printed_p_q)

    @property
    def matches_printed_argument(self) -> bool:
        return self.argument == PRINTED_ARGUMENT

    @property
    def argument_sign(self) -> str:
        """``'+i'`` or ``'-i'`` for an argument ``+-i x^6/432``."""
        if self.argument == PRINTED_ARGUMENT:
            return "+i"
        if self.argument == -PRINTED_ARGUMENT:
            return "-i"
        return str(self.argument)

    def to_dict(self) -> dict:
        return {
            "branch": self.branch,
            "p": str(self.p),
            "q": str(self.q),
            "argument_coefficient": str(self.argument),
            "argument_sign": self.argument_sign,
            "convention": self.convention,
            "printed_p_q": [str(v) for v in self.printed_p_q],
            "matches_printed_parameters": self.matches_printed_parameters,
            "matches_printed_argument": self.matches_printed_argument,
            "max_deviation": self.max_deviation,
        }


def match_series_to_F(sol: SeriesSolution, n_check: int = 8) -> MatchResult:
    """Identify ``p, q``, the argument and the coefficient convention.

    The ratio ``r_m = c_{b+6(m+1)} / c_{b+6m}`` is exact; ``1/r_m`` is
    interpolated as a polynomial in ``m`` and verified on further points.
    A quadratic means the printed convention, a cubic with root ``-1``
    means the standard one (the extra factor is ``m + 1``).
    """
    if sol.K != -1:
        raise ValueError("closed-form matching needs K = -1")
    b = sol.branch
    m_count = (sol.max_power - b) // 6
    if m_count < max(n_check, 6):
        raise ValueError("series too short to match; use more terms")
    inv_r = [sol.coefficient(b + 6 * m) / sol.coefficient(b + 6 * (m + 1)) for m in range(m_count)]
    poly = _interpolate(inv_r[:4])
    printed = PRINTED_PARAMETERS[b]
    for m in range(4, min(m_count, 4 + n_check)):
        if _eval_poly(poly, m) != inv_r[m]:
            return MatchResult(b, None, None, None, None, printed, -1)
    lead = poly[-1]
    monic = []
    for c in poly:
        v = c / lead
        if not v.is_rational():
            return MatchResult(b, None, None, None, None, printed, len(poly) - 1)
        monic.append(v.coords[0])
    roots = _rational_roots(monic)
    deg = len(roots)
    alpha = lead.inv()
    if deg == 3 and Fraction(-1) in roots:
        rest = list(roots)
        rest.remove(Fraction(-1))
        convention = "standard"
    elif deg == 2:
        rest = roots
        convention = "printed"
    else:
        return MatchResult(b, None, None, alpha, None, printed, deg)
    p, q = sorted(-r for r in rest)
    xs = np.linspace(-1.0, 1.0, 64)
    a = alpha.to_complex()
    closed = np.array([x ** b * hypergeom_eval(p, q, a * x ** 6, 60, convention) for x in xs])
    dev = float(np.abs(closed - sol.evaluate(xs)).max())
    return MatchResult(b, p, q, alpha, convention, printed, deg, dev)
