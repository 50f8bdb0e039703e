"""One-variable differential operators ``sum c_{m,n} x^m D^n`` with formal parameters.

Coefficients are polynomials in a formal ``lam`` and ``s = sqrt(hbar)`` over
Q(zeta12), so operator identities are checked as polynomial identities in the
parameters and specialised only when a concrete value is needed.  Products are
normal ordered with every ``x`` to the left of every ``D`` via ``D x = x D + 1``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

from .exactfield import ONE, ZERO, J, J2, I, SQRT3, Cyclo12, as_cyclo
from .gradedalg import commutator, ternary_j_commutator
from .matrixternary import MatC

__all__ = [
    "ParamScalar",
    "OperatorPoly",
    "GaussPoly",
    "UnspecializedParameter",
    "LAM",
    "SQRT_HBAR",
    "X",
    "D",
    "UNIT",
    "commutator",
    "ternary_j_commutator",
    "build_c",
    "build_c_normalized",
    "heisenberg_identity_suite",
    "normalized_six_term",
    "three_h",
    "IdentityResult",
    "hquad_identity",
    "build_khat",
    "khat_combinations",
    "build_k_pair",
    "build_hamiltonian_z3",
    "cyclic_h_check",
    "apply",
    "vandermonde3",
    "random_operator",
]


class UnspecializedParameter(ValueError):
    pass


class ParamScalar:
    """Polynomial in ``lam`` and ``s`` (= sqrt(hbar)) with Cyclo12 coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], object] | None = None):
        self.terms: Dict[Tuple[int, int], Cyclo12] = {}
        for k, c in (terms or {}).items():
            c = as_cyclo(c)
            if c:
                self.terms[k] = c

    @classmethod
    def const(cls, c) -> "ParamScalar":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Optional[Cyclo12]:
        """The value if parameter free, else None."""
        if not self.terms:
            return ZERO
        if set(self.terms) == {(0, 0)}:
            return self.terms[(0, 0)]
        return None

    def has_lam(self) -> bool:
        return any(a for a, _ in self.terms)

    def __eq__(self, other):
        if not isinstance(other, ParamScalar):
            other = _ps(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _ps(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        r = ParamScalar()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = ParamScalar()
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-_ps(other))

    def __rsub__(self, other):
        return _ps(other) - self

    def __mul__(self, other):
        other = _ps(other)
        out: Dict[Tuple[int, int], Cyclo12] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, ZERO) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        r = ParamScalar()
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = ParamScalar.const(1)
        for _ in range(n):
            r = r * self
        return r

    def specialize(self, lam=None, sqrt_hbar=None) -> "ParamScalar":
        """Substitute concrete values; ``None`` keeps a parameter formal."""
        out = ParamScalar()
        lam = as_cyclo(lam) if lam is not None else None
        sh = as_cyclo(sqrt_hbar) if sqrt_hbar is not None else None
        for (a, b), c in self.terms.items():
            coeff = c
            na, nb = a, b
            if lam is not None:
                coeff = coeff * lam ** a
                na = 0
            if sh is not None:
                coeff = coeff * sh ** b
                nb = 0
            out = out + ParamScalar({(na, nb): coeff})
        return out

    def conj(self) -> "ParamScalar":
        if self.has_lam():
            raise UnspecializedParameter("cannot conjugate a formal lam; specialise it first")
        # sqrt(hbar) is real
        return ParamScalar({k: c.conj() for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            mono = "*".join(
                t
                for t in (
                    (f"lam^{a}" if a > 1 else "lam") if a else "",
                    (f"sqrt_hbar^{b}" if b > 1 else "sqrt_hbar") if b else "",
                )
                if t
            )
            parts.append(_term_str(self.terms[(a, b)], mono))
        return _join_terms(parts)


def _coef_str(c) -> str:
    s = str(c)
    return f"({s})" if " " in s else s


def _term_str(c, mono: str) -> str:
    if not mono:
        return _coef_str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{_coef_str(c)}*{mono}"


def _join_terms(parts) -> str:
    text = parts[0]
    for p in parts[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


def _ps(v) -> ParamScalar:
    if isinstance(v, ParamScalar):
        return v
    return ParamScalar.const(as_cyclo(v))


class OperatorPoly:
    """Normal-ordered element ``sum c_{m,n} x^m D^n``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], object] | None = None):
        self.terms: Dict[Tuple[int, int], ParamScalar] = {}
        for k, c in (terms or {}).items():
            c = _ps(c)
            if not c.is_zero():
                self.terms[k] = c

    @classmethod
    def scalar(cls, c) -> "OperatorPoly":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, OperatorPoly):
            other = OperatorPoly.scalar(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _merge(self, items):
        out = dict(self.terms)
        for k, c in items:
            v = out[k] + c if k in out else c
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        r = OperatorPoly()
        r.terms = out
        return r

    def __add__(self, other):
        if not isinstance(other, OperatorPoly):
            other = OperatorPoly.scalar(other)
        return self._merge(other.terms.items())

    __radd__ = __add__

    def __neg__(self):
        r = OperatorPoly()
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, OperatorPoly):
            other = OperatorPoly.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, OperatorPoly):
            c = _ps(other)
            r = OperatorPoly()
            r.terms = {k: v * c for k, v in self.terms.items() if not (v * c).is_zero()}
            return r
        items = []
        for (m, n), c1 in self.terms.items():
            for (p, q), c2 in other.terms.items():
                c = c1 * c2
                # D^n x^p = sum_k C(n,k) p!/(p-k)! x^(p-k) D^(n-k)
                fall = 1
                for k in range(min(n, p) + 1):
                    if k:
                        fall *= p - k + 1
                    items.append(((m + p - k, n - k + q), c * (comb(n, k) * fall)))
        return OperatorPoly()._merge(items)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        r = OperatorPoly.scalar(1)
        for _ in range(n):
            r = r * self
        return r

    # -- structure --------------------------------------------------------
    def coeff(self, m: int, n: int) -> ParamScalar:
        return self.terms.get((m, n), ParamScalar())

    def order(self) -> int:
        return max((n for _, n in self.terms), default=0)

    def degree(self) -> int:
        return max((m + n for m, n in self.terms), default=0)

    def specialize(self, lam=None, sqrt_hbar=None) -> "OperatorPoly":
        return OperatorPoly({k: c.specialize(lam, sqrt_hbar) for k, c in self.terms.items()})

    def is_numeric(self) -> bool:
        return all(c.constant() is not None for c in self.terms.values())

    def numeric_terms(self) -> Dict[Tuple[int, int], Cyclo12]:
        out = {}
        for k, c in self.terms.items():
            v = c.constant()
            if v is None:
                raise UnspecializedParameter("operator still carries formal parameters")
            out[k] = v
        return out

    def adjoint(self) -> "OperatorPoly":
        """Formal adjoint: x -> x, D -> -D, conjugate scalars, reverse order."""
        out = OperatorPoly()
        for (m, n), c in self.terms.items():
            # (c x^m D^n)^+ = conj(c) (-D)^n x^m
            term = OperatorPoly({(0, n): c.conj() * ((-1) ** n)}) * OperatorPoly({(m, 0): 1})
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[1], k)):
            mono = "*".join(
                t
                for t in (
                    (f"x^{m}" if m > 1 else "x") if m else "",
                    (f"D^{n}" if n > 1 else "D") if n else "",
                )
                if t
            )
            c = self.terms[(m, n)]
            const = c.constant()
            if const is not None:
                parts.append(_term_str(const, mono))
            elif mono:
                parts.append(f"[{c}]*{mono}")
            else:
                parts.append(f"[{c}]")
        return _join_terms(parts)

    __repr__ = __str__


LAM = ParamScalar({(1, 0): 1})
SQRT_HBAR = ParamScalar({(0, 1): 1})
X = OperatorPoly({(1, 0): 1})
D = OperatorPoly({(0, 1): 1})
UNIT = OperatorPoly.scalar(1)


# ---------------------------------------------------------------------------
# ternary Heisenberg generators
# ---------------------------------------------------------------------------

_C_COEFFS = {1: (J, J2), 2: (J2, J), 3: (ONE, ONE)}


def build_c(k: int, lam=LAM) -> OperatorPoly:
    """``c_k = lam D + a_k x + b_k``."""
    if k not in _C_COEFFS:
        raise ValueError("k must be 1, 2 or 3")
    a, b = _C_COEFFS[k]
    return D * _ps(lam) + X * a + UNIT * b


def build_c_normalized(k: int) -> OperatorPoly:
    """``(1/sqrt 3) [ (sqrt(hbar)/i) D + a_k x + b_k ]``."""
    inv_sqrt3 = SQRT3 * ONE / 3
    return build_c(k, lam=SQRT_HBAR * (-I)) * inv_sqrt3


@dataclass
class IdentityResult:
    check_id: str
    lhs: object
    rhs: object
    note: str = ""

    @property
    def difference(self):
        return self.lhs - self.rhs

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def heisenberg_identity_suite() -> List[IdentityResult]:
    """Every displayed relation among ``c1, c2, c3`` as identities in ``lam``."""
    c1, c2, c3 = (build_c(k) for k in (1, 2, 3))
    L = LAM
    one = UNIT
    T = ternary_j_commutator
    res = [
        IdentityResult("comm_c1_c2", commutator(c1, c2), one * (L * (J2 - J))),
        IdentityResult("comm_c2_c3", commutator(c2, c3), one * (L * (1 - J2))),
        IdentityResult("comm_c3_c1", commutator(c3, c1), one * (L * (J - 1))),
        IdentityResult("t_c1_c2_c1", T(c1, c2, c1), c1 * (L * -3)),
        IdentityResult("t_c2_c1_c2", T(c2, c1, c2), c2 * (L * 3)),
        IdentityResult("t_c2_c3_c2", T(c2, c3, c2), c2 * (L * (J * -3))),
        IdentityResult("t_c3_c2_c3", T(c3, c2, c3), c3 * (L * (J * 3))),
        IdentityResult("t_c3_c1_c3", T(c3, c1, c3), c3 * (L * (J2 * -3))),
        IdentityResult("t_c1_c3_c1", T(c1, c3, c1), c1 * (L * (J2 * 3))),
        IdentityResult(
            "t_c2_c3_c1",
            T(c2, c3, c1),
            (c1 * (1 - J) + c2 * (J2 - 1) + c3 * (J - J2)) * L,
        ),
        IdentityResult(
            "t_c1_c3_c2",
            T(c1, c3, c2),
            (c1 * (J2 - J) + c2 * (J2 - J) + c3 * (J2 - J)) * L,
        ),
        IdentityResult("unit_c1_c2", T(c1, one, c2), commutator(c1, c2)),
        IdentityResult("unit_c2_c3", T(c2, one, c3), commutator(c2, c3)),
        IdentityResult("unit_c3_c1", T(c3, one, c1), commutator(c3, c1)),
        IdentityResult(
            "six_term",
            (c1 * c3 * c2 + c3 * c2 * c1 + c2 * c1 * c3) - (c2 * c3 * c1 + c3 * c1 * c2 + c1 * c2 * c3),
            one * (L * (J - J2) * 3),
        ),
        IdentityResult("linear_sum", (c1 + c2 + c3) * Fraction(1, 3), D * L),
        IdentityResult("linear_unit", (c1 * J + c2 * J2 + c3) * Fraction(1, 3), one),
        IdentityResult("linear_x", (c1 * J2 + c2 * J + c3) * Fraction(1, 3), X),
    ]
    return res


def normalized_six_term() -> IdentityResult:
    """Six-term combination of the normalised generators against ``hbar * 1``."""
    c1, c2, c3 = (build_c_normalized(k) for k in (1, 2, 3))
    lhs = (c1 * c3 * c2 + c3 * c2 * c1 + c2 * c1 * c3) - (c2 * c3 * c1 + c3 * c1 * c2 + c1 * c2 * c3)
    return IdentityResult("normalized_six_term", lhs, UNIT * (SQRT_HBAR * SQRT_HBAR))


# ---------------------------------------------------------------------------
# Hamiltonian-like combinations
# ---------------------------------------------------------------------------


def hquad_identity(a: OperatorPoly) -> bool:
    """``((a + a^+)^2 - (a - a^+)^2) / 2 == a a^+ + a^+ a``."""
    if not all(not c.has_lam() for c in a.terms.values()):
        raise UnspecializedParameter("specialise lam before taking adjoints")
    ad = a.adjoint()
    lhs = ((a + ad) ** 2 - (a - ad) ** 2) * Fraction(1, 2)
    return lhs == a * ad + ad * a


def khat_combinations() -> Tuple[OperatorPoly, OperatorPoly]:
    """The two cubic combinations whose sum is the hermitian third-order operator."""
    c1, c2, c3 = (build_c(k) for k in (1, 2, 3))
    u = c3 + c1 + c2
    v = c3 + c1 * J + c2 * J2
    w = c3 + c1 * J2 + c2 * J
    u3, v3, w3 = u ** 3, v ** 3, w ** 3
    first = (u3 + v3 * J + w3 * J2) * Fraction(1, 27)
    second = (u3 + v3 * J2 + w3 * J) * Fraction(1, 27)
    return first, second


def build_khat() -> OperatorPoly:
    """Sum of the two cubic combinations, symbolic in ``lam``."""
    a, b = khat_combinations()
    return a + b


def build_k_pair() -> Tuple[OperatorPoly, OperatorPoly]:
    """``K1 = -D^3 + x^3`` and ``K2 = D^3 + x^3``."""
    return -(D ** 3) + X ** 3, D ** 3 + X ** 3


def build_hamiltonian_z3() -> OperatorPoly:
    """``(K1 K2 + K2 K1) / 2``."""
    k1, k2 = build_k_pair()
    return (k1 * k2 + k2 * k1) * Fraction(1, 2)


@dataclass
class CyclicHReport:
    even: OperatorPoly
    odd: OperatorPoly
    printed: OperatorPoly

    @property
    def even_remainder(self) -> OperatorPoly:
        return self.even - self.printed

    @property
    def odd_minus_even(self) -> OperatorPoly:
        return self.odd - self.even


def three_h() -> Tuple[OperatorPoly, OperatorPoly, OperatorPoly]:
    return tuple(-(D ** 2) + X ** 2 * w for w in (ONE, J, J2))


def cyclic_h_check() -> CyclicHReport:
    h0, h1, h2 = three_h()
    even = h0 * h1 * h2 + h1 * h2 * h0 + h2 * h0 * h1
    odd = h0 * h2 * h1 + h2 * h1 * h0 + h1 * h0 * h2
    return CyclicHReport(even, odd, -(D ** 6) + X ** 6)


# ---------------------------------------------------------------------------
# action on p(x) exp(-x^2/2)
# ---------------------------------------------------------------------------


class GaussPoly:
    """``p(x) * exp(-x^2 / 2)`` with Cyclo12 polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(1,)):
        c = [as_cyclo(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs: Tuple[Cyclo12, ...] = tuple(c)

    def __eq__(self, other):
        return isinstance(other, GaussPoly) and self.coeffs == other.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return GaussPoly([x + y for x, y in zip(a, b)])

    def scale(self, c) -> "GaussPoly":
        c = as_cyclo(c)
        return GaussPoly([v * c for v in self.coeffs])

    def times_x(self) -> "GaussPoly":
        return GaussPoly((ZERO,) + self.coeffs)

    def derivative(self) -> "GaussPoly":
        # (p e)' = (p' - x p) e
        dp = [self.coeffs[k] * k for k in range(1, len(self.coeffs))]
        return GaussPoly(dp) + self.times_x().scale(-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: float) -> complex:
        import math

        p = 0j
        for c in reversed(self.coeffs):
            p = p * x + c.to_complex()
        return p * math.exp(-x * x / 2)

    def __str__(self):
        if not self.coeffs:
            return "0"
        poly = " + ".join(
            f"({c})" + (f"*x^{k}" if k > 1 else ("*x" if k == 1 else ""))
            for k, c in enumerate(self.coeffs)
            if c
        )
        return f"[{poly}]*exp(-x^2/2)"

    __repr__ = __str__


def apply(op: OperatorPoly, f: GaussPoly) -> GaussPoly:
    """Exact action of a parameter-free operator on ``p(x) exp(-x^2/2)``."""
    terms = op.numeric_terms()
    out = GaussPoly(())
    cache = {0: f}
    for (m, n), c in terms.items():
        for k in range(1, n + 1):
            if k not in cache:
                cache[k] = cache[k - 1].derivative()
        g = cache[n]
        for _ in range(m):
            g = g.times_x()
        out = out + g.scale(c)
    return out


# ---------------------------------------------------------------------------
# misc
# ---------------------------------------------------------------------------


def vandermonde3() -> MatC:
    return MatC([[1, 1, 1], [J, J2, 1], [J2, J, 1]])


def random_operator(rng: random.Random, max_deg: int = 3, n_terms: int = 3, formal: bool = False):
    """Random OperatorPoly with small ``a + b j + c i`` coefficients."""
    terms = {}
    for _ in range(n_terms):
        m = rng.randint(0, max_deg)
        n = rng.randint(0, max_deg - m)
        c = ParamScalar.const(J * rng.randint(-2, 2) + I * rng.randint(-2, 2) + rng.randint(-2, 2))
        if formal and rng.random() < 0.5:
            c = c * LAM
        terms[(m, n)] = terms.get((m, n), ParamScalar()) + c
    return OperatorPoly(terms)
