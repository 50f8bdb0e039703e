"""Z3-graded exterior calculus with ``d^3 = 0``.

Basis forms are ``dx^i`` (grade 1) and ``d2x^i`` (grade 2).  Products obey

* ``dx^i dx^k dx^m = j dx^k dx^m dx^i``
* ``d2x^k dx^i = j^2 dx^i d2x^k``
* every product of total order >= 4 vanishes (order: dx -> 1, d2x -> 2)

and ``d`` satisfies ``d(w t) = (dw) t + j^grade(w) w dt`` with
``d(x^i) = dx^i``, ``d(dx^i) = d2x^i``, ``d(d2x^i) = 0``.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .exactfield import ONE, ZERO, J, J2, Cyclo12, as_cyclo

__all__ = [
    "CoordPoly",
    "BasisForm",
    "GradedForm",
    "dx",
    "d2x",
    "d",
    "normal_form",
    "d3_check",
    "d3_residual",
    "display_d2",
    "mixed_bracket",
    "random_coordpoly",
    "all_monomials",
]

Mono = Tuple[int, ...]


class CoordPoly:
    """Commutative polynomial in ``x^1..x^N`` with rational coefficients."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Mapping[Mono, object] | None = None):
        self.N = N
        self.terms: Dict[Mono, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != N:
                raise ValueError("monomial length must equal N")
            c = Fraction(c)
            if c:
                self.terms[tuple(m)] = c

    @classmethod
    def var(cls, N: int, i: int) -> "CoordPoly":
        e = [0] * N
        e[i - 1] = 1
        return cls(N, {tuple(e): 1})

    @classmethod
    def const(cls, N: int, c=1) -> "CoordPoly":
        return cls(N, {(0,) * N: c})

    @classmethod
    def monomial(cls, exps: Iterable[int], c=1) -> "CoordPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, CoordPoly) and self.N == other.N and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CoordPoly(self.N, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return CoordPoly(self.N, out)

    def __mul__(self, other):
        if isinstance(other, CoordPoly):
            out: Dict[Mono, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    out[m] = out.get(m, 0) + c1 * c2
            return CoordPoly(self.N, out)
        return CoordPoly(self.N, {m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def diff(self, i: int) -> "CoordPoly":
        """Partial derivative with respect to ``x^i`` (1-based)."""
        k = i - 1
        out = {}
        for m, c in self.terms.items():
            if m[k]:
                e = list(m)
                e[k] -= 1
                out[tuple(e)] = c * m[k]
        return CoordPoly(self.N, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            parts.append(f"{self.terms[m]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


# A basis form is (order, index): order 1 -> dx^index, order 2 -> d2x^index.
BasisForm = Tuple[int, int]


def dx(i: int) -> BasisForm:
    return (1, i)


def d2x(i: int) -> BasisForm:
    return (2, i)


def _grade(factors) -> int:
    return sum(f[0] for f in factors) % 3


def _order(factors) -> int:
    return sum(f[0] for f in factors)


class GradedForm:
    """Finite sum of ``coeff * x^mono * F1 F2 ... Fn``.

    Terms are keyed by ``(mono, factors)`` with Cyclo12 coefficients.  The
    representation is raw (not reduced); :func:`normal_form` reduces it.
    """

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Mapping | None = None):
        self.N = N
        self.terms: Dict[Tuple[Mono, Tuple[BasisForm, ...]], Cyclo12] = {}
        for (m, f), c in (terms or {}).items():
            c = as_cyclo(c)
            if c:
                key = (tuple(m), tuple(f))
                v = self.terms.get(key, ZERO) + c
                if v:
                    self.terms[key] = v
                else:
                    self.terms.pop(key, None)

    @classmethod
    def function(cls, f: CoordPoly) -> "GradedForm":
        return cls(f.N, {(m, ()): c for m, c in f.terms.items()})

    @classmethod
    def basis(cls, N: int, *factors: BasisForm, coeff=1, poly: CoordPoly | None = None):
        poly = poly or CoordPoly.const(N)
        return cls(N, {(m, tuple(factors)): as_cyclo(coeff) * c for m, c in poly.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, GradedForm) and self.terms == other.terms

    def _merge(self, items):
        out = dict(self.terms)
        for k, c in items:
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        g = GradedForm(self.N)
        g.terms = out
        return g

    def __add__(self, other):
        return self._merge(other.terms.items())

    def __sub__(self, other):
        return self._merge((k, -c) for k, c in other.terms.items())

    def __neg__(self):
        g = GradedForm(self.N)
        g.terms = {k: -c for k, c in self.terms.items()}
        return g

    def scale(self, c) -> "GradedForm":
        c = as_cyclo(c)
        g = GradedForm(self.N)
        g.terms = {k: v * c for k, v in self.terms.items()} if c else {}
        return g

    def __mul__(self, other):
        if not isinstance(other, GradedForm):
            return self.scale(other)
        items = []
        for (m1, f1), c1 in self.terms.items():
            for (m2, f2), c2 in other.terms.items():
                items.append(((tuple(a + b for a, b in zip(m1, m2)), f1 + f2), c1 * c2))
        return GradedForm(self.N)._merge(items)

    def grades(self) -> set:
        return {_grade(f) for (_, f) in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        names = {1: "dx", 2: "d2x"}
        parts = []
        for (m, f) in sorted(self.terms):
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            forms = " ".join(f"{names[o]}{i}" for o, i in f)
            body = " ".join(s for s in (mono, forms) if s) or "1"
            parts.append(f"({self.terms[(m, f)]}) {body}")
        return " + ".join(parts)

    __repr__ = __str__


def _d_word(factors) -> list:
    """``d`` of a pure product of basis forms: list of (coeff, factors)."""
    out = []
    grade = 0
    for s, (order, idx) in enumerate(factors):
        if order == 1:
            out.append((J ** grade, factors[:s] + ((2, idx),) + factors[s + 1:]))
        grade = (grade + order) % 3
    return out


def d(form: GradedForm) -> GradedForm:
    """Graded differential, applied termwise to the raw representation."""
    N = form.N
    items = []
    for (m, f), c in form.terms.items():
        for i in range(N):
            if m[i]:
                e = list(m)
                e[i] -= 1
                items.append(((tuple(e), ((1, i + 1),) + f), c * m[i]))
        for coeff, nf in _d_word(f):
            items.append(((m, nf), c * coeff))
    return GradedForm(N)._merge(items)


def _reduce_word(f) -> Tuple[Cyclo12, Tuple[BasisForm, ...]]:
    if _order(f) >= 4:
        return ZERO, ()
    if len(f) == 2 and f[0][0] == 2 and f[1][0] == 1:
        return J2, (f[1], f[0])
    if len(f) == 3:
        idx = tuple(i for _, i in f)
        if idx[0] == idx[1] == idx[2]:
            return ZERO, ()
        rots = [idx, idx[1:] + idx[:1], idx[2:] + idx[:2]]
        r = min(range(3), key=lambda k: rots[k])
        # rotating left once multiplies by j^2, so w = j^r * rot^r(w)
        return J ** r, tuple((1, i) for i in rots[r])
    return ONE, tuple(f)


def normal_form(form: GradedForm) -> GradedForm:
    items = []
    for (m, f), c in form.terms.items():
        coeff, nf = _reduce_word(f)
        if coeff:
            items.append(((m, nf), c * coeff))
    return GradedForm(form.N)._merge(items)


def d3_residual(f: CoordPoly) -> GradedForm:
    g = GradedForm.function(f)
    return normal_form(d(d(d(g))))


def d3_check(f: CoordPoly) -> bool:
    return d3_residual(f).is_zero()


def display_d2(f: CoordPoly) -> GradedForm:
    """``(d_k d_i f) dx^k dx^i + (d_i f) d2x^i`` assembled term by term."""
    N = f.N
    out = GradedForm(N)
    for k in range(1, N + 1):
        for i in range(1, N + 1):
            out = out + GradedForm.basis(N, dx(k), dx(i), poly=f.diff(i).diff(k))
    for i in range(1, N + 1):
        out = out + GradedForm.basis(N, d2x(i), poly=f.diff(i))
    return out


def mixed_bracket(f: CoordPoly) -> GradedForm:
    """``(d_i d_k f) [d2x^k dx^i - j^2 dx^i d2x^k]`` summed over i, k."""
    N = f.N
    out = GradedForm(N)
    for i in range(1, N + 1):
        for k in range(1, N + 1):
            h = f.diff(k).diff(i)
            out = out + GradedForm.basis(N, d2x(k), dx(i), poly=h)
            out = out - GradedForm.basis(N, dx(i), d2x(k), poly=h, coeff=J2)
    return out


def all_monomials(N: int, max_degree: int):
    for exps in itertools.product(range(max_degree + 1), repeat=N):
        if sum(exps) <= max_degree:
            yield CoordPoly.monomial(exps)


def random_coordpoly(rng: random.Random, N: int = 3, max_degree: int = 4, n_terms: int = 4):
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        e = [0] * N
        for _ in range(deg):
            e[rng.randrange(N)] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return CoordPoly(N, terms)
