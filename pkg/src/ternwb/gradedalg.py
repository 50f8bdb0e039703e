"""Free associative algebra on Z3-graded generators and its cubic quotients.

Quotient dimensions are computed by exact linear algebra on homogeneous
degree slices: the degree-``d`` part of the two-sided ideal generated by a
family of cubic relations is spanned by ``u * r * v`` with ``|u| + 3 + |v| = d``.
Every relation used here is a combination of permutations of one word, so the
slice splits into independent blocks indexed by letter content (the multiset
of generators in a word); ranks are summed over blocks.
"""
from __future__ import annotations

import csv
import io
import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .exactfield import ONE, ZERO, J, J2, I, Cyclo12, as_cyclo

__all__ = [
    "Family",
    "GenSymbol",
    "Word",
    "NCPoly",
    "Variant",
    "DegreeSpan",
    "DegreeOutOfRange",
    "gen",
    "word_grade",
    "relation_instances",
    "ideal_degree_span",
    "quotient_dim",
    "hilbert_series_coeffs",
    "hilbert_check",
    "surjection_check",
    "ternary_j_commutator",
    "commutator",
    "jacobi_check",
    "jacobi_defects",
    "pauli_structure_constants",
    "dimension_table",
    "dimension_csv",
    "row_rank",
]


class Family(str, Enum):
    THETA = "theta"
    THETABAR = "thetabar"
    X = "x"

    @property
    def grade(self) -> int:
        return {"theta": 1, "thetabar": 2, "x": 0}[self.value]


@dataclass(frozen=True, order=True)
class GenSymbol:
    family: Family
    index: int

    @property
    def grade(self) -> int:
        return self.family.grade

    def __str__(self):
        return f"{self.family.value}{self.index}"


Word = Tuple[GenSymbol, ...]


def gen(family, index: int) -> GenSymbol:
    return GenSymbol(Family(family), index)


def word_grade(w: Sequence[GenSymbol]) -> int:
    return sum(g.grade for g in w) % 3


class NCPoly:
    """Noncommutative polynomial: a finite map from words to Cyclo12."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        t = {}
        if terms:
            for w, c in terms.items():
                c = as_cyclo(c)
                if c:
                    t[tuple(w)] = c
        self.terms: Dict[Word, Cyclo12] = t

    @classmethod
    def gen(cls, g: GenSymbol) -> "NCPoly":
        return cls({(g,): ONE})

    @classmethod
    def word(cls, w: Sequence[GenSymbol], coeff=1) -> "NCPoly":
        return cls({tuple(w): coeff})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): ONE})

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Cyclo12)) and not isinstance(other, bool):
            return self == NCPoly.one() * other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, sign):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + (c if sign > 0 else -c)
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        p = NCPoly()
        p.terms = out
        return p

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.one() * other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.one() * other
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = NCPoly()
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: Dict[Word, Cyclo12] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    v = out.get(w, ZERO) + c1 * c2
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
            p = NCPoly()
            p.terms = out
            return p
        c = as_cyclo(other)
        p = NCPoly()
        p.terms = {w: v * c for w, v in self.terms.items()} if c else {}
        return p

    def __rmul__(self, other):
        # scalar on the left; scalars are central
        return self * other

    def degrees(self) -> set:
        return {len(w) for w in self.terms}

    def grades(self) -> set:
        return {word_grade(w) for w in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            mono = "*".join(str(g) for g in w) or "1"
            parts.append(f"({self.terms[w]})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def commutator(x, y):
    return x * y - y * x


def ternary_j_commutator(x, y, z):
    """``{X, Y, Z} = XYZ + j YZX + j^2 ZXY`` in any associative algebra.

    Works for :class:`NCPoly`, matrices and differential operators alike;
    the only requirement is ``*`` for products and Cyclo12 scalars.
    """
    return x * y * z + (y * z * x) * J + (z * x * y) * J2


# ---------------------------------------------------------------------------
# relation variants
# ---------------------------------------------------------------------------


class Variant(str, Enum):
    S = "S"
    SBAR = "Sbar"
    S1 = "S1"
    S0 = "S0"
    LAM0 = "Lam0"
    LAM1 = "Lam1"
    LAM = "Lam"
    LAMBAR = "LamBar"

    @property
    def default_family(self) -> Family:
        if self in (Variant.S, Variant.SBAR, Variant.S1, Variant.S0):
            return Family.X
        if self is Variant.LAMBAR:
            return Family.THETABAR
        return Family.THETA


def _rot(t):
    return (t[1], t[2], t[0])


def _relation_for(variant: Variant, w: Word) -> List[NCPoly]:
    r1 = _rot(w)
    r2 = _rot(r1)
    W = NCPoly.word
    if variant is Variant.S:
        return [W(w) + W(r1, J) + W(r2, J2)]
    if variant is Variant.SBAR:
        return [W(w) + W(r1, J2) + W(r2, J)]
    if variant is Variant.S1:
        return [W(w) - W(r1)]
    if variant is Variant.S0:
        return [W(w) - W(r1), W(w) - W((w[1], w[0], w[2]))]
    if variant is Variant.LAM0:
        total = NCPoly()
        for perm in itertools.permutations(range(3)):
            total = total + W(tuple(w[p] for p in perm))
        return [total]
    if variant is Variant.LAM1:
        return [W(w) + W(r1) + W(r2)]
    if variant is Variant.LAM:
        return [W(w) - W(r1, J)]
    if variant is Variant.LAMBAR:
        return [W(w) - W(r1, J2)]
    raise ValueError(variant)


def relation_instances(variant, N: int, family=None) -> List[NCPoly]:
    """All degree-3 defining relations of ``variant`` on ``N`` generators.

    ``family`` overrides the generator family (by default x for the S-series,
    theta for the Lambda-series and thetabar for LamBar).
    """
    variant = Variant(variant)
    if N < 1:
        raise ValueError("N must be >= 1")
    fam = Family(family) if family is not None else variant.default_family
    gens = [GenSymbol(fam, a) for a in range(1, N + 1)]
    rels = []
    for w in itertools.product(gens, repeat=3):
        for r in _relation_for(variant, w):
            if r:
                rels.append(r)
    return rels


# ---------------------------------------------------------------------------
# exact row reduction
# ---------------------------------------------------------------------------


def _reduce_rows(rows: Iterable[Dict], order: Sequence) -> List[Tuple[object, Dict]]:
    """Incremental exact echelon basis.

    Returns a list of ``(pivot, row)`` with each row normalised so that its
    pivot entry is one; the pivot is the first nonzero column in ``order``.
    """
    pos = {c: k for k, c in enumerate(order)}
    basis: Dict[object, Dict] = {}

    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            piv = min(r, key=pos.__getitem__)
            if piv not in basis:
                scale = r[piv].inv()
                basis[piv] = {c: v * scale for c, v in r.items()}
                break
            b = basis[piv]
            f = r[piv]
            for c, v in b.items():
                nv = r.get(c, ZERO) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return sorted(basis.items(), key=lambda kv: pos[kv[0]])


def row_rank(rows: Iterable[Dict], order: Sequence) -> int:
    return len(_reduce_rows(rows, order))


class DegreeOutOfRange(ValueError):
    pass


@dataclass
class DegreeSpan:
    """Degree-``d`` slice of a two-sided ideal, in the ``N**d`` word basis.

    ``blocks`` maps a letter content (sorted tuple of generators) to the
    echelon rows spanning the ideal inside that block.
    """

    variant: Variant
    N: int
    degree: int
    family: Family
    blocks: Dict[tuple, List[Tuple[Word, Dict[Word, Cyclo12]]]] = field(repr=False)

    @property
    def rank(self) -> int:
        return sum(len(b) for b in self.blocks.values())

    @property
    def rows(self) -> List[Dict[Word, Cyclo12]]:
        out = []
        for content in sorted(self.blocks):
            out.extend(r for _, r in self.blocks[content])
        return out

    def contains(self, p: NCPoly) -> bool:
        """Whether the homogeneous polynomial ``p`` lies in this slice."""
        if any(len(w) != self.degree for w in p.terms):
            raise ValueError("polynomial is not homogeneous of the slice degree")
        by_block = defaultdict(dict)
        for w, c in p.terms.items():
            by_block[tuple(sorted(w))][w] = c
        for content, row in by_block.items():
            r = dict(row)
            ech = dict(self.blocks.get(content, []))
            order = sorted(set(r) | {c for b in ech.values() for c in b})
            pos = {c: k for k, c in enumerate(order)}
            while r:
                piv = min(r, key=pos.__getitem__)
                if piv not in ech:
                    return False
                f = r[piv]
                for c, v in ech[piv].items():
                    nv = r.get(c, ZERO) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
        return True


def ideal_degree_span(variant, N: int, d: int, family=None) -> DegreeSpan:
    """Exact degree-``d`` slice (``3 <= d <= 5``) of the ideal of ``variant``."""
    variant = Variant(variant)
    if not 3 <= d <= 5:
        raise DegreeOutOfRange(f"degree {d} outside the supported range 3..5")
    fam = Family(family) if family is not None else variant.default_family
    rels = relation_instances(variant, N, fam)
    gens = [GenSymbol(fam, a) for a in range(1, N + 1)]
    per_block: Dict[tuple, List[Dict]] = defaultdict(list)
    pad = d - 3
    for left_len in range(pad + 1):
        right_len = pad - left_len
        for u in itertools.product(gens, repeat=left_len):
            for v in itertools.product(gens, repeat=right_len):
                for r in rels:
                    row = {u + w + v: c for w, c in r.terms.items()}
                    content = tuple(sorted(next(iter(row))))
                    per_block[content].append(row)
    blocks = {}
    for content, rows in per_block.items():
        words = sorted(set(itertools.permutations(content)))
        blocks[content] = _reduce_rows(rows, words)
    return DegreeSpan(variant, N, d, fam, blocks)


def quotient_dim(variant, N: int, d: int, family=None) -> int:
    """Dimension of the degree-``d`` component of the quotient algebra."""
    if d < 0:
        raise DegreeOutOfRange("negative degree")
    if d < 3:
        return N ** d
    return N ** d - ideal_degree_span(variant, N, d, family).rank


def hilbert_series_coeffs(N: int) -> Tuple[int, int, int, int, int]:
    """Predicted dims of the j-skew algebras in degrees 0..4."""
    return (1, N, N * N, N * (N - 1) * (N + 1) // 3, 0)


@dataclass
class HilbertReport:
    N: int
    computed: Dict[str, Tuple[int, ...]]
    expected: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(v == self.expected for v in self.computed.values())

    def mismatches(self):
        out = []
        for name, dims in self.computed.items():
            for d, (got, want) in enumerate(zip(dims, self.expected)):
                if got != want:
                    out.append((name, d, got, want))
        return out


def hilbert_check(N: int) -> HilbertReport:
    if not 1 <= N <= 4:
        raise ValueError("hilbert_check supports 1 <= N <= 4")
    computed = {
        v.value: tuple(quotient_dim(v, N, d) for d in range(5))
        for v in (Variant.LAM, Variant.LAMBAR)
    }
    return HilbertReport(N, computed, hilbert_series_coeffs(N))


def surjection_check(src, dst, N: int, family=None) -> bool:
    """True iff the degree-3 ideal of ``src`` sits inside that of ``dst``.

    Both relation families are instantiated on the same generators (the
    default family of ``src`` unless ``family`` is given), so the quotient
    map ``A_src -> A_dst`` is a well defined surjection exactly when this
    returns True.
    """
    src, dst = Variant(src), Variant(dst)
    fam = Family(family) if family is not None else src.default_family
    target = ideal_degree_span(dst, N, 3, fam)
    return all(target.contains(r) for r in relation_instances(src, N, fam))


# ---------------------------------------------------------------------------
# binary structure constants
# ---------------------------------------------------------------------------


def _check_antisymmetric(f, n):
    for k in range(n):
        for a in range(n):
            for b in range(n):
                if as_cyclo(f[k][a][b]) != -as_cyclo(f[k][b][a]):
                    raise ValueError(
                        f"structure constants not antisymmetric at k={k + 1}, "
                        f"i={a + 1}, j={b + 1}"
                    )


def jacobi_defects(f) -> Dict[Tuple[int, int, int, int], Cyclo12]:
    """Nonzero values of the cyclic Jacobi sum, keyed by 1-based (k, i, j, l).

    ``f[k][i][j]`` holds f^k_{ij} (0-based nested sequences).
    """
    n = len(f)
    _check_antisymmetric(f, n)
    F = [[[as_cyclo(f[k][a][b]) for b in range(n)] for a in range(n)] for k in range(n)]
    out = {}
    for k, i, j, l in itertools.product(range(n), repeat=4):
        s = ZERO
        for m in range(n):
            s = s + F[k][i][m] * F[m][j][l] + F[k][j][m] * F[m][l][i] + F[k][l][m] * F[m][i][j]
        if s:
            out[(k + 1, i + 1, j + 1, l + 1)] = s
    return out


def jacobi_check(f) -> bool:
    """True iff the antisymmetric constants ``f`` satisfy the Jacobi identity."""
    return not jacobi_defects(f)


def _levi_civita(a, b, c):
    return (a - b) * (b - c) * (c - a) // 2


def pauli_structure_constants():
    """``C^k_{ij} = 2 i eps_{kij}`` as nested lists indexed [k][i][j]."""
    return [
        [[I * (2 * _levi_civita(k, a, b)) for b in range(3)] for a in range(3)]
        for k in range(3)
    ]


# ---------------------------------------------------------------------------
# dimension export
# ---------------------------------------------------------------------------


def dimension_table(variants=None, Ns=(2, 3, 4), degrees=range(5)):
    variants = [Variant(v) for v in (variants or (Variant.LAM, Variant.LAMBAR))]
    rows = []
    for v in variants:
        for N in Ns:
            for d in degrees:
                rows.append((v.value, N, d, quotient_dim(v, N, d)))
    return rows


def dimension_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["variant", "N", "degree", "dimension"])
    w.writerows(rows)
    return buf.getvalue()
