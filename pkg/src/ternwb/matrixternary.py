"""Exact small matrices over Q(zeta12): ternary Clifford generators and friends."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .exactfield import ONE, ZERO, J, J2, I, Cyclo12, as_cyclo
from .gradedalg import ternary_j_commutator

__all__ = [
    "MatC",
    "SingularMatrix",
    "DimensionMismatch",
    "EtaTable",
    "printed_eta",
    "printed_dotted_eta",
    "q_matrices",
    "Q_GRADE",
    "QDAG_GRADE",
    "tern_anticomm",
    "skew_commutator",
    "computed_eta",
    "eta_verify",
    "skew_vanish_check",
    "similarity_invariance",
    "random_invertible",
    "pauli",
    "pauli_cubic",
    "epsilon_invariance_check",
]


class SingularMatrix(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class MatC:
    """Dense square matrix with Cyclo12 entries; ``*`` and ``@`` multiply."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        r = tuple(tuple(as_cyclo(v) for v in row) for row in rows)
        n = len(r)
        if any(len(row) != n for row in r):
            raise ValueError("MatC must be square")
        self.rows = r

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "MatC":
        return cls([[ONE if a == b else ZERO for b in range(n)] for a in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "MatC":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def diag(cls, entries) -> "MatC":
        n = len(entries)
        return cls([[entries[a] if a == b else 0 for b in range(n)] for a in range(n)])

    def __getitem__(self, ij):
        a, b = ij
        return self.rows[a][b]

    def __eq__(self, other):
        if isinstance(other, MatC):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other):
        self._check(other)
        return MatC([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return MatC([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return MatC([[-a for a in r] for r in self.rows])

    def __matmul__(self, other):
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return MatC(out)

    def __mul__(self, other):
        if isinstance(other, MatC):
            return self @ other
        c = as_cyclo(other)
        return MatC([[a * c for a in r] for r in self.rows])

    def __rmul__(self, other):
        c = as_cyclo(other)
        return MatC([[c * a for a in r] for r in self.rows])

    def transpose(self) -> "MatC":
        return MatC(list(zip(*self.rows)))

    def dagger(self) -> "MatC":
        return MatC([[self.rows[b][a].conj() for b in range(self.n)] for a in range(self.n)])

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def scalar_value(self):
        """The scalar ``s`` if this matrix equals ``s * 1``, else None."""
        s = self.rows[0][0]
        for a in range(self.n):
            for b in range(self.n):
                if self.rows[a][b] != (s if a == b else ZERO):
                    return None
        return s

    def det(self) -> Cyclo12:
        m = [list(r) for r in self.rows]
        n = self.n
        d = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return ZERO
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = -d
            d = d * m[col][col]
            inv = m[col][col].inv()
            for r in range(col + 1, n):
                f = m[r][col] * inv
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return d

    def inv(self) -> "MatC":
        n = self.n
        m = [list(r) + [ONE if a == b else ZERO for b in range(n)] for a, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                raise SingularMatrix("matrix is singular")
            m[col], m[piv] = m[piv], m[col]
            s = m[col][col].inv()
            m[col] = [x * s for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return MatC([row[n:] for row in m])

    def __str__(self):
        return "[" + "; ".join(", ".join(str(a) for a in r) for r in self.rows) + "]"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# ternary Clifford generators
# ---------------------------------------------------------------------------

Q_GRADE = 1
QDAG_GRADE = 2


def q_matrices() -> Tuple[Tuple[MatC, MatC, MatC], Tuple[MatC, MatC, MatC]]:
    """``(Q1, Q2, Q3)`` and their hermitian conjugates, entries as printed."""
    q1 = MatC([[0, 1, 0], [0, 0, J], [J2, 0, 0]])
    q2 = MatC([[0, J, 0], [0, 0, 1], [J2, 0, 0]])
    q3 = MatC([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    q1d = MatC([[0, 0, J], [1, 0, 0], [0, J2, 0]])
    q2d = MatC([[0, 0, J], [J2, 0, 0], [0, 1, 0]])
    q3d = MatC([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return (q1, q2, q3), (q1d, q2d, q3d)


def tern_anticomm(a: MatC, b: MatC, c: MatC) -> MatC:
    """Totally cyclic sum ``ABC + BCA + CAB``."""
    if not a.n == b.n == c.n:
        raise DimensionMismatch("matrices must share one dimension")
    return a @ b @ c + b @ c @ a + c @ a @ b


def skew_commutator(a: MatC, b: MatC, c: MatC, omega: Cyclo12 = J) -> MatC:
    """``ABC + w BCA + w^2 CAB`` for a cube root of unity ``w``."""
    return a @ b @ c + omega * (b @ c @ a) + (omega * omega) * (c @ a @ b)


EtaTable = Dict[Tuple[int, int, int], Cyclo12]

_TRIPLES = list(itertools.product((1, 2, 3), repeat=3))


def printed_eta() -> EtaTable:
    """The eta table as printed: diagonal 1, cyclic class j^2, odd class j."""
    eta = {t: ZERO for t in _TRIPLES}
    for t in [(1, 1, 1), (2, 2, 2), (3, 3, 3)]:
        eta[t] = ONE
    for t in [(1, 2, 3), (2, 3, 1), (3, 1, 2)]:
        eta[t] = J2
    for t in [(2, 1, 3), (3, 2, 1), (1, 3, 2)]:
        eta[t] = J
    return eta


def printed_dotted_eta() -> EtaTable:
    """``eta_dot[a, b, c] = conj(eta[c, b, a])`` built from the printed table."""
    eta = printed_eta()
    return {(a, b, c): eta[(c, b, a)].conj() for a, b, c in _TRIPLES}


def computed_eta(gens: Sequence[MatC]) -> Dict[Tuple[int, int, int], object]:
    """Scalar value of ``tern_anticomm`` for every triple (None if not scalar)."""
    n = len(gens)
    pair = {(a, b): gens[a] @ gens[b] for a in range(n) for b in range(n)}
    out = {}
    for a, b, c in _TRIPLES:
        x, y, z = a - 1, b - 1, c - 1
        total = pair[(x, y)] @ gens[z] + pair[(y, z)] @ gens[x] + pair[(z, x)] @ gens[y]
        out[(a, b, c)] = total.scalar_value()
    return out


@dataclass
class EtaReport:
    undotted: Dict[Tuple[int, int, int], object]
    dotted: Dict[Tuple[int, int, int], object]
    expected_undotted: EtaTable
    expected_dotted: EtaTable

    @property
    def all_scalar(self) -> bool:
        return all(v is not None for v in self.undotted.values()) and all(
            v is not None for v in self.dotted.values()
        )

    @property
    def dotted_is_conjugate(self) -> bool:
        """Computed dotted table equals the conjugate-reverse of the computed one."""
        return all(
            self.dotted[(a, b, c)] == self.undotted[(c, b, a)].conj() for a, b, c in _TRIPLES
        )

    def mismatches(self) -> List[Tuple[str, Tuple[int, int, int], object, Cyclo12]]:
        out = []
        for name, got, want in (
            ("eta", self.undotted, self.expected_undotted),
            ("eta_dot", self.dotted, self.expected_dotted),
        ):
            for t in _TRIPLES:
                if got[t] != want[t]:
                    out.append((name, t, got[t], want[t]))
        return out

    @property
    def matches_printed(self) -> bool:
        return not self.mismatches()


def eta_verify() -> EtaReport:
    qs, qds = q_matrices()
    return EtaReport(computed_eta(qs), computed_eta(qds), printed_eta(), printed_dotted_eta())


def skew_vanish_check() -> Dict[str, MatC]:
    """The j and j^2 skew sums for (Q1,Q2,Q3) and the odd order (Q2,Q1,Q3)."""
    (q1, q2, q3), _ = q_matrices()
    return {
        "Q1Q2Q3_j": skew_commutator(q1, q2, q3, J),
        "Q1Q2Q3_j2": skew_commutator(q1, q2, q3, J2),
        "Q2Q1Q3_j": skew_commutator(q2, q1, q3, J),
        "Q2Q1Q3_j2": skew_commutator(q2, q1, q3, J2),
    }


def similarity_invariance(p: MatC) -> bool:
    """Whether ``P^-1 Q_b P`` reproduces the full computed eta table exactly.

    The conjugation uses the adjugate ``det(P) P^-1`` so entries stay
    integral; the cubic table then carries an overall ``det(P)^3``.
    """
    det = p.det()
    if not det:
        raise SingularMatrix("similarity matrix is singular")
    adj = p.inv() * det
    qs, _ = q_matrices()
    conj_qs = [adj @ q @ p for q in qs]
    scale = det ** 3
    base = computed_eta(qs)
    return computed_eta(conj_qs) == {t: (v * scale if v is not None else None) for t, v in base.items()}


def random_invertible(rng: random.Random, n: int = 3, span: int = 2) -> MatC:
    """Random ``n x n`` matrix with entries ``a + b j``, ``a, b in [-span, span]``."""
    while True:
        m = MatC(
            [
                [J * rng.randint(-span, span) + rng.randint(-span, span) for _ in range(n)]
                for _ in range(n)
            ]
        )
        if m.det():
            return m


# ---------------------------------------------------------------------------
# Pauli matrices and the SL(2) determinant condition
# ---------------------------------------------------------------------------


def pauli() -> Tuple[MatC, MatC, MatC]:
    s1 = MatC([[0, 1], [1, 0]])
    s2 = MatC([[0, -I], [I, 0]])
    s3 = MatC([[1, 0], [0, -1]])
    return s1, s2, s3


def pauli_cubic(i: int, k: int, l: int) -> MatC:
    """Cubic j-commutator ``{sigma_i, sigma_k, sigma_l}``."""
    if not all(v in (1, 2, 3) for v in (i, k, l)):
        raise ValueError("Pauli indices must be in {1, 2, 3}")
    s = pauli()
    return ternary_j_commutator(s[i - 1], s[k - 1], s[l - 1])


EPSILON = ((0, 1), (-1, 0))


def epsilon_invariance_check(s: MatC) -> bool:
    """``S^a_a' S^b_b' eps_ab == eps_a'b'`` for every index pair."""
    if s.n != 2:
        raise DimensionMismatch("epsilon invariance is defined for 2x2 matrices")
    for ap in range(2):
        for bp in range(2):
            total = ZERO
            for a in range(2):
                for b in range(2):
                    if EPSILON[a][b]:
                        total = total + s[a, ap] * s[b, bp] * EPSILON[a][b]
            if total != EPSILON[ap][bp]:
                return False
    return True
