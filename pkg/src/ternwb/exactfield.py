"""Exact arithmetic in the 12th cyclotomic field Q(zeta).

Elements are stored in the power basis ``1, z, z**2, z**3`` where ``z`` is a
primitive 12th root of unity, reduced with ``z**4 = z**2 - 1``.  The field
contains both the primitive cube root of unity ``J = z**2 - 1`` and the
imaginary unit ``I = z**3``, so every symbolic module can share one scalar type.

Coordinates are exact rationals: ``int`` when integral, otherwise
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Rat = Fraction

__all__ = [
    "Rat",
    "Cyclo12",
    "ZERO",
    "ONE",
    "ZETA",
    "J",
    "J2",
    "I",
    "SQRT3",
    "as_cyclo",
    "add",
    "sub",
    "mul",
    "inv",
    "conj",
    "to_complex",
]

_ZETA_C = complex(math.cos(math.pi / 6), math.sin(math.pi / 6))

# z**k, k = 4..6, in the power basis
_REDUCE = {
    4: (-1, 0, 1, 0),
    5: (0, -1, 0, 1),
    6: (-1, 0, 0, 0),
}

Scalar = Union["Cyclo12", int, Fraction]


def _frac(v):
    """Exact rational coordinate; integral values are kept as ``int`` for speed."""
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, (Fraction, Rational)):
        v = Fraction(v)
        return v.numerator if v.denominator == 1 else v
    raise TypeError(f"cannot embed {type(v).__name__} exactly in Q(zeta12)")


def _norm(c) -> tuple:
    return tuple(
        v.numerator if type(v) is Fraction and v.denominator == 1 else v for v in c
    )


class Cyclo12:
    """An element ``a0 + a1 z + a2 z^2 + a3 z^3`` of Q(zeta12).

    Instances are immutable and hashable.  Arithmetic accepts ints and
    Fractions on either side.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coords: Iterable = (0, 0, 0, 0)):
        c = tuple(_frac(v) for v in coords)
        if len(c) != 4:
            raise ValueError("Cyclo12 needs exactly four rational coordinates")
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @property
    def coords(self) -> tuple:
        return self._c

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Cyclo12):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == (Fraction(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self._c[0])
            else:
                self._hash = hash(self._c)
        return self._hash

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        o = as_cyclo(other, strict=False)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        return Cyclo12._raw(_norm((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])))

    __radd__ = __add__

    def __neg__(self):
        a = self._c
        return Cyclo12._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        o = as_cyclo(other, strict=False)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        return Cyclo12._raw(_norm((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Cyclo12._raw(_norm(v * other for v in self._c))
        if not isinstance(other, Cyclo12):
            return NotImplemented
        a, b = self._c, other._c
        if not any(b[1:]):
            return self * b[0]
        if not any(a[1:]):
            return other * a[0]
        prod = [0] * 7
        for i, ai in enumerate(a):
            if ai:
                for k, bk in enumerate(b):
                    if bk:
                        prod[i + k] += ai * bk
        out = prod[:4]
        for deg in (4, 5, 6):
            v = prod[deg]
            if v:
                for t, r in enumerate(_REDUCE[deg]):
                    if r:
                        out[t] += r * v
        return Cyclo12._raw(_norm(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_cyclo(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return as_cyclo(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field structure ---------------------------------------------------
    def galois(self, k: int) -> "Cyclo12":
        """Image under the automorphism ``z -> z**k`` (k coprime to 12)."""
        k %= 12
        if k not in (1, 5, 7, 11):
            raise ValueError("k must be a unit modulo 12")
        zk = _ZETA_POWERS[k]
        out = Cyclo12._raw((self._c[0], 0, 0, 0))
        p = ONE
        for t in range(1, 4):
            p = p * zk
            if self._c[t]:
                out = out + p * self._c[t]
        return out

    def conj(self) -> "Cyclo12":
        a0, a1, a2, a3 = self._c
        # z -> z - z^3, z^2 -> 1 - z^2, z^3 -> -z^3
        return Cyclo12._raw((a0 + a2, a1, -a2, -a1 - a3))

    def norm(self) -> Fraction:
        n = self * self.galois(5) * self.galois(7) * self.galois(11)
        return Fraction(n._c[0])

    def inv(self) -> "Cyclo12":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta12)")
        if self.is_rational():
            return Cyclo12._raw((_frac(Fraction(1) / self._c[0]), 0, 0, 0))
        cof = self.galois(5) * self.galois(7) * self.galois(11)
        n = (self * cof)._c[0]
        return cof * (Fraction(1) / n)

    def to_complex(self) -> complex:
        a0, a1, a2, a3 = (float(v) for v in self._c)
        z = _ZETA_C
        return a0 + z * (a1 + z * (a2 + z * a3))

    # -- display -----------------------------------------------------------
    def ij_coords(self) -> tuple:
        """Coordinates in the basis ``1, j, i, i*j``."""
        a0, a1, a2, a3 = self._c
        return (a0 + a2, a2, a3, -a1)

    def __str__(self):
        if self.is_zero():
            return "0"
        if not self.is_rational():
            q = self * J
            if q.is_rational():
                q = q._c[0]
                if abs(q) == 1:
                    return "j^2" if q > 0 else "-j^2"
                return f"{q}*j^2"
        parts = []
        for v, name in zip(self.ij_coords(), ("", "j", "i", "i*j")):
            if not v:
                continue
            if name and abs(v) == 1:
                s = name
            elif name:
                s = f"{abs(v)}*{name}"
            else:
                s = str(abs(v))
            parts.append(("-" if v < 0 else "+", s))
        text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, s in parts[1:]:
            text += f" {sign} {s}"
        return text

    def __repr__(self):
        return f"Cyclo12({str(self)!r})"


def as_cyclo(v, strict: bool = True):
    if isinstance(v, Cyclo12):
        return v
    if isinstance(v, (int, Fraction)):
        return Cyclo12._raw((_frac(v), 0, 0, 0))
    if strict:
        raise TypeError(f"cannot convert {type(v).__name__} to Cyclo12")
    return None


ZERO = Cyclo12((0, 0, 0, 0))
ONE = Cyclo12((1, 0, 0, 0))
ZETA = Cyclo12((0, 1, 0, 0))
_ZETA_POWERS = {1: ZETA}
for _k in (5, 7, 11):
    _ZETA_POWERS[_k] = ZETA ** _k
J = Cyclo12((-1, 0, 1, 0))
J2 = J * J
I = Cyclo12((0, 0, 0, 1))
SQRT3 = Cyclo12((0, 2, 0, -1))


def add(a, b) -> Cyclo12:
    return as_cyclo(a) + as_cyclo(b)


def sub(a, b) -> Cyclo12:
    return as_cyclo(a) - as_cyclo(b)


def mul(a, b) -> Cyclo12:
    return as_cyclo(a) * as_cyclo(b)


def inv(a) -> Cyclo12:
    return as_cyclo(a).inv()


def conj(a) -> Cyclo12:
    return as_cyclo(a).conj()


def to_complex(a) -> complex:
    return as_cyclo(a).to_complex()
