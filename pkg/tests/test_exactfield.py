import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ternwb.exactfield import (
    I, J, J2, ONE, SQRT3, ZERO, ZETA, Cyclo12, add, conj, inv, mul, sub, to_complex,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.builds(lambda a, b, c, d: Cyclo12((a, b, c, d)), small, small, small, small)
nonzero = elements.filter(lambda x: not x.is_zero())


def test_cube_root_of_unity():
    assert J * J * J == ONE
    assert J != ONE
    assert add(add(ONE, J), J2) == ZERO


def test_imaginary_unit():
    assert I * I == -ONE
    assert mul(I, I) == -1


def test_inverses():
    assert inv(J) == J2
    assert inv(ZETA) * ZETA == ONE
    assert inv(Cyclo12((2, 0, 0, 0))) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        inv(ZERO)


def test_conjugation_examples():
    assert conj(J) == J2
    assert conj(I) == -I
    assert conj(Cyclo12((Fraction(3, 5), 0, 0, 0))) == Fraction(3, 5)


def test_to_complex():
    assert abs(to_complex(J) - cmath.exp(2j * cmath.pi / 3)) < 1e-15
    assert to_complex(ONE) == 1
    assert abs(to_complex(I) - 1j) < 1e-15
    assert abs(to_complex(SQRT3) - 3 ** 0.5) < 1e-15


def test_sqrt3_squares_to_three():
    assert SQRT3 * SQRT3 == 3


def test_display():
    assert str(J2) == "j^2"
    assert str(J2 * -3) == "-3*j^2"
    assert str(J) == "j"
    assert str(ZERO) == "0"
    assert str(Cyclo12((Fraction(1, 2), 0, 0, 0))) == "1/2"


def test_rational_hash_matches_fraction():
    assert hash(Cyclo12((Fraction(3, 4), 0, 0, 0))) == hash(Fraction(3, 4))
    assert {ONE: 1}[Cyclo12((1, 0, 0, 0))] == 1


def test_rejects_floats():
    with pytest.raises(TypeError):
        Cyclo12((0.5, 0, 0, 0))


def test_galois_orbit_of_zeta():
    images = {ZETA.galois(k) for k in (1, 5, 7, 11)}
    assert len(images) == 4
    for z in images:
        assert z ** 12 == ONE and z ** 6 == -ONE


def test_random_field_axioms():
    rng = random.Random(7)

    def rnd():
        return Cyclo12([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)])

    for _ in range(1000):
        a, b, c = rnd(), rnd(), rnd()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert sub(add(a, b), b) == a


@given(elements, elements)
def test_conj_is_automorphism(a, b):
    assert conj(a * b) == conj(a) * conj(b)
    assert conj(a + b) == conj(a) + conj(b)
    assert conj(conj(a)) == a


@given(elements, elements)
def test_to_complex_is_homomorphism(a, b):
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-11
    assert abs(to_complex(a + b) - (to_complex(a) + to_complex(b))) < 1e-12


@settings(max_examples=60)
@given(nonzero)
def test_inverse_property(a):
    assert a * a.inv() == ONE
    assert a.norm() > 0


@given(elements)
def test_conj_fixes_exactly_the_reals(a):
    if conj(a) == a:
        assert abs(to_complex(a).imag) < 1e-12
