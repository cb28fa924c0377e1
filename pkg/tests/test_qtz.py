import pytest
from hypothesis import given, settings, strategies as st

from superdelta.qtz import (
    ONE,
    Q,
    T,
    Z,
    NotDivisible,
    QTZPoly,
    RatFun,
    divide_exact,
    poly_from_str,
)
from superdelta.rationals import RAT

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def small_polys(with_z=True, nonzero=False):
    maxz = 2 if with_z else 0
    expo = st.tuples(
        st.integers(0, 3), st.integers(0, 3), st.integers(0, maxz)
    )
    coeff = st.integers(-9, 9)
    d = st.dictionaries(expo, coeff, max_size=5)
    polys = d.map(QTZPoly)
    if nonzero:
        polys = polys.filter(lambda p: not p.is_zero())
    return polys


def test_construction_drops_zeros():
    p = QTZPoly({(1, 0, 0): 0, (0, 1, 0): 2})
    assert (1, 0, 0) not in p.terms
    assert p == QTZPoly.monomial(dt=1, coeff=2)
    assert QTZPoly.constant(0).is_zero()


def test_str_spec_example():
    p = ONE + Q * T + QTZPoly.monomial(2, 0, 1, 2)
    assert str(p) == "1 + q*t + 2*z*q^2"
    assert str(QTZPoly.zero()) == "0"
    assert str(Q * Q - T * T) == "-t^2 + q^2"


def test_parse_roundtrip():
    for text in ["0", "1 + q*t + 2*z*q^2", "-t^2 + q^2", "3/4*q - t^3", "q"]:
        assert str(poly_from_str(text)) == str(poly_from_str(str(poly_from_str(text))))
    p = ONE + Q * T * 5 - T**3
    assert poly_from_str(str(p)) == p


@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == QTZPoly.zero()


@given(small_polys(), small_polys())
def test_specialization_is_homomorphism(a, b):
    for sub in ({"z": 0}, {"q": 1}, {"t": 1}, {"q": RAT(1, 2)}):
        assert (a * b).substitute(**sub) == a.substitute(**sub) * b.substitute(**sub)
        assert (a + b).substitute(**sub) == a.substitute(**sub) + b.substitute(**sub)


def test_divide_exact_examples():
    assert divide_exact(ONE - Q * Q, ONE - Q) == ONE + Q
    assert divide_exact(QTZPoly.zero(), Q - T).is_zero()
    with pytest.raises(NotDivisible):
        divide_exact(Q, T)
    with pytest.raises(ZeroDivisionError):
        divide_exact(Q, QTZPoly.zero())


@given(small_polys(), small_polys(nonzero=True))
def test_divide_exact_inverts_multiplication(a, b):
    assert divide_exact(a * b, b) == a


def test_evaluate_and_slabs():
    p = Q * Q * 2 + T * Z + ONE
    assert p.evaluate(1, 1, 1) == 4
    assert p.coefficient_of_z(1) == T
    assert p.coefficient_of_z(0) == Q * Q * 2 + ONE
    assert p.shift_z(2).coefficient_of_z(3) == T
    assert p.swap_qt() == T * T * 2 + Q * Z + ONE
    assert p.degrees() == (2, 1, 1)


def test_ratfun_spec_examples():
    a = RatFun(ONE, Q - T)
    b = RatFun(ONE, T - Q)
    assert (a + b).is_zero()
    assert (a * (Q - T)).to_polynomial() == ONE
    c = RatFun(Q, ONE - T) + RatFun(T, ONE - T)
    assert c == RatFun(Q + T, ONE - T)
    assert not c == RatFun(Q, ONE - T)


def test_ratfun_canonical_form():
    r = RatFun(Q, (T - Q) * 2)
    # denominator is primitive with positive leading coefficient
    lead = r.den.terms[r.den.leading_exponent()]
    assert lead > 0
    assert r == RatFun(-Q, (Q - T) * 2)


def test_ratfun_errors():
    with pytest.raises(ZeroDivisionError):
        RatFun(ONE, QTZPoly.zero())
    with pytest.raises(ValueError):
        RatFun(ONE, Z + ONE)
    with pytest.raises(NotDivisible):
        RatFun(Q, T).to_polynomial()


@given(small_polys(with_z=False), small_polys(with_z=False, nonzero=True),
       small_polys(with_z=False, nonzero=True))
def test_ratfun_field_axioms(a, d1, d2):
    x = RatFun(a, d1)
    y = RatFun(ONE, d2)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) - y == x
    # multiplying back by the denominator recovers the numerator
    assert (x * d1).to_polynomial() * ONE == a


def test_ratfun_mul_cancels():
    x = RatFun(Q * Q - T * T, Q - T)
    assert x.to_polynomial() == Q + T
