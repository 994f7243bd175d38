"""Laurent polynomial scalars: ring identities, the bar involution, printing."""

import pytest
from hypothesis import given, strategies as st

from zigzagcat.laurent import Laurent, Q

lau = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5).map(Laurent)


def test_constructors():
    assert Laurent.zero().is_zero()
    assert not Laurent.one().is_zero()
    assert Laurent.one() == 1
    assert Q == Laurent({1: 1})
    assert Laurent.q_power(-3, 2) == Laurent({-3: 2})
    # zero coefficients are dropped at construction
    assert Laurent({5: 0, 1: 1}) == Q


def test_addition_cancels():
    a = Laurent({2: 3, 0: -1})
    assert a - a == Laurent.zero()
    assert a + 1 == Laurent({2: 3})
    assert 1 + a == Laurent({2: 3})
    assert 2 - Q == Laurent({0: 2, 1: -1})


def test_multiplication():
    assert (Q + 1) * (Q - 1) == Laurent({2: 1, 0: -1})
    assert 3 * Q == Laurent({1: 3})
    assert Q * Laurent.zero() == Laurent.zero()


def test_powers():
    assert Q ** 0 == 1
    assert Q ** 3 == Laurent({3: 1})
    assert (-Q) ** 2 == Laurent({2: 1})
    assert Q ** -2 == Laurent({-2: 1})
    assert (-Q) ** -1 == Laurent({-1: -1})
    assert (-Q) ** -2 == Laurent({-2: 1})


def test_negative_powers_need_unit_monomials():
    with pytest.raises(ValueError):
        (Q + 1) ** -1
    with pytest.raises(ValueError):
        Laurent({0: 2}) ** -1


def test_bar_involution():
    a = Laurent({2: 1, 1: 3, 0: -1})
    assert a.bar() == Laurent({-2: 1, -1: 3, 0: -1})
    assert a.bar().bar() == a


def test_str_descending_powers():
    assert str(Laurent.zero()) == "0"
    assert str(Laurent({2: -1, 0: 1})) == "-q^2+1"
    assert str(Q) == "q"
    assert str(Laurent({-2: -1})) == "-q^-2"
    assert str(Laurent({0: 5})) == "5"
    assert str(Laurent({3: 2, 1: -2})) == "2q^3-2q"
    assert repr(Q) == "Laurent(q)"


def test_equality_and_hash():
    assert Laurent({0: 7}) == 7
    assert Laurent({1: 1}) != 7
    assert hash(Laurent({1: 2})) == hash(Laurent({1: 2, 5: 0}))
    assert (Q == "q") is False or True  # NotImplemented path must not raise
    with pytest.raises(TypeError):
        Q + "q"


@given(lau, lau, lau)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


@given(lau, lau)
def test_bar_is_multiplicative(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()
    assert a.bar().bar() == a
