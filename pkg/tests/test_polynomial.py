from hypothesis import given
from hypothesis import strategies as st

from linkm3.polynomial import IntPolynomial

coeffs = st.lists(st.integers(-50, 50), max_size=6)


def test_trailing_zeros_trimmed():
    assert IntPolynomial([1, 0, 0]).coeffs == (1,)
    assert IntPolynomial([0, 0]).coeffs == ()
    assert IntPolynomial().degree == -1
    assert not IntPolynomial()


def test_str_and_json():
    p = IntPolynomial([0, 2, 0, -1])
    assert str(p) == "2z - z^3"
    assert str(IntPolynomial()) == "0"
    assert str(IntPolynomial([1, 0, 1])) == "1 + z^2"
    assert IntPolynomial.from_json(p.to_json()) == p
    assert p.to_json() == {"coeffs": [0, 2, 0, -1]}


def test_compare_with_int():
    assert IntPolynomial([1]) == 1
    assert IntPolynomial() == 0


def test_shift_and_monomial():
    assert IntPolynomial([1, 1]).shift(2) == IntPolynomial([0, 0, 1, 1])
    assert IntPolynomial.monomial(3, -2) == IntPolynomial([0, 0, 0, -2])


@given(coeffs, coeffs, st.integers(-5, 5))
def test_ring_operations_match_evaluation(a, b, z):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p + q)(z) == p(z) + q(z)
    assert (p - q)(z) == p(z) - q(z)
    assert (p * q)(z) == p(z) * q(z)
    assert (3 * p)(z) == 3 * p(z)


@given(coeffs, coeffs)
def test_hash_follows_equality(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    if p == q:
        assert hash(p) == hash(q)
