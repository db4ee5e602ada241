from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from linkm3.burau import _ntt, _root_of_unity, conway_braid, det_mod, ntt_primes
from linkm3.diagram import BraidLink, BraidWord, cable
from linkm3.families import hopf_fibers
from linkm3.polynomial import IntPolynomial
from linkm3.skein import conway


def exact_det(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    n, det = len(a), Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def test_primes_support_the_transform():
    for order in (8, 64, 4096):
        ps = [p for _, p in zip(range(3), ntt_primes(order))]
        assert all(p < 2**31 and (p - 1) % order == 0 for p in ps)
        assert len(set(ps)) == 3


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_mod_matches_exact(rows):
    p = next(ntt_primes(8))
    got = det_mod(np.array([rows], dtype=np.int64), p)[0]
    assert got == int(exact_det(rows)) % p


@given(st.lists(st.integers(0, 1000), min_size=16, max_size=16))
def test_ntt_is_a_dft(a):
    p = next(ntt_primes(16))
    w = _root_of_unity(p, 16)
    got = _ntt(np.array(a, dtype=np.int64), w, p)
    want = [sum(x * pow(w, j * k, p) for j, x in enumerate(a)) % p for k in range(16)]
    assert list(got) == want


def test_trefoil_and_hopf():
    assert conway_braid(2, (1, 1, 1), (1, 1), 1, 0) == IntPolynomial([1, 0, 1])
    assert conway_braid(2, (1, 1), (1, 1), 2, 0) == IntPolynomial([0, 1])
    assert conway_braid(2, (1, 1), (1, -1), 2, 1) == IntPolynomial([0, -1])


def test_one_strand():
    assert conway_braid(1, (), (1,), 1, 0) == 1


def test_large_cable_low_terms():
    d = cable(hopf_fibers(1, 1, 1), (3, 2, 2))
    low = conway(d, method="burau", terms=5)
    full = conway(d, method="burau")
    assert low == IntPolynomial(full.coeffs[:5])
    # lk = (6, 4, 6); c0 of a three-component link is the sum of pairwise products
    assert low[2] == 6 * 4 + 4 * 6 + 6 * 6


@given(st.lists(st.sampled_from((1, -1, 2, -2, 3, -3)), max_size=12))
def test_global_reversal_normalisation(letters):
    bl = BraidLink(BraidWord(4, tuple(letters)))
    flipped = BraidLink(bl.braid, tuple(-e for e in bl.eps), bl.order)
    assert bl.conway() == flipped.conway()
