"""Conway polynomial of a (partly reversed) closed braid via the colored Burau matrix.

For a braid on ``n`` strands whose closure has components oriented by
``eps`` (``+1`` upward, ``-1`` downward), let every letter act on two rows:

* ``+k`` with ``a = t**eps`` of the strand at position ``k``::

      [[1 - a, a],
       [1,     0]]

* ``-k`` with ``b = t**eps`` of the strand at position ``k + 1``::

      [[0,     1],
       [1 / b, 1 - 1 / b]]

and accumulate ``M = E @ M``.  The minor ``G(t)`` of ``I - M`` without its
first row and column is, with ``s = t**(1/2)``,

    Delta(s) = (-1)**(m - 1 + r) * e0 * s**(N - e0 - W) * G(s**2)

where ``Delta(s) = grad(s - 1/s)``, ``r`` counts reversed components,
``e0`` is the orientation of the strand at position 0, ``N`` is the sum of
all strand orientations and ``W`` the sum of the signed exponents used by
the letters (``+eps`` for a positive letter, ``-eps`` for a negative one).

``G`` is evaluated at roots of unity modulo word-sized primes, turned
back into coefficients by an inverse number-theoretic transform and lifted
to the integers by Chinese remaindering until the result stabilises.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .polynomial import IntPolynomial

_PRIME_CEILING = 1 << 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):  # deterministic below 3.2e9
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def ntt_primes(order: int) -> Iterator[int]:
    """Primes ``p < 2**31`` with ``order | p - 1``, largest first."""
    p = (_PRIME_CEILING - 1) // order * order + 1
    while p > order:
        if p < _PRIME_CEILING and _is_prime(p):
            yield p
        p -= order


def _root_of_unity(p: int, order: int) -> int:
    q = p - 1
    factors = set()
    f = 2
    while f * f <= q:
        while q % f == 0:
            factors.add(f)
            q //= f
        f += 1
    if q > 1:
        factors.add(q)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return pow(g, (p - 1) // order, p)
    raise ArithmeticError(f"no generator mod {p}")


def _powmod(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def det_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Determinants of a stack of square matrices ``A[..., r, r]`` modulo ``p``."""
    A = A.copy() % p
    batch, r = A.shape[0], A.shape[1]
    det = np.ones(batch, dtype=np.int64)
    idx = np.arange(batch)
    for col in range(r):
        nz = A[:, col:, col] != 0
        piv = nz.argmax(axis=1) + col
        swap = piv != col
        if swap.any():
            top = A[idx, col].copy()
            A[idx, col] = A[idx, piv]
            A[idx, piv] = top
            det = np.where(swap, (p - det) % p, det)
        pv = A[:, col, col]
        det = det * pv % p
        if col + 1 == r:
            break
        factor = A[:, col + 1:, col] * _powmod(pv, p - 2, p)[:, None] % p
        pivot_row = A[:, col, col:]
        A[:, col + 1:, col:] = (A[:, col + 1:, col:] - factor[:, :, None] * pivot_row[:, None, :] % p) % p
    return det


def _ntt(a: np.ndarray, omega: int, p: int) -> np.ndarray:
    """``out[k] = sum_j a[j] * omega**(j*k) mod p`` for power-of-two length."""
    n = len(a)
    bits = n.bit_length() - 1
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((np.arange(n) >> b) & 1) << (bits - 1 - b)
    a = a[rev].copy()
    length = 2
    while length <= n:
        half = length // 2
        w = pow(omega, n // length, p)
        ws = np.ones(half, dtype=np.int64)
        for j in range(1, half):
            ws[j] = ws[j - 1] * w % p
        blocks = a.reshape(-1, length)
        u = blocks[:, :half]
        v = blocks[:, half:] * ws % p
        a = np.concatenate(((u + v) % p, (u - v) % p), axis=1).reshape(n)
        length *= 2
    return a


def _letter_data(letters: Sequence[int], strand_eps: Sequence[int]):
    """Per-letter (row, positive?, exponent) plus the total exponent ``W``."""
    n = len(strand_eps)
    at = list(range(n))
    out = []
    total = 0
    for x in letters:
        k = abs(x) - 1
        if x > 0:
            e = strand_eps[at[k]]
            total += e
        else:
            e = strand_eps[at[k + 1]]
            total -= e
        out.append((k, x > 0, e))
        at[k], at[k + 1] = at[k + 1], at[k]
    return out, total


def _minor_values(n: int, data, x: np.ndarray, p: int) -> np.ndarray:
    """``G`` at the points ``x`` modulo ``p``."""
    if n == 1:
        return np.ones_like(x)
    npts = len(x)
    xinv = _powmod(x, p - 2, p)
    power = {1: x, -1: xinv}
    one_minus = {1: (1 - x) % p, -1: (1 - xinv) % p}
    M = np.zeros((n, n, npts), dtype=np.int64)
    for i in range(n):
        M[i, i] = 1
    for k, positive, e in data:
        r0 = M[k].copy()
        r1 = M[k + 1].copy()
        if positive:
            a = power[e]
            M[k] = (one_minus[e] * r0 + a * r1) % p
            M[k + 1] = r0
        else:
            binv = power[-e]
            M[k + 1] = (binv * r0 + one_minus[-e] * r1) % p
            M[k] = r1
    A = (-M[1:, 1:]) % p
    for i in range(n - 1):
        A[i, i] = (A[i, i] + 1) % p
    return det_mod(np.moveaxis(A, 2, 0), p)


def _symmetric(v: int, mod: int) -> int:
    return v - mod if v > mod // 2 else v


def _crt(r1: list[int], m1: int, r2: list[int], m2: int) -> list[int]:
    inv = pow(m1, -1, m2)
    return [a + m1 * ((b - a) * inv % m2) for a, b in zip(r1, r2)]


def _laurent_mod(n, data, shift, sign, span, npts, p) -> np.ndarray:
    """Coefficients of ``s**-span .. s**span`` in ``Delta(s)`` modulo ``p``."""
    omega = _root_of_unity(p, npts)
    pts = np.ones(npts, dtype=np.int64)
    for j in range(1, npts):
        pts[j] = pts[j - 1] * omega % p
    vals = _minor_values(n, data, pts, p)
    g = _ntt(vals, pow(omega, p - 2, p), p) * pow(npts, p - 2, p) % p
    out = np.zeros(2 * span + 1, dtype=np.int64)
    for k in range(-span, span + 1):
        if (k - shift) % 2 == 0:
            out[k + span] = g[((k - shift) // 2) % npts] * sign % p
    return out


def _conway_mod(b: np.ndarray, span: int, m: int, terms: int, p: int) -> np.ndarray:
    """Lowest ``terms`` coefficients of ``grad`` from ``Delta(s)`` modulo ``p``."""
    for k in range(span + 1):
        lo, hi = b[span - k], b[span + k]
        if (lo - (-1) ** k * hi) % p:
            raise ArithmeticError(f"Alexander polynomial is not symmetric at s^{k}")
        if hi and (k - m + 1) % 2:
            raise ArithmeticError(f"s^{k} has the wrong parity for {m} components")
    # grad = b_0 + sum_k b_k u_k with u_0 = 2, u_1 = z, u_{k+1} = z u_k + u_{k-1};
    # Clenshaw gives sum_{k>=0} b_k u_k = 2 y_0 - z y_1
    y1 = np.zeros(terms, dtype=np.int64)
    y2 = np.zeros(terms, dtype=np.int64)
    for k in range(span, -1, -1):
        y = y2.copy()
        y[1:] += y1[:-1]
        y[0] += b[span + k]
        y2, y1 = y1, y % p
    y0, y1 = y1, y2
    out = 2 * y0
    out[1:] -= y1[:-1]
    out[0] -= b[span]
    return out % p


def conway_braid(
    strands: int,
    letters: Sequence[int],
    strand_eps: Sequence[int],
    component_count: int,
    reversed_count: int,
    terms: int | None = None,
    min_primes: int = 2,
) -> IntPolynomial:
    """Conway polynomial of the closure, components oriented by ``strand_eps``.

    Parameters
    ----------
    strands, letters
        The braid.
    strand_eps
        Orientation (``+1`` up, ``-1`` down) of the strand starting at each
        position; strands of one component must agree.
    component_count, reversed_count
        Number of components and how many of them point downward.
    terms
        Lift only the coefficients of ``z**0 .. z**(terms - 1)``; ``None``
        lifts all of them.  Higher coefficients are dropped from the result.
    min_primes
        Lower bound on the number of primes; lifting stops once another
        prime leaves the reconstruction unchanged.
    """
    data, total = _letter_data(letters, strand_eps)
    e0 = strand_eps[0]
    shift = sum(strand_eps) - e0 - total
    sign = (-1) ** (component_count - 1 + reversed_count) * e0
    span = len(letters)  # |power of s| never exceeds the crossing count
    if terms is None:
        terms = span + 1
    npts = 1
    while npts < span + 2:
        npts *= 2
    residues: list[int] | None = None
    modulus = 1
    for count, p in enumerate(ntt_primes(npts), start=1):
        b = _laurent_mod(strands, data, shift, sign, span, npts, p)
        got = [int(v) for v in _conway_mod(b, span, component_count, terms, p)]
        if residues is None:
            residues, modulus = got, p
            continue
        before = [_symmetric(v, modulus) for v in residues]
        residues = _crt(residues, modulus, got, p)
        modulus *= p
        if [_symmetric(v, modulus) for v in residues] == before and count >= min_primes:
            break
    assert residues is not None
    return IntPolynomial(_symmetric(v, modulus) for v in residues)
