"""Conway polynomial by descending-diagram skein recursion.

Walk the components in order, each from its basepoint.  The first crossing
met for the first time on its under-strand is "bad"; switching it moves
the diagram towards a descending one and

    grad(D) = grad(D switched at c) + sign(c) * z * grad(D smoothed at c).

A diagram without bad crossings is a stacked, descending unlink whose
Conway polynomial is 1 for a knot and 0 otherwise.  Results are memoized
on the canonical Gauss code.
"""

from __future__ import annotations

import json
import os
import sys
import threading
from typing import MutableMapping

from .diagram import (
    GaussCode,
    LinkDiagram,
    canonical_gauss,
    crossing_components,
    gauss_key,
    gauss_smooth,
    gauss_switch,
    linking_matrix,
    remove_kinks,
)
from .errors import EmptyDiagram, ParityViolation
from .polynomial import IntPolynomial

ONE = IntPolynomial([1])
ZERO = IntPolynomial()


class MemoCache:
    """Thread-safe map from canonical diagram keys to Conway polynomials.

    With ``path`` set, entries are appended to a JSON-lines file and
    reloaded on construction.
    """

    def __init__(self, path: str | None = None):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.path = path
        self.hits = 0
        if path and os.path.exists(path):
            with open(path) as fh:
                for line in fh:
                    rec = json.loads(line)
                    self._data[_decode_key(rec["key"])] = IntPolynomial(rec["coeffs"])

    def get(self, key):
        with self._lock:
            val = self._data.get(key)
            if val is not None:
                self.hits += 1
            return val

    def put(self, key, value: IntPolynomial) -> None:
        with self._lock:
            if key in self._data:
                return
            self._data[key] = value
            if self.path:
                with open(self.path, "a") as fh:
                    fh.write(json.dumps({"key": _encode_key(key), "coeffs": list(value.coeffs)}) + "\n")

    def __len__(self) -> int:
        return len(self._data)


def _encode_key(key) -> list:
    comps, signs = key
    return [[list(seq) for seq in comps], list(signs)]


def _decode_key(obj) -> tuple:
    comps, signs = obj
    return (tuple(tuple(seq) for seq in comps), tuple(signs))


_shared: MemoCache | None = None


def shared_cache() -> MemoCache:
    """Process-wide cache, backed by ``$M3_CACHE_DIR/conway.jsonl`` when set."""
    global _shared
    if _shared is None:
        d = os.environ.get("M3_CACHE_DIR")
        path = None
        if d:
            os.makedirs(d, exist_ok=True)
            path = os.path.join(d, "conway.jsonl")
        _shared = MemoCache(path)
    return _shared


def is_split(g: GaussCode) -> bool:
    """True when the components fall into two groups with no crossing between them."""
    m = len(g.components)
    if m < 2:
        return False
    if any(not seq for seq in g.components):
        return True
    parent = list(range(m + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, o in crossing_components(g).values():
        parent[find(u)] = find(o)
    root = find(1)
    return any(find(k) != root for k in range(2, m + 1))


def first_bad_crossing(g: GaussCode):
    seen = set()
    for seq in g.components:
        for c, over in seq:
            if c in seen:
                continue
            if not over:
                return c
            seen.add(c)
    return None


def conway_gauss(g: GaussCode, cache: MutableMapping | MemoCache | None = None) -> IntPolynomial:
    if not g.components:
        raise EmptyDiagram("Conway polynomial of the empty link")
    if cache is None:
        cache = MemoCache()
    limit = sys.getrecursionlimit()
    need = 4 * len(g.signs) + 200
    if limit < need:
        sys.setrecursionlimit(need)
    return _conway(g, cache)


def _conway(g: GaussCode, cache) -> IntPolynomial:
    g = canonical_gauss(remove_kinks(g))
    if is_split(g):
        return ZERO
    key = gauss_key(g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    c = first_bad_crossing(g)
    if c is None:
        val = ONE if len(g.components) == 1 else ZERO
    else:
        val = _conway(gauss_switch(g, c), cache)
        smoothed = _conway(gauss_smooth(g, c), cache)
        if smoothed:
            tail = smoothed.shift(1)
            val = val + tail if g.signs[c] > 0 else val - tail
    if isinstance(cache, MemoCache):
        cache.put(key, val)
    else:
        cache[key] = val
    return val


# above this many crossings a diagram with a braid form goes through the
# colored Burau route
BURAU_THRESHOLD = 14

METHODS = ("auto", "skein", "burau")


def conway(
    d: LinkDiagram,
    cache: MemoCache | None = None,
    shared: bool = False,
    method: str = "auto",
    terms: int | None = None,
) -> IntPolynomial:
    """Conway polynomial of ``d``.

    Parameters
    ----------
    d
        The link diagram.
    cache, shared
        Memo table for the skein route.  A fresh one is used per call unless
        ``cache`` is given or ``shared`` selects the process-wide one.
    method
        ``"skein"`` forces the skein recursion, ``"burau"`` the colored
        Burau route (needs ``d.braid_form``), ``"auto"`` picks Burau for
        braid-presented diagrams above ``BURAU_THRESHOLD`` crossings.
    terms
        Keep only the coefficients of ``z**0 .. z**(terms - 1)``.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if d.component_count < 1:
        raise EmptyDiagram("Conway polynomial of the empty link")
    use_burau = method == "burau" or (
        method == "auto" and d.braid_form is not None and len(d) > BURAU_THRESHOLD
    )
    if use_burau and d.braid_form is None:
        raise ValueError("the Burau route needs a diagram with a braid form")
    if use_burau:
        p = d.braid_form.conway(terms)
    else:
        if cache is None and shared:
            cache = shared_cache()
        p = conway_gauss(d.gauss, cache)
        if terms is not None:
            p = IntPolynomial(p.coeffs[:terms])
    structural_check(d, p)
    return p


# counts of top-level structural checks performed, for reporting
STATS = {"checks": 0}


def _det(rows: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def linking_c0(d: LinkDiagram) -> int:
    """Lowest Conway coefficient predicted by the linking numbers.

    It is any first cofactor of the linking Laplacian (``1`` for a knot).
    """
    lk = linking_matrix(d)
    m = d.component_count
    lap = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i != j:
                lap[i][j] = -int(lk[i, j])
                lap[i][i] += int(lk[i, j])
    return _det([row[1:] for row in lap[1:]])


def structural_check(d: LinkDiagram, p: IntPolynomial) -> None:
    """Raise :class:`ParityViolation` unless ``p`` has the parity and ``c_0`` of ``d``."""
    m = d.component_count
    check_parity(p, m)
    want = linking_c0(d)
    if p[m - 1] != want:
        raise ParityViolation(f"c_0 = {p[m - 1]} but the linking numbers give {want}")
    STATS["checks"] += 1


def check_parity(p: IntPolynomial, m: int) -> None:
    for k, a in enumerate(p.coeffs):
        if a and (k < m - 1 or (k - (m - 1)) % 2):
            raise ParityViolation(f"z^{k} coefficient {a} in the Conway polynomial of a {m}-component link")


def extract_coeff(p: IntPolynomial, m: int, k: int) -> int:
    """Coefficient ``c_k`` in ``grad = z**(m-1) * (c_0 + c_1 z**2 + ...)``."""
    if k not in (0, 1):
        raise ValueError("only c_0 and c_1 are defined here")
    check_parity(p, m)
    return p[m - 1 + 2 * k]


def c0(d: LinkDiagram, cache: MemoCache | None = None, method: str = "auto") -> int:
    return extract_coeff(conway(d, cache, method=method, terms=d.m + 2), d.m, 0)


def c1(d: LinkDiagram, cache: MemoCache | None = None, method: str = "auto") -> int:
    return extract_coeff(conway(d, cache, method=method, terms=d.m + 2), d.m, 1)
