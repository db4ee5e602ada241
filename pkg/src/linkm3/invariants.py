"""Finite-type invariants of 2- and 3-component links built from Conway coefficients.

All values are exact: integers or :class:`fractions.Fraction`.  Linking
numbers of a three-component link are handled as the triple
``((1,2), (2,3), (3,1))`` returned by :func:`linkm3.diagram.lk_triple`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .diagram import (
    LinkDiagram,
    cable,
    linking_matrix,
    lk_triple,
    mirror,
    reverse_component,
    sublink,
)
from .errors import NotGood, WrongComponentCount, ZeroLinking
from .skein import MemoCache, c0
from .skein import c1 as _c1_uncached

Triple = tuple[int, int, int]

_C1_MEMO: dict = {}


def c1(d: LinkDiagram, cache: MemoCache | None = None) -> int:
    key = d.key()
    val = _C1_MEMO.get(key)
    if val is None:
        val = _C1_MEMO[key] = _c1_uncached(d, cache)
    return val


def _require(d: LinkDiagram, m: int, what: str) -> None:
    if d.component_count != m:
        raise WrongComponentCount(f"{what} needs a {m}-component link, got {d.component_count}")


def _triple(lk) -> Triple:
    """Accept a 3x3 linking matrix or a ``((1,2),(2,3),(3,1))`` triple."""
    if len(lk) == 3 and all(isinstance(x, int) for x in lk):
        return tuple(int(x) for x in lk)  # type: ignore[return-value]
    return int(lk[0][1]), int(lk[1][2]), int(lk[2][0])


def linking_product(lk) -> int:
    """``k = (1,2)(2,3)(3,1)``."""
    a, b, c = _triple(lk)
    return a * b * c


def k_norm(lk) -> int:
    return linking_product(lk) ** 2


# ---------------------------------------------------------------------------
# Two components


def beta(d: LinkDiagram, cache: MemoCache | None = None) -> int:
    """Sato-Levine invariant ``c1(L) - c0(L) * (c1(L1) + c1(L2))``."""
    _require(d, 2, "beta")
    knots = c1(sublink(d, [1]), cache) + c1(sublink(d, [2]), cache)
    return c1(d, cache) - c0(d, cache) * knots


# ---------------------------------------------------------------------------
# Three components


@dataclass
class _Coefficients:
    lk: Triple
    components: tuple[int, int, int]  # c1(L1), c1(L2), c1(L3)
    sublinks: tuple[int, int, int]  # c1(L2+L3), c1(L3+L1), c1(L1+L2)
    link: int


def _coefficients(d: LinkDiagram, cache: MemoCache | None = None) -> _Coefficients:
    _require(d, 3, "this invariant")
    comps = tuple(c1(sublink(d, [i]), cache) for i in (1, 2, 3))
    subs = tuple(c1(sublink(d, pair), cache) for pair in ([2, 3], [3, 1], [1, 2]))
    return _Coefficients(lk_triple(d), comps, subs, c1(d, cache))  # type: ignore[arg-type]


def _gamma(co: _Coefficients) -> int:
    l12, l23, l31 = co.lk
    k1, k2, k3 = co.components
    s23, s31, s12 = co.sublinks
    return (
        co.link
        - (l12 * l23 + l23 * l31 + l31 * l12) * (k1 + k2 + k3)
        - (l31 + l23) * (s12 - l12 * (k1 + k2))
        - (l12 + l31) * (s23 - l23 * (k2 + k3))
        - (l23 + l12) * (s31 - l31 * (k3 + k1))
    )


def _betas(co: _Coefficients) -> tuple[int, int, int]:
    # for a 2-component sublink c0 is its linking number
    l12, l23, l31 = co.lk
    k1, k2, k3 = co.components
    s23, s31, s12 = co.sublinks
    return (s23 - l23 * (k2 + k3), s31 - l31 * (k3 + k1), s12 - l12 * (k1 + k2))


def _m_tilde(co: _Coefficients) -> int:
    l12, l23, l31 = co.lk
    b23, b31, b12 = _betas(co)
    return (
        -l12 * l23 * l31 * _gamma(co)
        + l12**2 * l31**2 * b23
        + l23**2 * l12**2 * b31
        + l31**2 * l23**2 * b12
    )


def gamma(d: LinkDiagram, cache: MemoCache | None = None) -> int:
    """Melikhov's invariant of a three-component link."""
    return _gamma(_coefficients(d, cache))


def betas(d: LinkDiagram, cache: MemoCache | None = None) -> tuple[int, int, int]:
    """``(beta(L2+L3), beta(L3+L1), beta(L1+L2))``."""
    return _betas(_coefficients(d, cache))


def m_tilde(d: LinkDiagram, cache: MemoCache | None = None) -> Fraction:
    """``-k * gamma + sum over cyclic (i,j,k) of (i,j)^2 (i,k)^2 beta(Lj + Lk)``."""
    return Fraction(_m_tilde(_coefficients(d, cache)))


def p1(lk) -> Fraction:
    """Orientation-averaging correction: ``m_av - m_tilde`` as a polynomial in the linking numbers."""
    a, b, c = _triple(lk)
    k = a * b * c
    return Fraction(k * k * (a + b + c), 6) + Fraction(k * (a * b + b * c + c * a), 12)


def r_poly(lk) -> Fraction:
    a, b, c = _triple(lk)
    return Fraction(
        a**3 * b**3 * (c**3 - c) + b**3 * c**3 * (a**3 - a) + c**3 * a**3 * (b**3 - b), 24
    )


def jump_op1(lk) -> Fraction:
    """Closed-form change of ``m_tilde`` when component 1 is reversed, as published.

    The diagram-level difference comes out with the opposite sign; see
    :func:`jump_op1_observed`.
    """
    a, b, c = _triple(lk)  # (1,2), (2,3), (3,1)
    k = a * b * c
    return -Fraction(k * k * (a + c), 3) - Fraction(k * (a * b + b * c), 6)


def jump_op1_observed(lk) -> Fraction:
    """``m_tilde(reverse_component(d, 1)) - m_tilde(d)`` as the engine finds it."""
    return -jump_op1(lk)


def orientation_variants(d: LinkDiagram) -> list[LinkDiagram]:
    """``d`` and the three links with one component reversed."""
    return [d] + [reverse_component(d, i) for i in (1, 2, 3)]


def m_av(d: LinkDiagram, cache: MemoCache | None = None) -> Fraction:
    """Average of ``m_tilde`` over the four orientation classes of ``d``.

    Reversing all three components leaves ``m_tilde`` unchanged, so the
    classes are represented by ``d`` and its three single reversals.
    """
    _require(d, 3, "m_av")
    return sum((m_tilde(x, cache) for x in orientation_variants(d)), Fraction(0)) / 4


def m_invariant(d: LinkDiagram, cache: MemoCache | None = None) -> Fraction:
    """The asymptotic invariant ``M``.

    The linking numbers are first brought to a non-negative pattern: a
    negative product is handled by mirroring (``M`` is odd), two negative
    entries by reversing their common component.  Then ``M = m_av + R``.
    With a vanishing product ``M = m_av``.
    """
    _require(d, 3, "m_invariant")
    lk = lk_triple(d)
    k = linking_product(lk)
    if k == 0:
        return m_av(d, cache)
    if k < 0:
        return -m_invariant(mirror(d), cache)
    if min(lk) < 0:
        # entries are (1,2), (2,3), (3,1); the pair of negatives shares one component
        negatives = {i for i, x in enumerate(lk) if x < 0}
        common = {frozenset({0, 1}): 2, frozenset({1, 2}): 3, frozenset({2, 0}): 1}[frozenset(negatives)]
        return m_invariant(reverse_component(d, common), cache)
    return m_av(d, cache) + r_poly(lk)


# ---------------------------------------------------------------------------
# Good links and normalization


@dataclass(frozen=True)
class GoodLinkCertificate:
    mu: tuple[int, int, int]
    k: int
    sqrt_k: int


def good_link_check(lk) -> GoodLinkCertificate | None:
    """Certificate that ``|(i,j)| = (mu_i mu_j)**2`` for positive integers ``mu``."""
    a, b, c = (abs(x) for x in _triple(lk))
    if 0 in (a, b, c):
        raise ZeroLinking(f"linking numbers {_triple(lk)} include a zero")
    roots = []
    for x in (a, b, c):
        r = isqrt(x)
        if r * r != x:
            return None
        roots.append(r)
    r12, r23, r31 = roots
    # mu1^2 = r12 r31 / r23 etc.
    num = (r12 * r31, r12 * r23, r23 * r31)
    den = (r23, r31, r12)
    mu = []
    for n_, d_ in zip(num, den):
        if n_ % d_:
            return None
        sq = n_ // d_
        m = isqrt(sq)
        if m * m != sq:
            return None
        mu.append(m)
    m1, m2, m3 = mu
    if (m1 * m2, m2 * m3, m3 * m1) != (r12, r23, r31):
        return None
    sqrt_k = (m1 * m2 * m3) ** 2
    return GoodLinkCertificate((m1, m2, m3), sqrt_k * sqrt_k, sqrt_k)


def cable_link(d: LinkDiagram, multiplicities: Sequence[int]) -> LinkDiagram:
    """Connected cable of a three-component link, closed so that it commutes with mirroring.

    Links with a negative linking product close each cable with positive
    crossings, the others with negative ones.
    """
    _require(d, 3, "cable_link")
    sign = 1 if linking_product(lk_triple(d)) < 0 else -1
    return cable(d, tuple(multiplicities), closing_sign=sign)


def normalize(d: LinkDiagram) -> LinkDiagram:
    """Cable component ``i`` by ``|(j,k)|`` so that all pairwise linking numbers are ``+-k``."""
    _require(d, 3, "normalize")
    lk = lk_triple(d)
    l12, l23, l31 = lk
    if 0 in lk:
        raise ZeroLinking(f"linking numbers {lk} include a zero")
    return cable_link(d, (abs(l23), abs(l31), abs(l12)))


def normalize_secondary(d: LinkDiagram, cert: GoodLinkCertificate) -> LinkDiagram:
    """Cable every component of ``normalize(d)`` by ``sqrt(k)``."""
    if cert is None:
        raise NotGood("no good-link certificate")
    s = cert.sqrt_k
    return cable_link(normalize(d), (s, s, s))


def m_via_normalization(
    d: LinkDiagram, cert: GoodLinkCertificate | None = None, cache: MemoCache | None = None
) -> tuple[Fraction, Fraction]:
    """``M`` of a good link as ``k**-2 * k_norm**-3 * m_av(L_NORM)``.

    Returns the pair ``(M, m_av(L_NORM))``.
    """
    _require(d, 3, "m_via_normalization")
    if cert is None:
        cert = good_link_check(lk_triple(d))
    if cert is None:
        raise NotGood(f"linking numbers {lk_triple(d)} do not define a good link")
    big = normalize_secondary(d, cert)
    mav_big = m_av(big, cache)
    k = cert.k
    return mav_big / (k**2 * (k * k) ** 3), mav_big


# ---------------------------------------------------------------------------
# Reports

FIELDS = ("lk", "c1_components", "c1_sublinks", "c1_link", "betas", "gamma",
          "m_tilde", "p1", "r", "m_av", "m")


def _rational_json(x):
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    return x


@dataclass
class InvariantReport:
    lk: list[list[int]]
    c1_components: tuple[int, ...] | None = None
    c1_sublinks: tuple[int, int, int] | None = None
    c1_link: int | None = None
    betas: tuple[int, int, int] | None = None
    gamma: int | None = None
    m_tilde: Fraction | None = None
    p1: Fraction | None = None
    r: Fraction | None = None
    m_av: Fraction | None = None
    m: Fraction | None = None
    beta: int | None = None
    diagram: dict | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {}
        for name in FIELDS + ("beta",):
            val = getattr(self, name)
            if val is None:
                continue
            if isinstance(val, tuple):
                val = [_rational_json(v) for v in val]
            out[name] = _rational_json(val)
        if self.diagram is not None:
            out["diagram"] = self.diagram
        return out


def report(
    d: LinkDiagram,
    fields: Sequence[str] | None = None,
    cache: MemoCache | None = None,
    include_diagram: bool = False,
) -> InvariantReport:
    """Compute the requested invariants (all that apply by default)."""
    m = d.component_count
    lk = [[int(x) for x in row] for row in linking_matrix(d)]
    rep = InvariantReport(lk)
    if include_diagram:
        rep.diagram = d.to_json()
    wanted = set(FIELDS if fields is None else fields)
    if m == 1:
        if wanted & {"c1_link", "c1_components"}:
            rep.c1_link = c1(d, cache)
        return rep
    if m == 2:
        if "betas" in wanted or "beta" in wanted:
            rep.beta = beta(d, cache)
        if "c1_link" in wanted:
            rep.c1_link = c1(d, cache)
        if "c1_components" in wanted:
            rep.c1_components = tuple(c1(sublink(d, [i]), cache) for i in (1, 2))
        return rep
    if m != 3:
        return rep
    t = lk_triple(d)
    if wanted & {"c1_components", "c1_sublinks", "c1_link", "betas", "gamma", "m_tilde"}:
        co = _coefficients(d, cache)
        rep.c1_components = co.components
        rep.c1_sublinks = co.sublinks
        rep.c1_link = co.link
        rep.betas = _betas(co)
        rep.gamma = _gamma(co)
        rep.m_tilde = Fraction(_m_tilde(co))
    if "p1" in wanted:
        rep.p1 = p1(t)
    if "r" in wanted:
        rep.r = r_poly(t)
    if "m_av" in wanted or "m" in wanted:
        rep.m_av = m_av(d, cache)
    if "m" in wanted:
        rep.m = m_invariant(d, cache)
    return rep
