"""Slow, independent checks of the Conway engine and of the published closed forms.

:func:`conway_bruteforce` expands the full skein tree with no memo table,
no kink removal and no split detection.  At every node it may resolve any
bad crossing, chosen by lowest id or at random, so agreement across
choices also exercises the order independence of the recursion.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .diagram import (
    GaussCode,
    LinkDiagram,
    BraidWord,
    braid_closure,
    gauss_smooth,
    gauss_switch,
    reverse_component,
    skein_smooth,
    with_sign,
)
from .errors import TooLarge
from .families import hopf2, hopf2_op, hopf3, hopf_fibers, l0, paper_figure
from .invariants import beta, jump_op1, m_av, m_tilde, lk_triple
from .invariants import c1 as c1_of
from .polynomial import IntPolynomial
from .skein import conway

ONE = IntPolynomial([1])
ZERO = IntPolynomial()


@dataclass(frozen=True)
class OracleConfig:
    max_crossings: int = 12
    crossing_order: str = "lowest_index"  # or "random"
    seed: int = 0

    def __post_init__(self):
        if self.max_crossings < 1:
            raise ValueError("max_crossings must be >= 1")
        if self.crossing_order not in ("lowest_index", "random"):
            raise ValueError(f"unknown crossing order {self.crossing_order!r}")


def bad_crossings(g: GaussCode) -> list:
    """Crossings first reached along their under-strand."""
    seen = set()
    bad = []
    for seq in g.components:
        for c, over in seq:
            if c in seen:
                continue
            seen.add(c)
            if not over:
                bad.append(c)
    return bad


def conway_bruteforce(d: LinkDiagram, cfg: OracleConfig = OracleConfig()) -> IntPolynomial:
    if len(d) > cfg.max_crossings:
        raise TooLarge(f"{len(d)} crossings exceed the oracle limit of {cfg.max_crossings}")
    rng = random.Random(cfg.seed)

    def pick(bad):
        if cfg.crossing_order == "random":
            return rng.choice(bad)
        return min(bad)

    def expand(g: GaussCode) -> IntPolynomial:
        bad = bad_crossings(g)
        if not bad:
            return ONE if len(g.components) == 1 else ZERO
        c = pick(bad)
        val = expand(gauss_switch(g, c))
        tail = expand(gauss_smooth(g, c)).shift(1)
        return val + tail if g.signs[c] > 0 else val - tail

    return expand(d.gauss)


def skein_identity_holds(d: LinkDiagram, c: int) -> bool:
    """``grad(L+) - grad(L-) == z grad(L0)`` at crossing ``c``."""
    plus = conway(with_sign(d, c, 1), method="skein")
    minus = conway(with_sign(d, c, -1), method="skein")
    zero = conway(skein_smooth(with_sign(d, c, 1), c), method="skein")
    return plus - minus == zero.shift(1)


# ---------------------------------------------------------------------------
# Corpus


def corpus(max_crossings: int = 12) -> list[tuple[str, LinkDiagram]]:
    """Named diagrams from every family, up to ``max_crossings`` crossings."""
    items: list[tuple[str, LinkDiagram]] = []
    for p in range(-4, 5):
        items.append((f"hopf2({p})", hopf2(p)))
        items.append((f"hopf2_op({p})", hopf2_op(p)))
    for p in range(-2, 3):
        items.append((f"hopf3({p})", hopf3(p)))
    for s in itertools.product((1, -1), repeat=3):
        items.append((f"hopf_fibers{s}", hopf_fibers(*s)))
    for a, b, c in itertools.product(range(-1, 2), repeat=3):
        items.append((f"l0({a},{b},{c})", l0(a, b, c)))
    for n in (6, 7, 8, 10, 11):
        items.append((f"figure({n})", paper_figure(n)))
    for name, word, strands in (
        ("trefoil", (1, 1, 1), 2),
        ("figure_eight", (1, -2, 1, -2), 3),
        ("cinquefoil", (1,) * 5, 2),
        ("t(3,4)", (1, 2) * 4, 3),
        ("borromean", (1, -2) * 3, 3),
    ):
        items.append((name, braid_closure(BraidWord(strands, word))))
    return [(n, d) for n, d in items if len(d) <= max_crossings]


def check_case(
    name: str, d: LinkDiagram, max_crossings: int = 12, seeds: Sequence[int] = range(5),
    identity_limit: int = 10,
) -> list[dict]:
    """Engine against brute force for one diagram, plus its skein identities."""
    want = conway(d, method="skein")
    got = [conway_bruteforce(d, OracleConfig(max_crossings, "lowest_index"))]
    got += [conway_bruteforce(d, OracleConfig(max_crossings, "random", s)) for s in seeds]
    ok = all(g == want for g in got)
    rec = {"identity": "engine_vs_bruteforce", "case": name, "crossings": len(d),
           "status": "pass" if ok else "fail", "conway": str(want)}
    if not ok:
        rec["bruteforce"] = [str(g) for g in got]
    out = [rec]
    if 0 < len(d) <= identity_limit:
        bad = [c for c in range(len(d)) if not skein_identity_holds(d, c)]
        out.append({"identity": "skein_relation", "case": name, "crossings": len(d),
                    "status": "fail" if bad else "pass", "failed_crossings": bad})
    return out


def _check_star(args):
    return check_case(*args)


def corpus_check(
    max_crossings: int = 12, seeds: Iterable[int] = range(5), identity_limit: int = 10,
    map_fn: Callable = map,
) -> list[dict]:
    """:func:`check_case` over the corpus; ``map_fn`` may be a parallel, order-preserving map."""
    seeds = tuple(seeds)
    jobs = [(n, d, max_crossings, seeds, identity_limit) for n, d in corpus(max_crossings)]
    return [rec for recs in map_fn(_check_star, jobs) for rec in recs]


# ---------------------------------------------------------------------------
# Closed forms


def _compare(name: str, cases: Iterable, engine: Callable, closed: Callable) -> dict:
    rows = []
    for p in cases:
        rows.append((p, engine(p), closed(p)))
    exact = all(e == c for _, e, c in rows)
    flipped = all(e == -c for _, e, c in rows)
    status = "pass" if exact else ("sign_flagged" if flipped else "fail")
    mismatches = [
        {"params": list(p) if isinstance(p, tuple) else p, "engine": str(e), "closed_form": str(c)}
        for p, e, c in rows if e != c
    ]
    return {"identity": name, "status": status, "cases": len(rows), "mismatches": mismatches}


def closed_form_suite(box: int = 2, hopf_range: int = 4) -> list[dict]:
    """Each published closed form against the engine over a parameter box.

    A form that matches after negating it everywhere is reported as
    ``sign_flagged`` rather than ``fail``.
    """
    hp = range(-hopf_range, hopf_range + 1)
    triples = list(itertools.product(range(-box, box + 1), repeat=3))
    out = [
        _compare("beta_hopf", hp, lambda p: beta(hopf2(p)), lambda p: Fraction(p**3 - p, 6)),
        _compare("beta_hopf_op", hp, lambda p: beta(hopf2_op(p)), lambda p: 0),
        _compare("c1_hopf_op", hp, lambda p: c1_of(hopf2_op(p)), lambda p: 0),
        _compare(
            "c1_l0_op1", triples,
            lambda t: 6 * c1_of(reverse_component(l0(*t), 1)),
            lambda t: -t[0] * ((t[2] + t[1]) ** 3 - (t[2] + t[1]))
            + t[2] * (t[1] ** 3 - t[1]) + t[1] * (t[2] ** 3 - t[2]),
        ),
        _compare(
            "jump_op1_l0", triples,
            lambda t: m_tilde(reverse_component(l0(*t), 1)) - m_tilde(l0(*t)),
            lambda t: jump_op1(lk_triple(l0(*t))),
        ),
        _compare("m_tilde_hopf3", (1, 2), lambda p: m_tilde(hopf3(p)),
                 lambda p: Fraction(p**7 + p**5, 2)),
        _compare("m_tilde_hopf3_op1", (1, 2), lambda p: m_tilde(reverse_component(hopf3(p), 1)),
                 lambda p: Fraction(-p**7 + p**5, 6)),
        _compare("m_av_hopf3", (1, 2), lambda p: m_av(hopf3(p)), lambda p: Fraction(p**5, 4)),
    ]
    return out


def to_jsonl(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
