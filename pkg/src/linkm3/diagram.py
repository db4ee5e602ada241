"""Oriented link diagrams as signed-crossing data.

A :class:`LinkDiagram` lists its crossings by the four arcs meeting there
(incoming and outgoing arc of the under-strand and of the over-strand) and
an explicit sign.  No planar embedding is stored.  The package builds
diagrams from braid closures, from cables of those, and from Gauss codes
of explicit planar pictures, so realizability holds by construction; a
diagram read from JSON is trusted to be realizable.  Diagrams that come
from a braid keep it in ``braid_form``, and every operation that has a
braid-level counterpart updates both.

Most operations go through a Gauss-code view: one cyclic sequence of
``(crossing, is_over)`` visits per component, starting at the component's
basepoint.  Arc ids are regenerated deterministically on the way back, so
equal inputs produce byte-identical outputs.

Conventions
-----------
A crossing is positive when, with the over-strand pointing from south-west
to north-east, the under-strand runs south-east to north-west.  In a braid
the strands run upward and the letter ``+k`` lets the strand at position
``k`` pass over the strand at position ``k + 1``; this is a positive
crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import (
    ArcMismatch,
    BadBraid,
    BadComponent,
    BadCrossing,
    BadMultiplicity,
    ComponentGap,
    EmptyDiagram,
    SlotComponentMix,
)


class Crossing(NamedTuple):
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    sign: int


Visit = tuple  # (crossing id, is_over)


class GaussCode(NamedTuple):
    """Per-component visit sequences plus crossing signs.

    ``components[i]`` is the cyclic visit sequence of component ``i + 1``;
    an empty sequence is a crossing-free circle.  ``signs`` maps crossing
    ids to ``+1``/``-1``.
    """

    components: tuple[tuple[Visit, ...], ...]
    signs: Mapping


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    arc_component: Mapping[int, int]
    component_count: int
    free_loops: Mapping[int, int] = field(default_factory=dict)
    # closed-braid presentation of the same oriented link, when known
    braid_form: "BraidLink | None" = field(default=None, compare=False, repr=False)

    def __hash__(self) -> int:
        return hash(self.key())

    @property
    def m(self) -> int:
        return self.component_count

    def __len__(self) -> int:
        return len(self.crossings)

    @cached_property
    def gauss(self) -> GaussCode:
        return to_gauss(self)

    def key(self) -> tuple:
        """Canonical encoding: equal keys iff equal after renumbering."""
        g = canonical_gauss(self.gauss)
        return gauss_key(g)

    def component_crossings(self, i: int) -> list[int]:
        return sorted({c for c, _ in self.gauss.components[i - 1]})

    def self_writhe(self, i: int) -> int:
        counts: dict[int, int] = {}
        for c, _ in self.gauss.components[i - 1]:
            counts[c] = counts.get(c, 0) + 1
        return sum(self.gauss.signs[c] for c, n in counts.items() if n == 2)

    # JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "components": self.component_count,
            "crossings": [
                {"sign": c.sign, "u_in": c.under_in, "u_out": c.under_out,
                 "o_in": c.over_in, "o_out": c.over_out}
                for c in self.crossings
            ],
            "arc_component": {str(a): k for a, k in sorted(self.arc_component.items())},
            "free_loops": {str(k): v for k, v in sorted(self.free_loops.items())},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LinkDiagram":
        try:
            crossings = tuple(
                Crossing(int(c["u_in"]), int(c["u_out"]), int(c["o_in"]),
                         int(c["o_out"]), int(c["sign"]))
                for c in obj["crossings"]
            )
            arc_component = {int(a): int(k) for a, k in obj["arc_component"].items()}
            free = {int(k): int(v) for k, v in obj.get("free_loops", {}).items()}
            m = int(obj["components"])
        except KeyError as exc:
            raise ArcMismatch(f"diagram JSON is missing field {exc.args[0]!r}") from None
        d = cls(crossings, arc_component, m, free)
        validate(d)
        return d


# ---------------------------------------------------------------------------
# Validation


def validate(d: LinkDiagram) -> None:
    """Raise a :class:`DiagramError` subclass unless ``d`` is well formed."""
    m = d.component_count
    if m < 1:
        raise EmptyDiagram("diagram has no components")
    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for idx, c in enumerate(d.crossings):
        if c.sign not in (1, -1):
            raise BadCrossing(f"crossing {idx} has sign {c.sign}")
        arcs = (c.under_in, c.under_out, c.over_in, c.over_out)
        if len(set(arcs)) != 4:
            raise ArcMismatch(f"crossing {idx} reuses an arc id: {arcs}")
        for a in (c.under_in, c.over_in):
            if a in ins:
                raise ArcMismatch(f"arc {a} used twice as an in-slot")
            ins[a] = idx
        for a in (c.under_out, c.over_out):
            if a in outs:
                raise ArcMismatch(f"arc {a} used twice as an out-slot")
            outs[a] = idx
    if set(ins) != set(outs):
        bad = sorted(set(ins) ^ set(outs))
        raise ArcMismatch(f"arcs {bad} are not used once as in and once as out")
    if set(ins) != set(d.arc_component):
        bad = sorted(set(ins) ^ set(d.arc_component))
        raise ArcMismatch(f"arc_component disagrees with crossings on arcs {bad}")
    for idx, c in enumerate(d.crossings):
        ac = d.arc_component
        if ac[c.under_in] != ac[c.under_out] or ac[c.over_in] != ac[c.over_out]:
            raise SlotComponentMix(f"crossing {idx} joins arcs of different components")
    used = set(d.arc_component.values())
    for k, v in d.free_loops.items():
        if v != 1 or k in used:
            raise ComponentGap(f"free loop entry {k}: {v} is inconsistent")
    used |= {k for k, v in d.free_loops.items() if v}
    if used != set(range(1, m + 1)):
        raise ComponentGap(f"component indices {sorted(used)} are not 1..{m}")


# ---------------------------------------------------------------------------
# Gauss-code conversion


def to_gauss(d: LinkDiagram) -> GaussCode:
    in_slot: dict[int, tuple[int, bool]] = {}
    out_arc: dict[tuple[int, bool], int] = {}
    for idx, c in enumerate(d.crossings):
        in_slot[c.under_in] = (idx, False)
        in_slot[c.over_in] = (idx, True)
        out_arc[(idx, False)] = c.under_out
        out_arc[(idx, True)] = c.over_out
    arcs_of: dict[int, list[int]] = {}
    for a, k in d.arc_component.items():
        arcs_of.setdefault(k, []).append(a)
    comps = []
    for k in range(1, d.component_count + 1):
        arcs = arcs_of.get(k)
        if not arcs:
            comps.append(())
            continue
        start = cur = min(arcs)
        seq = []
        while True:
            visit = in_slot[cur]
            seq.append(visit)
            cur = out_arc[visit]
            if cur == start:
                break
        comps.append(tuple(seq))
    signs = {idx: c.sign for idx, c in enumerate(d.crossings)}
    return GaussCode(tuple(comps), signs)


def remove_kinks(g: GaussCode) -> GaussCode:
    """Delete Reidemeister-I loops: crossings visited twice in a row."""
    comps = [list(seq) for seq in g.components]
    signs = dict(g.signs)
    changed = True
    while changed:
        changed = False
        for seq in comps:
            n = len(seq)
            for j in range(n):
                if n >= 2 and seq[j][0] == seq[(j + 1) % n][0]:
                    c = seq[j][0]
                    seq[:] = [v for v in seq if v[0] != c]
                    del signs[c]
                    changed = True
                    break
    return GaussCode(tuple(tuple(s) for s in comps), signs)


def canonical_gauss(g: GaussCode) -> GaussCode:
    """Renumber crossings ``0, 1, ...`` in order of first visit."""
    order: dict = {}
    for seq in g.components:
        for c, _ in seq:
            if c not in order:
                order[c] = len(order)
    comps = tuple(tuple((order[c], o) for c, o in seq) for seq in g.components)
    signs = {order[c]: s for c, s in g.signs.items() if c in order}
    return GaussCode(comps, signs)


def gauss_key(g: GaussCode) -> tuple:
    """Hashable key of an already canonical Gauss code."""
    return (
        tuple(tuple(c * 2 + o for c, o in seq) for seq in g.components),
        tuple(g.signs[i] for i in range(len(g.signs))),
    )


def from_gauss(g: GaussCode) -> LinkDiagram:
    """Build a diagram with canonical arc numbering from a Gauss code."""
    g = canonical_gauss(remove_kinks(g))
    slots: dict[int, dict[str, int]] = {}
    arc_component: dict[int, int] = {}
    free: dict[int, int] = {}
    base = 0
    for k, seq in enumerate(g.components, start=1):
        n = len(seq)
        if n == 0:
            free[k] = 1
            continue
        for j, (c, over) in enumerate(seq):
            arc_in = base + j + 1
            arc_out = base + (j + 1) % n + 1
            s = slots.setdefault(c, {})
            if over:
                s["o_in"], s["o_out"] = arc_in, arc_out
            else:
                s["u_in"], s["u_out"] = arc_in, arc_out
            arc_component[arc_in] = k
        base += n
    crossings = tuple(
        Crossing(s["u_in"], s["u_out"], s["o_in"], s["o_out"], g.signs[c])
        for c, s in sorted(slots.items())
    )
    return LinkDiagram(crossings, arc_component, len(g.components), free)


def renumber(d: LinkDiagram) -> LinkDiagram:
    return from_gauss(d.gauss)


# ---------------------------------------------------------------------------
# Braids


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise BadBraid("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BadBraid(f"letter {x} is not a generator of B_{self.strands}")

    def permutation(self) -> list[int]:
        """``perm[p]`` is the final position of the strand starting at ``p``."""
        at = list(range(self.strands))  # at[position] = starting position
        for x in self.letters:
            k = abs(x) - 1
            at[k], at[k + 1] = at[k + 1], at[k]
        perm = [0] * self.strands
        for pos, start in enumerate(at):
            perm[start] = pos
        return perm

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict) -> "BraidWord":
        try:
            return cls(int(obj["strands"]), tuple(obj["word"]))
        except KeyError as exc:
            raise BadBraid(f"braid JSON is missing field {exc.args[0]!r}") from None


def braid_gauss(b: BraidWord) -> GaussCode:
    """Gauss code of the closure of ``b``, strands oriented upward."""
    n = b.strands
    threads: list[list[Visit]] = [[] for _ in range(n)]
    at = list(range(n))
    signs = {}
    for t, x in enumerate(b.letters):
        k = abs(x) - 1
        left, right = at[k], at[k + 1]
        left_over = x > 0
        threads[left].append((t, left_over))
        threads[right].append((t, not left_over))
        signs[t] = 1 if x > 0 else -1
        at[k], at[k + 1] = right, left
    # the thread ending at position p continues as the thread starting at p
    nxt = {start: pos for pos, start in enumerate(at)}
    seen = set()
    comps = []
    for p in range(n):
        if p in seen:
            continue
        seq: list[Visit] = []
        q = p
        while q not in seen:
            seen.add(q)
            seq.extend(threads[q])
            q = nxt[q]
        comps.append(tuple(seq))
    return GaussCode(tuple(comps), signs)


def braid_closure(b: BraidWord) -> LinkDiagram:
    return BraidLink(b).to_diagram()


def braid_components(b: BraidWord) -> list[int]:
    """Component index (1-based) of each starting strand position."""
    perm = b.permutation()
    comp = [0] * b.strands
    k = 0
    for p in range(b.strands):
        if comp[p]:
            continue
        k += 1
        q = p
        while not comp[q]:
            comp[q] = k
            q = perm[q]
    return comp


@dataclass(frozen=True)
class BraidLink:
    """A closed braid with per-component orientations and a component order.

    ``eps[c - 1]`` is ``+1`` when braid component ``c`` (numbered as in
    :func:`braid_components`) runs upward and ``-1`` when it is reversed.
    Diagram component ``j + 1`` is braid component ``order[j]``.  Operations
    that keep a braid presentation (reversal, mirror, sublinks, relabelling
    and cabling) are carried out here so that large cables stay amenable to
    the colored Burau route.
    """

    braid: BraidWord
    eps: tuple[int, ...] | None = None
    order: tuple[int, ...] | None = None

    def __post_init__(self):
        m = max(self.strand_comp)
        eps = (1,) * m if self.eps is None else tuple(int(e) for e in self.eps)
        order = tuple(range(1, m + 1)) if self.order is None else tuple(int(c) for c in self.order)
        if len(eps) != m or any(e not in (1, -1) for e in eps):
            raise BadBraid(f"need {m} orientations of +1/-1, got {list(eps)}")
        if sorted(order) != list(range(1, m + 1)):
            raise BadComponent(f"{list(order)} is not a permutation of 1..{m}")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "order", order)

    @cached_property
    def strand_comp(self) -> list[int]:
        return braid_components(self.braid)

    @property
    def m(self) -> int:
        return len(self.order)

    def strand_eps(self) -> list[int]:
        return [self.eps[c - 1] for c in self.strand_comp]

    def to_diagram(self) -> LinkDiagram:
        g = braid_gauss(self.braid)
        for c, e in enumerate(self.eps, start=1):
            if e < 0:
                g = gauss_reverse(g, c)
        g = GaussCode(tuple(g.components[c - 1] for c in self.order), g.signs)
        return replace(from_gauss(g), braid_form=self)

    def reverse(self, i: int) -> "BraidLink":
        c = self.order[i - 1]
        eps = list(self.eps)
        eps[c - 1] = -eps[c - 1]
        return BraidLink(self.braid, tuple(eps), self.order)

    def mirror(self) -> "BraidLink":
        b = BraidWord(self.braid.strands, tuple(-x for x in self.braid.letters))
        return BraidLink(b, self.eps, self.order)

    def permute(self, order: Sequence[int]) -> "BraidLink":
        return BraidLink(self.braid, self.eps, tuple(self.order[j - 1] for j in order))

    def sublink(self, keep: Sequence[int]) -> "BraidLink":
        kept = {self.order[i - 1] for i in keep}
        comp = self.strand_comp
        alive = [comp[p] in kept for p in range(self.braid.strands)]
        at = list(range(self.braid.strands))
        letters = []
        for x in self.braid.letters:
            k = abs(x) - 1
            if alive[at[k]] and alive[at[k + 1]]:
                j = sum(alive[at[q]] for q in range(k)) + 1
                letters.append(j if x > 0 else -j)
            at[k], at[k + 1] = at[k + 1], at[k]
        b = BraidWord(sum(alive), tuple(letters))
        new_comp = braid_components(b)
        rank = {p: sum(alive[:p]) for p in range(self.braid.strands) if alive[p]}
        first = {}
        for p in range(self.braid.strands):
            if alive[p]:
                first.setdefault(comp[p], new_comp[rank[p]])
        eps = [0] * len(kept)
        for c, nc in first.items():
            eps[nc - 1] = self.eps[c - 1]
        return BraidLink(b, tuple(eps), tuple(first[self.order[i - 1]] for i in keep))

    def self_writhe(self, c: int) -> int:
        comp = self.strand_comp
        at = list(range(self.braid.strands))
        w = 0
        for x in self.braid.letters:
            k = abs(x) - 1
            if comp[at[k]] == c and comp[at[k + 1]] == c:
                w += 1 if x > 0 else -1
            at[k], at[k + 1] = at[k + 1], at[k]
        return w

    def cable(
        self,
        multiplicities: Sequence[int],
        connected: bool = True,
        framing: Sequence[int] | None = None,
        closing_sign: int = -1,
    ) -> "BraidLink":
        """Braid-level counterpart of :func:`cable`; arguments are in diagram order."""
        m = self.m
        width = [0] * m
        frame = [0] * m
        for j, c in enumerate(self.order):
            width[c - 1] = int(multiplicities[j])
            frame[c - 1] = 0 if framing is None else int(framing[j])
        comp = self.strand_comp
        n = self.braid.strands
        at = list(range(n))
        letters: list[int] = []
        for x in self.braid.letters:
            k = abs(x) - 1
            w = [width[comp[at[q]] - 1] for q in range(n)]
            offset = sum(w[:k])
            a, b = w[k], w[k + 1]
            s = 1 if x > 0 else -1
            # strands of the left band cross the right band one at a time
            for i in range(a):
                q = offset + a - 1 - i
                letters.extend(s * (q + j + 1) for j in range(b))
            at[k], at[k + 1] = at[k + 1], at[k]
        w = [width[comp[at[q]] - 1] for q in range(n)]
        for c in range(1, m + 1):
            lam = width[c - 1]
            if lam == 1:
                continue
            pos = min(q for q in range(n) if comp[at[q]] == c)
            offset = sum(w[:pos])
            block = full_twist(lam, frame[c - 1] - self.self_writhe(c))
            if connected:
                block += closing_block(lam, closing_sign)
            letters.extend((1 if y > 0 else -1) * (abs(y) + offset) for y in block)
        start = [width[comp[q] - 1] for q in range(n)]
        total = sum(start)
        b = BraidWord(total, tuple(letters))
        new_comp = braid_components(b)
        copies = {}
        for c in range(1, m + 1):
            p = comp.index(c)
            base = sum(start[:p])
            lam = width[c - 1]
            pos = [base + (j if self.eps[c - 1] > 0 else lam - 1 - j) for j in range(lam)]
            ids = [new_comp[q] for q in pos]
            copies[c] = ids[:1] if connected else ids
        eps = [0] * max(new_comp)
        for c, ids in copies.items():
            for nc in ids:
                eps[nc - 1] = self.eps[c - 1]
        order = tuple(nc for c in self.order for nc in copies[c])
        return BraidLink(b, tuple(eps), order)

    def conway(self, terms: int | None = None):
        eps = self.strand_eps()
        if eps[0] < 0:  # reversing every component leaves the polynomial alone
            eps = [-e for e in eps]
        rev = sum(1 for e in set(zip(self.strand_comp, eps)) if e[1] < 0)
        return _braid_conway(self.braid.strands, self.braid.letters, tuple(eps), self.m, rev, terms)


@lru_cache(maxsize=4096)
def _braid_conway(strands, letters, eps, m, reversed_count, terms):
    from .burau import conway_braid

    return conway_braid(strands, letters, eps, m, reversed_count, terms=terms)


def unknot() -> LinkDiagram:
    return BraidLink(BraidWord(1)).to_diagram()


def split_union(*ds: LinkDiagram) -> LinkDiagram:
    comps = []
    signs = {}
    for n, d in enumerate(ds):
        g = d.gauss
        comps.extend(tuple(((n, c), o) for c, o in seq) for seq in g.components)
        signs.update({(n, c): s for c, s in g.signs.items()})
    return from_gauss(GaussCode(tuple(comps), signs))


# ---------------------------------------------------------------------------
# Linking


def crossing_components(g: GaussCode) -> dict:
    """Map crossing id -> (under component, over component), 1-based."""
    out: dict = {}
    for k, seq in enumerate(g.components, start=1):
        for c, over in seq:
            slot = out.setdefault(c, [0, 0])
            slot[1 if over else 0] = k
    return {c: (u, o) for c, (u, o) in out.items()}


def linking_matrix(d: LinkDiagram) -> np.ndarray:
    """Symmetric integer matrix of pairwise linking numbers, 0-based indices.

    The diagonal is unused and left at zero.
    """
    return gauss_linking_matrix(d.gauss)


def gauss_linking_matrix(g: GaussCode) -> np.ndarray:
    m = len(g.components)
    twice = np.zeros((m, m), dtype=object)
    for c, (u, o) in crossing_components(g).items():
        if u != o:
            twice[u - 1, o - 1] += g.signs[c]
            twice[o - 1, u - 1] += g.signs[c]
    lk = twice // 2
    assert (lk * 2 == twice).all(), "half-integral linking number"
    return lk


def lk_triple(d: LinkDiagram) -> tuple[int, int, int]:
    """``((1,2), (2,3), (3,1))`` of a three-component diagram."""
    lk = linking_matrix(d)
    return int(lk[0, 1]), int(lk[1, 2]), int(lk[2, 0])


# ---------------------------------------------------------------------------
# Diagram operations


def _check_component(d: LinkDiagram, i: int) -> None:
    if not 1 <= i <= d.component_count:
        raise BadComponent(f"component {i} not in 1..{d.component_count}")


def gauss_reverse(g: GaussCode, i: int) -> GaussCode:
    comps = list(g.components)
    seq = comps[i - 1]
    comps[i - 1] = seq[:1] + seq[:0:-1]
    on_i = {c for c, _ in seq}
    signs = dict(g.signs)
    for c, (u, o) in crossing_components(g).items():
        if c in on_i and u != o:
            signs[c] = -signs[c]
    return GaussCode(tuple(comps), signs)


def reverse_component(d: LinkDiagram, i: int) -> LinkDiagram:
    _check_component(d, i)
    if d.braid_form is not None:
        return d.braid_form.reverse(i).to_diagram()
    return from_gauss(gauss_reverse(d.gauss, i))


def reverse_all(d: LinkDiagram) -> LinkDiagram:
    if d.braid_form is not None:
        b = d.braid_form
        for i in range(1, d.component_count + 1):
            b = b.reverse(i)
        return b.to_diagram()
    g = d.gauss
    for i in range(1, d.component_count + 1):
        g = gauss_reverse(g, i)
    return from_gauss(g)


def gauss_mirror(g: GaussCode) -> GaussCode:
    comps = tuple(tuple((c, not o) for c, o in seq) for seq in g.components)
    return GaussCode(comps, {c: -s for c, s in g.signs.items()})


def mirror(d: LinkDiagram) -> LinkDiagram:
    if d.braid_form is not None:
        return d.braid_form.mirror().to_diagram()
    return from_gauss(gauss_mirror(d.gauss))


def gauss_delete(g: GaussCode, i: int) -> GaussCode:
    gone = {c for c, _ in g.components[i - 1]}
    comps = tuple(
        tuple(v for v in seq if v[0] not in gone)
        for k, seq in enumerate(g.components, start=1) if k != i
    )
    signs = {c: s for c, s in g.signs.items() if c not in gone}
    return GaussCode(comps, signs)


def delete_component(d: LinkDiagram, i: int) -> LinkDiagram:
    """Remove component ``i``; components above ``i`` shift down by one."""
    _check_component(d, i)
    if d.braid_form is not None:
        return sublink(d, [k for k in range(1, d.component_count + 1) if k != i])
    return from_gauss(gauss_delete(d.gauss, i))


def sublink(d: LinkDiagram, keep: Sequence[int]) -> LinkDiagram:
    """The sublink on components ``keep`` (1-based), in the given order."""
    if not keep:
        raise EmptyDiagram("a sublink needs at least one component")
    if len(set(keep)) != len(keep):
        raise BadComponent(f"repeated component in {list(keep)}")
    for i in keep:
        _check_component(d, i)
    if d.braid_form is not None:
        return d.braid_form.sublink(keep).to_diagram()
    g = d.gauss
    dropped = [i for i in range(1, d.component_count + 1) if i not in keep]
    gone = {c for i in dropped for c, _ in g.components[i - 1]}
    comps = tuple(tuple(v for v in g.components[i - 1] if v[0] not in gone) for i in keep)
    signs = {c: s for c, s in g.signs.items() if c not in gone}
    return from_gauss(GaussCode(comps, signs))


def permute_components(d: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    """Relabel components: new component ``j + 1`` is old component ``order[j]``."""
    m = d.component_count
    if sorted(order) != list(range(1, m + 1)):
        raise BadComponent(f"{list(order)} is not a permutation of 1..{m}")
    return sublink(d, order)


def all_permutations(m: int):
    return permutations(range(1, m + 1))


def _check_crossing(d: LinkDiagram, c: int) -> None:
    if not 0 <= c < len(d.crossings):
        raise BadCrossing(f"crossing {c} not in 0..{len(d.crossings) - 1}")


def gauss_switch(g: GaussCode, c) -> GaussCode:
    comps = tuple(tuple((x, (not o) if x == c else o) for x, o in seq) for seq in g.components)
    signs = dict(g.signs)
    signs[c] = -signs[c]
    return GaussCode(comps, signs)


def gauss_smooth(g: GaussCode, c) -> GaussCode:
    """Oriented smoothing at ``c`` (under-in joins over-out, over-in joins under-out)."""
    where = [(k, j) for k, seq in enumerate(g.components) for j, v in enumerate(seq) if v[0] == c]
    (k1, j1), (k2, j2) = where
    comps = list(g.components)
    signs = {x: s for x, s in g.signs.items() if x != c}
    if k1 != k2:
        a, b = comps[k1], comps[k2]
        a_rest = a[j1 + 1:] + a[:j1]
        b_rest = b[j2 + 1:] + b[:j2]
        comps[k1] = a_rest + b_rest
        del comps[k2]
        return GaussCode(tuple(comps), signs)
    seq = comps[k1]
    # each in-arc leaves along the other strand's out-arc, so the two
    # stretches between the visits close up separately
    comps[k1] = seq[j2 + 1:] + seq[:j1]
    comps.append(seq[j1 + 1:j2])
    return GaussCode(tuple(comps), signs)


def skein_switch(d: LinkDiagram, c: int) -> LinkDiagram:
    _check_crossing(d, c)
    return from_gauss(gauss_switch(d.gauss, c))


def skein_smooth(d: LinkDiagram, c: int) -> LinkDiagram:
    _check_crossing(d, c)
    return from_gauss(gauss_smooth(d.gauss, c))


def with_sign(d: LinkDiagram, c: int, sign: int) -> LinkDiagram:
    """``d`` with crossing ``c`` switched if needed so that its sign is ``sign``."""
    _check_crossing(d, c)
    return d if d.crossings[c].sign == sign else skein_switch(d, c)


# ---------------------------------------------------------------------------
# Cabling


def full_twist(width: int, times: int = 1) -> list[int]:
    """Braid word of ``times`` full twists on ``width`` strands (signed)."""
    if width < 2 or times == 0:
        return []
    s = 1 if times > 0 else -1
    return [s * j for j in range(1, width)] * (width * abs(times))


def closing_block(width: int, sign: int = 1) -> list[int]:
    """Braid word cyclically permuting ``width`` parallel strands."""
    return [sign * j for j in range(1, width)]


def cable(
    d: LinkDiagram,
    multiplicities: Sequence[int],
    connected: bool = True,
    framing: int | Sequence[int] = 0,
    closing_sign: int = -1,
) -> LinkDiagram:
    """Replace component ``i`` by ``multiplicities[i-1]`` parallel strands.

    Each component is first given the framing ``framing`` (zero by default)
    by adding full twists to its band, so the result does not depend on
    the writhe of the input diagram.  Every crossing becomes a grid of
    crossings of the same sign.  With ``connected`` a cyclic block closes
    the parallel strands of each component into a single circle; otherwise
    component ``i`` becomes ``multiplicities[i-1]`` consecutive components.
    """
    m = d.component_count
    lam = [int(x) for x in multiplicities]
    if len(lam) != m:
        raise BadMultiplicity(f"need {m} multiplicities, got {len(lam)}")
    if any(x < 1 for x in lam):
        raise BadMultiplicity(f"multiplicities must be >= 1, got {lam}")
    frames = [framing] * m if isinstance(framing, int) else list(framing)
    if len(frames) != m:
        raise BadMultiplicity(f"need {m} framings, got {len(frames)}")
    if d.braid_form is not None:
        return d.braid_form.cable(lam, connected, frames, closing_sign).to_diagram()
    g = d.gauss
    who = crossing_components(g)
    comps = []
    signs = {}
    for k, seq in enumerate(g.components, start=1):
        width = lam[k - 1]
        copies: list[list[Visit]] = [[] for _ in range(width)]
        for c, over in seq:
            u, o = who[c]
            s = g.signs[c]
            for copy in range(width):
                if over:
                    others = range(lam[u - 1])
                    if s > 0:
                        others = reversed(others)
                    copies[copy].extend((("x", c, a, copy), True) for a in others)
                else:
                    others = range(lam[o - 1])
                    if s < 0:
                        others = reversed(others)
                    copies[copy].extend((("x", c, copy, b), False) for b in others)
        for c in {c for c, _ in seq}:
            for a in range(lam[who[c][0] - 1]):
                for b in range(lam[who[c][1] - 1]):
                    signs[("x", c, a, b)] = g.signs[c]
        if width == 1:
            comps.append(tuple(copies[0]))
            continue
        word = full_twist(width, frames[k - 1] - d.self_writhe(k))
        if connected:
            word += closing_block(width, closing_sign)
        comps.extend(_band_components(k, width, word, copies, signs))
    return from_gauss(GaussCode(tuple(comps), signs))


def _band_components(k, width, word, copies, signs):
    # positions are numbered left to right; copy ``width - 1 - p`` sits at p
    threads: list[list[Visit]] = [[] for _ in range(width)]
    at = list(range(width))
    for t, x in enumerate(word):
        j = abs(x) - 1
        left, right = at[j], at[j + 1]
        cid = ("b", k, t)
        threads[left].append((cid, x > 0))
        threads[right].append((cid, x < 0))
        signs[cid] = 1 if x > 0 else -1
        at[j], at[j + 1] = right, left
    exit_pos = {start: pos for pos, start in enumerate(at)}
    seen = set()
    out = []
    for p in range(width):
        if p in seen:
            continue
        seq: list[Visit] = []
        q = p
        while q not in seen:
            seen.add(q)
            q_out = exit_pos[q]
            seq.extend(threads[q])
            seq.extend(copies[width - 1 - q_out])
            q = q_out
        out.append(tuple(seq))
    return out
