import pytest
from hypothesis import given
from hypothesis import strategies as st

from linkm3.diagram import (
    BraidWord,
    braid_closure,
    linking_matrix,
    renumber,
    reverse_all,
    skein_smooth,
    split_union,
    sublink,
    unknot,
    with_sign,
)
from linkm3.errors import EmptyDiagram, ParityViolation
from linkm3.families import hopf2
from linkm3.oracle import conway_bruteforce
from linkm3.polynomial import IntPolynomial
from linkm3.skein import (
    STATS,
    MemoCache,
    c0,
    c1,
    check_parity,
    conway,
    conway_gauss,
    extract_coeff,
    linking_c0,
    structural_check,
)

from .strategies import braid_words, oriented_braid_links

Z = IntPolynomial([0, 1])


def test_unknot():
    assert conway(unknot()) == 1


def test_split_unlink():
    assert conway(split_union(unknot(), unknot())) == 0


def test_hopf_is_z():
    assert conway(hopf2(1)) == Z


def test_trefoil_matches_oracle():
    d = braid_closure(BraidWord(2, (1, 1, 1)))
    assert conway(d) == IntPolynomial([1, 0, 1])
    assert conway(d) == conway_bruteforce(d)


def test_hopf2_two():
    assert conway(hopf2(2)) == IntPolynomial([0, 2, 0, 1])


def test_empty_link_rejected():
    from linkm3.diagram import LinkDiagram

    with pytest.raises(EmptyDiagram):
        conway(LinkDiagram((), {}, 0))
    with pytest.raises(EmptyDiagram):
        conway_gauss(LinkDiagram((), {}, 0).gauss)


def test_extract_coeff_examples():
    assert extract_coeff(Z, 2, 0) == 1
    assert extract_coeff(IntPolynomial([1, 0, 1]), 1, 1) == 1
    assert extract_coeff(IntPolynomial([0, 2, 0, 1]), 2, 1) == 1


def test_parity_violation():
    with pytest.raises(ParityViolation):
        extract_coeff(IntPolynomial([1, 1]), 1, 0)
    with pytest.raises(ParityViolation):
        extract_coeff(IntPolynomial([1, 1]), 2, 0)
    with pytest.raises(ValueError):
        extract_coeff(Z, 2, 2)


def test_structural_check_catches_wrong_c0():
    with pytest.raises(ParityViolation):
        structural_check(hopf2(2), IntPolynomial([0, 1]))


def test_structural_checks_are_counted():
    before = STATS["checks"]
    conway(hopf2(3))
    assert STATS["checks"] == before + 1


def test_method_validation():
    with pytest.raises(ValueError):
        conway(hopf2(1), method="fast")
    with pytest.raises(ValueError):
        conway(renumber(hopf2(1)), method="burau")


def test_terms_truncation():
    d = hopf2(3)
    full = conway(d)
    assert conway(d, terms=2) == IntPolynomial(full.coeffs[:2])
    assert conway(d, method="burau", terms=2) == IntPolynomial(full.coeffs[:2])


def test_memo_cache_persists(tmp_path):
    path = str(tmp_path / "memo.jsonl")
    cache = MemoCache(path)
    d = braid_closure(BraidWord(3, (1, -2, 1, -2)))
    want = conway(d, cache=cache)
    assert len(cache) > 0
    again = MemoCache(path)
    assert len(again) == len(cache)
    assert conway(d, cache=again) == want
    assert again.hits > 0


def test_shared_cache_env(tmp_path, monkeypatch):
    import linkm3.skein as skein

    monkeypatch.setenv("M3_CACHE_DIR", str(tmp_path))
    monkeypatch.setattr(skein, "_shared", None)
    conway(hopf2(2), shared=True, method="skein")
    assert (tmp_path / "conway.jsonl").exists()
    monkeypatch.setattr(skein, "_shared", None)


def test_c0_c1_of_hopf():
    assert c0(hopf2(3)) == 3
    assert c1(hopf2(3)) == 4


# ---------------------------------------------------------------------------
# properties


@given(braid_words(max_len=7), st.data())
def test_skein_identity(b, data):
    d = braid_closure(b)
    if not len(d):
        return
    c = data.draw(st.integers(0, len(d) - 1))
    plus = conway(with_sign(d, c, 1), method="skein")
    minus = conway(with_sign(d, c, -1), method="skein")
    zero = conway(skein_smooth(with_sign(d, c, 1), c), method="skein")
    assert plus - minus == zero.shift(1)


@given(oriented_braid_links())
def test_parity_and_c0(bl):
    d = bl.to_diagram()
    p = conway(d, method="skein")
    check_parity(p, d.component_count)
    assert p[d.component_count - 1] == linking_c0(d)


@given(oriented_braid_links())
def test_c0_of_pairs_is_linking_number(bl):
    d = bl.to_diagram()
    lk = linking_matrix(d)
    m = d.component_count
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            assert c0(sublink(d, [i, j]), method="skein") == lk[i - 1, j - 1]


@given(oriented_braid_links())
def test_relabelling_and_total_reversal_preserve_polynomial(bl):
    d = bl.to_diagram()
    p = conway(d, method="skein")
    assert conway(renumber(d), method="skein") == p
    assert conway(reverse_all(d), method="skein") == p


@given(oriented_braid_links(braid_words(max_strands=5, max_len=10)))
def test_burau_matches_skein(bl):
    d = bl.to_diagram()
    assert conway(d, method="burau") == conway(d, method="skein")
