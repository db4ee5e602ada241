"""Conway-polynomial invariants of two- and three-component links.

The tower runs from diagrams (:mod:`linkm3.diagram`) through the Conway
polynomial (:mod:`linkm3.skein`, :mod:`linkm3.burau`) to the Sato-Levine
invariant, the triple invariant ``gamma`` and the asymptotic invariant
``M`` (:mod:`linkm3.invariants`).  Named links live in
:mod:`linkm3.families`; :mod:`linkm3.oracle` holds slow independent checks.
"""

from .diagram import (
    BraidLink,
    BraidWord,
    LinkDiagram,
    braid_closure,
    cable,
    delete_component,
    linking_matrix,
    lk_triple,
    mirror,
    permute_components,
    reverse_component,
    sublink,
    unknot,
)
from .families import FamilySpec, family, hopf2, hopf2_op, hopf3, hopf_fibers, l0, paper_figure
from .invariants import (
    beta,
    betas,
    gamma,
    m_av,
    m_invariant,
    m_tilde,
    p1,
    r_poly,
    report,
)
from .polynomial import IntPolynomial
from .skein import c0, c1, conway

__all__ = [
    "BraidLink", "BraidWord", "FamilySpec", "IntPolynomial", "LinkDiagram",
    "beta", "betas", "braid_closure", "c0", "c1", "cable", "conway", "delete_component",
    "family", "gamma", "hopf2", "hopf2_op", "hopf3", "hopf_fibers", "l0", "linking_matrix",
    "lk_triple", "m_av", "m_invariant", "m_tilde", "mirror", "p1", "paper_figure",
    "permute_components", "r_poly", "report", "reverse_component", "sublink", "unknot",
]
