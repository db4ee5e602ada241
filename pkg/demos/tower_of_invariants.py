"""
Invariants of three-component links
===================================

Walk through gamma, m_tilde, the orientation average m_av and the
final invariant M on a few named links.
"""

from linkm3 import gamma, hopf3, hopf_fibers, l0, lk_triple, m_av, m_invariant, m_tilde, mirror, p1, paper_figure, r_poly

# three Hopf fibers: every pair links once
d = hopf_fibers(1, 1, 1)
print("fibers: lk =", lk_triple(d), " gamma =", gamma(d), " m_tilde =", m_tilde(d))

# m_av averages m_tilde over an orientation and its single reversals;
# it differs from m_tilde by a polynomial in the linking numbers
print("m_av =", m_av(d), " m_tilde + p1 =", m_tilde(d) + p1(lk_triple(d)))

# M removes the remaining orientation dependence
print("M =", m_invariant(d), " M(mirror) =", m_invariant(mirror(d)))

# links built from antiparallel twists have vanishing gamma and m_tilde
print("l0(2,-1,1): gamma =", gamma(l0(2, -1, 1)), " m_tilde =", m_tilde(l0(2, -1, 1)))

# a small table over the named figures
print(f"{'link':>10} {'lk':>12} {'gamma':>6} {'m_tilde':>8} {'m_av':>6} {'R':>4} {'M':>6}")
for name, d in [("hopf3(2)", hopf3(2))] + [(f"figure {n}", paper_figure(n)) for n in (6, 7, 8, 10)]:
    lk = lk_triple(d)
    print(f"{name:>10} {str(lk):>12} {gamma(d):>6} {str(m_tilde(d)):>8} {str(m_av(d)):>6} "
          f"{str(r_poly(lk)):>4} {str(m_invariant(d)):>6}")
