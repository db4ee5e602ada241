"""
Conway polynomials of two-component links
=========================================

Build twisted Hopf links, expand their Conway polynomials with the
skein engine, and read off the second-order invariant beta.
"""

from fractions import Fraction

from linkm3 import BraidWord, braid_closure, beta, c1, conway, hopf2, hopf2_op, linking_matrix

# a link diagram can come from a braid closure: the trefoil is sigma_1^3
trefoil = braid_closure(BraidWord(2, (1, 1, 1)))
print("trefoil:", conway(trefoil))

# two-component Hopf links with linking number p, parallel orientation
for p in range(-3, 4):
    d = hopf2(p)
    lk = linking_matrix(d)[0, 1]
    print(f"hopf2({p:+d}): lk = {lk:+d}  nabla = {conway(d)}  beta = {beta(d)}")
    # beta follows the cubic (p^3 - p) / 6
    assert beta(d) == Fraction(p**3 - p, 6)

# reversing one component kills c1 and beta
print("hopf2_op(3): c1 =", c1(hopf2_op(3)), " beta =", beta(hopf2_op(3)))

# the same polynomial through the colored Burau route, used for large braids
d = hopf2(4)
print("skein == burau:", conway(d, method="skein") == conway(d, method="burau"))
