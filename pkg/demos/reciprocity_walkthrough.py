"""
Reciprocity one orientation at a time
=====================================

Fix an acyclic orientation.  Strictly decreasing colourings and strictly
positive tensions are interior lattice points of two polytopes; weakly
decreasing colourings and nonnegative tensions are all lattice points of
their closures.  Ehrhart reciprocity links the two counts by t -> -t.
"""

from orientpoly import Orientation, per_orientation_polynomials, rank_profile
from orientpoly.families import complete

g = complete(4)
eps = Orientation.reference(g)  # 0 -> 1 -> 2 -> 3, a linear order
n, r = g.n, rank_profile(g).rank

p = per_orientation_polynomials(g, eps)
for name, poly in p._asdict().items():
    print(f"{name:17s}", poly)

# strict colourings at -t against weak colourings at t
lhs = p.chromatic_open.negate_variable()
print("chi(eps;-t)      =", lhs)
print("(-1)^n chi_bar   =", (-1) ** n * p.chromatic_closed)

# same for tensions, with the rank in place of the vertex count
print("tau_Z(eps;-t)    =", p.tension_open.negate_variable())
print("(-1)^r tau_Z_bar =", (-1) ** r * p.tension_closed)

# the closed polytopes always contain exactly one point at the bottom dilation
print("chi_bar(eps;1) =", p.chromatic_closed(1), "  tau_Z_bar(eps;0) =", p.tension_closed(0))

# A different acyclic orientation of K4 is always a linear order too, so the
# numbers repeat; on a cycle they do not.
from orientpoly import enumerate_orientations
from orientpoly.families import cycle

c4 = cycle(4)
for eps in enumerate_orientations(c4, acyclic_only=True):
    q = per_orientation_polynomials(c4, eps)
    print(eps, " chi(eps;t) =", q.chromatic_open, "  tau_Z(eps;t) =", q.tension_open)
