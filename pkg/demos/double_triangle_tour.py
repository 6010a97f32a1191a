"""
A tour of the double triangle
=============================

Two triangles glued along an edge: four vertices, five edges.  Small enough
to list everything, big enough that the orientation classes are not all the
same size.
"""

from orientpoly import (
    chromatic_polynomial,
    classify,
    enumerate_orientations,
    integral_tension_polynomial,
    is_acyclic,
    modular_tension_polynomial,
    tutte_polynomial,
)
from orientpoly.families import double_triangle

g = double_triangle()
print("edges:", g.edges)

# the three headline polynomials, each interpolated from raw counts
chi = chromatic_polynomial(g)
tau = modular_tension_polynomial(g)
tau_z = integral_tension_polynomial(g)
print("chi(t)   =", chi)
print("tau(t)   =", tau)
print("tau_Z(t) =", tau_z)

# evaluating at -1 and 0 counts acyclic orientations
acyclic = list(enumerate_orientations(g, acyclic_only=True))
print(f"{len(acyclic)} acyclic orientations; chi(-1) = {chi(-1)}, tau_Z(0) = {tau_z(0)}")

# cut-equivalence glues acyclic orientations that differ on an oriented cut
classes = classify(g, "acyclic")
print(f"{len(classes)} classes of sizes {classes.sizes}; tau(0) = {tau(0)}")
for c in classes.classes:
    print("   ", " ".join(map(str, c)))

# the cyclic ones split into singletons and pairs
everything = classify(g, "all")
cyclic = [c for c in everything.classes if not is_acyclic(g, c[0])]
print(f"{sum(map(len, cyclic))} cyclic orientations in {len(cyclic)} classes:",
      sorted(map(len, cyclic)))

# and the Tutte polynomial knows the class count too
T = tutte_polynomial(g)
print("T(x,y) =", T)
print("T(t,0) =", T.at_y(0, "t"), "  T(1,0) =", T(1, 0))

# The integral count is small at q=2: every +-1 tension would have to sum to zero
# around a triangle, which three odd numbers cannot do.
print("tau_Z at q = 1..5:", [int(tau_z(q)) for q in range(1, 6)])
