"""
Lifting tensions from Z_q to the integers
=========================================

Every Z_q tension is the reduction of an integral tension with all values
strictly between -q and q.  The set of such lifts (the fiber) has one
member per orientation in the cut-equivalence class of the lift's sign
pattern.
"""

from orientpoly import (
    Orientation,
    TensionVector,
    count_box_tensions,
    equivalence_class,
    induced_orientation,
    lift_modular_tension,
    modq_fiber,
)
from orientpoly.families import complete, double_triangle
from orientpoly.tensions import box_tensions

# a triangle with edges 01, 02, 12, all oriented low -> high
g = complete(3)
eps = Orientation.reference(g)
q = 5

residues = TensionVector((3, 2, 4), q)  # 3 + 4 = 2 mod 5 around the circuit
f = lift_modular_tension(g, eps, residues)
print("residues:", residues, "  lift:", f)

fiber = sorted(modq_fiber(g, eps, f, q))
for h in fiber:
    print("   fiber member:", h, "  signs:", induced_orientation(eps, h.values))

rho = induced_orientation(eps, f.values)
print("class size of the sign pattern:", len(equivalence_class(g, rho)))
print("0-1 tensions of that orientation:", count_box_tensions(g, rho, 1, "nonneg_closed"))

# on the double triangle the classes have sizes 4 and 5, and fibers follow them
g = double_triangle()
eps = Orientation.reference(g)
for q in (3, 5):
    seen = {}
    for block in box_tensions(g, eps, range(q)):
        for row in block % q:
            if row.all():
                ft = TensionVector(tuple(int(v) for v in row), q)
                size = len(modq_fiber(g, eps, lift_modular_tension(g, eps, ft), q))
                seen[size] = seen.get(size, 0) + 1
    print(f"q={q}: nowhere-zero Z_q tensions by fiber size {dict(sorted(seen.items()))}")
