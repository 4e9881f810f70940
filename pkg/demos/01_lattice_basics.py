"""Exact intersection theory on blown-up rational surfaces.

Every computation in this package reduces to integer arithmetic on a Picard
lattice: a Gram matrix over a named basis plus the canonical class.
"""

from godeaux3 import (IntersectionLattice, arithmetic_genus, blow_up,
                      hodge_index_filter, intersect)

# The plane blown up at five points: basis (H; E1..E5), Gram diag(1, -1, ...).
lat = IntersectionLattice.plane_blow_up(5)
h = lat.basis_class("H")
e1 = lat.basis_class("E1")
print("H.H =", intersect(h, h), " E1.E1 =", intersect(e1, e1), " H.E1 =", intersect(h, e1))
print("canonical class:", lat.canonical, "with K^2 =", lat.k.square)

# Adjunction: genus of a plane curve class of degree d with assigned points.
line = lat.divisor([1, 0, 0, 0, 0, 0])
nodal_cubic = lat.divisor([3, -2, 0, 0, 0, 0])
print("genus of a line:", arithmetic_genus(line))
print("genus of a cubic with a double point:", arithmetic_genus(nodal_cubic))

# Blowing up appends one (-1)-vector and bumps the canonical class.
bigger = blow_up(lat)
print("after one more blow-up: rank", bigger.rank, "K^2 =", bigger.k.square)

# The index-theorem filter rejects classes violating (N^2 D - (D.N) N)^2 <= 0.
n = lat.divisor([2, -1, 0, 0, 0, 0])
print("N^2 =", n.square)
d_good = lat.divisor([1, -1, 0, 0, 0, 0])
print("filter on a line through the point:", hodge_index_filter(d_good, n))

# The mulitplicity table of the endgame realizes the pencil class N exactly:
from godeaux3.delpezzo import table_14pt

model = IntersectionLattice.plane_blow_up(14)
table = table_14pt("lines-lines")
classes = {r.name: model.divisor((r.degree,) + tuple(-m for m in r.mults))
           for r in table.rows}
g_curve = model.basis_class("E14")
e_total = sum((classes[f"E{i}"] for i in range(2, 6)), classes["E1"])
n_class = 3 * model.k + 2 * classes["B0"] + e_total - 3 * g_curve
print("on the fourteen-point model: N^2 =", n_class.square,
      " N.K =", n_class.dot(model.k), " p_a(N) =", arithmetic_genus(n_class))
