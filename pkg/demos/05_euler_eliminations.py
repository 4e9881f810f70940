"""Euler-number eliminations: trapped negative curves versus the excess delta.

Each elimination regenerates both sides of its inequality from the raw case
parameters.  The composite pass closes the first two main cases entirely and
cuts the pencil case down to seven surviving (l, shape) pairs.
"""

from godeaux3 import fibration

for prop in ("t.ii", "p.no0", "p.noZ", "p.noN", "p.noN1", "p.no16", "t.no1rul"):
    e = fibration.ALL_DELTA_ELIMINATIONS[prop]()
    print(f"{e.prop_id}: {e.lhs} vs {e.rhs} -> {e.verdict}")
    if e.survivors:
        print(f"   survivors: {list(e.survivors)}")

print("\nEuler pass over the pencil-case lists:")
for label, e in sorted({**fibration.elim_p_0(), **fibration.elim_p_1()}.items()):
    print(f"  ({label}): {e.lhs} vs {e.rhs}, surviving l = {list(e.survivors)}")
print(f"  (N): surviving l = {list(fibration.elim_p_3().survivors)}")

print("\nsurvivors after the Euler pass:", fibration.t_iii_survivors())

print("\nlattice-based eliminations:")
for prop in ("t.no4", "p.1e", "p.no0d", "p.l0"):
    e = fibration.eliminate_by_lattice(prop)
    print(f"  {e.prop_id}: {e.verdict}")

print("\nfinal pencil-case survivors:", fibration.t_iii2_survivors())
