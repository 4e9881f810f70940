"""Shapes of the invariant tricanonical pencil.

The moving part splits off the fixed part in one of three numerical ways;
a finite catalog of local shapes at the blown-up fixed points plus mod-3 and
orbit filters reproduces the printed case lists verbatim.
"""

from godeaux3 import ar0_upper, enumerate_pencil_cases, subsystem_split

print("moving/fixed split of the invariant system:")
for branch in subsystem_split():
    phi = "Phi = 0" if branch.pa_phi_max is None else f"p_a(Phi) <= {branch.pa_phi_max}"
    print(f"  A.K = {branch.ak}, Phi.K = {branch.phik}, "
          f"A^2 in {branch.a2_options}, {phi}")

print("\nupper bounds for A.R_0 = A.Phi:")
for a2, phik in ((0, 1), (1, 0), (9, 0)):
    print(f"  A^2 = {a2}, Phi.K = {phik}: A.R_0 <= {ar0_upper(a2, phik)}")

for aprime2 in (0, 1, 2, 3):
    cases = enumerate_pencil_cases(aprime2)
    print(f"\nA'^2 = {aprime2}: {len(cases)} case(s)")
    for c in cases:
        print(f"  ({c.label}) A^2={c.a2} A.R_0={c.ar0} g={c.g} "
              f"A'.K={c.apk} D={c.d_string()}")

loose = enumerate_pencil_cases(0, apply_orbit_filters=False)
print(f"\nsanity: disabling the orbit filters only adds candidates "
      f"({len(loose)} instead of 8)")
