"""Enumeration of the possible shapes of the invariant tricanonical pencil.

The moving part A of the invariant pencil, its exceptional content D over
the blown-up fixed points, and the induced pencil |A'| on the quotient are
described by a small catalog of "drop atoms" (how A passes through a fixed
point) plus arithmetic constraints.  An exhaustive filter over atom
multisets reproduces the printed case lists verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

# Intersection numbers of the exceptional configuration over an A_2-type
# fixed point q (curves F, G, H) and over a triple-point type fixed point
# (curve E), on the resolved cover: F^2 = H^2 = E^2 = -1, G^2 = -3,
# F.G = G.H = 1, F.H = 0.
_Q_GRAM = {
    ("F", "F"): -1,
    ("G", "G"): -3,
    ("H", "H"): -1,
    ("F", "G"): 1,
    ("G", "H"): 1,
    ("F", "H"): 0,
}


def _q_dot(d1: dict[str, int], d2: dict[str, int]) -> int:
    total = 0
    for a, x in d1.items():
        for b, y in d2.items():
            key = (a, b) if (a, b) in _Q_GRAM else (b, a)
            total += x * y * _Q_GRAM[key]
    return total


@dataclass(frozen=True)
class DropAtom:
    """One local contribution to the exceptional content D of the pencil."""

    kind: str
    site: str  # "q" (A_2-type fixed point) or "p" (triple-point type)
    mult: int  # multiplicity of A at the point
    d_contribution: tuple[tuple[str, int], ...]
    self_int_drop: int
    dg: int
    de: int
    singularity: str
    min_a2: int = 0
    requires_a2_9: bool = False
    forces_phi_through_q: bool = False


def _q_atom(kind: str, f: int, g: int, h: int, mult: int, singularity: str,
            min_a2: int = 0, requires_a2_9: bool = False) -> DropAtom:
    d = {"F": f, "G": g, "H": h}
    drop = -_q_dot(d, d)
    dg = _q_dot(d, {"G": 1})
    # Phi must pass through q whenever the F or H multiplicity of D is not
    # divisible by 3 (branch components pull back with multiplicity 3).
    forces = f % 3 != 0 or h % 3 != 0
    return DropAtom(kind, "q", mult, tuple(sorted(d.items())), drop, dg, 0,
                    singularity, min_a2, requires_a2_9, forces)


def p_atom(mult: int) -> DropAtom:
    """A passes with multiplicity ``mult`` through a triple-point type fixed point."""
    if mult < 1:
        raise ValueError("multiplicity must be positive")
    return DropAtom(f"p-mult-{mult}", "p", mult, (("E", mult),), mult * mult, 0, -mult,
                    "none" if mult == 1 else "multiple")


Q_SIMPLE = _q_atom("q-simple", 2, 1, 1, 1, "simple")
Q_SIMPLE_ALT = _q_atom("q-simple-alt", 1, 1, 2, 1, "simple")
Q_NODE = _q_atom("q-node", 3, 2, 3, 2, "node", min_a2=6)
Q_CUSP = _q_atom("q-cusp", 3, 2, 2, 2, "cusp", min_a2=6)
Q_DOUBLE_OTHER = _q_atom("q-double-other", 4, 2, 2, 2, "double", requires_a2_9=True)
Q_TRIPLE = _q_atom("q-triple", 3, 3, 3, 3, "ordinary-triple", requires_a2_9=True)

Q_ATOMS = (Q_SIMPLE, Q_SIMPLE_ALT, Q_NODE, Q_CUSP, Q_DOUBLE_OTHER, Q_TRIPLE)


@dataclass(frozen=True)
class SubsystemBranch:
    """One branch of the moving-part/fixed-part split of the invariant pencil."""

    ak: int
    phik: int
    a2_options: tuple[int, ...]
    pa_phi_max: int | None  # None means Phi = 0
    a_is_2k: bool = False


def subsystem_split() -> list[SubsystemBranch]:
    """The three possibilities for (A.K_S, Phi.K_S, A^2).

    Derived from 3 K_S^2 = 3 = A.K + Phi.K, the lower bound A.K >= 2, the
    index theorem against K_S, and the parity of A^2 + A.K.
    """
    ks2 = 1
    branches = []
    for ak in (2, 3):
        phik = 3 * ks2 - ak
        # (ak.K - K^2.A)^2 <= 0 gives A^2 <= ak^2 / K^2.
        a2_cap = ak * ak // ks2
        evens = ak % 2 == 0  # A^2 + A.K even
        options = tuple(a2 for a2 in range(0, a2_cap + 1)
                        if (a2 % 2 == 0) == evens)
        if ak == 2:
            branches.append(SubsystemBranch(ak, phik, options, pa_phi_max=2))
        else:
            proper = tuple(a2 for a2 in options if a2 < a2_cap)
            branches.append(SubsystemBranch(ak, phik, proper, pa_phi_max=0))
            # A^2 = 9 forces equality in the index theorem, so A ~ 3K and Phi = 0.
            branches.append(SubsystemBranch(ak, phik, (a2_cap,), pa_phi_max=None))
    return branches


def ar0_upper(a2: int, phik: int) -> int:
    """0 <= A.R_0 <= A.Phi = 9 - A^2 - 3 Phi.K_S."""
    return 9 - a2 - 3 * phik


def genus_from_case(ak: int, ar0: int, dg: int, de: int, aprime2: int) -> Fraction:
    """Genus of the quotient pencil member from the cover/blow-up bookkeeping.

    A.K_S - 2 A.R_0 - D.G + D.E = 6g - 6 - 3 A'^2; non-integral or negative
    values are rejected by the caller.
    """
    return Fraction(ak - 2 * ar0 - dg + de + 6 + 3 * aprime2, 6)


@dataclass(frozen=True)
class PencilCase:
    label: str
    a2: int
    ar0: int
    g: int
    apk: int
    d: tuple[tuple[str, int], ...]
    aprime2: int
    phi_zero: bool

    def d_string(self) -> str:
        if not self.d:
            return "0"
        parts = []
        for comp, mult in self.d:
            parts.append(comp if mult == 1 else f"{mult}{comp}")
        return "+".join(parts)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "a2": self.a2,
            "ar0": self.ar0,
            "g": self.g,
            "apk": self.apk,
            "aprime2": self.aprime2,
            "d": [{"component": c, "mult": m} for c, m in self.d],
            "phi_zero": self.phi_zero,
        }


def _p_multisets(budget: int, max_parts: int = 9):
    """Nonincreasing tuples of positive multiplicities with sum of squares = budget."""
    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if len(prefix) >= max_parts:
            return
        m = min(cap, isqrt(remaining))
        while m >= 1:
            if m * m <= remaining:
                yield from rec(remaining - m * m, m, prefix + (m,))
            m -= 1
    yield from rec(budget, budget, ())


def _canonical_d(q_atoms: tuple[DropAtom, ...], p_mults: tuple[int, ...]):
    d: list[tuple[str, int]] = []
    for i, m in enumerate(p_mults, start=1):
        d.append((f"E{i}", m))
    for atom in q_atoms:
        for comp, mult in atom.d_contribution:
            d.append((comp, mult))
    return tuple(d)


def _candidate_cases(aprime2: int, h2: int, apply_orbit_filters: bool) -> list[PencilCase]:
    found: list[PencilCase] = []
    seen: set[tuple] = set()
    for branch in subsystem_split():
        phi_zero = branch.pa_phi_max is None
        for a2 in branch.a2_options:
            drop_needed = a2 - 3 * aprime2
            if drop_needed < 0:
                continue
            q_choices: list[tuple[DropAtom, ...]] = [()]
            if h2 >= 1:
                from itertools import combinations_with_replacement

                for size in range(1, h2 + 1):
                    q_choices += list(combinations_with_replacement(Q_ATOMS, size))
            for q_atoms in q_choices:
                q_drop = sum(a.self_int_drop for a in q_atoms)
                if q_drop > drop_needed:
                    continue
                if any(a.min_a2 > a2 for a in q_atoms):
                    continue
                if any(a.requires_a2_9 and a2 != 9 for a in q_atoms):
                    continue
                for p_mults in _p_multisets(drop_needed - q_drop):
                    if phi_zero:
                        # every component of D other than G has multiplicity 0 mod 3
                        if any(m % 3 != 0 for m in p_mults):
                            continue
                        if any(m % 3 != 0
                               for a in q_atoms
                               for comp, m in a.d_contribution if comp != "G"):
                            continue
                        # nonzero multiplicity at a p-point only if A misses q entirely
                        if p_mults and q_atoms:
                            continue
                    dg = sum(a.dg for a in q_atoms)
                    if dg % 3 != 0:
                        continue
                    de = -sum(p_mults)
                    aphi = ar0_upper(a2, branch.phik)
                    if aphi < 0:
                        continue
                    # Orbit accounting on the intersection cycle A.Phi: each
                    # p-point atom with multiplicity m (m not 0 mod 3) forces a
                    # fixed intersection point of local multiplicity
                    # m * (-m mod 3); a q-atom whose F/H content is not
                    # divisible by 3 forces Phi through q (at least 1), with
                    # unconstrained residue.
                    forced_min = 0
                    forced_residue = 0
                    residue_known = True
                    for m in p_mults:
                        if m % 3 != 0:
                            forced_min += m * ((-m) % 3)
                            forced_residue += m * ((-m) % 3)
                    for a in q_atoms:
                        if a.forces_phi_through_q:
                            forced_min += 1
                            residue_known = False
                    if phi_zero:
                        ar0_values = [0]
                    else:
                        hi = aphi - forced_min if apply_orbit_filters else aphi
                        ar0_values = list(range(0, max(hi, -1) + 1))
                        if apply_orbit_filters and residue_known:
                            target = (aphi - forced_residue) % 3
                            ar0_values = [v for v in ar0_values if v % 3 == target]
                    for ar0 in ar0_values:
                        g = genus_from_case(branch.ak, ar0, dg, de, aprime2)
                        if g.denominator != 1 or g < 0:
                            continue
                        g_int = int(g)
                        apk = 2 * g_int - 2 - aprime2
                        # the two simple-at-q variants differ only by the F/H labels,
                        # so normalize the q-part to the sorted {F, H} multiplicities
                        fh = tuple(sorted(m for a in q_atoms
                                          for c, m in a.d_contribution if c in ("F", "H")))
                        gm = tuple(m for a in q_atoms
                                   for c, m in a.d_contribution if c == "G")
                        nkey = (a2, ar0, g_int, p_mults, fh, gm)
                        if nkey in seen:
                            continue
                        seen.add(nkey)
                        rep_q = tuple(Q_SIMPLE if a.kind == "q-simple-alt" else a
                                      for a in q_atoms)
                        found.append(PencilCase("", a2, ar0, g_int, apk,
                                                _canonical_d(rep_q, p_mults),
                                                aprime2, phi_zero))
    return found


def enumerate_pencil_cases(aprime2: int, h2: int = 1,
                           apply_orbit_filters: bool = True) -> list[PencilCase]:
    """All numerical shapes of the invariant pencil with the given A'^2.

    Exhaustive over the moving-part branches and drop-atom multisets, filtered
    by the mod-3 multiplicity constraints, the orbit bound on A.R_0 and
    integrality of the genus.  Results are sorted and labelled.
    """
    if aprime2 not in (0, 1, 2, 3):
        raise ValueError("A'^2 must be one of 0, 1, 2, 3")
    cases = _candidate_cases(aprime2, h2, apply_orbit_filters)
    cases.sort(key=lambda c: (c.a2, c.ar0, -c.g, c.d))
    labelled = []
    for idx, case in enumerate(cases):
        if aprime2 == 3:
            label = "N"
        else:
            label = f"{aprime2}{chr(ord('a') + idx)}"
        labelled.append(PencilCase(label, case.a2, case.ar0, case.g, case.apk,
                                   case.d, case.aprime2, case.phi_zero))
    return labelled


def pencil_case(label: str) -> PencilCase:
    """Look up a case by its label, e.g. ``"0g"`` or ``"N"``."""
    aprime2 = 3 if label == "N" else int(label[0])
    for case in enumerate_pencil_cases(aprime2):
        if case.label == label:
            return case
    raise KeyError(label)
