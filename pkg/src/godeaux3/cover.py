"""Invariant bookkeeping for the order-3 quotient of a numerical Godeaux surface.

Fixed-point counts, transfer of K^2 between the surface, the resolved cover
and the quotient, the dimension formulas that gate the case analysis, and
the brute-force enumeration that yields exactly the three main cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class CaseInvalidError(Exception):
    """A numerical combination violates one of the constructor identities."""


@dataclass(frozen=True)
class GodeauxContext:
    """Fixed numerical invariants of a numerical Godeaux surface."""

    ks2: int = 1
    chi: int = 1
    pg: int = 0

    def __post_init__(self) -> None:
        if (self.ks2, self.chi, self.pg) != (1, 1, 0):
            raise CaseInvalidError("numerical Godeaux surface requires K^2=1, chi=1, p_g=0")


@dataclass(frozen=True)
class RamificationData:
    """Divisorial ramification invariants plus the isolated fixed-point counts.

    ``r0k`` is R_0.K_S, ``ell`` the number of disjoint (-2)-components of R_0,
    ``gamma_sq`` the square of the positive-degree component (present exactly
    when r0k=1), ``h1``/``h2`` the counts of isolated fixed points over triple
    points resp. A_2 points of the quotient.
    """

    r0k: int
    ell: int
    h2: int
    gamma_sq: int | None = None

    def __post_init__(self) -> None:
        if self.r0k not in (0, 1):
            raise CaseInvalidError("R_0.K_S must be 0 or 1")
        if self.ell < 0 or self.h2 < 0:
            raise CaseInvalidError("counts must be nonnegative")
        if self.r0k == 1:
            if self.gamma_sq is None:
                raise CaseInvalidError("gamma_sq required when R_0.K_S = 1")
            if self.gamma_sq > 1:
                raise CaseInvalidError("index theorem forces gamma_sq <= 1")
            if (3 - self.gamma_sq) % 2 != 0:
                raise CaseInvalidError("gamma_sq must be odd when R_0.K_S = 1")
        elif self.gamma_sq is not None:
            raise CaseInvalidError("gamma_sq only meaningful when R_0.K_S = 1")
        if self.h1 < 0:
            raise CaseInvalidError("negative h1")

    @property
    def r0sq(self) -> int:
        if self.r0k == 0:
            return -2 * self.ell
        return self.gamma_sq - 2 * self.ell

    @property
    def h1(self) -> int:
        budget = Fraction(3 * self.r0k - self.r0sq, 2)
        if budget.denominator != 1:
            raise CaseInvalidError("fixed point budget is not an integer")
        return 6 + int(budget) - 2 * self.h2


def fixed_point_budget(r: RamificationData) -> int:
    """h_1 + 2 h_2 = 6 + (3 R_0.K_S - R_0^2)/2."""
    num = 3 * r.r0k - r.r0sq
    if num % 2 != 0:
        raise CaseInvalidError("fixed point budget is not an integer")
    return 6 + num // 2


def quotient_k2(g: GodeauxContext, r: RamificationData) -> int:
    """K_Y^2 computed by two independent routes; they must agree exactly."""
    via_euler = Fraction(g.ks2 - (r.h1 + 3 * r.h2) + 4 * r.r0sq - 4 * r.r0k, 3)
    via_h2 = (
        Fraction(g.ks2 - 6 - r.h2, 3)
        + Fraction(3, 2) * r.r0sq
        - Fraction(11, 6) * r.r0k
    )
    if via_euler != via_h2:
        raise CaseInvalidError(f"K_Y^2 formulas disagree: {via_euler} vs {via_h2}")
    if via_euler.denominator != 1:
        raise CaseInvalidError(f"K_Y^2 = {via_euler} is not an integer")
    return int(via_euler)


def kx2(r: RamificationData, ky2: int) -> int:
    """K_X^2 = 3 K_Y^2 - 4 R_0^2 + 4 R_0.K_S."""
    return 3 * ky2 - 4 * r.r0sq + 4 * r.r0k


def kx2_via_blowup(g: GodeauxContext, r: RamificationData) -> int:
    """The cross-check K_X^2 = K_S^2 - (h_1 + 3 h_2)."""
    return g.ks2 - (r.h1 + 3 * r.h2)


def h0_pair(r0k, h2: int | None = None) -> tuple[int, int]:
    """(h^0(N), h^0(2K_Y+B)) for given R_0.K_S and h_2.

    Accepts either a :class:`RamificationData` or the bare pair.  Raises
    :class:`CaseInvalidError` when the pair is not realizable: the second
    value must be an integer in [0, 2], and h^0(N) = 2 + R_0.K_S may not
    reach 4 because the tricanonical map is birational.
    """
    if isinstance(r0k, RamificationData):
        r0k, h2 = r0k.r0k, r0k.h2
    h0_n = 2 + r0k
    if h0_n > 3:
        raise CaseInvalidError("h^0(N) = 4 would make the tricanonical map invariant")
    num = 2 * h2 - 2 - r0k
    if num % 3 != 0:
        raise CaseInvalidError("h^0(2K_Y+B) is not an integer")
    h0_2kb = num // 3
    if not 0 <= h0_2kb <= 2:
        raise CaseInvalidError(f"h^0(2K_Y+B) = {h0_2kb} out of range [0, 2]")
    return h0_n, h0_2kb


@dataclass(frozen=True)
class CaseRecord:
    """One of the main cases of the analysis, optionally instantiated at an ell."""

    id: str
    r0k: int
    h2: int
    h0_n: int
    h0_2kb: int
    ell: int | None = None
    gamma_sq: int | None = None

    def ramification(self) -> RamificationData:
        if self.ell is None:
            raise CaseInvalidError("instantiate the record with a concrete ell first")
        return RamificationData(self.r0k, self.ell, self.h2, gamma_sq=self.gamma_sq)

    def instantiate(self, ell: int, gamma_sq: int | None = None) -> "CaseRecord":
        return CaseRecord(self.id, self.r0k, self.h2, self.h0_n, self.h0_2kb, ell, gamma_sq)

    def to_json(self) -> dict:
        data = {
            "id": self.id,
            "r0k": self.r0k,
            "h2": self.h2,
            "h0_N": self.h0_n,
            "h0_2KYB": self.h0_2kb,
            "ell": self.ell,
            "h1": None,
            "ky2": None,
        }
        if self.gamma_sq is not None:
            data["gamma_sq"] = self.gamma_sq
        if self.ell is not None:
            r = self.ramification()
            data["h1"] = r.h1
            data["ky2"] = quotient_k2(GodeauxContext(), r)
        return data


_CASE_IDS = {(1, 3): "i", (0, 4): "ii", (0, 1): "iii"}


def enumerate_main_cases(h2_max: int = 20) -> list[CaseRecord]:
    """Brute-force the (R_0.K_S, h_2) grid; only three combinations survive."""
    out = []
    for r0k in (0, 1):
        for h2 in range(h2_max + 1):
            try:
                h0_n, h0_2kb = h0_pair(r0k, h2)
            except CaseInvalidError:
                continue
            case_id = _CASE_IDS.get((r0k, h2), f"extra-{r0k}-{h2}")
            out.append(CaseRecord(case_id, r0k, h2, h0_n, h0_2kb))
    out.sort(key=lambda c: ("i ii iii".split().index(c.id) if c.id in ("i", "ii", "iii") else 99))
    return out


def h2_bound_is_monotone(h2_max: int = 20, probe: int = 60) -> bool:
    """Above the search bound h^0(2K_Y+B) only grows, so no case is missed."""
    for r0k in (0, 1):
        for h2 in range(h2_max + 1, probe + 1):
            value = Fraction(2 * h2 - 2 - r0k, 3)
            if value <= 2:
                return False
    return True


@dataclass(frozen=True)
class EigenvalueSplit:
    h11: int
    h12: int
    congruence_class: int
    rejected: tuple[int, ...]


def eigenvalue_split(ell: int) -> EigenvalueSplit:
    """Distribution of the five (-3)-curves E'_i between the two eigenvalues.

    Case (iii) with ell=1 has h_1 = 5.  Writing h11 for the number of curves
    with eigenvalue w and h12 = 5 - h11, the torsion class L_1 satisfies
    L_1^2 = -9 + h11 and L_1.K_Y = (14 - h11)/3 + 1, and L_1^2 + L_1.K = -2.
    """
    if ell != 1:
        raise CaseInvalidError("the split is computed for ell = 1 (h_1 = 5)")
    h1 = 4 + ell
    candidates = [h for h in range(h1 + 1) if (14 - h) % 3 == 0]
    solutions, rejected = [], []
    for h11 in candidates:
        l1_sq = -9 + h11
        l1_k = (14 - h11) // 3 + 1
        if l1_sq + l1_k == -2:
            solutions.append(h11)
        else:
            rejected.append(h11)
    if len(solutions) != 1:
        raise CaseInvalidError(f"expected a unique solution, got {solutions}")
    h11 = solutions[0]
    return EigenvalueSplit(h11, h1 - h11, candidates[0] % 3, tuple(rejected))


@dataclass(frozen=True)
class TripleCoverData:
    """Torsion data of the cover: validated only when a model realizes it.

    ``l1`` must satisfy l1^2 + l1.K = -2 and 3 l1 must equal the branch class
    weighted by eigenvalue exponents (components with the second exponent
    counted twice).  The impossible configurations of the endgame are exactly
    those admitting no such instantiation.
    """

    l1: object  # DivisorClass
    weighted_branch: object  # DivisorClass

    def __post_init__(self) -> None:
        k = self.l1.lattice.k
        if self.l1.square + self.l1.dot(k) != -2:
            raise CaseInvalidError("l1^2 + l1.K must be -2")
        if (3 * self.l1 - self.weighted_branch).coeffs != tuple(
                0 for _ in self.l1.coeffs):
            raise CaseInvalidError("3 l1 does not match the weighted branch class")
