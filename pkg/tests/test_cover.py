import pytest

from godeaux3.cover import (CaseInvalidError, GodeauxContext, RamificationData,
                            eigenvalue_split, enumerate_main_cases,
                            fixed_point_budget, h0_pair, h2_bound_is_monotone,
                            kx2, kx2_via_blowup, quotient_k2)


def test_context_is_pinned():
    GodeauxContext()
    with pytest.raises(CaseInvalidError):
        GodeauxContext(ks2=2)


def test_fixed_point_budget_trivial_ramification():
    r = RamificationData(0, 0, 1)
    assert fixed_point_budget(r) == 6
    assert r.r0sq == 0


def test_pencil_case_h1():
    for ell in range(0, 4):
        r = RamificationData(0, ell, 1)
        assert r.h1 == 4 + ell  # h_2 = 1 leaves h_1 = 4 + l


def test_first_case_h1():
    # h_2 = 3 and Gamma^2 = G gives h_1 = (3 - G)/2 + l
    r = RamificationData(1, 0, 3, gamma_sq=-3)
    assert r.h1 == 3
    r = RamificationData(1, 1, 3, gamma_sq=-1)
    assert r.h1 == 3


def test_gamma_sq_validation():
    with pytest.raises(CaseInvalidError):
        RamificationData(1, 0, 3)  # missing gamma_sq
    with pytest.raises(CaseInvalidError):
        RamificationData(1, 0, 3, gamma_sq=3)  # index theorem cap
    with pytest.raises(CaseInvalidError):
        RamificationData(1, 0, 3, gamma_sq=0)  # parity
    with pytest.raises(CaseInvalidError):
        RamificationData(0, 0, 3, gamma_sq=1)  # only with r0k = 1


def test_quotient_k2_agreement():
    g = GodeauxContext()
    for ell in range(0, 4):
        assert quotient_k2(g, RamificationData(0, ell, 1)) == -2 - 3 * ell
    for ell in range(2, 6):
        assert quotient_k2(g, RamificationData(0, ell, 4)) == -3 - 3 * ell
    assert quotient_k2(g, RamificationData(1, 0, 3, gamma_sq=1)) == -3
    assert quotient_k2(g, RamificationData(1, 1, 3, gamma_sq=-1)) == -9


def test_kx2_both_expressions():
    g = GodeauxContext()
    r = RamificationData(0, 0, 1)
    assert kx2(r, -2) == -6
    assert kx2_via_blowup(g, r) == 1 - (4 + 3)
    for ell in (0, 1, 2):
        r = RamificationData(0, ell, 1)
        ky2 = quotient_k2(g, r)
        assert kx2(r, ky2) == kx2_via_blowup(g, r)


def test_first_case_euler_inequality():
    g = GodeauxContext()
    for gamma_sq in (1, -1, -3, -5):
        for ell in range(0, 3):
            if 2 * ell > 5 + gamma_sq:
                continue
            r = RamificationData(1, ell, 3, gamma_sq=gamma_sq)
            if r.h1 < 1 or r.h1 > 4:
                continue
            ky2 = quotient_k2(g, r)
            assert ky2 >= kx2(r, ky2)


def test_h0_pair_values():
    assert h0_pair(1, 3) == (3, 1)
    assert h0_pair(0, 4) == (2, 2)
    assert h0_pair(0, 1) == (2, 0)


@pytest.mark.parametrize("r0k,h2", [(0, 7), (1, 6), (1, 0), (0, 0), (0, 2)])
def test_h0_pair_rejections(r0k, h2):
    with pytest.raises(CaseInvalidError):
        h0_pair(r0k, h2)


def test_enumerate_main_cases():
    cases = enumerate_main_cases()
    assert [(c.id, c.r0k, c.h2) for c in cases] == [
        ("i", 1, 3), ("ii", 0, 4), ("iii", 0, 1)]
    assert [(c.h0_n, c.h0_2kb) for c in cases] == [(3, 1), (2, 2), (2, 0)]
    # raising the bound does not change the result
    assert len(enumerate_main_cases(h2_max=60)) == 3
    assert h2_bound_is_monotone()


def test_case_record_json():
    case = enumerate_main_cases()[2].instantiate(ell=1)
    blob = case.to_json()
    assert blob["id"] == "iii" and blob["h1"] == 5 and blob["ky2"] == -5


def test_eigenvalue_split():
    split = eigenvalue_split(1)
    assert (split.h11, split.h12) == (2, 3)
    assert split.congruence_class == 2
    assert split.rejected == (5,)
    with pytest.raises(CaseInvalidError):
        eigenvalue_split(0)


def test_h0_pair_accepts_ramification_data():
    r = RamificationData(0, 1, 1)
    assert h0_pair(r) == (2, 0)


def test_triple_cover_data_validation():
    from godeaux3.cover import TripleCoverData
    from godeaux3.lattice import IntersectionLattice

    lat = IntersectionLattice.plane_blow_up(2)
    l1 = lat.divisor([1, -1, 0])  # l1^2 + l1.K = 0 - 2 = -2
    TripleCoverData(l1, 3 * l1)
    bad = lat.divisor([1, 1, 0])  # sum is -4
    with pytest.raises(CaseInvalidError):
        TripleCoverData(bad, 3 * bad)
    with pytest.raises(CaseInvalidError):
        TripleCoverData(l1, 3 * l1 + lat.divisor([1, 0, 0]))
