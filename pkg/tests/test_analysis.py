from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hemifuzz.algebra import automorphisms
from hemifuzz.analysis import (DEFAULT_GRID, DegreeGrid, GridMaximal, NotApplicable,
                               NotMaximal, cuts_invariant, grid_nifi_enumerate,
                               is_characteristic, is_completely_normal, is_normal,
                               maximality_status)
from hemifuzz.catalog import (A1, A3, B2B, B2B_ASYM1, B2B_ASYM2, B2B_SYM1, B2B_SYM2, BOOL, R1,
                              T123, Z2, Z2xZ2, Z2xZ2_ASYM, Z2xZ2_SYM)
from hemifuzz.constructions import normalize_plus, two_valued_ifs
from hemifuzz.errors import InputError, ResourceBudgetError
from hemifuzz.fuzzy import Ifs, is_if_left_h_ideal

import oracles

HALF = F(1, 2)
G01 = DegreeGrid((0, 1))


def test_normality():
    assert is_normal(T123)
    assert not is_normal(A3)
    assert is_normal(normalize_plus(A3))


def test_complete_normality():
    result = is_completely_normal(T123)
    assert result and result.witness == (3,)
    assert not is_completely_normal(Ifs.constant(R1, 1, 0))
    assert not is_completely_normal(normalize_plus(A3))


def test_characteristic():
    assert is_characteristic(A1)
    assert is_characteristic(T123)
    for A in (B2B_SYM1, B2B_SYM2, Z2xZ2_SYM):
        assert is_characteristic(A)
    result = is_characteristic(B2B_ASYM1)
    assert not result
    images, x = result.witness
    assert images == (0, 2, 1, 3)
    assert B2B_ASYM1(images[x]) != B2B_ASYM1(x)
    assert not is_characteristic(B2B_ASYM2)
    assert not is_characteristic(Z2xZ2_ASYM)


@pytest.mark.parametrize("A", [A1, T123, A3, B2B_SYM1, B2B_SYM2, B2B_ASYM1, B2B_ASYM2,
                               Z2xZ2_SYM, Z2xZ2_ASYM])
def test_characteristic_iff_cuts_invariant(A):
    assert bool(is_characteristic(A)) == bool(cuts_invariant(A))


def test_grid():
    g = DegreeGrid.parse("1, 0, 1/2")
    assert g == DEFAULT_GRID and str(g) == "{0,1/2,1}"
    assert str(G01.refine()) == "{0,1/2,1}"
    assert len(G01.refine(2)) == 5
    with pytest.raises(InputError):
        DegreeGrid.parse("0,1/2")


def _brute_nifi(R, grid):
    # brute force over all degree pairs, checked with the independent oracle
    pairs = oracles.grid_ifs_pairs(tuple(grid))
    out = []
    for combo in product(pairs, repeat=R.order - 1):
        mu = (F(1),) + tuple(p[0] for p in combo)
        lam = (F(0),) + tuple(p[1] for p in combo)
        if not oracles.if_violations(R.add, R.mul, mu, lam):
            out.append((mu, lam))
    return sorted(out)


@pytest.mark.parametrize("R,grid,count", [
    (Z2, DEFAULT_GRID, 6), (BOOL, G01, 1), (R1, G01, 3), (Z2xZ2, G01, None),
])
def test_grid_nifi(R, grid, count):
    found = grid_nifi_enumerate(R, grid)
    words = sorted((A.mu.degrees, A.lam.degrees) for A in found)
    assert words == _brute_nifi(R, grid)
    if count is not None:
        assert len(found) == count
    assert all(is_normal(A) and is_if_left_h_ideal(A) for A in found)


def test_grid_nifi_z2_values():
    found = grid_nifi_enumerate(Z2, DEFAULT_GRID)
    assert {A(1) for A in found} == {(0, 0), (0, HALF), (0, 1), (HALF, 0), (HALF, HALF), (1, 0)}


def test_grid_nifi_r1_members():
    found = set(grid_nifi_enumerate(R1, G01))
    assert Ifs.constant(R1, 1, 0) in found
    assert T123 in found
    assert Ifs.of(R1, (1, 1, 1, 0), (0, 0, 0, 0)) in found


def test_grid_budget():
    with pytest.raises(ResourceBudgetError):
        grid_nifi_enumerate(R1, DegreeGrid.parse("0,1/4,1/2,3/4,1"), budget=10)


def _assert_valid_witness(status, A):
    assert isinstance(status, NotMaximal)
    W = status.witness
    top = normalize_plus(A)
    assert top < W and is_normal(W) and not W.is_constant()
    assert not oracles.if_violations(W.carrier.add, W.carrier.mul, W.mu.degrees, W.lam.degrees)


def test_maximality_two_valued_z2():
    A = two_valued_ifs(Z2, {0}, 0, 1, 1, 0)
    status = maximality_status(A, G01)
    _assert_valid_witness(status, A)
    # the documented witness (1, 1/2), (0, 1/2) is also a valid one
    W = Ifs.of(Z2, (1, HALF), (0, HALF))
    assert A < W and is_if_left_h_ideal(W)


def test_maximality_t123():
    status = maximality_status(T123, G01)
    _assert_valid_witness(status, T123)
    W = Ifs.of(R1, (1, 1, 1, HALF), (0, 0, 0, F(1, 4)))
    assert T123 < W and is_if_left_h_ideal(W) and not W.is_constant()


def test_maximality_not_applicable():
    for R in (Z2, R1, BOOL):
        status = maximality_status(Ifs.constant(R, 1, 0), DEFAULT_GRID)
        assert isinstance(status, NotApplicable) and status.reason == "constant"
    assert isinstance(maximality_status(A1), NotApplicable)


def test_averaging_probe_when_grid_exhausted():
    status = maximality_status(A3, G01, depth=0)
    assert isinstance(status, NotMaximal) and status.source.startswith("averaging")
    assert status.witness.pairs() == [(1, 0), (F(4, 5), F(1, 5))]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([Z2, BOOL, R1]), st.data())
def test_no_grid_member_is_maximal(R, data):
    pool = grid_nifi_enumerate(R, DEFAULT_GRID)
    A = data.draw(st.sampled_from(pool))
    status = maximality_status(A, DEFAULT_GRID)
    if A.is_constant():
        assert isinstance(status, NotApplicable)
    else:
        _assert_valid_witness(status, A)
    assert not isinstance(status, GridMaximal)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([Z2, BOOL, R1]), st.data())
def test_superset_of_normal_is_normal(R, data):
    pool = grid_nifi_enumerate(R, DEFAULT_GRID)
    A = data.draw(st.sampled_from(pool))
    for B in pool:
        if A <= B:
            assert is_normal(B)


def test_automorphism_cut_images():
    # every cut of a characteristic Ifs on B2B is fixed by the swap
    swap = [f for f in automorphisms(B2B) if f.images != (0, 1, 2, 3)][0]
    for x in B2B.elements:
        assert B2B_SYM2(swap(x)) == B2B_SYM2(x)
