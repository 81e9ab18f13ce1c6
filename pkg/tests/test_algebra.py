import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from hemifuzz.algebra import (AXIOMS, Hemiring, Morphism, WindowedNaturals, automorphisms,
                              axiom_violations, compose, inverse, is_homomorphism,
                              product_hemiring, trivial_hemiring, validate_hemiring)
from hemifuzz.catalog import B2B, BOOL, R1, TRIV, Z2, Z2xZ2, catalog_rings
from hemifuzz.errors import AxiomError, InputError

import oracles


def tables(R):
    return [list(r) for r in R.add], [list(r) for r in R.mul]


@pytest.mark.parametrize("R", catalog_rings(), ids=lambda R: R.name)
def test_catalog_rings_validate(R):
    add, mul = tables(R)
    assert isinstance(validate_hemiring(add, mul), Hemiring)
    assert oracles.hemiring_axioms_hold(add, mul) == set()


def test_r1_identity_mutation():
    add, mul = tables(R1)
    add[0][1] = 0
    result = validate_hemiring(add, mul)
    assert isinstance(result, list)
    by_axiom = {v.axiom: v.witness for v in result}
    assert by_axiom["additive identity"] == (1,)
    assert "additive commutativity" in by_axiom


def test_ragged_tables_are_input_errors():
    with pytest.raises(InputError):
        validate_hemiring([[0, 1], [1]], [[0, 0], [0, 1]])
    with pytest.raises(InputError):
        validate_hemiring([[0, 1], [1, 2]], [[0, 0], [0, 1]])
    with pytest.raises(InputError):
        validate_hemiring([[0]], [[0, 0], [0, 1]])


def test_from_tables_raises_axiom_error():
    with pytest.raises(AxiomError) as exc:
        Hemiring.from_tables([[0, 1], [0, 1]], [[0, 0], [0, 1]])
    assert exc.value.violations


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_violations_agree_with_oracle(data):
    R = data.draw(st.sampled_from(catalog_rings()))
    add, mul = tables(R)
    n = R.order
    for _ in range(data.draw(st.integers(1, 3))):
        which = data.draw(st.sampled_from([add, mul]))
        i, j = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
        which[i][j] = data.draw(st.integers(0, n - 1))
    found = axiom_violations(add, mul)
    assert {v.axiom for v in found} == oracles.hemiring_axioms_hold(add, mul)
    for v in found:
        assert oracles.axiom_fails_at(v.axiom, add, mul, v.witness)


def test_homomorphism_examples():
    assert is_homomorphism(Morphism.identity(Z2))
    assert is_homomorphism(Morphism(R1, BOOL, (0, 1, 1, 1)))
    swap = is_homomorphism(Morphism(Z2, Z2, (1, 0)))
    assert not swap and swap.reason == "zero not preserved"


def test_collapse_map_oracle():
    # independent check: R1 sums vanish only at 0 + 0 and products vanish iff a factor is 0
    f = (0, 1, 1, 1)
    for x, y in itertools.product(range(4), repeat=2):
        assert f[R1.add[x][y]] == BOOL.add[f[x]][f[y]]
        assert f[R1.mul[x][y]] == BOOL.mul[f[x]][f[y]]


def test_morphism_shape_errors():
    with pytest.raises(InputError):
        Morphism(Z2, Z2, (0,))
    with pytest.raises(InputError):
        Morphism(Z2, Z2, (0, 2))


def _brute_automorphisms(R):
    n = R.order
    out = []
    for rest in itertools.permutations(range(1, n)):
        p = (0,) + rest
        if all(p[R.add[x][y]] == R.add[p[x]][p[y]] and p[R.mul[x][y]] == R.mul[p[x]][p[y]]
               for x in range(n) for y in range(n)):
            out.append(p)
    return sorted(out)


@pytest.mark.parametrize("R,expected", [
    (Z2, [(0, 1)]),
    (R1, [(0, 1, 2, 3)]),
    (B2B, [(0, 1, 2, 3), (0, 2, 1, 3)]),
])
def test_automorphisms(R, expected):
    assert [f.images for f in automorphisms(R)] == expected
    assert _brute_automorphisms(R) == expected


@pytest.mark.parametrize("R", catalog_rings(), ids=lambda R: R.name)
def test_automorphisms_form_a_group(R):
    auts = automorphisms(R)
    words = {f.images for f in auts}
    assert tuple(R.elements) in words
    assert [f.images for f in auts] == sorted(words)
    for f in auts:
        assert inverse(f).images in words
        for g in auts:
            assert compose(f, g).images in words
    assert [f.images for f in auts] == _brute_automorphisms(R)


def test_r1_swap_fails_on_sum():
    p = (0, 2, 1, 3)
    assert p[R1.add[1][2]] != R1.add[p[1]][p[2]]


def test_products():
    assert B2B.order == 4
    assert TRIV.order == 1
    assert Z2xZ2.order == 4
    RT = product_hemiring(R1, trivial_hemiring())
    assert RT.add == R1.add and RT.mul == R1.mul
    assert isinstance(validate_hemiring(Z2xZ2.add, Z2xZ2.mul), Hemiring)


def test_windowed_naturals_tables():
    N = WindowedNaturals(4)
    assert N.add[2][2] == 4
    assert N.add[3][2] == -1
    assert N.mul[2][3] == -1
    assert N.windowed and N.name == "N_4"


def test_random_r1_mutations_seeded():
    rng = random.Random(7)
    base_add, base_mul = tables(R1)
    for _ in range(50):
        add = [row[:] for row in base_add]
        mul = [row[:] for row in base_mul]
        table = rng.choice([add, mul])
        table[rng.randrange(4)][rng.randrange(4)] = rng.randrange(4)
        result = validate_hemiring(add, mul)
        expected = oracles.hemiring_axioms_hold(add, mul)
        if isinstance(result, Hemiring):
            assert expected == set()
        else:
            assert {v.axiom for v in result} == expected
            assert all(v.axiom in AXIOMS for v in result)
