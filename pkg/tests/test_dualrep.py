import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from flagkit import (
    WeightMultiset, irreducible_character, minuscule_decomposition_typeA, tensor_character,
    weyl_dimension, weyl_orbit,
)
from flagkit.dualrep import fundamental_coweights, named_highest_weights
from flagkit.errors import DatumError, DimensionMismatch, NotDominant, ValidationError
from flagkit.rootdata import load_root_datum

from oracles import Kostant

DATA = ["A1", "SL2", "GL2", "A2", "GL3", "C2", "G2", "A3"]


def test_examples():
    a1 = load_root_datum("A1")
    assert irreducible_character(a1, (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    gl2 = load_root_datum("GL2")
    std = irreducible_character(gl2, (1, 0))
    assert std == {(1, 0): 1, (0, 1): 1}
    a2 = load_root_datum("A2")
    adj = irreducible_character(a2, (1, 1))
    assert adj.mass == 8 and adj[(0, 0)] == 2
    assert sorted(m for nu, m in adj.items() if nu != (0, 0)) == [1] * 6
    assert weyl_dimension(a2, (1, 1)) == 8
    assert weyl_dimension(gl2, (1, 0)) == 2
    assert weyl_dimension(a2, (0, 0)) == 1


def test_fundamental_dimensions():
    # frozen from the product formula
    assert [weyl_dimension(load_root_datum("C2"), mu) for mu in [(1, 0), (0, 1)]] == [5, 4]
    assert [weyl_dimension(load_root_datum("G2"), mu) for mu in [(1, 0), (0, 1)]] == [14, 7]
    assert [weyl_dimension(load_root_datum("A3"), mu) for mu in [(1, 0, 0), (0, 1, 0)]] == [4, 6]


def test_tensor():
    gl2 = load_root_datum("GL2")
    std = irreducible_character(gl2, (1, 0))
    unit = WeightMultiset({(0, 0): 1}, gl2)
    assert tensor_character(std, unit) == std
    assert tensor_character(std, std) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    with pytest.raises(DimensionMismatch):
        tensor_character(std, irreducible_character(load_root_datum("A2"), (1, 0)))


def test_orbit():
    assert weyl_orbit(load_root_datum("A2"), (0, 0)) == {(0, 0)}
    assert weyl_orbit(load_root_datum("GL2"), (1, 0)) == {(1, 0), (0, 1)}
    a2 = load_root_datum("A2")
    assert len(weyl_orbit(a2, a2.simple_coroots[0])) == 6


def test_minuscule_examples():
    gl2, gl3 = load_root_datum("GL2"), load_root_datum("GL3")
    assert minuscule_decomposition_typeA(gl2, (1, 0)) == ([1], 0)
    assert minuscule_decomposition_typeA(gl2, (2, 0)) == ([1, 1], 0)
    assert minuscule_decomposition_typeA(gl3, (2, 1, 0)) == ([1, 2], 0)
    assert minuscule_decomposition_typeA(gl3, (3, 3, 1)) == ([2, 2], 1)
    assert minuscule_decomposition_typeA(load_root_datum("A2"), (1, 1)) == ([1, 2], 0)
    with pytest.raises(DatumError):
        minuscule_decomposition_typeA(load_root_datum("C2"), (1, 0))
    with pytest.raises(NotDominant):
        minuscule_decomposition_typeA(gl3, (0, 1, 0))


def test_named_weights():
    assert named_highest_weights(load_root_datum("GL2")) == {"std": (1, 0), "adjoint": (1, -1)}
    assert named_highest_weights(load_root_datum("SL2")) == {"adjoint": (1,)}
    assert named_highest_weights(load_root_datum("A2")) == {"std": (1, 0), "adjoint": (1, 1)}


def test_errors():
    a2 = load_root_datum("A2")
    with pytest.raises(NotDominant):
        irreducible_character(a2, (1, -1))
    with pytest.raises(DimensionMismatch):
        irreducible_character(a2, (1, 0, 0))
    with pytest.raises(ValidationError):
        WeightMultiset({(0, 0): -1})


@pytest.mark.parametrize("name", DATA)
def test_freudenthal_against_kostant(name):
    d = load_root_datum(name)
    K = Kostant(d)
    for mu in product(range(-1, 4), repeat=d.lattice_rank):
        if not d.is_dominant(mu) or d.two_rho_pairing(mu) > 8:
            continue
        ch = irreducible_character(d, mu)
        assert ch.mass == weyl_dimension(d, mu)
        assert ch.is_weyl_stable(d)
        for nu in ch:
            assert K.multiplicity(mu, nu) == ch[nu]


@pytest.mark.parametrize("name", ["GL2", "A2", "C2", "G2"])
def test_tensor_mass_and_stability(name):
    d = load_root_datum(name)
    dom = [mu for mu in product(range(0, 3), repeat=d.lattice_rank) if d.is_dominant(mu)]

    @given(st.sampled_from(dom), st.sampled_from(dom))
    def check(a, b):
        ca, cb = irreducible_character(d, a), irreducible_character(d, b)
        t = tensor_character(ca, cb)
        assert t.mass == ca.mass * cb.mass
        assert t.is_weyl_stable(d)

    check()


@pytest.mark.parametrize("name", ["GL3", "GLn(4)", "A2", "A3"])
def test_minuscule_reassembles(name):
    d = load_root_datum(name)
    omegas = fundamental_coweights(d)
    rng = random.Random(7)
    for _ in range(20):
        mu = tuple(sorted((rng.randint(-3, 3) for _ in range(d.lattice_rank)), reverse=True)) \
            if name.startswith("GL") else tuple(rng.randint(0, 3) for _ in range(d.rank))
        parts, twist = minuscule_decomposition_typeA(d, mu)
        total = [twist] * d.lattice_rank if name.startswith("GL") else [0] * d.lattice_rank
        for i in parts:
            total = [a + b for a, b in zip(total, omegas[i - 1])]
            assert d.classify_coweight(omegas[i - 1]) == "minuscule"
        assert tuple(total) == mu
