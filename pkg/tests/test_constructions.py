# -*- coding: utf-8 -*-
"""Tests de idealización y localización."""

import pytest

from constructions import (
    check_ideal_correspondence,
    decompose_ideal,
    idealization,
    idealization_ideal,
    idealization_ideals,
    jacobson_hypothesis_holds,
    localization,
    localize_ideal,
    localize_module,
    localize_submodule,
    multiplicative_closure,
)
from errores import ConstructionError, PreconditionError
from module_core import cyclic_module, cyclic_submodule, zero_submodule
from ring_core import construct_ring, enumerate_ideals, ideal_generated, jacobson_radical, whole_ideal, zn


# ==============================================================================
# IDEALIZACIÓN
# ==============================================================================

@pytest.fixture
def z4_plus_z2():
    R = zn(4)
    return idealization(R, cyclic_module(R, 2))


def test_idealization_order_and_jacobson(z4_plus_z2):
    ID = z4_plus_z2
    assert ID.ring.order == 8
    assert ID.ring.one == ID.index(1, 0)
    assert len(jacobson_radical(ID.ring)) == 4
    assert ID.pair(ID.index(3, 1)) == (3, 1)


def test_idealization_requires_module_over_base():
    with pytest.raises(ConstructionError):
        idealization(zn(4), cyclic_module(zn(4), 2))


def test_idealization_ideals(z4_plus_z2):
    ID = z4_plus_z2
    assert check_ideal_correspondence(ID)
    pairs = idealization_ideals(ID)
    assert all(decompose_ideal(ID, idealization_ideal(ID, I, N)) == (I, N) for I, N in pairs)

    two = ideal_generated(ID.base, [2])
    A = idealization_ideal(ID, two, zero_submodule(ID.module))
    assert len(A) == 2
    with pytest.raises(PreconditionError):
        idealization_ideal(ID, whole_ideal(ID.base), zero_submodule(ID.module))


def test_idealization_from_descriptor():
    R = construct_ring("idealization(zn(4), cyclic(2))")
    assert R.order == 8
    assert len(enumerate_ideals(R)) > len(enumerate_ideals(zn(4)))


# ==============================================================================
# LOCALIZACIÓN
# ==============================================================================

def test_multiplicative_closure(z12):
    assert multiplicative_closure(z12, [2]) == {1, 2, 4, 8}
    assert multiplicative_closure(z12, [9]) == {1, 9}


@pytest.mark.parametrize("n, seed, order", [
    (6, [3], 2),
    (12, [4], 3),
    (12, [9], 4),
    (12, [5], 12),
])
def test_localization_orders(n, seed, order):
    R = zn(n)
    loc = localization(R, multiplicative_closure(R, seed))
    assert loc.ring.order == order
    assert jacobson_hypothesis_holds(loc)


def test_localization_rejects_bad_sets(z12):
    with pytest.raises(ConstructionError):
        localization(z12, frozenset({1, 0}))
    with pytest.raises(ConstructionError):
        localization(z12, frozenset({1, 2}))
    with pytest.raises(ConstructionError):
        localization(z12, frozenset({5}))


def test_localized_units(z12):
    loc = localization(z12, frozenset({1, 4}))
    assert all(loc.ring.unit_mask[loc.canonical_map[s]] for s in (1, 4))
    assert loc.fraction(8, 4) == loc.canonical_map[2]
    assert localize_ideal(loc, ideal_generated(z12, [3])).is_zero


def test_localize_module(z12_over_z6):
    S = frozenset({1, 4})
    loc = localize_module(z12_over_z6, S)
    assert loc.module.order == 3
    assert loc.module.ring is loc.ring
    assert localize_submodule(loc, cyclic_submodule(z12_over_z6, 3)).is_zero
    assert localize_submodule(loc, cyclic_submodule(z12_over_z6, 2)).is_whole


def test_localize_submodule_requires_module(z12, z12_self):
    loc = localization(z12, frozenset({1, 4}))
    with pytest.raises(PreconditionError):
        localize_submodule(loc, zero_submodule(z12_self))


def test_localization_from_descriptor():
    assert construct_ring("localization(zn(6), [3])").order == 2
